#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "da/matrix.hpp"
#include "da/metrics.hpp"

namespace da {

// mean_j over every row, per column
std::vector<double> column_means(const Matrix& x);

// X - column means; every column of the result sums to zero
Matrix center(const Matrix& x);

// R = (1/n) Xc^T Xc over an already-centered matrix. The 1/n divisor is the
// population form and is kept deliberately.
Matrix covariance(const Matrix& centered);

struct EigenDecomposition {
    std::vector<double> eigenvalues; // descending
    Matrix eigenvectors;             // column k pairs with eigenvalues[k]
};

/// Full decomposition of a symmetric matrix by cyclic Jacobi rotations, run
/// until the off-diagonal norm drops below 1e-12 * ||R||_F (at most 50
/// sweeps, then NumericError). Eigenpairs come back sorted descending with
/// each vector sign-canonicalized: its largest-magnitude component is
/// non-negative, ties resolved toward the lowest index. Throws
/// ValidationError when the input is not symmetric within 1e-9 relative.
EigenDecomposition eigen_symmetric(const Matrix& r);

/// Cumulative variance fraction of the top d eigenvalues (input sorted
/// descending). Tiny negatives down to -1e-9 * lambda1 are clamped to zero;
/// anything lower is a ValidationError. Zero total variance is a
/// DegenerateDataError.
double retained_variance(const std::vector<double>& eigenvalues, int d);

struct PcaResult {
    std::vector<double> eigenvalues; // descending, as computed (unclamped)
    Matrix eigenvectors;             // columns
    std::vector<double> column_means;
    std::vector<double> retained; // cumulative fractions per d; all zero when variance is zero
    std::vector<std::string> labels;
    bool standardized = false;

    std::vector<double> component(std::size_t k) const { return eigenvectors.column(k); }
    double total_variance() const; // clamped eigenvalue sum
};

struct PcaOptions {
    // Scale centered columns to unit variance before the covariance step.
    // Off by default: the measures are centered only.
    bool standardize = false;
};

/// center -> covariance -> eigen -> retained variance for every d.
/// Throws InsufficientDataError for fewer than 2 rows.
PcaResult pca(const Matrix& x, std::vector<std::string> labels, const PcaOptions& options = {});

// index of the largest-|v| entry; ties resolve to the lowest index
std::size_t argmax_abs(std::span<const double> values);

// columns strictly negative in every row of a (components x labels) matrix
std::vector<std::size_t> all_negative_indices(const Matrix& loadings);

enum class SelectionMode { MostSignificantMeasure, LessResponsiveClass };

std::string to_string(SelectionMode mode);

struct RationaleEntry {
    std::string label;
    double value = 0.0;
    bool all_negative = false;
};

struct SelectionReport {
    SelectionMode mode = SelectionMode::MostSignificantMeasure;
    std::string chosen_label;
    int component_count = 1;         // d
    std::vector<std::string> labels; // column labels of `loadings`
    Matrix loadings;                 // d x labels.size(), row k = component k
    std::vector<RationaleEntry> rationale;
    bool fallback = false; // classes mode: no all-negative candidate existed
    PcaResult analysis;
};

/// PCA over the class-by-measure matrix; picks the measure with the largest
/// absolute loading in the first component (ties follow the fixed measure
/// order). Throws DegenerateDataError when all classes are metrically
/// identical.
SelectionReport most_significant_measure(const MetricsTable& table,
                                         const PcaOptions& options = {});

struct ClassSelectionOptions {
    double variance_target = 0.95;
    int component_cap = 3;
    std::optional<int> force_components; // overrides the target/cap rule
    bool standardize = false;
};

/// PCA over the transposed measure-by-class matrix. d = smallest component
/// count reaching the variance target, capped. Candidates are the classes
/// with strictly negative loadings in all d components; the one with minimal
/// class coupling wins (ties lexicographic). With no candidate, falls back to
/// the minimal-coupling class and flags it.
SelectionReport less_responsive_class(const MetricsTable& table,
                                      const ClassSelectionOptions& options = {});

} // namespace da
