#include "da/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "da/errors.hpp"

namespace da {

std::vector<double> column_means(const Matrix& x) {
    if (x.rows() == 0 || x.cols() == 0)
        throw DimensionError("column_means: empty matrix");
    std::vector<double> means(x.cols(), 0.0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            means[j] += x(i, j);
    for (double& m : means)
        m /= static_cast<double>(x.rows());
    return means;
}

Matrix center(const Matrix& x) {
    const auto means = column_means(x);
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = x(i, j) - means[j];
    return out;
}

Matrix covariance(const Matrix& centered) {
    if (centered.rows() == 0)
        throw DimensionError("covariance: no rows");
    const std::size_t n = centered.rows();
    const std::size_t m = centered.cols();
    Matrix r(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = j; k < m; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += centered(i, j) * centered(i, k);
            s /= static_cast<double>(n);
            r(j, k) = s;
            r(k, j) = s;
        }
    }
    return r;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void canonicalize_sign(std::vector<double>& v) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best_abs) { // strict: ties keep the lowest index
            best_abs = a;
            best = i;
        }
    }
    if (!v.empty() && v[best] < 0.0)
        for (double& x : v)
            x = -x;
}

} // namespace

EigenDecomposition eigen_symmetric(const Matrix& r) {
    if (r.rows() == 0 || r.rows() != r.cols())
        throw DimensionError("eigen_symmetric: matrix must be square and non-empty");
    const std::size_t m = r.rows();
    const double scale = std::max(1.0, r.max_abs());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(r(i, j) - r(j, i)) > 1e-9 * scale)
                throw ValidationError("eigen_symmetric: input is not symmetric");

    Matrix a = r;
    // exact symmetry keeps the rotations clean
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    Matrix v = Matrix::identity(m);

    const double norm = r.frobenius_norm();
    bool converged = norm == 0.0 || m == 1;
    constexpr int kMaxSweeps = 50;

    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-12 * norm) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0)
                    t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < m; ++k) { // A <- A * G
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) { // A <- G^T * A
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < m; ++k) { // V <- V * G
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > 1e-12 * norm)
        throw NumericError("eigen_symmetric: no convergence within 50 sweeps");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i) > a(j, j);
    });

    EigenDecomposition out;
    out.eigenvalues.resize(m);
    out.eigenvectors = Matrix(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        auto column = v.column(order[k]);
        canonicalize_sign(column);
        for (std::size_t i = 0; i < m; ++i)
            out.eigenvectors(i, k) = column[i];
    }
    return out;
}

double retained_variance(const std::vector<double>& eigenvalues, int d) {
    const int m = static_cast<int>(eigenvalues.size());
    if (m == 0)
        throw DimensionError("retained_variance: empty spectrum");
    if (d < 1 || d > m)
        throw DimensionError("retained_variance: d out of range");

    const double lambda1 = std::max(eigenvalues.front(), 0.0);
    const double floor = -1e-9 * std::max(lambda1, 1e-300);
    double total = 0.0;
    double top = 0.0;
    for (int i = 0; i < m; ++i) {
        const double lambda = eigenvalues[i];
        if (lambda < floor)
            throw ValidationError("retained_variance: negative eigenvalue beyond tolerance");
        const double clamped = std::max(lambda, 0.0);
        total += clamped;
        if (i < d)
            top += clamped;
    }
    if (total <= 0.0)
        throw DegenerateDataError("retained_variance: total variance is zero");
    return top / total;
}

double PcaResult::total_variance() const {
    double total = 0.0;
    for (const double lambda : eigenvalues)
        total += std::max(lambda, 0.0);
    return total;
}

PcaResult pca(const Matrix& x, std::vector<std::string> labels, const PcaOptions& options) {
    if (x.cols() == 0 || labels.size() != x.cols())
        throw DimensionError("pca: labels must match the matrix columns");
    if (x.rows() < 2)
        throw InsufficientDataError("pca: need at least 2 rows");
    if (!x.all_finite())
        throw ValidationError("pca: matrix entries must be finite");

    PcaResult out;
    out.labels = std::move(labels);
    out.column_means = column_means(x);
    out.standardized = options.standardize;

    Matrix centered = center(x);
    if (options.standardize) {
        const std::size_t n = centered.rows();
        for (std::size_t j = 0; j < centered.cols(); ++j) {
            double variance = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                variance += centered(i, j) * centered(i, j);
            variance /= static_cast<double>(n);
            if (variance > 0.0) {
                const double sd = std::sqrt(variance);
                for (std::size_t i = 0; i < n; ++i)
                    centered(i, j) /= sd;
            }
        }
    }

    const Matrix r = covariance(centered);
    EigenDecomposition eig = eigen_symmetric(r);
    out.eigenvalues = std::move(eig.eigenvalues);
    out.eigenvectors = std::move(eig.eigenvectors);

    const std::size_t m = out.eigenvalues.size();
    out.retained.assign(m, 0.0);
    if (out.total_variance() > 0.0)
        for (std::size_t d = 1; d <= m; ++d)
            out.retained[d - 1] = retained_variance(out.eigenvalues, static_cast<int>(d));
    return out;
}

std::size_t argmax_abs(std::span<const double> values) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double a = std::abs(values[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

std::vector<std::size_t> all_negative_indices(const Matrix& loadings) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < loadings.cols(); ++j) {
        bool all_negative = loadings.rows() > 0;
        for (std::size_t k = 0; k < loadings.rows(); ++k)
            if (loadings(k, j) >= 0.0) {
                all_negative = false;
                break;
            }
        if (all_negative)
            out.push_back(j);
    }
    return out;
}

std::string to_string(SelectionMode mode) {
    return mode == SelectionMode::MostSignificantMeasure ? "most-significant-measure"
                                                         : "less-responsive-class";
}

SelectionReport most_significant_measure(const MetricsTable& table, const PcaOptions& options) {
    if (table.rows.size() < 2)
        throw InsufficientDataError(
            "most_significant_measure: need at least 2 classes to compare");

    std::vector<std::string> labels(kMeasureNames.begin(), kMeasureNames.end());
    PcaResult analysis = pca(table.to_matrix(), labels, options);
    if (analysis.total_variance() <= 0.0)
        throw DegenerateDataError(
            "most_significant_measure: every class has identical measures; nothing varies");

    const auto first = analysis.component(0);
    const std::size_t chosen = argmax_abs(first);

    SelectionReport report;
    report.mode = SelectionMode::MostSignificantMeasure;
    report.chosen_label = labels[chosen];
    report.component_count = 1;
    report.labels = labels;
    report.loadings = Matrix(1, first.size());
    for (std::size_t j = 0; j < first.size(); ++j)
        report.loadings(0, j) = first[j];

    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&first](std::size_t a, std::size_t b) {
        return std::abs(first[a]) > std::abs(first[b]);
    });
    for (const std::size_t j : order)
        report.rationale.push_back({labels[j], std::abs(first[j]), first[j] < 0.0});

    report.analysis = std::move(analysis);
    return report;
}

SelectionReport less_responsive_class(const MetricsTable& table,
                                      const ClassSelectionOptions& options) {
    if (table.rows.size() < 2)
        throw InsufficientDataError("less_responsive_class: need at least 2 classes");

    std::vector<std::string> labels;
    labels.reserve(table.rows.size());
    for (const auto& row : table.rows)
        labels.push_back(row.class_name);

    // measures as observations, classes as variables
    const Matrix x = table.to_matrix().transposed();
    PcaResult analysis = pca(x, labels, PcaOptions{options.standardize});
    if (analysis.total_variance() <= 0.0)
        throw DegenerateDataError(
            "less_responsive_class: every class has identical measures; nothing varies");

    const int m = static_cast<int>(labels.size());
    int d;
    if (options.force_components) {
        d = std::clamp(*options.force_components, 1, m);
    } else {
        d = m;
        for (int k = 1; k <= m; ++k)
            if (analysis.retained[static_cast<std::size_t>(k) - 1] >=
                options.variance_target - 1e-12) {
                d = k;
                break;
            }
        d = std::min(d, std::max(1, options.component_cap));
    }

    Matrix loadings(static_cast<std::size_t>(d), labels.size());
    for (int k = 0; k < d; ++k) {
        const auto component = analysis.component(static_cast<std::size_t>(k));
        for (std::size_t j = 0; j < labels.size(); ++j)
            loadings(static_cast<std::size_t>(k), j) = component[j];
    }

    const auto candidates = all_negative_indices(loadings);
    const auto coupling_of = [&table](std::size_t j) {
        return table.rows[j].class_coupling;
    };
    const auto better = [&](std::size_t a, std::size_t b) {
        return std::make_pair(coupling_of(a), std::cref(labels[a])) <
               std::make_pair(coupling_of(b), std::cref(labels[b]));
    };

    SelectionReport report;
    report.mode = SelectionMode::LessResponsiveClass;
    report.component_count = d;
    report.labels = labels;
    report.loadings = std::move(loadings);

    std::vector<std::size_t> pool;
    if (!candidates.empty()) {
        pool = candidates;
    } else {
        // No class loads negative across every component; fall back to the
        // lowest-coupling class and say so.
        report.fallback = true;
        pool.resize(labels.size());
        std::iota(pool.begin(), pool.end(), 0);
    }
    std::sort(pool.begin(), pool.end(), better);
    report.chosen_label = labels[pool.front()];
    for (const std::size_t j : pool)
        report.rationale.push_back({labels[j], static_cast<double>(coupling_of(j)),
                                    !report.fallback});

    report.analysis = std::move(analysis);
    return report;
}

} // namespace da
