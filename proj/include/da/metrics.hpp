#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "da/graph.hpp"
#include "da/interactions.hpp"
#include "da/matrix.hpp"
#include "da/model.hpp"

namespace da {

struct ClassMetrics {
    std::string class_name;
    int nucd = 0;
    int tnucd = 0;
    int nucc = 0;
    int tnucc = 0;
    int class_coupling = 0;
    int visible_members = 0;

    bool operator==(const ClassMetrics&) const = default;
};

inline constexpr std::array<std::string_view, 6> kMeasureNames = {
    "NUCD", "TNUCD", "NUCC", "TNUCC", "ClassCoupling", "VisibleMembers",
};

struct MetricsTable {
    std::vector<ClassMetrics> rows; // sorted by class_name

    const ClassMetrics* find(const std::string& class_name) const;
    Matrix to_matrix() const; // n x 6, columns in kMeasureNames order

    bool operator==(const MetricsTable&) const = default;
};

double measure_value(const ClassMetrics& row, std::size_t measure_index);

// The four dependency measures count Parameter, ReturnType and LocalVariable
// evidences; ObjectDeclaration and Inheritance feed class coupling through
// the CCIG. All throw NotFoundError for a class outside the model.

// distinct classes the given class depends on
int nucd(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls);
// total outbound dependency evidences
int tnucd(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls);
// distinct classes depending on the given class
int nucc(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls);
// total inbound dependency evidences
int tnucc(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls);

// Declared fields and methods (constructors included) that are not private.
int visible_members(const CodebaseModel& model, const std::string& cls);

/// One row per class in qualified-name order; all six measures populated.
MetricsTable metrics_table(const CodebaseModel& model, const InteractionSet& evidences,
                           const InteractionGraph& graph);

} // namespace da
