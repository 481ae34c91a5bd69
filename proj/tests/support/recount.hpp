#pragma once

#include <map>
#include <string>

#include "da/interactions.hpp"
#include "da/model.hpp"

namespace da::test {

// Independent brute-force recount of the six measures straight off the
// evidence list, kept deliberately apart from the metrics module.
struct RecountRow {
    int nucd = 0;
    int tnucd = 0;
    int nucc = 0;
    int tnucc = 0;
    int class_coupling = 0;
    int visible_members = 0;
};

std::map<std::string, RecountRow> recount_metrics(const CodebaseModel& model,
                                                  const InteractionSet& evidences);

} // namespace da::test
