#pragma once

#include <optional>
#include <string>
#include <vector>

namespace da::test {

// Minimal DOT reparser: enough grammar to confirm emitted files are
// well-formed and to count their statements.
struct DotGraph {
    std::string name;
    std::vector<std::string> nodes;
    struct Edge {
        std::string from;
        std::string to;
        std::string attrs;
    };
    std::vector<Edge> edges;
};

std::optional<DotGraph> parse_dot(const std::string& text);

} // namespace da::test
