#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "da/interactions.hpp"
#include "da/model.hpp"

namespace da {

struct GraphEdge {
    std::string source;
    std::string target;
    InteractionKind kind = InteractionKind::ReturnType;
    int evidence_count = 1;

    bool operator==(const GraphEdge&) const = default;
};

class CcigView;

// Directed multigraph over the user-defined classes: parallel evidences of one
// (source, target, kind) collapse into a single counted edge; distinct kinds
// between the same pair stay distinct. Immutable after construction.
class InteractionGraph {
public:
    const std::vector<std::string>& nodes() const { return nodes_; } // sorted
    const std::vector<GraphEdge>& edges() const { return edges_; }   // sorted (source, target, kind)
    bool has_node(const std::string& name) const { return node_set_.count(name) != 0; }

    // Indices into edges(); throws NotFoundError for an unknown class.
    const std::vector<std::size_t>& out_edges(const std::string& name) const;
    const std::vector<std::size_t>& in_edges(const std::string& name) const;

    CcigView ccig() const;

private:
    friend InteractionGraph build_graph(const CodebaseModel&, const InteractionSet&);
    friend InteractionGraph add_virtual_module(const InteractionGraph&, const std::string&,
                                               const std::vector<std::string>&, InteractionKind);

    void finish(); // sorts edges and rebuilds the adjacency indexes

    std::vector<std::string> nodes_;
    std::set<std::string> node_set_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, std::vector<std::size_t>> out_index_;
    std::map<std::string, std::vector<std::size_t>> in_index_;
};

/// Nodes are exactly the model's classes (isolated ones included). Throws
/// ConsistencyError if an evidence references a class outside the model.
InteractionGraph build_graph(const CodebaseModel& model, const InteractionSet& evidences);

/// Returns a new graph with node `name` and one edge name->target of `kind`
/// per distinct target. The input graph is untouched. Throws ValidationError
/// on a duplicate name or unknown target.
InteractionGraph add_virtual_module(const InteractionGraph& graph, const std::string& name,
                                    const std::vector<std::string>& connect_to,
                                    InteractionKind kind = InteractionKind::ObjectDeclaration);

// The C-C subgraph (ObjectDeclaration + Inheritance edges). Holds its own
// copies, so it stays valid independently of the parent graph.
class CcigView {
public:
    explicit CcigView(const InteractionGraph& graph);

    // Distinct partner classes, not evidence totals.
    int client_coupling(const std::string& name) const; // out-degree
    int server_coupling(const std::string& name) const; // in-degree
    int class_coupling(const std::string& name) const;  // sum of the two

    const std::vector<GraphEdge>& edges() const { return edges_; }

private:
    void ensure_node(const std::string& name) const;

    std::set<std::string> nodes_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, std::set<std::string>> out_neighbors_;
    std::map<std::string, std::set<std::string>> in_neighbors_;
};

} // namespace da
