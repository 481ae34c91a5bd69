#include "da/graph.hpp"

#include <algorithm>
#include <tuple>

#include "da/errors.hpp"

namespace da {

namespace {

bool edge_less(const GraphEdge& a, const GraphEdge& b) {
    return std::make_tuple(std::cref(a.source), std::cref(a.target), static_cast<int>(a.kind)) <
           std::make_tuple(std::cref(b.source), std::cref(b.target), static_cast<int>(b.kind));
}

} // namespace

void InteractionGraph::finish() {
    std::sort(nodes_.begin(), nodes_.end());
    node_set_ = std::set<std::string>(nodes_.begin(), nodes_.end());
    std::sort(edges_.begin(), edges_.end(), edge_less);
    out_index_.clear();
    in_index_.clear();
    for (const auto& node : nodes_) {
        out_index_[node];
        in_index_[node];
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        out_index_[edges_[i].source].push_back(i);
        in_index_[edges_[i].target].push_back(i);
    }
}

const std::vector<std::size_t>& InteractionGraph::out_edges(const std::string& name) const {
    const auto it = out_index_.find(name);
    if (it == out_index_.end())
        throw NotFoundError("unknown class: " + name);
    return it->second;
}

const std::vector<std::size_t>& InteractionGraph::in_edges(const std::string& name) const {
    const auto it = in_index_.find(name);
    if (it == in_index_.end())
        throw NotFoundError("unknown class: " + name);
    return it->second;
}

CcigView InteractionGraph::ccig() const { return CcigView(*this); }

InteractionGraph build_graph(const CodebaseModel& model, const InteractionSet& evidences) {
    InteractionGraph graph;
    for (const auto& cls : model.classes)
        graph.nodes_.push_back(cls.qualified_name);
    const std::set<std::string> node_set(graph.nodes_.begin(), graph.nodes_.end());

    std::map<std::tuple<std::string, std::string, int>, int> counts;
    for (const auto& e : evidences.evidences) {
        if (!node_set.count(e.source_class) || !node_set.count(e.target_class))
            throw ConsistencyError("evidence references a class outside the model: " +
                                   e.source_class + " -> " + e.target_class);
        if (e.source_class == e.target_class)
            throw ConsistencyError("self-edge evidence: " + e.source_class);
        ++counts[{e.source_class, e.target_class, static_cast<int>(e.kind)}];
    }
    for (const auto& [key, count] : counts) {
        const auto& [source, target, kind] = key;
        graph.edges_.push_back({source, target, static_cast<InteractionKind>(kind), count});
    }
    graph.finish();
    return graph;
}

InteractionGraph add_virtual_module(const InteractionGraph& graph, const std::string& name,
                                    const std::vector<std::string>& connect_to,
                                    InteractionKind kind) {
    if (name.empty())
        throw ValidationError("virtual module name is empty");
    if (graph.has_node(name))
        throw ValidationError("class already exists: " + name);
    std::set<std::string> targets;
    for (const auto& target : connect_to) {
        if (!graph.has_node(target))
            throw ValidationError("unknown connection target: " + target);
        if (target == name)
            throw ValidationError("virtual module cannot connect to itself");
        targets.insert(target);
    }

    InteractionGraph out;
    out.nodes_ = graph.nodes_;
    out.nodes_.push_back(name);
    out.edges_ = graph.edges_;
    for (const auto& target : targets)
        out.edges_.push_back({name, target, kind, 1});
    out.finish();
    return out;
}

CcigView::CcigView(const InteractionGraph& graph) {
    nodes_ = std::set<std::string>(graph.nodes().begin(), graph.nodes().end());
    for (const auto& edge : graph.edges()) {
        if (!is_ccig_kind(edge.kind))
            continue;
        edges_.push_back(edge);
        out_neighbors_[edge.source].insert(edge.target);
        in_neighbors_[edge.target].insert(edge.source);
    }
}

void CcigView::ensure_node(const std::string& name) const {
    if (!nodes_.count(name))
        throw NotFoundError("unknown class: " + name);
}

int CcigView::client_coupling(const std::string& name) const {
    ensure_node(name);
    const auto it = out_neighbors_.find(name);
    return it == out_neighbors_.end() ? 0 : static_cast<int>(it->second.size());
}

int CcigView::server_coupling(const std::string& name) const {
    ensure_node(name);
    const auto it = in_neighbors_.find(name);
    return it == in_neighbors_.end() ? 0 : static_cast<int>(it->second.size());
}

int CcigView::class_coupling(const std::string& name) const {
    return client_coupling(name) + server_coupling(name);
}

} // namespace da
