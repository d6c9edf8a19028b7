#include "linkroots/multigraph.hpp"

#include <algorithm>
#include <string>

#include "linkroots/errors.hpp"

namespace linkroots {

Multigraph::Multigraph(std::size_t vertex_count) : incident_(vertex_count) {}

Multigraph::Multigraph(std::size_t vertex_count, std::span<const Edge> edges)
    : incident_(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        add_edge(e.u, e.v);
    }
}

VertexId Multigraph::add_vertex() {
    incident_.emplace_back();
    return static_cast<VertexId>(incident_.size() - 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v)) {
        throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    if (u == v) {
        throw InvalidArgument("loop at vertex " + std::to_string(u));
    }
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incident_[static_cast<std::size_t>(u)].push_back(id);
    incident_[static_cast<std::size_t>(v)].push_back(id);
    return id;
}

std::size_t Multigraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& inc : incident_) {
        best = std::max(best, inc.size());
    }
    return best;
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const {
    std::size_t count = 0;
    for (EdgeId e : incident(u)) {
        if (other_end(e, u) == v) {
            ++count;
        }
    }
    return count;
}

bool Multigraph::has_parallel_edges() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) {
        keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool Multigraph::operator==(const Multigraph& other) const {
    return vertex_count() == other.vertex_count() && edges_ == other.edges_;
}

Subgraph subgraph_of_units(const Multigraph& g, const std::vector<bool>& keep_vertex,
                           const std::vector<bool>& keep_edge) {
    std::vector<bool> vertices(keep_vertex.begin(), keep_vertex.end());
    vertices.resize(g.vertex_count(), false);
    for (std::size_t e = 0; e < g.edge_count() && e < keep_edge.size(); ++e) {
        if (keep_edge[e]) {
            const Edge& ed = g.edge(static_cast<EdgeId>(e));
            vertices[static_cast<std::size_t>(ed.u)] = true;
            vertices[static_cast<std::size_t>(ed.v)] = true;
        }
    }
    Subgraph out;
    std::vector<VertexId> map(g.vertex_count(), -1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (vertices[v]) {
            map[v] = out.graph.add_vertex();
            out.vertex_origin.push_back(static_cast<VertexId>(v));
        }
    }
    for (std::size_t e = 0; e < g.edge_count() && e < keep_edge.size(); ++e) {
        if (keep_edge[e]) {
            const Edge& ed = g.edge(static_cast<EdgeId>(e));
            out.graph.add_edge(map[static_cast<std::size_t>(ed.u)],
                               map[static_cast<std::size_t>(ed.v)]);
            out.edge_origin.push_back(static_cast<EdgeId>(e));
        }
    }
    return out;
}

Subgraph induced_subgraph(const Multigraph& g, const std::vector<bool>& keep_vertex) {
    std::vector<bool> keep_edge(g.edge_count(), false);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        keep_edge[e] = keep_vertex[static_cast<std::size_t>(ed.u)] &&
                       keep_vertex[static_cast<std::size_t>(ed.v)];
    }
    return subgraph_of_units(g, keep_vertex, keep_edge);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph out = a;
    auto offset = static_cast<VertexId>(a.vertex_count());
    for (std::size_t i = 0; i < b.vertex_count(); ++i) {
        out.add_vertex();
    }
    for (const Edge& e : b.edges()) {
        out.add_edge(e.u + offset, e.v + offset);
    }
    return out;
}

Multigraph subdivision(const Multigraph& g, std::size_t s) {
    if (s == 0) {
        throw InvalidArgument("subdivision length must be positive");
    }
    Multigraph out(g.vertex_count());
    for (const Edge& e : g.edges()) {
        VertexId prev = e.u;
        for (std::size_t i = 1; i < s; ++i) {
            VertexId next = out.add_vertex();
            out.add_edge(prev, next);
            prev = next;
        }
        out.add_edge(prev, e.v);
    }
    return out;
}

}  // namespace linkroots
