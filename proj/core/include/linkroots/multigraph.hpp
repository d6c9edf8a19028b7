#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linkroots {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    VertexId u;
    VertexId v;

    bool operator==(const Edge&) const = default;
};

/// Finite loopless undirected multigraph. Vertices are 0..n-1; edge identity
/// is the position in the edge list, so parallel edges are distinct objects.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count);
    Multigraph(std::size_t vertex_count, std::span<const Edge> edges);

    VertexId add_vertex();
    // Throws InvalidArgument for loops or out-of-range endpoints.
    EdgeId add_edge(VertexId u, VertexId v);

    std::size_t vertex_count() const { return incident_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return incident_.empty(); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const {
        return incident_[static_cast<std::size_t>(v)];
    }

    VertexId other_end(EdgeId e, VertexId v) const {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }
    bool has_vertex(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && static_cast<std::size_t>(e) < edge_count();
    }

    std::size_t degree(VertexId v) const { return incident(v).size(); }
    std::size_t max_degree() const;
    // Number of edges joining u and v (the size of E_G(u, v)).
    std::size_t multiplicity(VertexId u, VertexId v) const;
    bool has_parallel_edges() const;

    // Unit-identical comparison: same vertex count and the same edge list in order.
    bool operator==(const Multigraph& other) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// A subgraph copied out of a host graph, with maps back to host ids.
struct Subgraph {
    Multigraph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};

// Subgraph on the selected units. Ends of selected edges are added to the
// vertex set when they are not selected themselves.
Subgraph subgraph_of_units(const Multigraph& g, const std::vector<bool>& keep_vertex,
                           const std::vector<bool>& keep_edge);

// Subgraph induced by a vertex set (all edges between kept vertices).
Subgraph induced_subgraph(const Multigraph& g, const std::vector<bool>& keep_vertex);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Every edge replaced by a path of length s (s >= 1).
Multigraph subdivision(const Multigraph& g, std::size_t s);

}  // namespace linkroots
