#pragma once

#include <cstddef>
#include <vector>

#include "linkroots/extended.hpp"
#include "linkroots/multigraph.hpp"

namespace linkroots {

struct Components {
    std::vector<int> component_of;               // per vertex
    std::vector<std::vector<VertexId>> vertices;  // sorted, components ordered by smallest vertex
    std::vector<std::vector<EdgeId>> edges;       // sorted

    std::size_t count() const { return vertices.size(); }
    // A component is cyclic iff it has at least as many edges as vertices.
    bool is_cyclic(std::size_t c) const { return edges[c].size() >= vertices[c].size(); }
};

Components connected_components(const Multigraph& g);

struct GraphMetrics {
    std::vector<Extended> eccentricity;
    Extended diameter;
    Extended radius;
    Extended girth;
    std::size_t components = 0;
    std::size_t cyclic_components = 0;
    std::size_t acyclic_components = 0;
};

// Distances are infinite across components, so every eccentricity, the diameter
// and the radius of a disconnected graph are infinite. The null graph has
// diameter and radius 0.
GraphMetrics compute_metrics(const Multigraph& g);

// Breadth-first distances; unreachable vertices get Extended::infinite().
std::vector<Extended> distances_from(const Multigraph& g, VertexId source);

// 2 if there are parallel edges, infinite if acyclic.
Extended girth(const Multigraph& g);

bool is_connected(const Multigraph& g);
bool is_forest(const Multigraph& g);
bool is_tree(const Multigraph& g);

struct TreeSplit {
    // T_e^u: component of T - e containing u.
    Subgraph near_side;
    // T_u^e: the far component T_e^v together with e (and u).
    Subgraph far_branch;
    std::vector<bool> in_near_side;  // per vertex of T
};

// Throws InvalidArgument if T is not a tree or e is not incident to u.
TreeSplit tree_split(const Multigraph& t, EdgeId e, VertexId u);

}  // namespace linkroots
