#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkroots/link.hpp"
#include "linkroots/metrics.hpp"
#include "linkroots/multigraph.hpp"

namespace linkroots {

/// A graph with a partition of its vertices and a partition of its edges.
/// Parts are sorted id lists; part identity is the position in the list.
struct PartitionedGraph {
    Multigraph graph;
    std::vector<std::vector<VertexId>> vertex_parts;
    std::vector<std::vector<EdgeId>> edge_parts;
};

struct PartitionViolation {
    enum class Kind { out_of_range, overlap, gap, empty_part };
    Kind kind;
    bool on_vertices;  // false: the edge partition
    int part;          // -1 for gaps
    int id;            // offending unit id, -1 for empty parts
    std::string message;
};

std::optional<PartitionViolation> validate(const PartitionedGraph& h);

PartitionedGraph singleton_partition(const Multigraph& g);

// Sorts every part and orders parts by smallest member.
void normalize(PartitionedGraph& h);

// part_of_edge[e] for a valid partitioned graph.
std::vector<int> edge_part_index(const PartitionedGraph& h);

/// Node (u, E) for each edge part E incident to u; arc (u, E) -> (v, F) when
/// E != F and some edge of E joins u and v.
struct DerivedDigraph {
    struct Node {
        VertexId vertex;
        int part;
    };
    std::vector<Node> nodes;              // ordered by (vertex, part)
    std::vector<std::vector<int>> out;    // sorted, no duplicates
    std::size_t arc_count = 0;
};

DerivedDigraph derived_digraph(const PartitionedGraph& h);

// Strongly connected component id per node (Tarjan, iterative).
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& out);

struct ComponentCensus {
    Components components;        // of the underlying graph
    std::vector<bool> cyclic;     // per component: contains a partition-respecting cycle
    std::size_t cyclic_count = 0;
    std::size_t acyclic_count = 0;
};

ComponentCensus count_cyclic_components(const PartitionedGraph& h);

struct DegreeSet {
    std::set<std::size_t> values;
    std::size_t max = 0;  // 0 when empty
};

// D(E): deg_E(v) over edge parts E incident to v.
DegreeSet part_degree_set(const PartitionedGraph& h);
// D(G): {deg(v) - 1 >= 1}.
DegreeSet graph_degree_set(const Multigraph& g);
// r(E): most edge parts meeting a single vertex, 0 without edges.
std::size_t max_incident_edge_parts(const PartitionedGraph& h);
// max{a(H~), Delta(E)}.
std::size_t degree_parameter(const PartitionedGraph& h);

// s-links of the partitioned graph: links whose consecutive edges lie in different parts.
std::vector<Link> enumerate_partitioned_links(const PartitionedGraph& h, std::size_t s);

// Partition file: lines `V: ids...` and `E: ids...`, one per part.
// Throws ParseError on malformed lines and InvalidArgument if the parts do not partition g.
PartitionedGraph read_partition(std::istream& in, const Multigraph& g);
void write_partition(std::ostream& out, const PartitionedGraph& h);

}  // namespace linkroots
