#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "linkroots/link.hpp"
#include "linkroots/multigraph.hpp"
#include "linkroots/partition.hpp"

namespace linkroots {

enum class GraphMode { link, path };

struct ConstructOptions {
    // Refuse when more than this many l-links or (l+1)-links would be materialized.
    std::size_t max_links = 1'000'000;
};

/// A constructed l-link graph or l-path graph with provenance.
/// Result vertex i is vertex_links[i]; result edge j comes from edge_links[j]
/// (link mode: the (l+1)-link itself; path mode: the smallest (l+1)-link whose
/// initial and final l-subsequences are the two end paths).
struct LinkGraphResult {
    Multigraph graph;
    GraphMode mode = GraphMode::link;
    std::size_t order = 0;
    std::vector<Link> vertex_links;  // sorted
    std::vector<Link> edge_links;    // sorted in link mode

    std::optional<VertexId> vertex_of(const Link& link) const;
    std::optional<EdgeId> edge_of(const Link& link) const;  // link mode only
};

LinkGraphResult link_graph(const Multigraph& g, std::size_t l, const ConstructOptions& options = {});

struct PartitionedLinkGraph {
    LinkGraphResult result;
    PartitionedGraph partitioned;  // graph is a copy of result.graph
};

PartitionedLinkGraph partitioned_link_graph(const Multigraph& g, std::size_t l,
                                            const ConstructOptions& options = {});

// Vertices are l-paths; two are adjacent when they are the initial and final
// l-subsequences of an (l+1)-link that is a path or an (l+1)-cycle.
LinkGraphResult path_graph(const Multigraph& g, std::size_t l, const ConstructOptions& options = {});

struct Projection {
    // L_0 Q_1 L_1 ... Q_s L_s as result vertex / edge ids.
    UnitSequence image;
    // L_0 = L_s.
    bool closed = false;
    // The arc condition R(0, l) = R(s, l + s) with orientation.
    bool arc_closed = false;
};

// Projects an (l+s)-arc of the source onto the link graph. Throws InvalidArgument
// if `r` is not an arc of the source of length >= l or the result is not in link mode.
Projection project_arc(const LinkGraphResult& lg, const Multigraph& g, const Arc& r);

// Whether `b` can be reached from `a` by repeated shunting, i.e. the two lie in the
// same component of the link graph. Throws InvalidArgument for non-members.
bool shunt_reachable(const LinkGraphResult& lg, const Link& a, const Link& b);
bool shunt_reachable(const Multigraph& g, std::size_t l, const Link& a, const Link& b,
                     const ConstructOptions& options = {});

// Tab-separated `id<TAB>v0 -e1- v1 ...` under `# vertices` and `# edges` headers.
void write_provenance(std::ostream& out, const LinkGraphResult& lg);

}  // namespace linkroots
