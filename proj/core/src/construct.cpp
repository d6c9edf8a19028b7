#include "linkroots/construct.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "linkroots/errors.hpp"
#include "linkroots/metrics.hpp"

namespace linkroots {

namespace {

void check_budget(const Multigraph& g, std::size_t l, const ConstructOptions& options) {
    for (std::size_t k : {l, l + 1}) {
        std::uint64_t count = count_links(g, k);
        if (count > options.max_links) {
            throw BudgetExceeded("graph has " + std::to_string(count) + " " + std::to_string(k) +
                                 "-links, above the cap of " + std::to_string(options.max_links));
        }
    }
}

VertexId index_in(const std::vector<Link>& sorted, const Link& link) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), link);
    if (it == sorted.end() || *it != link) {
        return -1;
    }
    return static_cast<VertexId>(it - sorted.begin());
}

template <class Key>
std::vector<std::vector<std::int32_t>> group_by(std::size_t count, Key&& key_of) {
    std::map<Link, std::vector<std::int32_t>> groups;
    for (std::size_t i = 0; i < count; ++i) {
        groups[key_of(i)].push_back(static_cast<std::int32_t>(i));
    }
    std::vector<std::vector<std::int32_t>> parts;
    parts.reserve(groups.size());
    for (auto& [key, members] : groups) {
        parts.push_back(std::move(members));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace

std::optional<VertexId> LinkGraphResult::vertex_of(const Link& link) const {
    VertexId v = index_in(vertex_links, link);
    if (v < 0) {
        return std::nullopt;
    }
    return v;
}

std::optional<EdgeId> LinkGraphResult::edge_of(const Link& link) const {
    if (mode != GraphMode::link) {
        return std::nullopt;
    }
    EdgeId e = index_in(edge_links, link);
    if (e < 0) {
        return std::nullopt;
    }
    return e;
}

LinkGraphResult link_graph(const Multigraph& g, std::size_t l, const ConstructOptions& options) {
    check_budget(g, l, options);
    LinkGraphResult out;
    out.mode = GraphMode::link;
    out.order = l;
    out.vertex_links = enumerate_links(g, l);
    out.edge_links = enumerate_links(g, l + 1);
    out.graph = Multigraph(out.vertex_links.size());
    for (const Link& r : out.edge_links) {
        VertexId a = index_in(out.vertex_links, r.sub(0, l));
        VertexId b = index_in(out.vertex_links, r.sub(1, l));
        if (a < 0 || b < 0) {
            throw InternalError("sub-link of an (l+1)-link is missing");
        }
        if (a == b) {
            throw InternalError("link graph construction produced a loop at " +
                                format_sequence(r.seq));
        }
        out.graph.add_edge(a, b);
    }
    return out;
}

PartitionedLinkGraph partitioned_link_graph(const Multigraph& g, std::size_t l,
                                            const ConstructOptions& options) {
    PartitionedLinkGraph out;
    out.result = link_graph(g, l, options);
    const LinkGraphResult& lg = out.result;
    PartitionedGraph& h = out.partitioned;
    h.graph = lg.graph;
    const std::size_t nv = lg.vertex_links.size();
    const std::size_t ne = lg.edge_links.size();
    if (l == 0) {
        h = singleton_partition(lg.graph);
        return out;
    }
    if (l == 1) {
        h.vertex_parts = group_by(nv, [&](std::size_t i) {
            const Link& link = lg.vertex_links[i];
            VertexId a = link.vertex(0);
            VertexId b = link.vertex(1);
            return Link(UnitSequence{std::min(a, b), std::max(a, b)});
        });
    } else {
        h.vertex_parts = group_by(nv, [&](std::size_t i) { return lg.vertex_links[i].sub(1, l - 2); });
    }
    h.edge_parts = group_by(ne, [&](std::size_t i) { return lg.edge_links[i].sub(1, l - 1); });
    return out;
}

LinkGraphResult path_graph(const Multigraph& g, std::size_t l, const ConstructOptions& options) {
    check_budget(g, l, options);
    LinkGraphResult out;
    out.mode = GraphMode::path;
    out.order = l;
    out.vertex_links = enumerate_paths(g, l);
    out.graph = Multigraph(out.vertex_links.size());
    std::map<std::pair<VertexId, VertexId>, Link> adjacent;
    for (const Link& r : enumerate_links(g, l + 1)) {
        Link head = r.sub(0, l);
        Link tail = r.sub(1, l);
        if (!head.is_path() || !tail.is_path()) {
            continue;
        }
        // With both halves paths, r is an (l+1)-path or closes an (l+1)-cycle.
        VertexId a = index_in(out.vertex_links, head);
        VertexId b = index_in(out.vertex_links, tail);
        if (a == b) {
            throw InternalError("path graph construction produced a loop at " +
                                format_sequence(r.seq));
        }
        adjacent.emplace(std::pair{std::min(a, b), std::max(a, b)}, r);
    }
    for (auto& [ends, witness] : adjacent) {
        out.graph.add_edge(ends.first, ends.second);
        out.edge_links.push_back(witness);
    }
    return out;
}

Projection project_arc(const LinkGraphResult& lg, const Multigraph& g, const Arc& r) {
    if (lg.mode != GraphMode::link) {
        throw InvalidArgument("projection requires a link graph");
    }
    const std::size_t l = lg.order;
    if (r.length() < l || !is_arc_of(g, r.seq)) {
        throw InvalidArgument("not an arc of length at least " + std::to_string(l) + ": " +
                              format_sequence(r.seq));
    }
    const std::size_t s = r.length() - l;
    Projection p;
    for (std::size_t i = 0; i <= s; ++i) {
        if (i > 0) {
            auto q = lg.edge_of(Link(r.sub(i - 1, l + 1)));
            if (!q) {
                throw InternalError("(l+1)-link missing from link graph");
            }
            p.image.push_back(*q);
        }
        auto v = lg.vertex_of(Link(r.sub(i, l)));
        if (!v) {
            throw InternalError("l-link missing from link graph");
        }
        p.image.push_back(*v);
    }
    p.closed = p.image.front() == p.image.back();
    p.arc_closed = r.sub(0, l) == r.sub(s, l);
    return p;
}

bool shunt_reachable(const LinkGraphResult& lg, const Link& a, const Link& b) {
    auto va = lg.vertex_of(a);
    auto vb = lg.vertex_of(b);
    if (!va || !vb) {
        throw InvalidArgument("not an " + std::to_string(lg.order) + "-link of the graph");
    }
    Components comps = connected_components(lg.graph);
    return comps.component_of[static_cast<std::size_t>(*va)] ==
           comps.component_of[static_cast<std::size_t>(*vb)];
}

bool shunt_reachable(const Multigraph& g, std::size_t l, const Link& a, const Link& b,
                     const ConstructOptions& options) {
    return shunt_reachable(link_graph(g, l, options), a, b);
}

void write_provenance(std::ostream& out, const LinkGraphResult& lg) {
    out << "# vertices\n";
    for (std::size_t i = 0; i < lg.vertex_links.size(); ++i) {
        out << i << '\t' << format_sequence(lg.vertex_links[i].seq) << '\n';
    }
    out << "# edges\n";
    for (std::size_t i = 0; i < lg.edge_links.size(); ++i) {
        out << i << '\t' << format_sequence(lg.edge_links[i].seq) << '\n';
    }
}

}  // namespace linkroots
