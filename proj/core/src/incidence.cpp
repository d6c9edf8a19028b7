#include "linkroots/incidence.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "linkroots/canonical.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/io.hpp"
#include "linkroots/metrics.hpp"

namespace linkroots {

namespace {

struct Flags {
    std::vector<bool> vertex;
    std::vector<bool> edge;
};

// Branch depths of every tree component via a root-down and a root-up sweep.
// down[v]: height of v's subtree; up[c]: height of the parent's side of edge
// (parent, c), measured from the parent.
void flag_tree(const Multigraph& g, const std::vector<VertexId>& vertices, std::size_t l,
               Flags& flags) {
    const VertexId root = vertices.front();
    std::vector<VertexId> order{root};
    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::vector<EdgeId> parent_edge(g.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        for (EdgeId e : g.incident(v)) {
            if (e == parent_edge[static_cast<std::size_t>(v)]) {
                continue;
            }
            VertexId w = g.other_end(e, v);
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = e;
            order.push_back(w);
        }
    }
    std::vector<std::int64_t> down(g.vertex_count(), 0), up(g.vertex_count(), 0);
    std::vector<std::int64_t> best1(g.vertex_count(), 0), best2(g.vertex_count(), 0);
    std::vector<VertexId> best1_child(g.vertex_count(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId c = *it;
        down[static_cast<std::size_t>(c)] = best1[static_cast<std::size_t>(c)];
        VertexId p = parent[static_cast<std::size_t>(c)];
        if (p < 0) {
            continue;
        }
        auto pi = static_cast<std::size_t>(p);
        std::int64_t via = 1 + down[static_cast<std::size_t>(c)];
        if (via > best1[pi]) {
            best2[pi] = best1[pi];
            best1[pi] = via;
            best1_child[pi] = c;
        } else if (via > best2[pi]) {
            best2[pi] = via;
        }
    }
    for (VertexId c : order) {
        VertexId p = parent[static_cast<std::size_t>(c)];
        if (p < 0) {
            continue;
        }
        auto pi = static_cast<std::size_t>(p);
        std::int64_t side = best1_child[pi] == c ? best2[pi] : best1[pi];
        if (parent[pi] >= 0) {
            side = std::max(side, 1 + up[pi]);
        }
        up[static_cast<std::size_t>(c)] = side;
    }
    const auto need = static_cast<std::int64_t>(l);
    for (VertexId v : order) {
        auto vi = static_cast<std::size_t>(v);
        std::int64_t top1 = best1[vi];
        std::int64_t top2 = best2[vi];
        if (parent[vi] >= 0) {
            std::int64_t via_parent = 1 + up[vi];
            if (via_parent > top1) {
                top2 = top1;
                top1 = via_parent;
            } else if (via_parent > top2) {
                top2 = via_parent;
            }
            flags.edge[static_cast<std::size_t>(parent_edge[vi])] = up[vi] + down[vi] + 1 >= need;
        }
        flags.vertex[vi] = top1 + top2 >= need;
    }
}

Flags compute_flags(const Multigraph& g, std::size_t l) {
    Flags flags{std::vector<bool>(g.vertex_count(), l == 0),
                std::vector<bool>(g.edge_count(), l == 0)};
    if (l == 0) {
        return flags;
    }
    Components comps = connected_components(g);
    for (std::size_t c = 0; c < comps.count(); ++c) {
        if (comps.is_cyclic(c)) {
            for (VertexId v : comps.vertices[c]) {
                flags.vertex[static_cast<std::size_t>(v)] = true;
            }
            for (EdgeId e : comps.edges[c]) {
                flags.edge[static_cast<std::size_t>(e)] = true;
            }
        } else {
            flag_tree(g, comps.vertices[c], l, flags);
        }
    }
    return flags;
}

void check_unit(const Multigraph& g, Unit unit) {
    bool ok = unit.kind == Unit::Kind::vertex ? g.has_vertex(unit.id) : g.has_edge(unit.id);
    if (!ok) {
        throw InvalidArgument(format_unit(unit) + " is not in the graph");
    }
}

// Directed edge 2e runs edge(e).u -> edge(e).v, 2e+1 the other way.
struct WalkReach {
    const Multigraph& g;
    std::size_t l;
    // reach[d]: min(l, longest non-backtracking walk starting with d).
    std::vector<std::size_t> reach;

    WalkReach(const Multigraph& graph, std::size_t order) : g(graph), l(order) {
        const std::size_t dcount = 2 * g.edge_count();
        reach.assign(dcount, std::min<std::size_t>(1, l));
        std::vector<std::size_t> next(dcount);
        for (std::size_t round = 1; round < l; ++round) {
            for (std::size_t d = 0; d < dcount; ++d) {
                std::size_t best = 0;
                for_continuations(d, [&](std::size_t d2) { best = std::max(best, reach[d2]); });
                next[d] = std::min(l, 1 + best);
            }
            reach.swap(next);
        }
    }

    VertexId tail(std::size_t d) const {
        const Edge& e = g.edge(static_cast<EdgeId>(d / 2));
        return d % 2 == 0 ? e.u : e.v;
    }
    VertexId head(std::size_t d) const {
        const Edge& e = g.edge(static_cast<EdgeId>(d / 2));
        return d % 2 == 0 ? e.v : e.u;
    }
    std::size_t out_of(EdgeId e, VertexId from) const {
        return 2 * static_cast<std::size_t>(e) + (g.edge(e).u == from ? 0 : 1);
    }

    template <class F>
    void for_continuations(std::size_t d, F&& f) const {
        VertexId v = head(d);
        for (EdgeId e : g.incident(v)) {
            if (static_cast<std::size_t>(e) != d / 2) {
                f(out_of(e, v));
            }
        }
    }

    // Best directed edge leaving v avoiding edge `skip` (-1 for none).
    std::pair<std::size_t, std::size_t> best_from(VertexId v, EdgeId skip) const {
        std::size_t best = 0;
        std::size_t arg = SIZE_MAX;
        for (EdgeId e : g.incident(v)) {
            if (e == skip) {
                continue;
            }
            std::size_t d = out_of(e, v);
            if (arg == SIZE_MAX || reach[d] > best) {
                best = reach[d];
                arg = d;
            }
        }
        return {arg, best};
    }

    // A non-backtracking walk of k edges starting with d (requires reach[d] >= k).
    UnitSequence walk(std::size_t d, std::size_t k) const {
        UnitSequence seq{tail(d)};
        while (k > 0) {
            seq.push_back(static_cast<std::int32_t>(d / 2));
            seq.push_back(head(d));
            --k;
            if (k == 0) {
                break;
            }
            std::size_t chosen = SIZE_MAX;
            for_continuations(d, [&](std::size_t d2) {
                if (chosen == SIZE_MAX && reach[d2] >= k) {
                    chosen = d2;
                }
            });
            if (chosen == SIZE_MAX) {
                throw InternalError("walk reach table inconsistent");
            }
            d = chosen;
        }
        return seq;
    }

    // Joins the reversal of walk `a` (length x) with walk `b` (length y) at their common start.
    Link join(std::size_t a, std::size_t x, std::size_t b, std::size_t y) const {
        UnitSequence left = x > 0 ? walk(a, x) : UnitSequence{};
        UnitSequence right = y > 0 ? walk(b, y) : UnitSequence{};
        if (left.empty()) {
            return Link(right);
        }
        std::reverse(left.begin(), left.end());
        if (!right.empty()) {
            left.insert(left.end(), right.begin() + 1, right.end());
        }
        return Link(left);
    }

    std::optional<Link> through_vertex(VertexId v) const {
        if (l == 0) {
            return Link(UnitSequence{v});
        }
        auto [d1, r1] = best_from(v, -1);
        if (d1 == SIZE_MAX) {
            return std::nullopt;
        }
        auto [d2, r2] = best_from(v, static_cast<EdgeId>(d1 / 2));
        if (d2 == SIZE_MAX) {
            r2 = 0;
        }
        if (r1 + r2 < l) {
            return std::nullopt;
        }
        std::size_t y = std::min(r1, l);
        return join(d2, l - y, d1, y);
    }

    std::optional<Link> through_edge(EdgeId e) const {
        if (l == 0) {
            return std::nullopt;
        }
        VertexId u = g.edge(e).u;
        std::size_t forward = out_of(e, u);
        std::size_t r1 = reach[forward];
        auto [d2, r2] = best_from(u, e);
        if (d2 == SIZE_MAX) {
            r2 = 0;
        }
        if (r1 + r2 < l) {
            return std::nullopt;
        }
        std::size_t y = std::min(r1, l);
        return join(d2, l - y, forward, y);
    }
};

std::size_t tree_diameter(const Multigraph& tree) {
    GraphMetrics m = compute_metrics(tree);
    return static_cast<std::size_t>(m.diameter.value());
}

}  // namespace

std::string format_unit(const Unit& u) {
    return (u.kind == Unit::Kind::vertex ? "vertex " : "edge ") + std::to_string(u.id);
}

bool is_unit_incident(const Multigraph& g, Unit unit, std::size_t l) {
    check_unit(g, unit);
    Flags flags = compute_flags(g, l);
    return unit.kind == Unit::Kind::vertex ? flags.vertex[static_cast<std::size_t>(unit.id)]
                                           : flags.edge[static_cast<std::size_t>(unit.id)];
}

std::optional<Link> incidence_witness(const Multigraph& g, Unit unit, std::size_t l) {
    check_unit(g, unit);
    WalkReach reach(g, l);
    if (unit.kind == Unit::Kind::vertex) {
        return reach.through_vertex(unit.id);
    }
    if (l == 0) {
        // Every edge contains its end vertices, which are 0-links.
        return Link(UnitSequence{g.edge(unit.id).u});
    }
    return reach.through_edge(unit.id);
}

IncidenceReport incidence_report(const Multigraph& g, std::size_t l, bool with_witnesses) {
    IncidenceReport report;
    report.order = l;
    Flags flags = compute_flags(g, l);
    report.vertex_incident = flags.vertex;
    report.edge_incident = flags.edge;
    report.subgraph = subgraph_of_units(g, flags.vertex, flags.edge);
    if (with_witnesses) {
        WalkReach reach(g, l);
        report.vertex_witness.resize(g.vertex_count());
        report.edge_witness.resize(g.edge_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (flags.vertex[v]) {
                report.vertex_witness[v] = reach.through_vertex(static_cast<VertexId>(v));
            }
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!flags.edge[e]) {
                continue;
            }
            report.edge_witness[e] = l == 0 ? Link(UnitSequence{g.edge(static_cast<EdgeId>(e)).u})
                                            : reach.through_edge(static_cast<EdgeId>(e));
        }
    }
    return report;
}

Multigraph incidence_subgraph(const Multigraph& g, std::size_t l) {
    return incidence_report(g, l).subgraph.graph;
}

std::optional<Unit> first_non_incident_unit(const Multigraph& g, std::size_t l) {
    Flags flags = compute_flags(g, l);
    for (std::size_t v = 0; v < flags.vertex.size(); ++v) {
        if (!flags.vertex[v]) {
            return Unit::vertex(static_cast<VertexId>(v));
        }
    }
    for (std::size_t e = 0; e < flags.edge.size(); ++e) {
        if (!flags.edge[e]) {
            return Unit::edge(static_cast<EdgeId>(e));
        }
    }
    return std::nullopt;
}

bool is_l_minimal(const Multigraph& g, std::size_t l) {
    return !first_non_incident_unit(g, l).has_value();
}

bool is_l_equivalent(const Multigraph& x, const Multigraph& y, std::size_t l) {
    return is_isomorphic(incidence_subgraph(x, l), incidence_subgraph(y, l));
}

std::size_t tree_height(const Multigraph& tree, VertexId root) {
    auto dist = distances_from(tree, root);
    std::int64_t h = 0;
    for (const Extended& d : dist) {
        if (d.is_infinite()) {
            throw InvalidArgument("tree is disconnected");
        }
        h = std::max(h, d.value());
    }
    return static_cast<std::size_t>(h);
}

ExpansionResult expand_class(const Multigraph& g, std::size_t l, const ExpansionRecipe& recipe) {
    if (auto unit = first_non_incident_unit(g, l)) {
        throw InvalidArgument("input is not " + std::to_string(l) + "-minimal: " +
                              format_unit(*unit) + " lies on no " + std::to_string(l) + "-link");
    }
    Components comps = connected_components(g);
    const auto li = static_cast<std::int64_t>(l);
    const std::int64_t low_ecc = (li + 1) / 2;
    std::vector<std::int64_t> diameters(comps.count(), -1);
    ExpansionResult out;
    out.graph = g;
    std::vector<bool> pasted(comps.count(), false);

    for (std::size_t i = 0; i < recipe.pastes.size(); ++i) {
        const Paste& p = recipe.pastes[i];
        const std::string where = "paste " + std::to_string(i) + ": ";
        if (p.component >= comps.count()) {
            throw InvalidArgument(where + "component " + std::to_string(p.component) +
                                  " does not exist");
        }
        if (!g.has_vertex(p.vertex) ||
            comps.component_of[static_cast<std::size_t>(p.vertex)] != static_cast<int>(p.component)) {
            throw InvalidArgument(where + "vertex " + std::to_string(p.vertex) +
                                  " is not in component " + std::to_string(p.component));
        }
        if (comps.is_cyclic(p.component)) {
            throw InvalidArgument(where + "component " + std::to_string(p.component) +
                                  " is cyclic; pastes need an acyclic component");
        }
        Subgraph comp = induced_subgraph(g, [&] {
            std::vector<bool> keep(g.vertex_count(), false);
            for (VertexId v : comps.vertices[p.component]) {
                keep[static_cast<std::size_t>(v)] = true;
            }
            return keep;
        }());
        GraphMetrics m = compute_metrics(comp.graph);
        std::int64_t diam = m.diameter.value();
        diameters[p.component] = diam;
        if (diam < li || diam > 2 * li - 4) {
            throw InvalidArgument(where + "component diameter " + std::to_string(diam) +
                                  " violates " + std::to_string(li) + " <= diam <= " +
                                  std::to_string(2 * li - 4));
        }
        auto local = std::find(comp.vertex_origin.begin(), comp.vertex_origin.end(), p.vertex) -
                     comp.vertex_origin.begin();
        std::int64_t s = m.eccentricity[static_cast<std::size_t>(local)].value();
        if (s < low_ecc || s > li - 2) {
            throw InvalidArgument(where + "eccentricity " + std::to_string(s) + " of vertex " +
                                  std::to_string(p.vertex) + " violates " +
                                  std::to_string(low_ecc) + " <= ecc <= " + std::to_string(li - 2));
        }
        if (!is_tree(p.tree)) {
            throw InvalidArgument(where + "pasted graph is not a tree");
        }
        auto height = static_cast<std::int64_t>(tree_height(p.tree, 0));
        if (height > li - s - 1) {
            throw InvalidArgument(where + "tree height " + std::to_string(height) + " violates height <= " +
                                  std::to_string(li - s - 1) + " (l - ecc - 1)");
        }
        // Glue tree vertex 0 onto p.vertex.
        std::vector<VertexId> map(p.tree.vertex_count());
        map[0] = p.vertex;
        for (std::size_t v = 1; v < p.tree.vertex_count(); ++v) {
            map[v] = out.graph.add_vertex();
        }
        for (const Edge& e : p.tree.edges()) {
            out.graph.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
        }
        pasted[p.component] = true;
    }
    for (std::size_t i = 0; i < recipe.extras.size(); ++i) {
        const Multigraph& t = recipe.extras[i];
        if (!is_tree(t)) {
            throw InvalidArgument("add " + std::to_string(i) + ": component is not a tree");
        }
        std::size_t diam = tree_diameter(t);
        if (diam + 1 > l) {
            throw InvalidArgument("add " + std::to_string(i) + ": diameter " + std::to_string(diam) +
                                  " violates diam <= " + std::to_string(li - 1));
        }
        out.graph = disjoint_union(out.graph, t);
    }

    // Bounds are checked against the original components; report diameters that moved.
    Components after = connected_components(out.graph);
    for (std::size_t c = 0; c < comps.count(); ++c) {
        if (!pasted[c]) {
            continue;
        }
        int ac = after.component_of[static_cast<std::size_t>(comps.vertices[c].front())];
        std::vector<bool> keep(out.graph.vertex_count(), false);
        for (VertexId v : after.vertices[static_cast<std::size_t>(ac)]) {
            keep[static_cast<std::size_t>(v)] = true;
        }
        std::int64_t now = compute_metrics(induced_subgraph(out.graph, keep).graph).diameter.value();
        if (now != diameters[c]) {
            out.notes.push_back("component " + std::to_string(c) + " diameter changed from " +
                                std::to_string(diameters[c]) + " to " + std::to_string(now) +
                                "; bounds were checked against the original diameter");
        }
    }
    if (!is_isomorphic(incidence_subgraph(out.graph, l), g)) {
        throw InternalError("expanded graph is not " + std::to_string(l) + "-equivalent to its input");
    }
    return out;
}

ExpansionRecipe read_recipe(std::istream& in, const std::filesystem::path& base_dir) {
    ExpansionRecipe recipe;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "paste") {
            if (tokens.size() != 4) {
                throw ParseError("expected 'paste <component> <vertex> <tree-file>'", lineno);
            }
            Paste p;
            p.component = static_cast<std::size_t>(parse_count(tokens[1], lineno));
            long long v = parse_count(tokens[2], lineno);
            if (v > 0x7fffffff) {
                throw ParseError("vertex id too large", lineno);
            }
            p.vertex = static_cast<VertexId>(v);
            p.tree = read_multigraph_file(base_dir / tokens[3]);
            recipe.pastes.push_back(std::move(p));
        } else if (tokens[0] == "add") {
            if (tokens.size() != 2) {
                throw ParseError("expected 'add <tree-file>'", lineno);
            }
            recipe.extras.push_back(read_multigraph_file(base_dir / tokens[1]));
        } else {
            throw ParseError("unknown recipe instruction '" + tokens[0] + "'", lineno);
        }
    }
    return recipe;
}

std::size_t incidence_count(const Link& link, std::size_t s) {
    const std::size_t l = link.length();
    if (s > l) {
        throw InvalidArgument("sub-link length exceeds link length");
    }
    std::set<Link> subs;
    for (std::size_t i = 0; i + s <= l; ++i) {
        subs.insert(link.sub(i, s));
    }
    return subs.size();
}

IncidencePairs count_incidence_pairs(const Multigraph& g, std::size_t l, std::size_t s) {
    if (s > l) {
        throw InvalidArgument("s = " + std::to_string(s) + " exceeds l = " + std::to_string(l));
    }
    IncidencePairs out;
    out.links = enumerate_links(g, l);
    out.per_link.reserve(out.links.size());
    for (const Link& link : out.links) {
        std::size_t count = incidence_count(link, s);
        out.per_link.push_back(count);
        out.total += count;
    }
    return out;
}

Extended projected_girth(const Link& link, std::size_t s) {
    const std::size_t l = link.length();
    if (s > l) {
        throw InvalidArgument("sub-link length exceeds link length");
    }
    std::vector<Link> subs;
    for (std::size_t i = 0; i + s <= l; ++i) {
        subs.push_back(link.sub(i, s));
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            if (subs[i] == subs[j] && (best == 0 || j - i < best)) {
                best = j - i;
            }
        }
    }
    if (best == 0) {
        return Extended::infinite();
    }
    return Extended(static_cast<std::int64_t>(best));
}

bool projection_is_girth_cycle(const Link& link, std::size_t s) {
    Extended g = projected_girth(link, s);
    if (g.is_infinite()) {
        return false;
    }
    const std::size_t l = link.length();
    std::set<Link> vertices;
    std::set<Link> edges;
    for (std::size_t i = 0; i + s <= l; ++i) {
        vertices.insert(link.sub(i, s));
    }
    for (std::size_t i = 0; i + s + 1 <= l; ++i) {
        edges.insert(link.sub(i, s + 1));
    }
    auto gv = static_cast<std::size_t>(g.value());
    return vertices.size() == gv && edges.size() == gv;
}

}  // namespace linkroots
