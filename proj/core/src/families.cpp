#include "linkroots/families.hpp"

#include <algorithm>

#include "linkroots/canonical.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/metrics.hpp"

namespace linkroots {

namespace {

void append_path(Multigraph& g, VertexId from, std::size_t length) {
    VertexId prev = from;
    for (std::size_t i = 0; i < length; ++i) {
        VertexId next = g.add_vertex();
        g.add_edge(prev, next);
        prev = next;
    }
}

RootSet closed_form_set(const std::vector<Multigraph>& graphs, const Multigraph& h, std::size_t l) {
    RootSet out;
    out.mode = GraphMode::link;
    out.order = l;
    out.bounds = compute_bounds(h, l);
    for (const Multigraph& g : graphs) {
        auto root = make_root(canonical_graph(g), h, l, GraphMode::link);
        if (!root) {
            throw InternalError("closed-form root does not reproduce its target");
        }
        out.roots.push_back(std::move(*root));
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Root& a, const Root& b) { return a.form < b.form; });
    return out;
}

}  // namespace

Multigraph h_tree(std::size_t s, std::size_t l) {
    if (s == 0 || l < s) {
        throw InvalidArgument("h_tree needs s >= 1 and l >= s");
    }
    // Middles 0 and 1 joined by an (l - s)-path, each carrying two arms of length s.
    Multigraph g(1);
    append_path(g, 0, l - s);
    VertexId other = static_cast<VertexId>(g.vertex_count() - 1);
    for (VertexId middle : {VertexId{0}, other}) {
        append_path(g, middle, s);
        append_path(g, middle, s);
    }
    return g;
}

Multigraph pendant_path_tree(std::size_t l, std::size_t i) {
    if (i > l) {
        throw InvalidArgument("attachment index exceeds path length");
    }
    Multigraph g = make_path(l);
    append_path(g, static_cast<VertexId>(i), i);
    return g;
}

RootSet cycle_roots(std::size_t t, std::size_t l) {
    if (t < 2) {
        throw InvalidArgument("cycle length must be at least 2");
    }
    std::vector<Multigraph> graphs{make_cycle(t)};
    if (l >= 1 && t == 3 * l) {
        graphs.push_back(subdivision(make_star(3), l));
    }
    if (t % 4 == 0 && l >= 2 * (t / 4) + 1) {
        graphs.push_back(h_tree(t / 4, l));
    }
    return closed_form_set(graphs, make_cycle(t), l);
}

RootSet pair_empty_roots(std::size_t l) {
    Multigraph h = make_empty(2);
    if (l == 0) {
        return closed_form_set({h}, h, l);
    }
    std::vector<Multigraph> graphs{repeat(make_path(l), 2)};
    for (std::size_t i = 1; 2 * i <= l - 1; ++i) {
        graphs.push_back(pendant_path_tree(l, i));
    }
    return closed_form_set(graphs, h, l);
}

long tail_threshold(const Multigraph& t, VertexId v) {
    if (!is_tree(t)) {
        throw InvalidArgument("tail_threshold requires a tree");
    }
    if (!t.has_vertex(v)) {
        throw InvalidArgument("vertex " + std::to_string(v) + " is not in the tree");
    }
    auto diameter = [](const Multigraph& g) { return static_cast<long>(compute_metrics(g).diameter.value()); };
    if (t.degree(v) >= 2) {
        return diameter(t);
    }
    if (t.max_degree() <= 2) {
        return -1;
    }
    // Walk from the leaf to the nearest vertex of degree at least 3.
    VertexId prev = -1;
    VertexId here = v;
    EdgeId via = -1;
    while (t.degree(here) < 3) {
        for (EdgeId e : t.incident(here)) {
            VertexId next = t.other_end(e, here);
            if (next != prev) {
                prev = here;
                here = next;
                via = e;
                break;
            }
        }
    }
    return diameter(tree_split(t, via, here).near_side.graph);
}

TailResult attach_tail(const Multigraph& t, VertexId v, std::size_t l) {
    long threshold = tail_threshold(t, v);
    TailResult out;
    out.graph = t;
    append_path(out.graph, v, l);
    out.guaranteed = static_cast<long>(l) >= threshold + 1;
    return out;
}

}  // namespace linkroots
