#include "linkroots/link.hpp"

#include <algorithm>
#include <sstream>

namespace linkroots {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

}  // namespace

Arc Arc::reversed() const {
    return Arc{UnitSequence(seq.rbegin(), seq.rend())};
}

Arc Arc::sub(std::size_t from, std::size_t len) const {
    auto begin = seq.begin() + static_cast<std::ptrdiff_t>(2 * from);
    return Arc{UnitSequence(begin, begin + static_cast<std::ptrdiff_t>(2 * len + 1))};
}

Link::Link(const Arc& arc) : Link(arc.seq) {}

Link::Link(UnitSequence s) : seq(std::move(s)) {
    if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end())) {
        std::reverse(seq.begin(), seq.end());
    }
}

Link Link::sub(std::size_t from, std::size_t len) const {
    return Link(arc().sub(from, len));
}

bool Link::is_path() const {
    std::vector<std::int32_t> vs;
    vs.reserve(length() + 1);
    for (std::size_t i = 0; i <= length(); ++i) {
        vs.push_back(vertex(i));
    }
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::string format_sequence(const UnitSequence& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i % 2 == 0) {
            if (i > 0) {
                os << ' ';
            }
            os << seq[i];
        } else {
            os << " -" << seq[i] << '-';
        }
    }
    return os.str();
}

bool is_arc_of(const Multigraph& g, const UnitSequence& seq) {
    if (seq.size() % 2 == 0) {
        return false;
    }
    if (!g.has_vertex(seq[0])) {
        return false;
    }
    for (std::size_t i = 1; i < seq.size(); i += 2) {
        EdgeId e = seq[i];
        if (!g.has_edge(e) || !g.has_vertex(seq[i + 1])) {
            return false;
        }
        const Edge& ed = g.edge(e);
        bool joins = (ed.u == seq[i - 1] && ed.v == seq[i + 1]) ||
                     (ed.v == seq[i - 1] && ed.u == seq[i + 1]);
        if (!joins) {
            return false;
        }
        if (i >= 3 && seq[i - 2] == e) {
            return false;
        }
    }
    return true;
}

std::vector<Arc> enumerate_arcs(const Multigraph& g, std::size_t l, std::size_t cap) {
    std::vector<Arc> out;
    for_each_arc(g, l, [&](const UnitSequence& seq) {
        if (out.size() >= cap) {
            throw BudgetExceeded("more than " + std::to_string(cap) + " " + std::to_string(l) +
                                 "-arcs");
        }
        out.push_back(Arc{seq});
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Keep one orientation per link: the arc whose sequence is not larger than its reversal.
template <class Filter>
std::vector<Link> collect_links(const Multigraph& g, std::size_t l, std::size_t cap,
                                Filter&& keep) {
    std::vector<Link> out;
    for_each_arc(g, l, [&](const UnitSequence& seq) {
        if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end())) {
            return true;
        }
        if (!keep(seq)) {
            return true;
        }
        if (out.size() >= cap) {
            throw BudgetExceeded("more than " + std::to_string(cap) + " " + std::to_string(l) +
                                 "-links");
        }
        Link link;
        link.seq = seq;
        out.push_back(std::move(link));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool vertices_distinct(const UnitSequence& seq) {
    for (std::size_t i = 0; i < seq.size(); i += 2) {
        for (std::size_t j = i + 2; j < seq.size(); j += 2) {
            if (seq[i] == seq[j]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<Link> enumerate_links(const Multigraph& g, std::size_t l, std::size_t cap) {
    return collect_links(g, l, cap, [](const UnitSequence&) { return true; });
}

std::vector<Link> enumerate_paths(const Multigraph& g, std::size_t l, std::size_t cap) {
    return collect_links(g, l, cap, vertices_distinct);
}

std::uint64_t count_arcs(const Multigraph& g, std::size_t l) {
    if (l == 0) {
        return g.vertex_count();
    }
    // Directed edge 2e runs u->v, 2e+1 runs v->u. walks[d] = number of non-backtracking
    // walks of the current length that start with d.
    std::size_t m = g.edge_count();
    std::vector<std::uint64_t> walks(2 * m, 1), next(2 * m);
    auto head = [&](std::size_t d) {
        const Edge& ed = g.edge(static_cast<EdgeId>(d / 2));
        return d % 2 == 0 ? ed.v : ed.u;
    };
    for (std::size_t k = 1; k < l; ++k) {
        for (std::size_t d = 0; d < 2 * m; ++d) {
            VertexId v = head(d);
            std::uint64_t total = 0;
            for (EdgeId f : g.incident(v)) {
                if (static_cast<std::size_t>(f) == d / 2) {
                    continue;
                }
                std::size_t out = 2 * static_cast<std::size_t>(f) + (g.edge(f).u == v ? 0 : 1);
                total = saturating_add(total, walks[out]);
            }
            next[d] = total;
        }
        walks.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : walks) {
        total = saturating_add(total, w);
    }
    return total;
}

std::uint64_t count_links(const Multigraph& g, std::size_t l) {
    std::uint64_t arcs = count_arcs(g, l);
    if (l == 0 || arcs == std::numeric_limits<std::uint64_t>::max()) {
        return arcs;
    }
    return arcs / 2;
}

std::uint64_t count_paths(const Multigraph& g, std::size_t l) {
    std::uint64_t arcs = 0;
    for_each_arc(g, l, [&](const UnitSequence& seq) {
        if (vertices_distinct(seq)) {
            ++arcs;
        }
        return true;
    });
    return l == 0 ? arcs : arcs / 2;
}

std::uint64_t count_paths_up_to(const Multigraph& g, std::size_t l, std::uint64_t cap) {
    if (l == 0) {
        return std::min<std::uint64_t>(g.vertex_count(), cap + 1);
    }
    // Each path is found once from each end.
    const std::uint64_t arc_cap = 2 * (cap + 1);
    std::uint64_t arcs = 0;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (std::size_t s = 0; s < g.vertex_count() && arcs < arc_cap; ++s) {
        stack.assign(1, {static_cast<VertexId>(s), 0});
        on_path[s] = true;
        while (!stack.empty() && arcs < arc_cap) {
            auto& [v, next] = stack.back();
            auto inc = g.incident(v);
            if (next >= inc.size()) {
                on_path[static_cast<std::size_t>(v)] = false;
                stack.pop_back();
                continue;
            }
            VertexId w = g.other_end(inc[next++], v);
            if (on_path[static_cast<std::size_t>(w)]) {
                continue;
            }
            if (stack.size() == l) {
                ++arcs;
                continue;
            }
            on_path[static_cast<std::size_t>(w)] = true;
            stack.emplace_back(w, 0);
        }
        for (auto& [v, next] : stack) {
            on_path[static_cast<std::size_t>(v)] = false;
        }
    }
    return std::min(arcs / 2, cap + 1);
}

Extended link_girth(const Link& link) {
    std::size_t best = 0;
    for (std::size_t i = 0; i <= link.length(); ++i) {
        for (std::size_t j = i + 1; j <= link.length(); ++j) {
            if (link.vertex(i) == link.vertex(j) && (best == 0 || j - i < best)) {
                best = j - i;
            }
        }
    }
    if (best == 0) {
        return Extended::infinite();
    }
    return Extended(static_cast<std::int64_t>(best));
}

Subgraph induced_graph(const Link& link, const Multigraph& g) {
    std::vector<bool> keep_vertex(g.vertex_count(), false);
    std::vector<bool> keep_edge(g.edge_count(), false);
    for (std::size_t i = 0; i <= link.length(); ++i) {
        keep_vertex[static_cast<std::size_t>(link.vertex(i))] = true;
    }
    for (std::size_t i = 1; i <= link.length(); ++i) {
        keep_edge[static_cast<std::size_t>(link.edge(i))] = true;
    }
    return subgraph_of_units(g, keep_vertex, keep_edge);
}

}  // namespace linkroots
