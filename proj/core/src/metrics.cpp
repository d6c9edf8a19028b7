#include "linkroots/metrics.hpp"

#include <algorithm>
#include <deque>

#include "linkroots/errors.hpp"

namespace linkroots {

Components connected_components(const Multigraph& g) {
    Components out;
    out.component_of.assign(g.vertex_count(), -1);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (out.component_of[s] != -1) {
            continue;
        }
        int id = static_cast<int>(out.vertices.size());
        out.vertices.emplace_back();
        out.edges.emplace_back();
        std::vector<VertexId> stack{static_cast<VertexId>(s)};
        out.component_of[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out.vertices.back().push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (out.component_of[static_cast<std::size_t>(w)] == -1) {
                    out.component_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.vertices.back().begin(), out.vertices.back().end());
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        int c = out.component_of[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).u)];
        out.edges[static_cast<std::size_t>(c)].push_back(static_cast<EdgeId>(e));
    }
    return out;
}

std::vector<Extended> distances_from(const Multigraph& g, VertexId source) {
    std::vector<Extended> dist(g.vertex_count(), Extended::infinite());
    std::deque<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (dist[static_cast<std::size_t>(w)].is_infinite()) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Extended girth(const Multigraph& g) {
    if (g.has_parallel_edges()) {
        return 2;
    }
    // Simple graph: shortest cycle through each root via BFS non-tree edges.
    Extended best = Extended::infinite();
    const std::size_t n = g.vertex_count();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::int64_t> dist(n, -1);
        std::vector<EdgeId> via(n, -1);
        std::deque<VertexId> queue{static_cast<VertexId>(s)};
        dist[s] = 0;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(v)) {
                if (e == via[static_cast<std::size_t>(v)]) {
                    continue;
                }
                VertexId w = g.other_end(e, v);
                auto wi = static_cast<std::size_t>(w);
                if (dist[wi] == -1) {
                    dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
                    via[wi] = e;
                    queue.push_back(w);
                } else {
                    Extended len(dist[static_cast<std::size_t>(v)] + dist[wi] + 1);
                    best = std::min(best, len);
                }
            }
        }
    }
    return best;
}

GraphMetrics compute_metrics(const Multigraph& g) {
    GraphMetrics m;
    const std::size_t n = g.vertex_count();
    Components comps = connected_components(g);
    m.components = comps.count();
    for (std::size_t c = 0; c < comps.count(); ++c) {
        if (comps.is_cyclic(c)) {
            ++m.cyclic_components;
        } else {
            ++m.acyclic_components;
        }
    }
    m.girth = girth(g);
    m.eccentricity.assign(n, Extended(0));
    if (n == 0) {
        m.diameter = 0;
        m.radius = 0;
        return m;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto dist = distances_from(g, static_cast<VertexId>(v));
        m.eccentricity[v] = *std::max_element(dist.begin(), dist.end());
    }
    m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
    m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    return m;
}

bool is_connected(const Multigraph& g) { return connected_components(g).count() <= 1; }

bool is_forest(const Multigraph& g) {
    Components comps = connected_components(g);
    return g.edge_count() + comps.count() == g.vertex_count();
}

bool is_tree(const Multigraph& g) { return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g); }

TreeSplit tree_split(const Multigraph& t, EdgeId e, VertexId u) {
    if (!is_tree(t)) {
        throw InvalidArgument("tree_split requires a tree");
    }
    if (!t.has_edge(e) || !t.has_vertex(u) || (t.edge(e).u != u && t.edge(e).v != u)) {
        throw InvalidArgument("edge " + std::to_string(e) + " is not incident to vertex " +
                              std::to_string(u));
    }
    TreeSplit out;
    out.in_near_side.assign(t.vertex_count(), false);
    std::vector<VertexId> stack{u};
    out.in_near_side[static_cast<std::size_t>(u)] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId f : t.incident(v)) {
            if (f == e) {
                continue;
            }
            VertexId w = t.other_end(f, v);
            if (!out.in_near_side[static_cast<std::size_t>(w)]) {
                out.in_near_side[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<bool> far(t.vertex_count());
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        far[v] = !out.in_near_side[v];
    }
    out.near_side = induced_subgraph(t, out.in_near_side);
    far[static_cast<std::size_t>(u)] = true;
    out.far_branch = induced_subgraph(t, far);
    return out;
}

}  // namespace linkroots
