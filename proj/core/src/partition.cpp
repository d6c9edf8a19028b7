#include "linkroots/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "linkroots/errors.hpp"
#include "linkroots/io.hpp"

namespace linkroots {

namespace {

template <class Id>
std::optional<PartitionViolation> check_side(const std::vector<std::vector<Id>>& parts,
                                             std::size_t universe, bool on_vertices) {
    const std::string what = on_vertices ? "vertex" : "edge";
    std::vector<int> owner(universe, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) {
            return PartitionViolation{PartitionViolation::Kind::empty_part, on_vertices,
                                      static_cast<int>(p), -1,
                                      what + " part " + std::to_string(p) + " is empty"};
        }
        for (Id id : parts[p]) {
            if (id < 0 || static_cast<std::size_t>(id) >= universe) {
                return PartitionViolation{PartitionViolation::Kind::out_of_range, on_vertices,
                                          static_cast<int>(p), static_cast<int>(id),
                                          what + " part " + std::to_string(p) +
                                              " contains nonexistent id " + std::to_string(id)};
            }
            int& o = owner[static_cast<std::size_t>(id)];
            if (o != -1) {
                return PartitionViolation{PartitionViolation::Kind::overlap, on_vertices,
                                          static_cast<int>(p), static_cast<int>(id),
                                          what + " " + std::to_string(id) + " lies in parts " +
                                              std::to_string(o) + " and " + std::to_string(p)};
            }
            o = static_cast<int>(p);
        }
    }
    for (std::size_t id = 0; id < universe; ++id) {
        if (owner[id] == -1) {
            return PartitionViolation{PartitionViolation::Kind::gap, on_vertices, -1,
                                      static_cast<int>(id),
                                      what + " " + std::to_string(id) + " lies in no part"};
        }
    }
    return std::nullopt;
}

template <class Id>
void normalize_side(std::vector<std::vector<Id>>& parts) {
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
    }
    std::sort(parts.begin(), parts.end());
}

}  // namespace

std::optional<PartitionViolation> validate(const PartitionedGraph& h) {
    if (auto v = check_side(h.vertex_parts, h.graph.vertex_count(), true)) {
        return v;
    }
    return check_side(h.edge_parts, h.graph.edge_count(), false);
}

PartitionedGraph singleton_partition(const Multigraph& g) {
    PartitionedGraph h{g, {}, {}};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        h.vertex_parts.push_back({static_cast<VertexId>(v)});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        h.edge_parts.push_back({static_cast<EdgeId>(e)});
    }
    return h;
}

void normalize(PartitionedGraph& h) {
    normalize_side(h.vertex_parts);
    normalize_side(h.edge_parts);
}

std::vector<int> edge_part_index(const PartitionedGraph& h) {
    std::vector<int> part(h.graph.edge_count(), -1);
    for (std::size_t p = 0; p < h.edge_parts.size(); ++p) {
        for (EdgeId e : h.edge_parts[p]) {
            part[static_cast<std::size_t>(e)] = static_cast<int>(p);
        }
    }
    return part;
}

DerivedDigraph derived_digraph(const PartitionedGraph& h) {
    const Multigraph& g = h.graph;
    std::vector<int> part = edge_part_index(h);
    DerivedDigraph d;
    // Nodes of vertex v occupy [first[v], first[v+1]), sorted by part.
    std::vector<std::size_t> first(g.vertex_count() + 1, 0);
    std::vector<std::vector<int>> parts_at(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto& ps = parts_at[v];
        for (EdgeId e : g.incident(static_cast<VertexId>(v))) {
            ps.push_back(part[static_cast<std::size_t>(e)]);
        }
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        first[v] = d.nodes.size();
        for (int p : ps) {
            d.nodes.push_back({static_cast<VertexId>(v), p});
        }
    }
    first[g.vertex_count()] = d.nodes.size();
    auto node_of = [&](VertexId v, int p) {
        const auto& ps = parts_at[static_cast<std::size_t>(v)];
        auto it = std::lower_bound(ps.begin(), ps.end(), p);
        return static_cast<int>(first[static_cast<std::size_t>(v)] +
                                static_cast<std::size_t>(it - ps.begin()));
    };
    d.out.resize(d.nodes.size());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        int p = part[e];
        for (auto [u, v] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            int src = node_of(u, p);
            for (int q : parts_at[static_cast<std::size_t>(v)]) {
                if (q != p) {
                    d.out[static_cast<std::size_t>(src)].push_back(node_of(v, q));
                }
            }
        }
    }
    for (auto& targets : d.out) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        d.arc_count += targets.size();
    }
    return d;
}

std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& out) {
    const std::size_t n = out.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;  // (node, next arc)
    int counter = 0;
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (index[s] != -1) {
            continue;
        }
        call.emplace_back(static_cast<int>(s), 0);
        while (!call.empty()) {
            auto& [v, next] = call.back();
            auto vi = static_cast<std::size_t>(v);
            if (next == 0 && index[vi] == -1) {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = true;
            }
            if (next < out[vi].size()) {
                int w = out[vi][next++];
                auto wi = static_cast<std::size_t>(w);
                if (index[wi] == -1) {
                    call.emplace_back(w, 0);
                } else if (on_stack[wi]) {
                    low[vi] = std::min(low[vi], index[wi]);
                }
                continue;
            }
            if (low[vi] == index[vi]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = comps;
                    if (w == v) {
                        break;
                    }
                }
                ++comps;
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) {
                auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return comp;
}

ComponentCensus count_cyclic_components(const PartitionedGraph& h) {
    ComponentCensus census;
    census.components = connected_components(h.graph);
    census.cyclic.assign(census.components.count(), false);
    DerivedDigraph d = derived_digraph(h);
    std::vector<int> scc = strongly_connected_components(d.out);
    std::vector<std::size_t> scc_size(d.nodes.size(), 0);
    for (int c : scc) {
        ++scc_size[static_cast<std::size_t>(c)];
    }
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (scc_size[static_cast<std::size_t>(scc[i])] >= 2) {
            int c = census.components.component_of[static_cast<std::size_t>(d.nodes[i].vertex)];
            census.cyclic[static_cast<std::size_t>(c)] = true;
        }
    }
    for (bool c : census.cyclic) {
        (c ? census.cyclic_count : census.acyclic_count)++;
    }
    return census;
}

DegreeSet part_degree_set(const PartitionedGraph& h) {
    std::vector<int> part = edge_part_index(h);
    DegreeSet out;
    for (std::size_t v = 0; v < h.graph.vertex_count(); ++v) {
        std::vector<int> ps;
        for (EdgeId e : h.graph.incident(static_cast<VertexId>(v))) {
            ps.push_back(part[static_cast<std::size_t>(e)]);
        }
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 0; i < ps.size();) {
            std::size_t j = i;
            while (j < ps.size() && ps[j] == ps[i]) {
                ++j;
            }
            out.values.insert(j - i);
            i = j;
        }
    }
    if (!out.values.empty()) {
        out.max = *out.values.rbegin();
    }
    return out;
}

DegreeSet graph_degree_set(const Multigraph& g) {
    DegreeSet out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t d = g.degree(static_cast<VertexId>(v));
        if (d >= 2) {
            out.values.insert(d - 1);
        }
    }
    if (!out.values.empty()) {
        out.max = *out.values.rbegin();
    }
    return out;
}

std::size_t max_incident_edge_parts(const PartitionedGraph& h) {
    std::vector<int> part = edge_part_index(h);
    std::size_t r = 0;
    std::vector<int> seen;
    for (std::size_t v = 0; v < h.graph.vertex_count(); ++v) {
        seen.clear();
        for (EdgeId e : h.graph.incident(static_cast<VertexId>(v))) {
            seen.push_back(part[static_cast<std::size_t>(e)]);
        }
        std::sort(seen.begin(), seen.end());
        r = std::max(r, static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin()));
    }
    return r;
}

std::size_t degree_parameter(const PartitionedGraph& h) {
    return std::max(count_cyclic_components(h).acyclic_count, part_degree_set(h).max);
}

std::vector<Link> enumerate_partitioned_links(const PartitionedGraph& h, std::size_t s) {
    std::vector<int> part = edge_part_index(h);
    std::vector<Link> out;
    for_each_arc(h.graph, s, [&](const UnitSequence& seq) {
        for (std::size_t i = 3; i < seq.size(); i += 2) {
            if (part[static_cast<std::size_t>(seq[i])] == part[static_cast<std::size_t>(seq[i - 2])]) {
                return true;
            }
        }
        Link link(seq);
        if (link.seq == seq) {
            out.push_back(std::move(link));
        }
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

PartitionedGraph read_partition(std::istream& in, const Multigraph& g) {
    PartitionedGraph h{g, {}, {}};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) {
            continue;
        }
        bool vertex_line = tokens[0] == "V:";
        if (!vertex_line && tokens[0] != "E:") {
            throw ParseError("expected 'V:' or 'E:'", lineno);
        }
        std::vector<std::int32_t> ids;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            long long id = parse_count(tokens[i], lineno);
            if (id > 0x7fffffff) {
                throw ParseError("id too large", lineno);
            }
            ids.push_back(static_cast<std::int32_t>(id));
        }
        (vertex_line ? h.vertex_parts : h.edge_parts).push_back(std::move(ids));
    }
    if (auto violation = validate(h)) {
        throw InvalidArgument(violation->message);
    }
    for (auto& p : h.vertex_parts) {
        std::sort(p.begin(), p.end());
    }
    for (auto& p : h.edge_parts) {
        std::sort(p.begin(), p.end());
    }
    return h;
}

void write_partition(std::ostream& out, const PartitionedGraph& h) {
    for (const auto& p : h.vertex_parts) {
        out << "V:";
        for (VertexId v : p) {
            out << ' ' << v;
        }
        out << '\n';
    }
    for (const auto& p : h.edge_parts) {
        out << "E:";
        for (EdgeId e : p) {
            out << ' ' << e;
        }
        out << '\n';
    }
}

}  // namespace linkroots
