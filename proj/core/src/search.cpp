#include "linkroots/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "linkroots/incidence.hpp"
#include "linkroots/io.hpp"
#include "linkroots/metrics.hpp"
#include "linkroots/partition.hpp"

namespace linkroots {

namespace {

using Clock = std::chrono::steady_clock;

// Edges of the generation tree root; every connected graph with at least one
// edge descends from K2 by adding an edge inside or a pendant edge outward.
constexpr std::size_t kSplitEdges = 3;

Multigraph without_edge(const Multigraph& g, EdgeId removed, VertexId drop_vertex) {
    Multigraph out(g.vertex_count() - (drop_vertex >= 0 ? 1 : 0));
    auto remap = [&](VertexId v) { return drop_vertex >= 0 && v > drop_vertex ? v - 1 : v; };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (static_cast<EdgeId>(e) == removed) {
            continue;
        }
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        out.add_edge(remap(ed.u), remap(ed.v));
    }
    return out;
}

bool is_bridge(const Multigraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{ed.u};
    seen[static_cast<std::size_t>(ed.u)] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId f : g.incident(v)) {
            if (f == e) {
                continue;
            }
            VertexId w = g.other_end(f, v);
            if (w == ed.v) {
                return false;
            }
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// The graph left after deleting the canonically chosen deletable edge: among
// parallel, non-bridge and pendant edges, the one with the largest endpoint
// positions in the canonical order. Pendant deletions drop the leaf too.
Multigraph canonical_parent(const Multigraph& x, const CanonicalLabeling& lab) {
    std::vector<std::size_t> pos(x.vertex_count());
    for (std::size_t k = 0; k < lab.order.size(); ++k) {
        pos[static_cast<std::size_t>(lab.order[k])] = k;
    }
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    EdgeId best = -1;
    VertexId best_leaf = -1;
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        const Edge& ed = x.edge(static_cast<EdgeId>(e));
        std::size_t pu = pos[static_cast<std::size_t>(ed.u)];
        std::size_t pv = pos[static_cast<std::size_t>(ed.v)];
        std::pair key{std::max(pu, pv), std::min(pu, pv)};
        if (best >= 0 && key <= best_key) {
            continue;
        }
        VertexId leaf = -1;
        if (x.multiplicity(ed.u, ed.v) < 2) {
            if (x.degree(ed.u) == 1) {
                leaf = ed.u;
            } else if (x.degree(ed.v) == 1) {
                leaf = ed.v;
            } else if (is_bridge(x, static_cast<EdgeId>(e))) {
                continue;
            }
        }
        best = static_cast<EdgeId>(e);
        best_key = key;
        best_leaf = leaf;
    }
    if (best < 0) {
        throw InternalError("no deletable edge in a connected graph with at least two edges");
    }
    return without_edge(x, best, best_leaf);
}

struct ComponentRoot {
    Multigraph graph;
    CanonicalForm form;
    std::vector<std::size_t> counts;  // per target component class
    bool acyclic = false;
};

struct Node {
    Multigraph graph;
    CanonicalForm form;
};

class RootSearch {
public:
    RootSearch(const Multigraph& h, std::size_t l, GraphMode mode, const SearchOptions& options)
        : h_(h), l_(l), mode_(mode), options_(options), bounds_(compute_bounds(h, l)) {
        Components comps = connected_components(h);
        for (std::size_t c = 0; c < comps.count(); ++c) {
            std::vector<bool> keep(h.vertex_count(), false);
            for (VertexId v : comps.vertices[c]) {
                keep[static_cast<std::size_t>(v)] = true;
            }
            CanonicalForm f = canonical_form(induced_subgraph(h, keep).graph, options.canonical);
            ++target_[f];
        }
        for (const auto& [form, count] : target_) {
            class_index_.emplace(form, classes_.size());
            classes_.push_back(form);
            target_counts_.push_back(count);
        }
        acyclic_only_ = options.trees_only || options.forests_only ||
                        (mode == GraphMode::link && bounds_.max_cyclic == 0);
    }

    RootSet run() {
        start_ = Clock::now();
        if (options_.time_budget_seconds) {
            deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*options_.time_budget_seconds));
        }
        RootSet out;
        out.mode = mode_;
        out.order = l_;
        out.bounds = bounds_;

        Multigraph k2(2);
        k2.add_edge(0, 1);
        Node root{k2, canonical_form(k2, options_.canonical)};
        std::vector<Node> frontier;
        std::vector<ComponentRoot> found;
        explore(root, &frontier, found);
        stats_frontier_total_ = frontier.size();
        run_parallel(frontier, found);
        if (stop_) {
            throw SearchTimeout("search time budget of " +
                                    std::to_string(*options_.time_budget_seconds) +
                                    " s exhausted after " +
                                    std::to_string(frontier_done_.load()) + " of " +
                                    std::to_string(frontier.size()) + " frontier subtrees",
                                snapshot());
        }
        std::sort(found.begin(), found.end(),
                  [](const ComponentRoot& a, const ComponentRoot& b) { return a.form < b.form; });
        combine(found, out);
        out.stats = snapshot();
        return out;
    }

private:
    SearchStats snapshot() const {
        SearchStats s;
        s.generated = generated_.load();
        s.pruned = pruned_.load();
        s.component_roots = component_roots_.load();
        s.frontier_total = stats_frontier_total_;
        s.frontier_done = frontier_done_.load();
        s.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return s;
    }

    bool out_of_time() {
        if (stop_) {
            return true;
        }
        if (deadline_ && Clock::now() > *deadline_) {
            stop_ = true;
        }
        return stop_;
    }

    void run_parallel(const std::vector<Node>& frontier, std::vector<ComponentRoot>& found) {
        unsigned workers = options_.threads ? options_.threads : std::thread::hardware_concurrency();
        workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(frontier.size())));
        std::atomic<std::size_t> next{0};
        std::mutex merge;
        std::exception_ptr failure;
        auto work = [&] {
            std::vector<ComponentRoot> local;
            try {
                while (!stop_) {
                    std::size_t i = next++;
                    if (i >= frontier.size()) {
                        break;
                    }
                    explore(frontier[i], nullptr, local);
                    if (!stop_) {
                        ++frontier_done_;
                    }
                }
            } catch (...) {
                std::lock_guard lock(merge);
                if (!failure) {
                    failure = std::current_exception();
                }
                stop_ = true;
            }
            std::lock_guard lock(merge);
            for (auto& r : local) {
                found.push_back(std::move(r));
            }
        };
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < workers; ++i) {
                pool.emplace_back(work);
            }
            for (auto& t : pool) {
                t.join();
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    // Depth-first over the generation tree. With a frontier vector, nodes at the
    // split size are handed off instead of being expanded.
    void explore(const Node& node, std::vector<Node>* frontier, std::vector<ComponentRoot>& found) {
        if (out_of_time()) {
            return;
        }
        if (frontier && node.graph.edge_count() >= kSplitEdges) {
            frontier->push_back(node);
            return;
        }
        ++generated_;
        evaluate(node, found);
        for (Node& child : children(node)) {
            explore(child, frontier, found);
            if (stop_) {
                return;
            }
        }
    }

    bool within_counts(const Multigraph& x) const {
        if (mode_ == GraphMode::link) {
            return count_links(x, l_) <= bounds_.required_links &&
                   count_links(x, l_ + 1) <= bounds_.required_next_links;
        }
        return count_paths_up_to(x, l_, bounds_.required_links) <= bounds_.required_links &&
               count_paths_up_to(x, l_ + 1, bounds_.required_next_links) <=
                   bounds_.required_next_links;
    }

    bool admissible(const Multigraph& x, VertexId a, VertexId b) const {
        if (x.edge_count() > bounds_.max_m || x.vertex_count() > bounds_.max_n) {
            return false;
        }
        if (mode_ == GraphMode::link &&
            (x.degree(a) > bounds_.max_degree || x.degree(b) > bounds_.max_degree)) {
            return false;
        }
        return within_counts(x);
    }

    std::vector<Node> children(const Node& node) {
        const Multigraph& p = node.graph;
        std::vector<Node> out;
        if (p.edge_count() + 1 > bounds_.max_m) {
            return out;
        }
        std::set<CanonicalForm> seen;
        auto consider = [&](Multigraph x, VertexId a, VertexId b) {
            if (!admissible(x, a, b)) {
                ++pruned_;
                return;
            }
            CanonicalLabeling lab = canonical_labeling(x, {}, options_.canonical);
            if (seen.count(lab.form)) {
                return;
            }
            if (canonical_form(canonical_parent(x, lab), options_.canonical) != node.form) {
                return;
            }
            seen.insert(lab.form);
            out.push_back({std::move(x), std::move(lab.form)});
        };
        const auto n = static_cast<VertexId>(p.vertex_count());
        if (!acyclic_only_) {
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = u + 1; v < n; ++v) {
                    Multigraph x = p;
                    x.add_edge(u, v);
                    consider(std::move(x), u, v);
                }
            }
        }
        if (p.vertex_count() + 1 <= bounds_.max_n) {
            for (VertexId u = 0; u < n; ++u) {
                Multigraph x = p;
                VertexId w = x.add_vertex();
                x.add_edge(u, w);
                consider(std::move(x), u, w);
            }
        }
        return out;
    }

    void evaluate(const Node& node, std::vector<ComponentRoot>& found) {
        const Multigraph& x = node.graph;
        bool minimal = mode_ == GraphMode::link ? is_l_minimal(x, l_) : is_path_minimal(x, l_);
        if (!minimal) {
            return;
        }
        LinkGraphResult lg = mode_ == GraphMode::link ? link_graph(x, l_) : path_graph(x, l_);
        Components comps = connected_components(lg.graph);
        std::vector<std::size_t> counts(classes_.size(), 0);
        for (std::size_t c = 0; c < comps.count(); ++c) {
            std::vector<bool> keep(lg.graph.vertex_count(), false);
            for (VertexId v : comps.vertices[c]) {
                keep[static_cast<std::size_t>(v)] = true;
            }
            CanonicalForm f = canonical_form(induced_subgraph(lg.graph, keep).graph, options_.canonical);
            auto it = class_index_.find(f);
            if (it == class_index_.end() || ++counts[it->second] > target_counts_[it->second]) {
                return;
            }
        }
        ++component_roots_;
        found.push_back({canonical_graph(x, options_.canonical), node.form, std::move(counts),
                         x.edge_count() + 1 == x.vertex_count()});
    }

    void combine(const std::vector<ComponentRoot>& parts, RootSet& out) {
        const bool single = options_.connected_only || options_.trees_only;
        std::vector<std::size_t> remaining = target_counts_;
        std::vector<std::size_t> chosen;
        std::vector<Root> roots;
        auto done = [&] {
            return std::all_of(remaining.begin(), remaining.end(), [](std::size_t r) { return r == 0; });
        };
        auto recurse = [&](auto&& self, std::size_t from) -> void {
            if (done()) {
                emit(parts, chosen, out.bounds, roots);
                return;
            }
            if (single && !chosen.empty()) {
                return;
            }
            for (std::size_t i = from; i < parts.size(); ++i) {
                bool fits = true;
                for (std::size_t k = 0; k < remaining.size() && fits; ++k) {
                    fits = parts[i].counts[k] <= remaining[k];
                }
                if (!fits) {
                    continue;
                }
                for (std::size_t k = 0; k < remaining.size(); ++k) {
                    remaining[k] -= parts[i].counts[k];
                }
                chosen.push_back(i);
                self(self, i);
                chosen.pop_back();
                for (std::size_t k = 0; k < remaining.size(); ++k) {
                    remaining[k] += parts[i].counts[k];
                }
            }
        };
        recurse(recurse, 0);
        std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.form < b.form; });
        out.roots = std::move(roots);
    }

    void emit(const std::vector<ComponentRoot>& parts, const std::vector<std::size_t>& chosen,
              const SearchBounds& bounds, std::vector<Root>& roots) {
        Multigraph g;
        for (std::size_t i : chosen) {
            g = disjoint_union(g, parts[i].graph);
        }
        g = canonical_graph(g, options_.canonical);
        auto root = make_root(g, h_, l_, mode_);
        if (!root) {
            throw InternalError("combined component roots do not reproduce the target");
        }
        if (auto violation = audit_root(*root, bounds, mode_)) {
            throw InternalError("root violates a proven bound: " + *violation);
        }
        roots.push_back(std::move(*root));
    }

    const Multigraph& h_;
    std::size_t l_;
    GraphMode mode_;
    SearchOptions options_;
    SearchBounds bounds_;
    bool acyclic_only_ = false;

    std::map<CanonicalForm, std::size_t> target_;
    std::map<CanonicalForm, std::size_t> class_index_;
    std::vector<CanonicalForm> classes_;
    std::vector<std::size_t> target_counts_;

    Clock::time_point start_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<bool> stop_{false};
    std::atomic<std::uint64_t> generated_{0};
    std::atomic<std::uint64_t> pruned_{0};
    std::atomic<std::uint64_t> component_roots_{0};
    std::atomic<std::uint64_t> frontier_done_{0};
    std::uint64_t stats_frontier_total_ = 0;
};

RootSet trivial_roots(const Multigraph& h, std::size_t l, GraphMode mode, const Multigraph& g) {
    RootSet out;
    out.mode = mode;
    out.order = l;
    out.bounds = compute_bounds(h, l);
    auto root = make_root(canonical_graph(g), h, l, mode);
    if (!root) {
        throw InternalError("trivial root does not reproduce the target");
    }
    out.roots.push_back(std::move(*root));
    return out;
}

RootSet search(const Multigraph& h, std::size_t l, GraphMode mode, const SearchOptions& options) {
    if (l == 0 && !(mode == GraphMode::path && h.has_parallel_edges())) {
        // The 0-link and 0-path graphs of H are H itself.
        return trivial_roots(h, l, mode, h);
    }
    if (h.vertex_count() == 0) {
        return trivial_roots(h, l, mode, Multigraph());
    }
    if (mode == GraphMode::path && h.has_parallel_edges()) {
        // Path graphs are simple.
        RootSet none;
        none.mode = mode;
        none.order = l;
        none.bounds = compute_bounds(h, l);
        return none;
    }
    SearchBounds bounds = compute_bounds(h, l);
    if (bounds.max_m > options.max_edges) {
        throw BudgetExceeded("size bound l*n(H) = " + std::to_string(bounds.max_m) +
                             " exceeds the configured limit of " + std::to_string(options.max_edges) +
                             " edges");
    }
    RootSet out = RootSearch(h, l, mode, options).run();
    // Sanity: at most (l n + a)^(2 l n) minimal roots, with a <= c(H).
    double base = static_cast<double>(bounds.max_n);
    double limit = 2.0 * static_cast<double>(bounds.max_m) * std::log(std::max(base, 1.0));
    if (!out.roots.empty() && std::log(static_cast<double>(out.roots.size())) > limit + 1e-9) {
        throw InternalError("root count exceeds the proven upper bound");
    }
    return out;
}

}  // namespace

std::vector<CanonicalForm> RootSet::forms() const {
    std::vector<CanonicalForm> out;
    out.reserve(roots.size());
    for (const Root& r : roots) {
        out.push_back(r.form);
    }
    return out;
}

SearchBounds compute_bounds(const Multigraph& h, std::size_t l) {
    SearchBounds b;
    GraphMetrics m = compute_metrics(h);
    b.order = l;
    b.target_vertices = h.vertex_count();
    b.target_edges = h.edge_count();
    b.target_components = m.components;
    b.target_cyclic = m.cyclic_components;
    b.target_max_degree = h.max_degree();
    b.max_m = l * h.vertex_count();
    b.max_n = b.max_m + m.components;
    b.max_degree = std::max(m.components, b.target_max_degree) + 1;
    b.tree_degree_cap = m.components + 1;
    b.required_links = h.vertex_count();
    b.required_next_links = h.edge_count();
    b.max_cyclic = m.cyclic_components;
    return b;
}

RootSet minimal_link_roots(const Multigraph& h, std::size_t l, const SearchOptions& options) {
    return search(h, l, GraphMode::link, options);
}

RootSet minimal_path_roots(const Multigraph& h, std::size_t l, const SearchOptions& options) {
    return search(h, l, GraphMode::path, options);
}

std::optional<Root> make_root(const Multigraph& g, const Multigraph& h, std::size_t l, GraphMode mode) {
    LinkGraphResult lg = mode == GraphMode::link ? link_graph(g, l) : path_graph(g, l);
    auto iso = find_isomorphism(lg.graph, h);
    if (!iso || !verify_isomorphism(lg.graph, h, *iso)) {
        return std::nullopt;
    }
    Root root;
    root.graph = g;
    root.form = canonical_form(g);
    root.witness_links.resize(h.vertex_count());
    for (std::size_t v = 0; v < lg.vertex_links.size(); ++v) {
        root.witness_links[static_cast<std::size_t>(iso->vertex_map[v])] = lg.vertex_links[v];
    }
    root.witness = std::move(*iso);
    root.forest = is_forest(g);
    root.tree = root.forest && is_connected(g) && g.vertex_count() > 0;
    root.cyclic = !root.forest;
    return root;
}

bool is_path_minimal(const Multigraph& g, std::size_t l) {
    if (l == 0) {
        // The 0-path graph is the simple graph underlying g: every vertex counts and
        // every edge but the duplicates of a parallel class.
        return !g.has_parallel_edges();
    }
    std::vector<bool> vertex(g.vertex_count(), false);
    std::vector<bool> edge(g.edge_count(), false);
    for_each_arc(g, l, [&](const UnitSequence& seq) {
        for (std::size_t i = 0; i < seq.size(); i += 2) {
            for (std::size_t j = i + 2; j < seq.size(); j += 2) {
                if (seq[i] == seq[j]) {
                    return true;
                }
            }
        }
        for (std::size_t i = 0; i < seq.size(); ++i) {
            (i % 2 == 0 ? vertex : edge)[static_cast<std::size_t>(seq[i])] = true;
        }
        return true;
    });
    return std::all_of(vertex.begin(), vertex.end(), [](bool b) { return b; }) &&
           std::all_of(edge.begin(), edge.end(), [](bool b) { return b; });
}

std::optional<std::string> audit_root(const Root& root, const SearchBounds& b, GraphMode mode) {
    const Multigraph& g = root.graph;
    auto fail = [](const std::string& what, std::size_t value, std::size_t bound) {
        return what + " = " + std::to_string(value) + " > " + std::to_string(bound);
    };
    if (g.edge_count() > b.max_m) {
        return fail("m", g.edge_count(), b.max_m);
    }
    if (g.vertex_count() > b.max_n) {
        return fail("n", g.vertex_count(), b.max_n);
    }
    if (mode == GraphMode::path) {
        return std::nullopt;
    }
    if (g.max_degree() > b.max_degree) {
        return fail("max degree", g.max_degree(), b.max_degree);
    }
    PartitionedLinkGraph plg = partitioned_link_graph(g, b.order);
    ComponentCensus census = count_cyclic_components(plg.partitioned);
    if (g.vertex_count() > b.max_m + census.acyclic_count) {
        return fail("n", g.vertex_count(), b.max_m + census.acyclic_count);
    }
    std::size_t param = std::max(census.acyclic_count, part_degree_set(plg.partitioned).max);
    if (b.target_vertices >= 2 && g.max_degree() > param + 1) {
        return fail("max degree", g.max_degree(), param + 1);
    }
    if (root.tree) {
        GraphMetrics m = compute_metrics(g);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (m.eccentricity[v] < Extended(static_cast<std::int64_t>(b.order)) &&
                g.degree(static_cast<VertexId>(v)) > b.tree_degree_cap) {
                return fail("degree of vertex " + std::to_string(v) + " with eccentricity below l",
                            g.degree(static_cast<VertexId>(v)), b.tree_degree_cap);
            }
        }
    }
    return std::nullopt;
}

void export_roots(const RootSet& set, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream index(dir / "roots.tsv");
    if (!index) {
        throw Error("cannot write " + (dir / "roots.tsv").string());
    }
    index << "index\troot\tcanonical\tn\tm\tkind\twitness\n";
    for (std::size_t i = 0; i < set.roots.size(); ++i) {
        const Root& r = set.roots[i];
        char stem[32];
        std::snprintf(stem, sizeof stem, "root_%03zu", i);
        std::string graph_file = std::string(stem) + ".mg";
        std::string witness_file = std::string(stem) + ".witness";
        write_multigraph_file(dir / graph_file, r.graph);
        std::ofstream w(dir / witness_file);
        if (!w) {
            throw Error("cannot write " + (dir / witness_file).string());
        }
        w << "# target vertex\t" << (set.mode == GraphMode::link ? "link" : "path") << '\n';
        for (std::size_t h = 0; h < r.witness_links.size(); ++h) {
            w << h << '\t' << format_sequence(r.witness_links[h].seq) << '\n';
        }
        const char* kind = r.tree ? "tree" : (r.forest ? "forest" : "cyclic");
        index << i << '\t' << graph_file << '\t' << r.form.hex() << '\t' << r.graph.vertex_count()
              << '\t' << r.graph.edge_count() << '\t' << kind << '\t' << witness_file << '\n';
    }
}

}  // namespace linkroots
