#include "linkroots/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linkroots/errors.hpp"

namespace linkroots {

namespace {

using Matrix = std::vector<std::uint8_t>;

// Individualization-refinement search on one connected component.
class ComponentCanonizer {
public:
    ComponentCanonizer(std::size_t k, Matrix adj, std::vector<std::uint32_t> base,
                       std::size_t max_leaves)
        : k_(k), adj_(std::move(adj)), base_(std::move(base)), max_leaves_(max_leaves) {
        compute_twins();
    }

    void run() {
        std::vector<std::uint32_t> sorted = base_;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> colors(k_);
        for (std::size_t v = 0; v < k_; ++v) {
            colors[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), base_[v]) - sorted.begin());
        }
        std::vector<int> prefix;
        search(std::move(colors), prefix);
    }

    const std::vector<int>& best_order() const { return best_order_; }
    const Matrix& best_certificate() const { return best_cert_; }

private:
    std::uint8_t at(std::size_t a, std::size_t b) const { return adj_[a * k_ + b]; }

    void compute_twins() {
        twin_rep_.resize(k_);
        for (std::size_t v = 0; v < k_; ++v) {
            twin_rep_[v] = static_cast<int>(v);
            for (std::size_t w = 0; w < v; ++w) {
                if (twin_rep_[w] != static_cast<int>(w) || base_[w] != base_[v]) {
                    continue;
                }
                bool same = true;
                for (std::size_t x = 0; x < k_ && same; ++x) {
                    if (x != v && x != w && at(v, x) != at(w, x)) {
                        same = false;
                    }
                }
                if (same) {
                    twin_rep_[v] = static_cast<int>(w);
                    break;
                }
            }
        }
    }

    // Equitable refinement. Cells keep their relative order, so the result is
    // equivariant under relabeling.
    std::size_t refine(std::vector<int>& colors) const {
        std::size_t cells = 1 + static_cast<std::size_t>(
                                    *std::max_element(colors.begin(), colors.end()));
        std::vector<std::vector<int>> sig(k_);
        std::vector<int> idx(k_);
        while (true) {
            for (std::size_t v = 0; v < k_; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(colors[v]);
                std::vector<std::pair<int, int>> nb;
                for (std::size_t x = 0; x < k_; ++x) {
                    if (at(v, x) != 0) {
                        nb.emplace_back(colors[x], at(v, x));
                    }
                }
                std::sort(nb.begin(), nb.end());
                for (auto [c, mult] : nb) {
                    s.push_back(c);
                    s.push_back(mult);
                }
            }
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            int rank = 0;
            for (std::size_t i = 0; i < k_; ++i) {
                if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) {
                    ++rank;
                }
                colors[idx[i]] = rank;
            }
            std::size_t now = static_cast<std::size_t>(rank) + 1;
            if (now == cells) {
                return cells;
            }
            cells = now;
        }
    }

    int find(std::vector<int>& parent, int x) const {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void search(std::vector<int> colors, std::vector<int>& prefix) {
        std::size_t cells = refine(colors);
        if (cells == k_) {
            leaf(colors);
            return;
        }
        std::vector<std::size_t> size(cells, 0);
        for (int c : colors) {
            ++size[static_cast<std::size_t>(c)];
        }
        std::size_t target = cells;
        for (std::size_t c = 0; c < cells; ++c) {
            if (size[c] > 1 && (target == cells || size[c] < size[target])) {
                target = c;
            }
        }
        std::vector<int> members;
        for (std::size_t v = 0; v < k_; ++v) {
            if (colors[v] == static_cast<int>(target)) {
                members.push_back(static_cast<int>(v));
            }
        }
        std::vector<int> tried;
        for (int v : members) {
            int rep = twin_rep_[static_cast<std::size_t>(v)];
            if (rep != v && colors[static_cast<std::size_t>(rep)] == static_cast<int>(target)) {
                continue;
            }
            if (!tried.empty() && equivalent_to_tried(v, tried, prefix)) {
                continue;
            }
            tried.push_back(v);
            std::vector<int> child(k_);
            for (std::size_t x = 0; x < k_; ++x) {
                child[x] = 2 * colors[x] +
                           ((colors[x] == static_cast<int>(target) && static_cast<int>(x) != v) ? 1
                                                                                                : 0);
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    // Whether some stored automorphism fixing the prefix pointwise links v to a tried vertex.
    bool equivalent_to_tried(int v, const std::vector<int>& tried, const std::vector<int>& prefix) {
        std::vector<int> parent(k_);
        std::iota(parent.begin(), parent.end(), 0);
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes) {
                continue;
            }
            any = true;
            for (std::size_t x = 0; x < k_; ++x) {
                int a = find(parent, static_cast<int>(x));
                int b = find(parent, gamma[x]);
                if (a != b) {
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                }
            }
        }
        if (!any) {
            return false;
        }
        int root = find(parent, v);
        return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(parent, t) == root; });
    }

    void leaf(const std::vector<int>& colors) {
        if (++leaves_ > max_leaves_) {
            throw BudgetExceeded("canonical labeling exceeded " + std::to_string(max_leaves_) +
                                 " search leaves");
        }
        std::vector<int> order(k_);
        for (std::size_t v = 0; v < k_; ++v) {
            order[static_cast<std::size_t>(colors[v])] = static_cast<int>(v);
        }
        Matrix cert;
        cert.reserve(k_ * (k_ - 1) / 2);
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = i + 1; j < k_; ++j) {
                cert.push_back(at(static_cast<std::size_t>(order[i]), static_cast<std::size_t>(order[j])));
            }
        }
        if (best_order_.empty() || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        } else if (cert == best_cert_) {
            std::vector<int> gamma(k_);
            bool identity = true;
            for (std::size_t i = 0; i < k_; ++i) {
                gamma[static_cast<std::size_t>(best_order_[i])] = order[i];
                identity = identity && best_order_[i] == order[i];
            }
            if (!identity) {
                automorphisms_.push_back(std::move(gamma));
            }
        }
    }

    std::size_t k_;
    Matrix adj_;
    std::vector<std::uint32_t> base_;
    std::size_t max_leaves_;
    std::size_t leaves_ = 0;
    std::vector<int> twin_rep_;
    std::vector<std::vector<int>> automorphisms_;
    Matrix best_cert_;
    std::vector<int> best_order_;
};

struct ComponentResult {
    std::vector<std::uint8_t> bytes;
    std::vector<VertexId> order;
};

void put16(std::vector<std::uint8_t>& out, std::size_t value) {
    out.push_back(static_cast<std::uint8_t>(value >> 8));
    out.push_back(static_cast<std::uint8_t>(value & 0xff));
}

}  // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

CanonicalLabeling canonical_labeling(const Multigraph& g, const std::vector<std::uint32_t>& colors,
                                     const CanonicalOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n > 0xffff) {
        throw InvalidArgument("canonical form supports at most 65535 vertices");
    }
    if (!colors.empty() && colors.size() != n) {
        throw InvalidArgument("color vector size differs from vertex count");
    }
    const bool colored = !colors.empty();

    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> members;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) {
            continue;
        }
        int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<VertexId> stack{static_cast<VertexId>(s)};
        comp[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            members.back().push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<int> local(n, -1);
    std::vector<ComponentResult> parts;
    parts.reserve(members.size());
    for (auto& mem : members) {
        std::sort(mem.begin(), mem.end());
        const std::size_t k = mem.size();
        for (std::size_t i = 0; i < k; ++i) {
            local[static_cast<std::size_t>(mem[i])] = static_cast<int>(i);
        }
        Matrix adj(k * k, 0);
        std::vector<std::uint32_t> base(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            VertexId v = mem[i];
            if (colored) {
                base[i] = colors[static_cast<std::size_t>(v)];
            }
            for (EdgeId e : g.incident(v)) {
                auto j = static_cast<std::size_t>(local[static_cast<std::size_t>(g.other_end(e, v))]);
                if (adj[i * k + j] == 255) {
                    throw InvalidArgument("edge multiplicity above 255");
                }
                ++adj[i * k + j];
            }
        }
        ComponentCanonizer canon(k, std::move(adj), base, options.max_leaves);
        canon.run();
        ComponentResult part;
        put16(part.bytes, k);
        part.bytes.push_back(colored ? 1 : 0);
        for (int pos : canon.best_order()) {
            part.order.push_back(mem[static_cast<std::size_t>(pos)]);
            if (colored) {
                std::uint32_t c = base[static_cast<std::size_t>(pos)];
                for (int shift = 24; shift >= 0; shift -= 8) {
                    part.bytes.push_back(static_cast<std::uint8_t>((c >> shift) & 0xff));
                }
            }
        }
        const auto& cert = canon.best_certificate();
        part.bytes.insert(part.bytes.end(), cert.begin(), cert.end());
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end(),
              [](const ComponentResult& a, const ComponentResult& b) { return a.bytes < b.bytes; });

    CanonicalLabeling out;
    put16(out.form.bytes, n);
    put16(out.form.bytes, parts.size());
    out.order.reserve(n);
    for (const auto& part : parts) {
        out.form.bytes.insert(out.form.bytes.end(), part.bytes.begin(), part.bytes.end());
        out.order.insert(out.order.end(), part.order.begin(), part.order.end());
    }
    return out;
}

CanonicalForm canonical_form(const Multigraph& g, const CanonicalOptions& options) {
    return canonical_labeling(g, {}, options).form;
}

Multigraph canonical_graph(const Multigraph& g, const CanonicalOptions& options) {
    CanonicalLabeling lab = canonical_labeling(g, {}, options);
    std::vector<VertexId> pos(g.vertex_count());
    for (std::size_t k = 0; k < lab.order.size(); ++k) {
        pos[static_cast<std::size_t>(lab.order[k])] = static_cast<VertexId>(k);
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        VertexId a = pos[static_cast<std::size_t>(e.u)];
        VertexId b = pos[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return Multigraph(g.vertex_count(), edges);
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b, const CanonicalOptions& options) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_form(a, options) == canonical_form(b, options);
}

std::optional<Isomorphism> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                            const CanonicalOptions& options) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    CanonicalLabeling la = canonical_labeling(a, {}, options);
    CanonicalLabeling lb = canonical_labeling(b, {}, options);
    if (la.form != lb.form) {
        return std::nullopt;
    }
    Isomorphism iso;
    iso.vertex_map.assign(a.vertex_count(), -1);
    for (std::size_t k = 0; k < la.order.size(); ++k) {
        iso.vertex_map[static_cast<std::size_t>(la.order[k])] = lb.order[k];
    }
    // Pair up the edges of each parallel class in id order.
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (std::size_t e = 0; e < b.edge_count(); ++e) {
        const Edge& ed = b.edge(static_cast<EdgeId>(e));
        classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(static_cast<EdgeId>(e));
    }
    std::map<std::pair<VertexId, VertexId>, std::size_t> used;
    iso.edge_map.assign(a.edge_count(), -1);
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
        const Edge& ed = a.edge(static_cast<EdgeId>(e));
        VertexId x = iso.vertex_map[static_cast<std::size_t>(ed.u)];
        VertexId y = iso.vertex_map[static_cast<std::size_t>(ed.v)];
        std::pair key{std::min(x, y), std::max(x, y)};
        auto& bucket = classes[key];
        std::size_t& next = used[key];
        if (next >= bucket.size()) {
            throw InternalError("canonical forms agree but edge classes do not");
        }
        iso.edge_map[e] = bucket[next++];
    }
    return iso;
}

bool verify_isomorphism(const Multigraph& a, const Multigraph& b, const Isomorphism& iso) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        iso.vertex_map.size() != a.vertex_count() || iso.edge_map.size() != a.edge_count()) {
        return false;
    }
    std::vector<bool> hit_v(b.vertex_count(), false);
    for (VertexId w : iso.vertex_map) {
        if (!b.has_vertex(w) || hit_v[static_cast<std::size_t>(w)]) {
            return false;
        }
        hit_v[static_cast<std::size_t>(w)] = true;
    }
    std::vector<bool> hit_e(b.edge_count(), false);
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
        EdgeId f = iso.edge_map[e];
        if (!b.has_edge(f) || hit_e[static_cast<std::size_t>(f)]) {
            return false;
        }
        hit_e[static_cast<std::size_t>(f)] = true;
        const Edge& ea = a.edge(static_cast<EdgeId>(e));
        const Edge& eb = b.edge(f);
        VertexId x = iso.vertex_map[static_cast<std::size_t>(ea.u)];
        VertexId y = iso.vertex_map[static_cast<std::size_t>(ea.v)];
        if (!((eb.u == x && eb.v == y) || (eb.u == y && eb.v == x))) {
            return false;
        }
    }
    return true;
}

std::vector<VertexId> vertex_orbits(const Multigraph& g, const CanonicalOptions& options) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> orbit(n);
    std::map<CanonicalForm, VertexId> seen;
    std::vector<std::uint32_t> colors(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        colors[v] = 1;
        CanonicalForm f = canonical_labeling(g, colors, options).form;
        colors[v] = 0;
        auto [it, inserted] = seen.emplace(std::move(f), static_cast<VertexId>(v));
        orbit[v] = it->second;
    }
    return orbit;
}

}  // namespace linkroots
