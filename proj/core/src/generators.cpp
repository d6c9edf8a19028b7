#include "linkroots/generators.hpp"

#include "linkroots/errors.hpp"

namespace linkroots {

Multigraph make_path(std::size_t length) {
    Multigraph g(length + 1);
    for (std::size_t i = 0; i < length; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return g;
}

Multigraph make_cycle(std::size_t t) {
    if (t < 2) {
        throw InvalidArgument("cycle length must be at least 2");
    }
    Multigraph g(t);
    for (std::size_t i = 0; i < t; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % t));
    }
    return g;
}

Multigraph make_star(std::size_t leaves) {
    Multigraph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) {
        g.add_edge(0, static_cast<VertexId>(i));
    }
    return g;
}

Multigraph make_complete(std::size_t n) {
    Multigraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return g;
}

Multigraph make_empty(std::size_t n) { return Multigraph(n); }

Multigraph make_double_star(std::size_t p, std::size_t q) {
    Multigraph g(2);
    g.add_edge(0, 1);
    for (std::size_t i = 0; i < p; ++i) {
        g.add_edge(0, g.add_vertex());
    }
    for (std::size_t i = 0; i < q; ++i) {
        g.add_edge(1, g.add_vertex());
    }
    return g;
}

Multigraph repeat(const Multigraph& g, std::size_t k) {
    Multigraph out;
    for (std::size_t i = 0; i < k; ++i) {
        out = disjoint_union(out, g);
    }
    return out;
}

}  // namespace linkroots
