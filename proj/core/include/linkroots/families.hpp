#pragma once

#include <cstddef>

#include "linkroots/multigraph.hpp"
#include "linkroots/search.hpp"

namespace linkroots {

// Two 2s-paths whose middle vertices are joined by an (l - s)-path.
Multigraph h_tree(std::size_t s, std::size_t l);

// l-path with a pendant i-path attached at its vertex v_i.
Multigraph pendant_path_tree(std::size_t l, std::size_t i);

// Minimal l-roots of the t-cycle without search: C_t, plus K_{1,3} subdivided l times
// when t = 3l, plus h_tree(s, l) when t = 4s and l >= 2s + 1. Throws InvalidArgument for t < 2.
RootSet cycle_roots(std::size_t t, std::size_t l);

// Minimal l-roots of two isolated vertices: 2K1 for l = 0, otherwise two disjoint
// l-paths and pendant_path_tree(l, i) for 1 <= i <= (l - 1) / 2.
RootSet pair_empty_roots(std::size_t l);

// Threshold t_v: diam(T) if deg(v) >= 2; -1 if T is a path and deg(v) <= 1; otherwise
// the diameter of the part of T beyond the branch vertex nearest to the leaf v.
// Throws InvalidArgument if T is not a tree or v is not a vertex.
long tail_threshold(const Multigraph& t, VertexId v);

struct TailResult {
    Multigraph graph;  // T(v, l): vertices of T keep their ids, the tail follows
    bool guaranteed = false;  // l >= t_v + 1, so the l-link graph of the result is T
};

TailResult attach_tail(const Multigraph& t, VertexId v, std::size_t l);

}  // namespace linkroots
