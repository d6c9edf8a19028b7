#pragma once

#include <cstddef>

#include "linkroots/multigraph.hpp"

namespace linkroots {

// Path of length `length` (length + 1 vertices), vertices in order 0..length.
Multigraph make_path(std::size_t length);
// Cycle of length t >= 2; t = 2 gives two parallel edges.
Multigraph make_cycle(std::size_t t);
// K_{1,leaves}, center 0.
Multigraph make_star(std::size_t leaves);
Multigraph make_complete(std::size_t n);
Multigraph make_empty(std::size_t n);
// Two adjacent centers 0 and 1 carrying p and q leaves respectively.
Multigraph make_double_star(std::size_t p, std::size_t q);
// k disjoint copies of g.
Multigraph repeat(const Multigraph& g, std::size_t k);

}  // namespace linkroots
