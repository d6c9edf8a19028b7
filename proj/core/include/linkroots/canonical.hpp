#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkroots/multigraph.hpp"

namespace linkroots {

/// Byte string equal for two multigraphs iff they are isomorphic
/// (vertex bijection preserving edge multiplicities and, if given, vertex colors).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalOptions {
    // Leaves of the individualization tree explored per component before giving up.
    std::size_t max_leaves = 200'000;
};

struct CanonicalLabeling {
    CanonicalForm form;
    // order[k] is the vertex placed at canonical position k.
    std::vector<VertexId> order;
};

// `colors` is empty or has one entry per vertex; isomorphisms must preserve it.
// Throws BudgetExceeded if the leaf budget runs out, InvalidArgument for
// multiplicities above 255 or more than 65535 vertices.
CanonicalLabeling canonical_labeling(const Multigraph& g,
                                     const std::vector<std::uint32_t>& colors = {},
                                     const CanonicalOptions& options = {});

CanonicalForm canonical_form(const Multigraph& g, const CanonicalOptions& options = {});

// The isomorphic copy of g with vertex k = order[k]; edges sorted by endpoints.
Multigraph canonical_graph(const Multigraph& g, const CanonicalOptions& options = {});

bool is_isomorphic(const Multigraph& a, const Multigraph& b, const CanonicalOptions& options = {});

struct Isomorphism {
    std::vector<VertexId> vertex_map;  // a-vertex -> b-vertex
    std::vector<EdgeId> edge_map;      // a-edge -> b-edge
};

std::optional<Isomorphism> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                            const CanonicalOptions& options = {});

// Checks bijectivity and that every edge maps onto an edge with the image endpoints.
bool verify_isomorphism(const Multigraph& a, const Multigraph& b, const Isomorphism& iso);

// orbit[v] = smallest vertex in the automorphism orbit of v.
std::vector<VertexId> vertex_orbits(const Multigraph& g, const CanonicalOptions& options = {});

}  // namespace linkroots
