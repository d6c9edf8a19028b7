#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linkroots/extended.hpp"
#include "linkroots/link.hpp"
#include "linkroots/multigraph.hpp"

namespace linkroots {

struct Unit {
    enum class Kind { vertex, edge };
    Kind kind;
    std::int32_t id;

    static Unit vertex(VertexId v) { return {Kind::vertex, v}; }
    static Unit edge(EdgeId e) { return {Kind::edge, e}; }
    bool operator==(const Unit&) const = default;
};

std::string format_unit(const Unit& u);

// Whether some l-link of g contains the unit. Cyclic components answer
// immediately; tree components use branch depths from a two-pass sweep.
// Throws InvalidArgument if the unit is not in g.
bool is_unit_incident(const Multigraph& g, Unit unit, std::size_t l);

// An l-link through the unit, if any.
std::optional<Link> incidence_witness(const Multigraph& g, Unit unit, std::size_t l);

struct IncidenceReport {
    std::size_t order = 0;
    std::vector<bool> vertex_incident;
    std::vector<bool> edge_incident;
    // G[l]: the flagged units, with maps back into g.
    Subgraph subgraph;
    // Filled only when requested; empty optional for non-incident units.
    std::vector<std::optional<Link>> vertex_witness;
    std::vector<std::optional<Link>> edge_witness;
};

IncidenceReport incidence_report(const Multigraph& g, std::size_t l, bool with_witnesses = false);
Multigraph incidence_subgraph(const Multigraph& g, std::size_t l);

bool is_l_minimal(const Multigraph& g, std::size_t l);
// Smallest non-incident vertex, else smallest non-incident edge.
std::optional<Unit> first_non_incident_unit(const Multigraph& g, std::size_t l);

// X and Y have the same l-link graph through a common subgraph, decided as X[l] ~= Y[l].
bool is_l_equivalent(const Multigraph& x, const Multigraph& y, std::size_t l);

struct Paste {
    std::size_t component;  // index in connected_components order
    VertexId vertex;        // vertex of g inside that component
    Multigraph tree;        // rooted at its vertex 0
};

struct ExpansionRecipe {
    std::vector<Paste> pastes;
    std::vector<Multigraph> extras;  // added as new components
};

struct ExpansionResult {
    Multigraph graph;
    std::vector<std::string> notes;
};

// Grows an l-minimal graph inside its l-equivalence class. Throws InvalidArgument
// naming the violated bound when the recipe is out of range, and InternalError
// if the result is not l-equivalent to g.
ExpansionResult expand_class(const Multigraph& g, std::size_t l, const ExpansionRecipe& recipe);

// Recipe lines: `paste <component> <vertex> <tree-file>` and `add <tree-file>`;
// tree paths are resolved against `base_dir`.
ExpansionRecipe read_recipe(std::istream& in, const std::filesystem::path& base_dir);

// Height of a tree measured from vertex `root`.
std::size_t tree_height(const Multigraph& tree, VertexId root);

struct IncidencePairs {
    std::vector<Link> links;            // the l-links of g, sorted
    std::vector<std::size_t> per_link;  // i_G(L, s)
    std::uint64_t total = 0;            // i_G(l, s)
};

// Number of distinct s-links inside each l-link. Throws InvalidArgument if s > l.
IncidencePairs count_incidence_pairs(const Multigraph& g, std::size_t l, std::size_t s);
std::size_t incidence_count(const Link& link, std::size_t s);

// Girth of the projection of `link` into the s-link graph: the smallest j - i
// with equal s-subsequences at positions i and j; infinite if all differ.
Extended projected_girth(const Link& link, std::size_t s);

// Whether the units of the projection into the s-link graph induce a cycle of length
// projected_girth: exactly g distinct s-subsequences and g distinct (s+1)-subsequences.
bool projection_is_girth_cycle(const Link& link, std::size_t s);

}  // namespace linkroots
