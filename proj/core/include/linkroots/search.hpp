#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/link.hpp"
#include "linkroots/multigraph.hpp"

namespace linkroots {

struct SearchBounds {
    std::size_t order = 0;             // l
    std::size_t target_vertices = 0;   // n(H)
    std::size_t target_edges = 0;      // m(H)
    std::size_t target_components = 0; // c(H)
    std::size_t target_cyclic = 0;     // o(H)
    std::size_t target_max_degree = 0; // Delta(H)

    std::size_t max_m = 0;             // l * n(H)
    std::size_t max_n = 0;             // l * n(H) + c(H)
    std::size_t max_degree = 0;        // max{c(H), Delta(H)} + 1 (link roots)
    std::size_t tree_degree_cap = 0;   // c(H) + 1 at tree vertices of eccentricity < l
    std::size_t required_links = 0;    // n(H)
    std::size_t required_next_links = 0; // m(H)
    std::size_t max_cyclic = 0;        // o(H)
};

SearchBounds compute_bounds(const Multigraph& h, std::size_t l);

struct SearchOptions {
    bool trees_only = false;
    bool forests_only = false;
    bool connected_only = false;
    // Wall-clock budget; unset means no limit.
    std::optional<double> time_budget_seconds;
    // Refuse searches whose size bound l * n(H) exceeds this.
    std::size_t max_edges = 30;
    // Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    CanonicalOptions canonical;
};

struct SearchStats {
    std::uint64_t generated = 0;         // candidate component graphs accepted by the generator
    std::uint64_t pruned = 0;            // augmentations rejected by bounds or counts
    std::uint64_t component_roots = 0;   // connected candidates whose link graph fits into H
    std::uint64_t frontier_total = 0;
    std::uint64_t frontier_done = 0;
    double elapsed_seconds = 0.0;
};

struct Root {
    Multigraph graph;   // canonical labeling
    CanonicalForm form;
    // witness_links[h]: the l-link (or l-path) of `graph` matched to vertex h of H.
    std::vector<Link> witness_links;
    // Link graph vertex/edge to H vertex/edge.
    Isomorphism witness;
    bool tree = false;
    bool forest = false;
    bool cyclic = false;
};

struct RootSet {
    GraphMode mode = GraphMode::link;
    std::size_t order = 0;
    SearchBounds bounds;
    std::vector<Root> roots;  // sorted by canonical form
    SearchStats stats;

    std::vector<CanonicalForm> forms() const;
};

// The search ran out of time; the statistics describe the explored part.
class SearchTimeout : public BudgetExceeded {
public:
    SearchTimeout(const std::string& what, SearchStats stats)
        : BudgetExceeded(what), stats_(stats) {}
    const SearchStats& stats() const { return stats_; }

private:
    SearchStats stats_;
};

// All minimal l-roots of h up to isomorphism. Throws BudgetExceeded when the
// bounds exceed options.max_edges and SearchTimeout when the time budget runs out.
RootSet minimal_link_roots(const Multigraph& h, std::size_t l, const SearchOptions& options = {});

// All minimal l-path roots of h (every unit lies on an l-path).
RootSet minimal_path_roots(const Multigraph& h, std::size_t l, const SearchOptions& options = {});

// Builds a verified root record for g as an l-root of h, or nullopt if the
// constructed graph is not isomorphic to h.
std::optional<Root> make_root(const Multigraph& g, const Multigraph& h, std::size_t l, GraphMode mode);

// Every unit of g lies on some l-path; for l = 0, g has no parallel edges.
bool is_path_minimal(const Multigraph& g, std::size_t l);

// Checks the size, order and degree bounds on a root; returns a description of
// the first violation.
std::optional<std::string> audit_root(const Root& root, const SearchBounds& bounds, GraphMode mode);

// Writes root_NNN.mg, root_NNN.witness and roots.tsv into `dir` (created if missing).
void export_roots(const RootSet& set, const std::filesystem::path& dir);

}  // namespace linkroots
