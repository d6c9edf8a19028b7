#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "linkroots/errors.hpp"
#include "linkroots/extended.hpp"
#include "linkroots/multigraph.hpp"

namespace linkroots {

/// Interleaved unit sequence v0 e1 v1 ... e_l v_l.
using UnitSequence = std::vector<std::int32_t>;

/// An oriented walk whose consecutive edges differ (an l-arc).
struct Arc {
    UnitSequence seq;

    std::size_t length() const { return seq.size() / 2; }
    VertexId vertex(std::size_t i) const { return seq[2 * i]; }
    // 1-based, e_1..e_l.
    EdgeId edge(std::size_t i) const { return seq[2 * i - 1]; }
    VertexId first() const { return seq.front(); }
    VertexId last() const { return seq.back(); }

    Arc reversed() const;
    // Sub-arc from vertex position `from`, of the given length.
    Arc sub(std::size_t from, std::size_t len) const;

    auto operator<=>(const Arc&) const = default;
};

/// An arc identified with its reversal, stored in the lexicographically smaller orientation.
struct Link {
    UnitSequence seq;

    Link() = default;
    explicit Link(const Arc& arc);
    explicit Link(UnitSequence s);

    std::size_t length() const { return seq.size() / 2; }
    VertexId vertex(std::size_t i) const { return seq[2 * i]; }
    EdgeId edge(std::size_t i) const { return seq[2 * i - 1]; }
    Arc arc() const { return Arc{seq}; }
    Link sub(std::size_t from, std::size_t len) const;
    // No repeated vertex.
    bool is_path() const;

    auto operator<=>(const Link&) const = default;
};

// Renders `v0 -e1- v1 -e2- ... vl`.
std::string format_sequence(const UnitSequence& seq);

// Whether `seq` is an arc of g: well formed, e_i joins v_{i-1} and v_i, consecutive edges differ.
bool is_arc_of(const Multigraph& g, const UnitSequence& seq);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

// Depth-first visit of every l-arc. `visit(const UnitSequence&)` returns false to stop early.
// Returns false iff stopped early.
template <class Visitor>
bool for_each_arc(const Multigraph& g, std::size_t l, Visitor&& visit);

// Every l-arc, in lexicographic order of sequence. Throws BudgetExceeded beyond `cap`.
std::vector<Arc> enumerate_arcs(const Multigraph& g, std::size_t l, std::size_t cap = kUnlimited);
// Every l-link exactly once, sorted.
std::vector<Link> enumerate_links(const Multigraph& g, std::size_t l, std::size_t cap = kUnlimited);
// Every l-path (link without repeated vertices), sorted.
std::vector<Link> enumerate_paths(const Multigraph& g, std::size_t l, std::size_t cap = kUnlimited);

// Counts without materializing; saturate at UINT64_MAX.
std::uint64_t count_arcs(const Multigraph& g, std::size_t l);
std::uint64_t count_links(const Multigraph& g, std::size_t l);
std::uint64_t count_paths(const Multigraph& g, std::size_t l);
// min(count_paths(g, l), cap + 1), exploring only simple paths.
std::uint64_t count_paths_up_to(const Multigraph& g, std::size_t l, std::uint64_t cap);

// Shortest j - i with v_i = v_j (i < j); infinite if the link is a path.
Extended link_girth(const Link& link);

// Subgraph of g on the units of the link.
Subgraph induced_graph(const Link& link, const Multigraph& g);

template <class Visitor>
bool for_each_arc(const Multigraph& g, std::size_t l, Visitor&& visit) {
    UnitSequence seq;
    seq.reserve(2 * l + 1);
    // Explicit stack of (next incident index) per depth.
    std::vector<std::size_t> cursor(l + 1, 0);
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        seq.assign(1, static_cast<std::int32_t>(start));
        if (l == 0) {
            if (!visit(static_cast<const UnitSequence&>(seq))) {
                return false;
            }
            continue;
        }
        std::size_t depth = 0;
        cursor[0] = 0;
        while (true) {
            auto here = static_cast<VertexId>(seq.back());
            auto inc = g.incident(here);
            if (cursor[depth] >= inc.size()) {
                if (depth == 0) {
                    break;
                }
                seq.pop_back();
                seq.pop_back();
                --depth;
                continue;
            }
            EdgeId e = inc[cursor[depth]++];
            if (depth > 0 && seq[seq.size() - 2] == e) {
                continue;
            }
            seq.push_back(e);
            seq.push_back(g.other_end(e, here));
            if (depth + 1 == l) {
                if (!visit(static_cast<const UnitSequence&>(seq))) {
                    return false;
                }
                seq.pop_back();
                seq.pop_back();
            } else {
                ++depth;
                cursor[depth] = 0;
            }
        }
    }
    return true;
}

}  // namespace linkroots
