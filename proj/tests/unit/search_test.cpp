#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/families.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/incidence.hpp"
#include "linkroots/io.hpp"
#include "linkroots/search.hpp"
#include "oracles.hpp"

using namespace linkroots;

namespace {

std::vector<CanonicalForm> forms_of(const std::vector<Multigraph>& graphs) {
    std::vector<CanonicalForm> out;
    for (const Multigraph& g : graphs) {
        out.push_back(canonical_form(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal per the definition: no proper subgraph has an isomorphic l-path graph.
bool brute_path_minimal(const Multigraph& g, std::size_t l) {
    Multigraph full = oracle::naive_path_graph(g, l);
    const std::size_t n = g.vertex_count();
    const std::size_t units = n + g.edge_count();
    for (std::uint32_t mask = 0; mask + 1 < (1u << units); ++mask) {
        std::vector<bool> kv(n);
        std::vector<bool> ke(g.edge_count());
        for (std::size_t i = 0; i < units; ++i) {
            (i < n ? kv[i] : ke[i - n]) = (mask >> i) & 1u;
        }
        bool closed = true;
        for (std::size_t e = 0; e < ke.size(); ++e) {
            const Edge& ed = g.edge(static_cast<EdgeId>(e));
            closed = closed && (!ke[e] || (kv[static_cast<std::size_t>(ed.u)] && kv[static_cast<std::size_t>(ed.v)]));
        }
        if (closed && is_isomorphic(oracle::naive_path_graph(subgraph_of_units(g, kv, ke).graph, l), full)) {
            return false;
        }
    }
    return true;
}

Multigraph path_with_chord() {
    Multigraph g = make_path(4);
    g.add_edge(1, 3);
    return g;
}

}  // namespace

TEST(SearchBounds, KnownExamples) {
    SearchBounds k3 = compute_bounds(make_complete(3), 1);
    EXPECT_EQ(k3.max_m, 3u);
    EXPECT_EQ(k3.max_n, 4u);
    EXPECT_EQ(k3.max_degree, 3u);
    SearchBounds pair = compute_bounds(make_empty(2), 3);
    EXPECT_EQ(pair.max_m, 6u);
    EXPECT_EQ(pair.max_n, 8u);
    EXPECT_EQ(pair.tree_degree_cap, 3u);
    for (std::size_t l = 1; l <= 5; ++l) {
        SearchBounds k1 = compute_bounds(make_empty(1), l);
        EXPECT_EQ(k1.max_m, l);
        EXPECT_EQ(k1.max_n, l + 1);
    }
}

TEST(LinkRoots, Triangle) {
    RootSet set = minimal_link_roots(make_complete(3), 1);
    EXPECT_EQ(set.forms(), forms_of({make_complete(3), make_star(3)}));
    for (const Root& r : set.roots) {
        EXPECT_TRUE(is_isomorphic(link_graph(r.graph, 1).graph, make_complete(3)));
        EXPECT_FALSE(audit_root(r, set.bounds, set.mode).has_value());
    }
}

TEST(LinkRoots, SmallTargetsMatchFamilies) {
    for (std::size_t t = 2; t <= 6; ++t) {
        EXPECT_EQ(minimal_link_roots(make_cycle(t), 2).forms(), cycle_roots(t, 2).forms()) << t;
    }
    for (std::size_t l = 1; l <= 4; ++l) {
        EXPECT_EQ(minimal_link_roots(make_empty(2), l).forms(), pair_empty_roots(l).forms()) << l;
    }
    // K1: a single l-path, plus nothing else.
    for (std::size_t l = 1; l <= 5; ++l) {
        EXPECT_EQ(minimal_link_roots(make_empty(1), l).forms(), forms_of({make_path(l)}));
    }
}

TEST(LinkRoots, OrderZeroReturnsTarget) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 20; ++i) {
        Multigraph h = oracle::random_multigraph(rng, 6, 8);
        RootSet set = minimal_link_roots(h, 0);
        EXPECT_EQ(set.forms(), forms_of({h}));
    }
    EXPECT_EQ(minimal_path_roots(make_cycle(4), 0).forms(), forms_of({make_cycle(4)}));
    EXPECT_TRUE(minimal_path_roots(make_cycle(2), 0).roots.empty());
}

TEST(LinkRoots, MatchesExhaustiveIndex) {
    auto universe = oracle::all_multigraphs_without_isolated(5);
    for (std::size_t l = 1; l <= 2; ++l) {
        oracle::NaiveRootIndex link_index(universe, l, false, 5 / l);
        oracle::NaiveRootIndex path_index(universe, l, true, 5 / l);
        for (const Multigraph& h : oracle::all_multigraphs(5 / l, 6)) {
            if (h.vertex_count() == 0 || l * h.vertex_count() > 5) {
                continue;
            }
            EXPECT_EQ(minimal_link_roots(h, l).forms(), link_index.roots(h)) << format_multigraph(h) << "l=" << l;
            EXPECT_EQ(minimal_path_roots(h, l).forms(), path_index.roots(h)) << format_multigraph(h) << "l=" << l;
        }
    }
}

TEST(LinkRoots, DeterministicAcrossThreadCounts) {
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 4;
    for (const Multigraph& h : {make_cycle(6), make_path(2), make_star(3)}) {
        RootSet a = minimal_link_roots(h, 2, one);
        RootSet b = minimal_link_roots(h, 2, many);
        ASSERT_EQ(a.roots.size(), b.roots.size());
        for (std::size_t i = 0; i < a.roots.size(); ++i) {
            EXPECT_EQ(a.roots[i].graph, b.roots[i].graph);
            EXPECT_EQ(a.roots[i].witness_links, b.roots[i].witness_links);
        }
    }
}

TEST(LinkRoots, Witnesses) {
    RootSet set = minimal_link_roots(make_cycle(6), 2);
    ASSERT_EQ(set.roots.size(), 2u);
    for (const Root& r : set.roots) {
        ASSERT_EQ(r.witness_links.size(), 6u);
        std::set<Link> distinct(r.witness_links.begin(), r.witness_links.end());
        EXPECT_EQ(distinct.size(), 6u);
        for (const Link& l : r.witness_links) {
            EXPECT_EQ(l.length(), 2u);
            EXPECT_TRUE(is_arc_of(r.graph, l.seq));
        }
        EXPECT_TRUE(is_l_minimal(r.graph, 2));
        EXPECT_EQ(r.tree, !r.cyclic);
    }
}

TEST(LinkRoots, Guards) {
    SearchOptions small;
    small.max_edges = 5;
    EXPECT_THROW(minimal_link_roots(make_cycle(3), 2, small), BudgetExceeded);
    SearchOptions hurry;
    hurry.time_budget_seconds = 1e-6;
    try {
        minimal_link_roots(make_cycle(6), 3, hurry);
        FAIL() << "expected a timeout";
    } catch (const SearchTimeout& e) {
        EXPECT_LE(e.stats().frontier_done, e.stats().frontier_total);
    }
    EXPECT_TRUE(minimal_path_roots(make_cycle(2), 2).roots.empty());
    EXPECT_EQ(minimal_link_roots(Multigraph(), 3).forms(), forms_of({Multigraph()}));
}

TEST(PathMinimal, MatchesDefinition) {
    std::mt19937_64 rng(72);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 4, 3);
        if (g.vertex_count() + g.edge_count() > 6) {
            continue;
        }
        for (std::size_t l = 0; l <= 3; ++l) {
            bool fast = is_path_minimal(g, l);
            oracle::Incidence inc = oracle::naive_path_incidence(g, l);
            bool all = std::all_of(inc.vertex.begin(), inc.vertex.end(), [](bool b) { return b; }) &&
                       std::all_of(inc.edge.begin(), inc.edge.end(), [](bool b) { return b; });
            if (l > 0) {
                EXPECT_EQ(fast, all);
            }
            EXPECT_EQ(fast, brute_path_minimal(g, l)) << format_multigraph(g) << "l=" << l;
            ++checked;
        }
    }
    EXPECT_GT(checked, 200);
}

TEST(PathMinimal, ChordExample) {
    // The chord lies on a 4-link but on no 4-path.
    Multigraph g = path_with_chord();
    EXPECT_TRUE(is_l_minimal(g, 4));
    EXPECT_FALSE(is_path_minimal(g, 4));
    EXPECT_TRUE(is_path_minimal(make_path(4), 4));
    EXPECT_TRUE(is_isomorphic(path_graph(g, 4).graph, path_graph(make_path(4), 4).graph));
}

TEST(Audit, DetectsViolations) {
    RootSet set = minimal_link_roots(make_complete(3), 1);
    Root big = set.roots.front();
    big.graph = make_complete(5);
    ASSERT_TRUE(audit_root(big, set.bounds, GraphMode::link).has_value());
    EXPECT_NE(audit_root(big, set.bounds, GraphMode::link)->find("m = 10 > 3"), std::string::npos);
    Root star = set.roots.front();
    star.graph = make_star(3);
    SearchBounds tight = set.bounds;
    tight.max_degree = 2;
    EXPECT_TRUE(audit_root(star, tight, GraphMode::link).has_value());
    EXPECT_FALSE(audit_root(star, tight, GraphMode::path).has_value());
}

TEST(Export, WritesIndexGraphsAndWitnesses) {
    auto dir = std::filesystem::temp_directory_path() / "linkroots_export_test";
    std::filesystem::remove_all(dir);
    RootSet set = minimal_link_roots(make_cycle(6), 2);
    export_roots(set, dir);
    std::ifstream index(dir / "roots.tsv");
    std::string header;
    std::getline(index, header);
    EXPECT_EQ(header, "index\troot\tcanonical\tn\tm\tkind\twitness");
    std::size_t rows = 0;
    for (std::string line; std::getline(index, line);) {
        ++rows;
    }
    EXPECT_EQ(rows, 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        std::string stem = "root_00" + std::to_string(i);
        Multigraph back = read_multigraph_file(dir / (stem + ".mg"));
        EXPECT_EQ(back, set.roots[i].graph);
        std::ifstream w(dir / (stem + ".witness"));
        std::string first;
        std::getline(w, first);
        EXPECT_EQ(first, "# target vertex\tlink");
    }
    std::filesystem::remove_all(dir);
}
