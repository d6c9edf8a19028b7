#include <gtest/gtest.h>

#include <random>
#include <set>

#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/families.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/metrics.hpp"
#include "linkroots/search.hpp"
#include "oracles.hpp"

using namespace linkroots;

TEST(Families, Shapes) {
    Multigraph h = h_tree(2, 5);
    EXPECT_TRUE(is_tree(h));
    EXPECT_EQ(h.edge_count(), 3u + 8u);
    EXPECT_EQ(compute_metrics(h).diameter, Extended(7));
    EXPECT_THROW(h_tree(0, 3), InvalidArgument);

    Multigraph p = pendant_path_tree(5, 2);
    EXPECT_TRUE(is_tree(p));
    EXPECT_EQ(p.edge_count(), 7u);
    EXPECT_EQ(p.degree(2), 3u);
    EXPECT_THROW(pendant_path_tree(2, 3), InvalidArgument);
}

TEST(Families, CycleRootsReproduceTheCycle) {
    for (std::size_t t = 2; t <= 12; ++t) {
        for (std::size_t l = 0; l <= 6; ++l) {
            RootSet set = cycle_roots(t, l);
            std::size_t expected = 1 + (l >= 1 && t == 3 * l) + (t % 4 == 0 && l >= t / 2 + 1);
            EXPECT_EQ(set.roots.size(), expected) << t << ' ' << l;
            for (const Root& r : set.roots) {
                EXPECT_TRUE(is_isomorphic(link_graph(r.graph, l).graph, make_cycle(t)));
            }
        }
    }
    EXPECT_THROW(cycle_roots(1, 2), InvalidArgument);
}

TEST(Families, CycleRootsAgreeWithSearch) {
    for (auto [t, l] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {4, 3}}) {
        EXPECT_EQ(cycle_roots(t, l).forms(), minimal_link_roots(make_cycle(t), l).forms()) << t << ' ' << l;
    }
}

TEST(Families, PairEmptyRoots) {
    EXPECT_EQ(pair_empty_roots(0).forms(), std::vector<CanonicalForm>{canonical_form(make_empty(2))});
    EXPECT_EQ(pair_empty_roots(1).roots.size(), 1u);
    for (std::size_t l = 1; l <= 8; ++l) {
        RootSet set = pair_empty_roots(l);
        EXPECT_EQ(set.roots.size(), 1 + (l - 1) / 2);
        for (const Root& r : set.roots) {
            EXPECT_TRUE(is_isomorphic(link_graph(r.graph, l).graph, make_empty(2)));
        }
    }
    std::set<CanonicalForm> five;
    for (const Root& r : pair_empty_roots(5).roots) {
        five.insert(r.form);
    }
    EXPECT_TRUE(five.count(canonical_form(pendant_path_tree(5, 2))));
    EXPECT_TRUE(five.count(canonical_form(repeat(make_path(5), 2))));
}

TEST(Families, TailThreshold) {
    EXPECT_EQ(tail_threshold(make_path(2), 1), 2);
    EXPECT_EQ(tail_threshold(make_path(4), 0), -1);
    EXPECT_EQ(tail_threshold(make_path(0), 0), -1);
    // Leaf of K_{1,3}: removing it leaves a 2-path.
    EXPECT_EQ(tail_threshold(make_star(3), 1), 2);
    EXPECT_THROW(tail_threshold(make_cycle(3), 0), InvalidArgument);
    EXPECT_THROW(tail_threshold(make_path(2), 5), InvalidArgument);

    TailResult r = attach_tail(make_path(2), 1, 3);
    EXPECT_TRUE(r.guaranteed);
    EXPECT_EQ(r.graph.vertex_count(), 6u);
    EXPECT_EQ(r.graph.degree(1), 3u);
    EXPECT_TRUE(is_isomorphic(link_graph(r.graph, 3).graph, make_path(2)));
    EXPECT_FALSE(attach_tail(make_path(2), 1, 2).guaranteed);
}

TEST(Families, TailRootsReproduceTheTree) {
    std::mt19937_64 rng(81);
    for (int i = 0; i < 60; ++i) {
        Multigraph t = oracle::random_tree(rng, 1 + rng() % 9);
        auto v = static_cast<VertexId>(rng() % t.vertex_count());
        long tv = tail_threshold(t, v);
        for (long l = std::max(0L, tv + 1); l <= tv + 2; ++l) {
            TailResult r = attach_tail(t, v, static_cast<std::size_t>(l));
            EXPECT_TRUE(r.guaranteed);
            EXPECT_TRUE(is_isomorphic(link_graph(r.graph, static_cast<std::size_t>(l)).graph, t));
            EXPECT_TRUE(is_isomorphic(path_graph(r.graph, static_cast<std::size_t>(l)).graph, t));
        }
    }
}

TEST(Families, DoubleStarOrbitsGiveDistinctRoots) {
    for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {3, 2}, {4, 2}}) {
        Multigraph t = make_double_star(p, q);
        // One representative per orbit: both centers, one leaf on each side.
        std::vector<VertexId> reps{0, 1, 2, static_cast<VertexId>(2 + p)};
        for (std::size_t l = 3; l <= 5; ++l) {
            std::set<CanonicalForm> forms;
            for (VertexId v : reps) {
                TailResult r = attach_tail(t, v, l);
                if (r.guaranteed) {
                    EXPECT_TRUE(is_isomorphic(link_graph(r.graph, l).graph, t));
                }
                forms.insert(canonical_form(r.graph));
            }
            EXPECT_EQ(forms.size(), 4u);
        }
    }
}
