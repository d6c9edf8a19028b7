#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/families.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/metrics.hpp"
#include "oracles.hpp"

using namespace linkroots;

namespace {

std::vector<std::pair<VertexId, VertexId>> endpoint_pairs(const Multigraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : g.edges()) {
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    return out;
}

}  // namespace

TEST(LinkGraph, KnownExamples) {
    EXPECT_TRUE(is_isomorphic(link_graph(make_star(3), 1).graph, make_complete(3)));
    EXPECT_TRUE(is_isomorphic(link_graph(subdivision(make_star(3), 2), 2).graph, make_cycle(6)));
    LinkGraphResult two = link_graph(make_cycle(2), 1);
    EXPECT_EQ(two.graph.vertex_count(), 2u);
    EXPECT_EQ(two.graph.multiplicity(0, 1), 2u);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 8, 12);
        EXPECT_TRUE(is_isomorphic(link_graph(g, 0).graph, g));
    }
}

TEST(LinkGraph, MatchesDefinitionUnitForUnit) {
    for (const Multigraph& g : oracle::property_corpus()) {
        for (std::size_t l = 0; l <= 3; ++l) {
            LinkGraphResult lg = link_graph(g, l);
            Multigraph naive = oracle::naive_link_graph(g, l);
            ASSERT_EQ(lg.graph.vertex_count(), naive.vertex_count());
            ASSERT_EQ(lg.graph.edge_count(), naive.edge_count());
            EXPECT_EQ(endpoint_pairs(lg.graph), endpoint_pairs(naive));
            auto links = oracle::naive_links(g, l);
            for (std::size_t v = 0; v < links.size(); ++v) {
                EXPECT_EQ(lg.vertex_links[v].seq, links[v]);
                EXPECT_EQ(lg.vertex_of(lg.vertex_links[v]), static_cast<VertexId>(v));
            }
            auto next = oracle::naive_links(g, l + 1);
            for (std::size_t e = 0; e < next.size(); ++e) {
                EXPECT_EQ(lg.edge_links[e].seq, next[e]);
                EXPECT_EQ(lg.edge_of(lg.edge_links[e]), static_cast<EdgeId>(e));
            }
        }
    }
}

TEST(LinkGraph, MultiplicityRule) {
    // Two 1-links heading/tailing two distinct 2-links give two parallel edges:
    // the 2-cycle with a pendant edge at each end.
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    LinkGraphResult lg = link_graph(g, 1);
    auto pairs = endpoint_pairs(lg.graph);
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (auto p : pairs) {
        ++mult[p];
    }
    EXPECT_EQ(lg.graph.edge_count(), oracle::naive_links(g, 2).size());
    EXPECT_EQ(mult.at({0, 1}), 2);  // the parallel pair meets at both ends
}

TEST(LinkGraph, BudgetRefusal) {
    ConstructOptions tight;
    tight.max_links = 50;
    EXPECT_THROW(link_graph(make_complete(6), 3, tight), BudgetExceeded);
    EXPECT_NO_THROW(link_graph(make_complete(4), 1, tight));
}

TEST(PartitionedLinkGraph, KnownExamples) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 7, 10);
        PartitionedLinkGraph p = partitioned_link_graph(g, 0);
        for (const auto& part : p.partitioned.vertex_parts) {
            EXPECT_EQ(part.size(), 1u);
        }
        for (const auto& part : p.partitioned.edge_parts) {
            EXPECT_EQ(part.size(), 1u);
        }
    }
    for (std::size_t t = 3; t <= 6; ++t) {
        for (std::size_t l = 1; l <= 4; ++l) {
            PartitionedLinkGraph p = partitioned_link_graph(make_cycle(t), l);
            EXPECT_TRUE(is_isomorphic(p.result.graph, make_cycle(t)));
            EXPECT_EQ(p.partitioned.vertex_parts.size(), t);
            EXPECT_EQ(p.partitioned.edge_parts.size(), t);
        }
    }
    PartitionedLinkGraph hex = partitioned_link_graph(subdivision(make_star(3), 2), 2);
    std::multiset<std::size_t> vsizes;
    for (const auto& part : hex.partitioned.vertex_parts) {
        vsizes.insert(part.size());
    }
    EXPECT_EQ(vsizes, (std::multiset<std::size_t>{1, 1, 1, 3}));
    ASSERT_EQ(hex.partitioned.edge_parts.size(), 3u);
    for (const auto& part : hex.partitioned.edge_parts) {
        EXPECT_EQ(part.size(), 2u);
    }
}

TEST(PartitionedLinkGraph, Invariants) {
    for (const Multigraph& g : oracle::property_corpus()) {
        for (std::size_t l = 0; l <= 3; ++l) {
            PartitionedLinkGraph p = partitioned_link_graph(g, l);
            const PartitionedGraph& h = p.partitioned;
            EXPECT_FALSE(validate(h).has_value());
            if (l >= 1) {
                EXPECT_LE(max_incident_edge_parts(h), 2u);
            }
            if (l != 1) {
                for (const auto& part : h.vertex_parts) {
                    std::set<VertexId> in(part.begin(), part.end());
                    for (const Edge& e : h.graph.edges()) {
                        EXPECT_FALSE(in.count(e.u) && in.count(e.v));
                    }
                }
            }
            if (l == 1) {
                // Parts group parallel 1-links.
                for (const auto& part : h.vertex_parts) {
                    for (VertexId v : part) {
                        const Link& a = p.result.vertex_links[static_cast<std::size_t>(part.front())];
                        const Link& b = p.result.vertex_links[static_cast<std::size_t>(v)];
                        EXPECT_EQ(a.vertex(0), b.vertex(0));
                        EXPECT_EQ(a.vertex(1), b.vertex(1));
                    }
                }
                std::set<std::pair<VertexId, VertexId>> pairs;
                for (const Edge& e : g.edges()) {
                    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
                }
                EXPECT_EQ(h.vertex_parts.size(), pairs.size());
            }
        }
    }
}

TEST(PathGraph, KnownExamples) {
    Multigraph p3 = path_graph(make_complete(4), 3).graph;
    EXPECT_TRUE(is_isomorphic(p3, repeat(make_cycle(4), 3)));
    EXPECT_TRUE(is_isomorphic(path_graph(make_complete(3), 2).graph, make_complete(3)));
    // Complete graphs: l!/2 disjoint (l+1)-cycles.
    std::size_t fact = 1;
    for (std::size_t l = 2; l <= 5; ++l) {
        fact *= l;
        EXPECT_TRUE(is_isomorphic(path_graph(make_complete(l + 1), l).graph, repeat(make_cycle(l + 1), fact / 2)));
    }
    // Parallel 1-paths form a 2-cycle, hence are adjacent.
    EXPECT_TRUE(is_isomorphic(path_graph(make_cycle(2), 1).graph, make_path(1)));
}

TEST(PathGraph, MatchesDefinition) {
    for (const Multigraph& g : oracle::property_corpus()) {
        for (std::size_t l = 0; l <= 3; ++l) {
            LinkGraphResult pg = path_graph(g, l);
            Multigraph naive = oracle::naive_path_graph(g, l);
            ASSERT_EQ(pg.graph.vertex_count(), naive.vertex_count());
            EXPECT_FALSE(pg.graph.has_parallel_edges());
            auto a = endpoint_pairs(pg.graph);
            auto b = endpoint_pairs(naive);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b);
            auto paths = oracle::naive_paths(g, l);
            for (std::size_t v = 0; v < paths.size(); ++v) {
                EXPECT_EQ(pg.vertex_links[v].seq, paths[v]);
            }
        }
    }
}

TEST(PathGraph, EqualsLinkGraphAboveGirth) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        Multigraph g = i % 2 ? oracle::random_tree(rng, 10) : oracle::random_multigraph(rng, 8, 9);
        Extended gi = girth(g);
        // Below l = 2 parallel edges give the link graph parallel edges that the simple
        // path graph lacks.
        for (std::size_t l = 2; l <= 4; ++l) {
            EXPECT_EQ(is_isomorphic(path_graph(g, l).graph, link_graph(g, l).graph),
                      gi > Extended(static_cast<std::int64_t>(l)));
        }
    }
}

TEST(Projection, KnownExamples) {
    Multigraph c4 = make_cycle(4);
    LinkGraphResult lg = link_graph(c4, 2);
    // Walk 0 1 2 3 0 1 2: one and a half turns.
    Arc r{{0, 0, 1, 1, 2, 2, 3, 3, 0, 0, 1, 1, 2}};
    ASSERT_TRUE(is_arc_of(c4, r.seq));
    Projection p = project_arc(lg, c4, r);
    EXPECT_EQ(p.image.size(), 9u);
    EXPECT_TRUE(p.closed);
    EXPECT_TRUE(p.arc_closed);

    // s = 0 collapses to the vertex of R itself.
    Arc single{{0, 0, 1, 1, 2}};
    Projection z = project_arc(lg, c4, single);
    ASSERT_EQ(z.image.size(), 1u);
    EXPECT_EQ(lg.vertex_links[static_cast<std::size_t>(z.image[0])], Link(single));

    // l = 0: R viewed inside the 0-link graph, which is G itself.
    Multigraph k13 = make_star(3);
    LinkGraphResult zero = link_graph(k13, 0);
    Arc two{{1, 0, 0, 1, 2}};
    Projection q = project_arc(zero, k13, two);
    EXPECT_EQ(q.image.size(), 5u);
    EXPECT_FALSE(q.closed);

    EXPECT_THROW(project_arc(lg, c4, Arc{{0, 1, 2}}), InvalidArgument);
    EXPECT_THROW(project_arc(path_graph(c4, 2), c4, r), InvalidArgument);
}

TEST(Projection, MatchesOracleAndClosedness) {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 40; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 6, 8);
        for (std::size_t l = 0; l <= 2; ++l) {
            LinkGraphResult lg = link_graph(g, l);
            auto links = oracle::naive_links(g, l);
            auto next = oracle::naive_links(g, l + 1);
            auto index_of = [](const std::vector<oracle::Seq>& v, const oracle::Seq& s) {
                return static_cast<std::int32_t>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
            };
            for (std::size_t s = 0; s <= 2; ++s) {
                for (const oracle::Seq& r : oracle::naive_arcs(g, l + s)) {
                    Projection p = project_arc(lg, g, Arc{r});
                    oracle::Seq expect;
                    for (std::size_t k = 0; k <= s; ++k) {
                        if (k > 0) {
                            expect.push_back(index_of(next, oracle::orient(oracle::subsequence(r, k - 1, l + 1))));
                        }
                        expect.push_back(index_of(links, oracle::orient(oracle::subsequence(r, k, l))));
                    }
                    EXPECT_EQ(p.image, expect);
                    bool arc_closed = oracle::subsequence(r, 0, l) == oracle::subsequence(r, s, l);
                    EXPECT_EQ(p.arc_closed, arc_closed);
                    EXPECT_EQ(p.closed, expect.front() == expect.back());
                }
            }
        }
    }
}

TEST(Shunting, KnownExamples) {
    for (std::size_t l = 1; l <= 4; ++l) {
        Multigraph c = make_cycle(5);
        auto links = enumerate_links(c, l);
        for (const Link& a : links) {
            for (const Link& b : links) {
                EXPECT_TRUE(shunt_reachable(c, l, a, b));
            }
        }
        Multigraph two_paths = repeat(make_path(l), 2);
        auto pl = enumerate_links(two_paths, l);
        ASSERT_EQ(pl.size(), 2u);
        EXPECT_FALSE(shunt_reachable(two_paths, l, pl[0], pl[1]));
    }
    for (std::size_t l = 3; l <= 6; ++l) {
        Multigraph t1 = pendant_path_tree(l, 1);
        auto tl = enumerate_links(t1, l);
        ASSERT_EQ(tl.size(), 2u);
        EXPECT_FALSE(shunt_reachable(t1, l, tl[0], tl[1]));
    }
    Multigraph p = make_path(3);
    EXPECT_THROW(shunt_reachable(p, 2, Link(UnitSequence{0, 0, 1}), Link(UnitSequence{0, 0, 1, 1, 2})),
                 InvalidArgument);
}

TEST(Provenance, Format) {
    std::ostringstream out;
    write_provenance(out, link_graph(make_path(2), 1));
    EXPECT_EQ(out.str(), "# vertices\n0\t0 -0- 1\n1\t1 -1- 2\n# edges\n0\t0 -0- 1 -1- 2\n");
}
