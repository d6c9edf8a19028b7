#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/metrics.hpp"
#include "linkroots/partition.hpp"
#include "oracles.hpp"

using namespace linkroots;

namespace {

// Whether some closed walk alternates edge parts all the way round, found by
// trying every partition-respecting arc up to the node-count bound 2m.
bool brute_has_partitioned_cycle(const PartitionedGraph& h, const std::vector<VertexId>& component) {
    auto part = edge_part_index(h);
    std::set<VertexId> in(component.begin(), component.end());
    std::size_t max_len = 2 * h.graph.edge_count();
    for (std::size_t len = 2; len <= max_len; ++len) {
        for (const oracle::Seq& a : oracle::naive_arcs(h.graph, len)) {
            if (!in.count(a.front()) || a.front() != a.back()) {
                continue;
            }
            bool ok = part[static_cast<std::size_t>(a[1])] != part[static_cast<std::size_t>(a[a.size() - 2])];
            for (std::size_t i = 3; ok && i < a.size(); i += 2) {
                ok = part[static_cast<std::size_t>(a[i])] != part[static_cast<std::size_t>(a[i - 2])];
            }
            if (ok) {
                return true;
            }
        }
    }
    return false;
}

PartitionedGraph random_partition(std::mt19937_64& rng, const Multigraph& g) {
    PartitionedGraph h = singleton_partition(g);
    std::uniform_int_distribution<int> parts(1, std::max<int>(1, static_cast<int>(g.edge_count())));
    int k = parts(rng);
    h.edge_parts.assign(static_cast<std::size_t>(k), {});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        h.edge_parts[rng() % static_cast<std::size_t>(k)].push_back(static_cast<EdgeId>(e));
    }
    std::erase_if(h.edge_parts, [](const auto& p) { return p.empty(); });
    normalize(h);
    return h;
}

}  // namespace

TEST(Partition, Validate) {
    Multigraph g = make_cycle(4);
    EXPECT_FALSE(validate(singleton_partition(g)).has_value());
    PartitionedGraph bad = singleton_partition(g);
    bad.vertex_parts[0].push_back(9);
    auto v = validate(bad);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, PartitionViolation::Kind::out_of_range);
    EXPECT_TRUE(v->on_vertices);
    EXPECT_EQ(v->id, 9);

    PartitionedGraph gap = singleton_partition(g);
    gap.edge_parts.pop_back();
    v = validate(gap);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, PartitionViolation::Kind::gap);
    EXPECT_FALSE(v->on_vertices);
    EXPECT_EQ(v->id, 3);

    PartitionedGraph overlap = singleton_partition(g);
    overlap.edge_parts[0].push_back(1);
    EXPECT_EQ(validate(overlap)->kind, PartitionViolation::Kind::overlap);

    PartitionedGraph empty = singleton_partition(g);
    empty.vertex_parts.emplace_back();
    EXPECT_EQ(validate(empty)->kind, PartitionViolation::Kind::empty_part);
}

TEST(DerivedDigraph, KnownExamples) {
    DerivedDigraph k2 = derived_digraph(singleton_partition(make_path(1)));
    EXPECT_EQ(k2.nodes.size(), 2u);
    EXPECT_EQ(k2.arc_count, 0u);

    DerivedDigraph c3 = derived_digraph(singleton_partition(make_cycle(3)));
    EXPECT_EQ(c3.nodes.size(), 6u);
    EXPECT_EQ(c3.arc_count, 6u);
    auto scc = strongly_connected_components(c3.out);
    std::map<int, int> sizes;
    for (int s : scc) {
        ++sizes[s];
    }
    ASSERT_EQ(sizes.size(), 2u);
    for (auto [id, size] : sizes) {
        EXPECT_EQ(size, 3);
    }

    PartitionedLinkGraph hex = partitioned_link_graph(subdivision(make_star(3), 2), 2);
    DerivedDigraph d = derived_digraph(hex.partitioned);
    auto hs = strongly_connected_components(d.out);
    EXPECT_EQ(std::set<int>(hs.begin(), hs.end()).size(), hs.size());
    EXPECT_EQ(count_cyclic_components(hex.partitioned).cyclic_count, 0u);
}

TEST(DerivedDigraph, SizeBounds) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 8, 12);
        PartitionedGraph h = random_partition(rng, g);
        DerivedDigraph d = derived_digraph(h);
        std::size_t m = g.edge_count();
        std::size_t r = max_incident_edge_parts(h);
        EXPECT_LE(d.nodes.size(), 2 * m);
        EXPECT_LE(d.arc_count, r == 0 ? 0 : 2 * m * (r - 1));
        for (std::size_t a = 0; a < d.out.size(); ++a) {
            for (int b : d.out[a]) {
                EXPECT_NE(static_cast<std::size_t>(b), a);
                EXPECT_NE(d.nodes[a].part, d.nodes[static_cast<std::size_t>(b)].part);
            }
        }
    }
}

TEST(Census, SingletonPartitionsCountGraphCycles) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 8, 12);
        ComponentCensus c = count_cyclic_components(singleton_partition(g));
        EXPECT_EQ(c.cyclic_count, oracle::naive_cyclic_count(g));
        EXPECT_EQ(c.cyclic_count + c.acyclic_count, oracle::naive_component_count(g));
    }
}

TEST(Census, MatchesBruteForceOnRandomPartitions) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 150; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 5, 4);
        PartitionedGraph h = random_partition(rng, g);
        ComponentCensus c = count_cyclic_components(h);
        for (std::size_t k = 0; k < c.components.count(); ++k) {
            EXPECT_EQ(c.cyclic[k], brute_has_partitioned_cycle(h, c.components.vertices[k]));
        }
        // o(H~) <= o(H) and a(H) <= a(H~).
        EXPECT_LE(c.cyclic_count, oracle::naive_cyclic_count(g));
        EXPECT_LE(oracle::naive_component_count(g) - oracle::naive_cyclic_count(g), c.acyclic_count);
    }
}

TEST(Census, LinkGraphsOfCyclesAndTrees) {
    for (std::size_t t = 2; t <= 7; ++t) {
        for (std::size_t l = 0; l <= 4; ++l) {
            ComponentCensus c = count_cyclic_components(partitioned_link_graph(make_cycle(t), l).partitioned);
            EXPECT_EQ(c.cyclic_count, 1u);
            EXPECT_EQ(c.acyclic_count, 0u);
        }
    }
    std::mt19937_64 rng(54);
    for (int i = 0; i < 50; ++i) {
        Multigraph t = oracle::random_tree(rng, 9);
        for (std::size_t l = 0; l <= 4; ++l) {
            PartitionedLinkGraph p = partitioned_link_graph(t, l);
            ComponentCensus c = count_cyclic_components(p.partitioned);
            EXPECT_EQ(c.cyclic_count, 0u);
            EXPECT_EQ(c.acyclic_count, oracle::naive_component_count(p.result.graph));
        }
    }
}

TEST(DegreeSets, KnownExamples) {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
        Multigraph g = oracle::random_multigraph(rng, 7, 11);
        if (!is_connected(g) || is_forest(g)) {
            continue;
        }
        for (std::size_t l = 1; l <= 3; ++l) {
            PartitionedLinkGraph p = partitioned_link_graph(g, l);
            DegreeSet dl = part_degree_set(p.partitioned);
            DegreeSet dg = graph_degree_set(g);
            EXPECT_EQ(dl.values, dg.values);
            EXPECT_EQ(g.max_degree(), dl.max + 1);
            EXPECT_LE(g.max_degree(), p.result.graph.max_degree());
        }
    }
    // A tree of diameter s has no (s+1)-links, so D(E_s) is empty.
    for (int i = 0; i < 50; ++i) {
        Multigraph t = oracle::random_tree(rng, 8);
        auto s = static_cast<std::size_t>(compute_metrics(t).diameter.value());
        EXPECT_TRUE(part_degree_set(partitioned_link_graph(t, s).partitioned).values.empty());
    }
}

TEST(DegreeSets, NestedChainOnTrees) {
    std::mt19937_64 rng(56);
    for (int i = 0; i < 100; ++i) {
        Multigraph t = oracle::random_tree(rng, 10);
        auto s = static_cast<std::size_t>(compute_metrics(t).diameter.value());
        if (s < 2) {
            continue;
        }
        std::set<std::size_t> prev = part_degree_set(partitioned_link_graph(t, 1).partitioned).values;
        EXPECT_EQ(prev, graph_degree_set(t).values);
        for (std::size_t l = 2; l <= s; ++l) {
            std::set<std::size_t> cur = part_degree_set(partitioned_link_graph(t, l).partitioned).values;
            EXPECT_TRUE(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
            prev = cur;
        }
        EXPECT_TRUE(prev.empty());
    }
}

TEST(PartitionedLinks, ConsecutiveEdgesChangePart) {
    PartitionedGraph h = singleton_partition(make_cycle(3));
    EXPECT_EQ(enumerate_partitioned_links(h, 4).size(), 3u);
    h.edge_parts = {{0, 1, 2}};
    EXPECT_TRUE(enumerate_partitioned_links(h, 2).empty());
    EXPECT_EQ(enumerate_partitioned_links(h, 1).size(), 3u);
}

TEST(PartitionIo, RoundTripAndErrors) {
    Multigraph g = make_cycle(4);
    PartitionedGraph h = singleton_partition(g);
    h.edge_parts = {{0, 2}, {1, 3}};
    h.vertex_parts = {{0, 1}, {2, 3}};
    std::ostringstream out;
    write_partition(out, h);
    EXPECT_EQ(out.str(), "V: 0 1\nV: 2 3\nE: 0 2\nE: 1 3\n");
    std::istringstream in(out.str());
    PartitionedGraph back = read_partition(in, g);
    EXPECT_EQ(back.vertex_parts, h.vertex_parts);
    EXPECT_EQ(back.edge_parts, h.edge_parts);

    std::istringstream gap("V: 0 1 2 3\nE: 0 1 2\n");
    EXPECT_THROW(read_partition(gap, g), InvalidArgument);
    std::istringstream junk("V: 0 1 2 3\nX: 0\n");
    try {
        read_partition(junk, g);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}
