#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "untangle/circumference.hpp"
#include "untangle/embedding.hpp"
#include "untangle/family.hpp"
#include "untangle/random.hpp"

using namespace untangle;

TEST(Graph, Construction)
{
    const Graph g = oracle::make(4, {{2, 1}, {0, 3}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edges().front(), Edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_FALSE(g.has_edge(-1, 7));
    EXPECT_EQ(g.edge_index(3, 0), 1);
    EXPECT_EQ(g.edge_index(2, 3), -1);
    EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 3}));

    EXPECT_THROW(oracle::make(3, {{0, 0}}), InputError);
    EXPECT_THROW(oracle::make(3, {{0, 1}, {1, 0}}), InputError);
    EXPECT_THROW(oracle::make(3, {{0, 3}}), InputError);
    EXPECT_THROW(Graph(-1), InputError);
}

TEST(Graph, ComponentsAndInduced)
{
    const Graph g = oracle::make(6, {{0, 1}, {1, 2}, {3, 4}});
    const auto cs = connected_components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0], (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(cs[2], (std::vector<Vertex>{5}));
    EXPECT_FALSE(is_connected(g));

    const auto sub = induced_subgraph(g, {4, 1, 2, 3});
    EXPECT_EQ(sub.to_global, (std::vector<Vertex>{1, 2, 3, 4}));
    EXPECT_EQ(sub.graph.edge_count(), 2);
    EXPECT_TRUE(sub.graph.has_edge(sub.local(3), sub.local(4)));
    EXPECT_EQ(sub.local(0), -1);
}

TEST(Embedding, K4FacesAndDual)
{
    const auto& e = seed_k4().embedding;
    EXPECT_EQ(e.face_count(), 4);
    EXPECT_TRUE(is_triangulation(e));
    const auto dual = dual_graph(e);
    EXPECT_EQ(dual.graph.vertex_count(), 4);
    for (Vertex f = 0; f < 4; ++f)
        EXPECT_EQ(dual.graph.degree(f), 3);
    // Each dual edge crosses the primal edge shared by its two faces.
    for (std::size_t i = 0; i < dual.primal_edge.size(); ++i) {
        const Edge de = dual.graph.edges()[i];
        const Edge pe = dual.primal_edge[i];
        EXPECT_TRUE(e.faces()[static_cast<std::size_t>(de.u)].contains(pe.u));
        EXPECT_TRUE(e.faces()[static_cast<std::size_t>(de.v)].contains(pe.v));
    }
}

TEST(Embedding, FaceLeftOfIsConsistent)
{
    const auto& e = seed_icosahedron().embedding;
    for (int f = 0; f < e.face_count(); ++f) {
        const auto& w = e.faces()[static_cast<std::size_t>(f)].walk;
        for (std::size_t i = 0; i < w.size(); ++i)
            EXPECT_EQ(e.face_left_of(w[i], w[(i + 1) % w.size()]), f);
    }
    EXPECT_EQ(e.find_face(e.faces()[3].walk), 3);
    auto rotated = e.faces()[3].walk;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    EXPECT_EQ(e.find_face(rotated), 3);
    std::reverse(rotated.begin(), rotated.end());
    EXPECT_EQ(e.find_face(rotated), -1);
}

TEST(Embedding, BadRotationRejected)
{
    const Graph g = oracle::make(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_THROW(RotationEmbedding(g, {{1, 2}, {0, 2}}), InputError);
    EXPECT_THROW(RotationEmbedding(g, {{1, 1}, {0, 2}, {0, 1}}), InputError);
}

TEST(Embedding, DualRejectsBridges)
{
    const Graph g = oracle::make(2, {{0, 1}});
    const RotationEmbedding e(g, {{1}, {0}});
    EXPECT_EQ(e.face_count(), 1);
    EXPECT_THROW(dual_graph(e), InputError);
}

// Euler's formula on random stacked triangulations, plus dual cubicity.
TEST(Embedding, EulerOnRandomTriangulations)
{
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const auto e = random_apollonian(rng, static_cast<int>(rng.below(20)));
        const int v = e.graph().vertex_count();
        EXPECT_EQ(v - e.graph().edge_count() + e.face_count(), 2);
        EXPECT_EQ(e.face_count(), 2 * v - 4);
        EXPECT_TRUE(is_triangulation(e));
        const auto dual = dual_graph(e);
        for (Vertex f = 0; f < dual.graph.vertex_count(); ++f)
            EXPECT_EQ(dual.graph.degree(f), 3);
    }
}

TEST(Embedding, FromFacesRoundTrip)
{
    const auto& e = seed_octahedron().embedding;
    std::vector<std::vector<Vertex>> walks;
    for (const auto& f : e.faces())
        walks.push_back(f.walk);
    const auto back = embedding_from_faces(e.graph().vertex_count(), walks);
    EXPECT_EQ(back.graph(), e.graph());
    EXPECT_EQ(oracle::face_sets(back), oracle::face_sets(e));
    EXPECT_THROW(embedding_from_faces(4, {{0, 1, 2}, {0, 2, 3}}), InputError);
}

TEST(Blocks, CutverticesOfBowtieWithTail)
{
    // Two triangles sharing vertex 2, plus a pendant path 4-5-6.
    const Graph g = oracle::make(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
    const auto bt = blocks_and_cutvertices(g);
    EXPECT_EQ(bt.cutvertices, (std::vector<Vertex>{2, 4, 5}));
    EXPECT_EQ(bt.blocks.size(), 4u);
    std::set<std::vector<Vertex>> blocks(bt.blocks.begin(), bt.blocks.end());
    EXPECT_TRUE(blocks.count({0, 1, 2}));
    EXPECT_TRUE(blocks.count({2, 3, 4}));
    EXPECT_TRUE(blocks.count({4, 5}));
    EXPECT_TRUE(blocks.count({5, 6}));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& b = bt.blocks[static_cast<std::size_t>(bt.edge_block[i])];
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), g.edges()[i].u));
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), g.edges()[i].v));
    }
    EXPECT_THROW(blocks_and_cutvertices(oracle::make(3, {{0, 1}})), InputError);
}

// Every edge lands in exactly one block and blocks of size >= 3 have no
// cutvertex of their own (removing any vertex keeps them connected).
TEST(Blocks, RandomOuterplanarProperties)
{
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_outerplanar(rng, 2 + static_cast<int>(rng.below(40)));
        const auto bt = blocks_and_cutvertices(g);
        std::size_t total = 0;
        for (const auto& be : bt.block_edges)
            total += be.size();
        EXPECT_EQ(total, g.edges().size());
        for (const auto& b : bt.blocks) {
            if (b.size() < 3)
                continue;
            for (Vertex drop : b) {
                std::vector<Vertex> rest;
                for (Vertex x : b)
                    if (x != drop)
                        rest.push_back(x);
                EXPECT_TRUE(is_connected(induced_subgraph(g, rest).graph));
            }
        }
    }
}

TEST(Circumference, KnownValues)
{
    EXPECT_EQ(circumference(seed_k4().embedding.graph()).length, 4);
    EXPECT_EQ(circumference(dual_graph(seed_k4().embedding).graph).length, 4);
    EXPECT_EQ(circumference(dual_graph(seed_octahedron().embedding).graph).length, 8);
    EXPECT_EQ(circumference(dual_graph(seed_icosahedron().embedding).graph).length, 20);
    // Petersen graph: 9.
    const Graph petersen = oracle::make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                             {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    const auto r = circumference(petersen);
    EXPECT_EQ(r.length, 9);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(circumference(oracle::make(4, {{0, 1}, {1, 2}, {2, 3}})).length, 0);
    EXPECT_THROW(circumference(Graph(2)), InputError);
}

TEST(Circumference, MatchesSubsetDp)
{
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + static_cast<int>(rng.below(9));
        std::vector<std::pair<Vertex, Vertex>> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.below(100) < 35)
                    es.emplace_back(a, b);
        const Graph g(n, es);
        const auto r = circumference(g);
        EXPECT_EQ(r.length, oracle::longest_cycle(g)) << "trial " << t;
        // The reported cycle is a real cycle of that length.
        ASSERT_EQ(static_cast<int>(r.cycle.size()), r.length);
        for (std::size_t i = 0; i < r.cycle.size(); ++i)
            EXPECT_TRUE(g.has_edge(r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]));
        EXPECT_EQ(std::set<Vertex>(r.cycle.begin(), r.cycle.end()).size(), r.cycle.size());
    }
}

TEST(Circumference, BudgetReportsInexact)
{
    const auto dual = dual_graph(generate(seed_k4(), 3).embedding());
    const auto r = circumference(dual.graph, 10);
    EXPECT_FALSE(r.exact);
    EXPECT_GE(r.length, 0);
}
