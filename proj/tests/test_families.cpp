/*
 * Copyright 2026 The colgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "colgame/error.hpp"
#include "colgame/families.hpp"

namespace colgame {
namespace {

int earlier_neighbours(const Graph& g, Vertex v)
{
    int count = 0;
    for (Vertex u = 1; u < v; ++u) count += g.adjacent(u, v);
    return count;
}

TEST(HR, Structure)
{
    for (int r = 1; r <= 4; ++r) {
        OrderedGraph h = h_r(r);
        const int top = 2 * r + 7;
        EXPECT_EQ(h.graph.order(), top);
        EXPECT_EQ(h.graph.size(), 3 * r + 9);
        EXPECT_TRUE(h.ordering.is_identity());
        for (Vertex v = 1; v < top; ++v) EXPECT_LE(earlier_neighbours(h.graph, v), 2) << "r=" << r << " v=" << v;
        EXPECT_EQ(h.graph.degree(top), r + 3);
        EXPECT_EQ(earlier_neighbours(h.graph, top), r + 3);
        EXPECT_EQ(h.graph.degree(2 * r + 5), 1);
        EXPECT_TRUE(h.graph.adjacent(2, 2 * r + 5));
    }
    EXPECT_THROW(h_r(0), RulesError);
}

TEST(NamedGraphs, ConnectivityGap)
{
    Graph g = connectivity_gap_graph();
    EXPECT_EQ(g.order(), 7);
    EXPECT_EQ(g.size(), 13);
    EXPECT_EQ(g.degree(3), 2);
    EXPECT_FALSE(g.adjacent(1, 3));
    EXPECT_FALSE(g.adjacent(2, 3));
    int sum = 0;
    for (Vertex v = 1; v <= 7; ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 26);
}

TEST(NamedGraphs, EdgeSensitive)
{
    GraphWithEdge f = edge_sensitive_graph();
    EXPECT_EQ(f.graph.order(), 8);
    EXPECT_EQ(f.graph.size(), 12);
    EXPECT_EQ(f.edge, Edge(1, 3));
    EXPECT_TRUE(f.graph.adjacent(1, 3));
    EXPECT_TRUE(is_connected(delete_edge(f.graph, f.edge)));
}

TEST(OrderedGap, KEqualsThreeIsH)
{
    for (int l = 4; l <= 6; ++l) {
        OrderedGraph a = ordered_gap_graph(3, l);
        OrderedGraph b = h_r(l - 3);
        EXPECT_EQ(to_graph6(a.graph), to_graph6(b.graph));
        EXPECT_EQ(a.ordering, b.ordering);
    }
}

TEST(OrderedGap, Construction)
{
    OrderedGraph g45 = ordered_gap_graph(4, 5);
    EXPECT_EQ(g45.graph.order(), 11);

    // k=5, l=7: u1..u4 then H_2 on v1..v11 (vertices 5..15)
    OrderedGraph g = ordered_gap_graph(5, 7);
    const int u = 4;
    ASSERT_EQ(g.graph.order(), u + 11);
    EXPECT_EQ(g.graph.degree(1), 0);
    EXPECT_EQ(g.graph.degree(3), 0);
    EXPECT_TRUE(g.graph.adjacent(2, 4));
    for (Vertex v = u + 1; v <= u + 11; ++v) {
        EXPECT_TRUE(g.graph.adjacent(2, v));
        EXPECT_TRUE(g.graph.adjacent(4, v));
    }
    OrderedGraph h2 = h_r(2);
    for (const Edge& e : h2.graph.edges()) EXPECT_TRUE(g.graph.adjacent(e.u + u, e.v + u));
    int v_edges = 0;
    for (const Edge& e : g.graph.edges()) v_edges += e.u > u;
    EXPECT_EQ(v_edges, h2.graph.size());
    for (int i = 0; i < g.graph.order(); ++i) EXPECT_EQ(g.ordering.at(i), i + 1);

    EXPECT_THROW(ordered_gap_graph(2, 4), RulesError);
    EXPECT_THROW(ordered_gap_graph(4, 4), RulesError);
}

TEST(Standard, Families)
{
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(path_graph(5).size(), 4);
    EXPECT_EQ(cycle_graph(5).size(), 5);
    Graph s = star_graph(4);
    EXPECT_EQ(s.order(), 4);
    EXPECT_EQ(s.degree(1), 3);
    EXPECT_EQ(edgeless_graph(5).size(), 0);
    EXPECT_EQ(to_graph6(standard("complete", 4)), to_graph6(complete_graph(4)));
    EXPECT_ANY_THROW(standard("wheel", 4));
    EXPECT_ANY_THROW(standard("path", 0));
}

TEST(FamilySpec, Aliases)
{
    EXPECT_EQ(family_graph("h_r:2").graph.order(), 11);
    EXPECT_EQ(family_graph("gap:4,5").graph.order(), 11);
    EXPECT_EQ(family_graph("fig3").graph.size(), 13);
    EXPECT_EQ(family_graph("fig4").graph.size(), 12);
    EXPECT_EQ(family_graph("fig4-e").graph.size(), 11);
    EXPECT_EQ(family_graph("complete:5").graph.size(), 10);
    EXPECT_ANY_THROW(family_graph("h_r:x"));
    EXPECT_ANY_THROW(family_graph("nope"));
}

} // namespace
} // namespace colgame
