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

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "colgame/error.hpp"
#include "colgame/families.hpp"
#include "colgame/search.hpp"

namespace colgame {
namespace {

std::vector<Graph> data_graphs(const std::string& name)
{
    std::ifstream in(std::string(COLGAME_TEST_DATA) + "/" + name);
    return read_graph6_stream(in);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
    return Graph(g.order(), edges);
}

TEST(Enumerate, Counts)
{
    const std::size_t all[] = {1, 2, 4, 11, 34, 156};
    const std::size_t connected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(enumerate_graphs(n, false).size(), all[n - 1]) << n;
        EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n - 1]) << n;
    }
    EXPECT_THROW(enumerate_graphs(kMaxEnumeratedOrder + 1, false), CapacityError);
}

TEST(Enumerate, ConnectedTriples)
{
    std::set<std::string> got;
    for (const Graph& g : enumerate_graphs(3, true)) got.insert(to_graph6(g));
    EXPECT_EQ(got, (std::set<std::string>{to_graph6(canonical_form(path_graph(3))), "Bw"}));
}

// The atlas files are an independent reference produced by another tool.
TEST(Enumerate, MatchesReferenceAtlas)
{
    auto canon = [](const std::vector<Graph>& graphs) {
        std::set<std::string> out;
        for (const Graph& g : graphs) out.insert(to_graph6(canonical_form(g)));
        return out;
    };
    auto ref5 = canon(data_graphs("atlas_n5.g6"));
    auto ref6 = canon(data_graphs("atlas_n6_connected.g6"));
    EXPECT_EQ(ref5.size(), 34u);
    EXPECT_EQ(ref6.size(), 112u);
    EXPECT_EQ(canon(enumerate_graphs(5, false)), ref5);
    EXPECT_EQ(canon(enumerate_graphs(6, true)), ref6);
}

TEST(CanonicalForm, InvariantUnderRelabelling)
{
    std::mt19937 rng(7);
    std::vector<Graph> samples = {connectivity_gap_graph(), edge_sensitive_graph().graph, h_r(1).graph,
                                  cycle_graph(8), ordered_gap_graph(4, 5).graph};
    for (const Graph& g : samples) {
        std::string c = to_graph6(canonical_form(g));
        std::vector<Vertex> perm(g.order());
        for (int i = 0; i < g.order(); ++i) perm[i] = i + 1;
        for (int t = 0; t < 10; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(to_graph6(canonical_form(relabel(g, perm))), c);
        }
    }
}

TEST(Predicate, Parse)
{
    EXPECT_EQ(Predicate::parse("chig-lt-chicg").kind, Predicate::Kind::ChiGLessThanChiCg);
    EXPECT_EQ(Predicate::parse("chig-lt-chicg:6").k_hi, 6);
    EXPECT_EQ(Predicate::parse("colcg-edge").kind, Predicate::Kind::ColCgEdgeNonMonotone);
    Predicate p = Predicate::parse("nonmono:overtex:3,4");
    EXPECT_EQ(p.kind, Predicate::Kind::NonMonotoneProfile);
    EXPECT_EQ(p.variant, Variant::OrderedVertex);
    EXPECT_EQ(p.k_lo, 3);
    EXPECT_EQ(p.k_hi, 4);
    EXPECT_EQ(Predicate::parse("nonmono:marking").k_lo, 0);
    Predicate t = Predicate::parse("param:chi_g=3");
    EXPECT_EQ(t.kind, Predicate::Kind::Threshold);
    EXPECT_EQ(t.parameter, "chi_g");
    EXPECT_EQ(t.value, 3);
    for (const char* bad : {"", "nonmono", "nonmono:chess", "param:chi_g", "param:zeta=2", "chig-lt-chicg:x"}) {
        EXPECT_THROW(Predicate::parse(bad), ParseError) << bad;
    }
    for (const char* text : {"chig-lt-chicg:6", "colcg-edge", "nonmono:overtex:3,4", "param:chi_g=3"}) {
        EXPECT_EQ(Predicate::parse(Predicate::parse(text).name()).name(), Predicate::parse(text).name());
    }
}

TEST(Evaluate, NamedGraphWitnesses)
{
    auto fig3 = evaluate(Predicate::parse("chig-lt-chicg"), connectivity_gap_graph());
    ASSERT_TRUE(fig3);
    EXPECT_NE(std::find(fig3->witness.begin(), fig3->witness.end(), std::pair<std::string, std::string>{"chi_g", "4"}),
              fig3->witness.end());
    EXPECT_NE(
        std::find(fig3->witness.begin(), fig3->witness.end(), std::pair<std::string, std::string>{"chi_cg", "5"}),
        fig3->witness.end());

    auto fig4 = evaluate(Predicate::parse("colcg-edge"), edge_sensitive_graph().graph);
    ASSERT_TRUE(fig4);
    EXPECT_NE(std::find(fig4->witness.begin(), fig4->witness.end(),
                        std::pair<std::string, std::string>{"edge", "{1,3}"}),
              fig4->witness.end());

    EXPECT_FALSE(evaluate(Predicate::parse("chig-lt-chicg"), complete_graph(4)));
    EXPECT_TRUE(evaluate(Predicate::parse("param:chi_g=4"), connectivity_gap_graph()));
    EXPECT_TRUE(evaluate(Predicate::parse("nonmono:overtex:3,4"), h_r(1).graph));
}

TEST(Scan, SelfCertifyingAndOrderStable)
{
    std::vector<Graph> stream = {complete_graph(3), connectivity_gap_graph(), path_graph(4),
                                 edge_sensitive_graph().graph, h_r(1).graph};
    for (const char* text : {"chig-lt-chicg", "colcg-edge", "nonmono:overtex:3,4"}) {
        Predicate p = Predicate::parse(text);
        ScanOptions one;
        ScanOptions three;
        three.jobs = 3;
        ScanReport a = scan(stream, p, one);
        ScanReport b = scan(stream, p, three);
        EXPECT_EQ(a.evaluated, stream.size());
        ASSERT_EQ(a.hits.size(), b.hits.size());
        ASSERT_FALSE(a.hits.empty()) << text;
        for (std::size_t i = 0; i < a.hits.size(); ++i) {
            EXPECT_EQ(format_hit(a.hits[i]), format_hit(b.hits[i]));
            auto again = evaluate(p, parse_graph6(a.hits[i].graph6));
            ASSERT_TRUE(again);
            EXPECT_EQ(format_hit(*again), format_hit(a.hits[i]));
        }
    }
}

TEST(Scan, TreesHaveMonotoneArboricity)
{
    std::vector<Graph> trees;
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            if (g.size() == n - 1) trees.push_back(g);
        }
    }
    EXPECT_EQ(trees.size(), 1u + 1 + 1 + 2 + 3);
    EXPECT_TRUE(scan(trees, Predicate::parse("nonmono:arboricity")).hits.empty());
}

TEST(Scan, BudgetSkips)
{
    ScanOptions tight;
    tight.budget = std::chrono::milliseconds(0);
    ScanReport r = scan({h_r(2).graph}, Predicate::parse("param:chi_g=3"), tight);
    ASSERT_EQ(r.skipped.size(), 1u);
    EXPECT_EQ(r.skipped[0].reason.rfind("budget", 0), 0u);
}

TEST(Graph6Stream, ReadsAndReports)
{
    std::istringstream good("A_\n\nBw\n");
    EXPECT_EQ(read_graph6_stream(good).size(), 2u);
    std::istringstream bad("A_\nB\n");
    EXPECT_THROW(read_graph6_stream(bad), ParseError);
}

} // namespace
} // namespace colgame
