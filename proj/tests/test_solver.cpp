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
#include <numeric>

#include "colgame/error.hpp"
#include "colgame/families.hpp"
#include "colgame/search.hpp"
#include "colgame/solver.hpp"

namespace colgame {
namespace {

GameSpec spec_for(Variant v, int k, const Graph& g)
{
    std::optional<VertexOrdering> order;
    if (is_ordered_variant(v)) order = VertexOrdering::identity(g.order());
    return GameSpec::make(v, k, order);
}

std::vector<Graph> small_graphs(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_graphs(n, false);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Status winner(Variant v, int k, const Graph& g) { return solve(spec_for(v, k, g), g).winner; }

// The side that wins at pos follows the solver; the other side tries every move.
bool strategy_holds(Solver& solver, const Position& pos, Player winner_side)
{
    const GameSpec& spec = solver.spec();
    const Graph& g = solver.graph();
    Status st = status(spec, g, pos);
    if (st != Status::Ongoing) return st == win_for(winner_side);
    if (pos.to_move() == winner_side) {
        return strategy_holds(solver, apply(spec, g, pos, solver.best_move(pos)), winner_side);
    }
    for (const Move& m : legal_moves(spec, g, pos)) {
        if (!strategy_holds(solver, apply(spec, g, pos, m), winner_side)) return false;
    }
    return true;
}

TEST(Solve, ConnectivityGap)
{
    Graph g = connectivity_gap_graph();
    EXPECT_EQ(winner(Variant::Vertex, 3, g), Status::BreakerWin);
    EXPECT_EQ(winner(Variant::Vertex, 4, g), Status::MakerWin);
    EXPECT_EQ(winner(Variant::ConnectedVertex, 4, g), Status::BreakerWin);
    EXPECT_EQ(winner(Variant::ConnectedVertex, 5, g), Status::MakerWin);
}

TEST(Solve, OrderedH1)
{
    OrderedGraph h = h_r(1);
    EXPECT_EQ(solve(GameSpec::make(Variant::OrderedVertex, 3, h.ordering), h.graph).winner, Status::MakerWin);
    EXPECT_EQ(solve(GameSpec::make(Variant::OrderedVertex, 4, h.ordering), h.graph).winner, Status::BreakerWin);
}

TEST(Solve, TrivialBounds)
{
    for (const Graph& g : small_graphs(5)) {
        for (Variant v : {Variant::Vertex, Variant::ConnectedVertex, Variant::OrderedVertex}) {
            if (is_connected_variant(v) && !is_connected(g)) continue;
            EXPECT_EQ(winner(v, g.max_degree() + 1, g), Status::MakerWin) << to_graph6(g);
        }
        if (g.size() > 0) EXPECT_EQ(winner(Variant::Arboricity, g.size(), g), Status::MakerWin) << to_graph6(g);
    }
}

TEST(Solve, ArboricityOneColour)
{
    for (const Graph& g : small_graphs(5)) {
        // a graph is a forest iff m = n - (number of components)
        std::vector<int> parent(g.order() + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        bool forest = true;
        for (const Edge& e : g.edges()) {
            int a = find(e.u), b = find(e.v);
            if (a == b) forest = false;
            parent[a] = b;
        }
        EXPECT_EQ(winner(Variant::Arboricity, 1, g), forest ? Status::MakerWin : Status::BreakerWin)
            << to_graph6(g);
    }
}

TEST(BestMove, TriangleTieBreak)
{
    Graph k3 = complete_graph(3);
    GameSpec spec = GameSpec::make(Variant::Vertex, 3);
    EXPECT_EQ(best_move(spec, k3, initial_position(spec, k3)), (Move{1, -1, 1}));

    Position pos = initial_position(spec, k3);
    for (int i = 0; i < 3; ++i) pos = apply(spec, k3, pos, best_move(spec, k3, pos));
    EXPECT_EQ(status(spec, k3, pos), Status::MakerWin);
    EXPECT_THROW(best_move(spec, k3, pos), RulesError);
}

TEST(PrincipalVariation, Examples)
{
    Graph k3 = complete_graph(3);
    GameSpec win = GameSpec::make(Variant::Vertex, 3);
    auto line = principal_variation(win, k3);
    ASSERT_EQ(line.size(), 3u);

    GameSpec lose = GameSpec::make(Variant::Vertex, 2);
    line = principal_variation(lose, k3);
    EXPECT_LE(line.size(), 2u);
    Position pos = initial_position(lose, k3);
    for (const Move& m : line) pos = apply(lose, k3, pos, m);
    EXPECT_EQ(status(lose, k3, pos), Status::BreakerWin);

    OrderedGraph h = h_r(1);
    GameSpec og = GameSpec::make(Variant::OrderedGreedy, 3, h.ordering);
    line = principal_variation(og, h.graph);
    ASSERT_EQ(line.size(), 8u);
    pos = initial_position(og, h.graph);
    for (const Move& m : line) pos = apply(og, h.graph, pos, m);
    const int expected[] = {1, 2, 2, 1, 1, 2, 1, 3};
    for (int i = 0; i < 8; ++i) EXPECT_EQ(pos.colour_of(i), expected[i]);
    EXPECT_EQ(status(og, h.graph, pos), Status::BreakerWin);
}

TEST(Oracle, SpecExamples)
{
    for (const Graph& g : enumerate_graphs(4, false)) {
        for (int k = 1; k <= 3; ++k) {
            GameSpec spec = GameSpec::make(Variant::Vertex, k);
            EXPECT_EQ(solve(spec, g).winner, naive_solve(spec, g).winner);
        }
    }
    Graph k3 = complete_graph(3);
    for (int k = 1; k <= 2; ++k) {
        GameSpec spec = GameSpec::make(Variant::Arboricity, k);
        EXPECT_EQ(solve(spec, k3).winner, naive_solve(spec, k3).winner);
    }
    Graph fig4 = edge_sensitive_graph().graph;
    for (int s = 1; s <= 3; ++s) {
        GameSpec spec = GameSpec::make(Variant::ConnectedMarking, s);
        EXPECT_EQ(solve(spec, fig4).winner, naive_solve(spec, fig4).winner) << "s=" << s;
    }
}

// Every variant, every graph up to 4 vertices, k in 0..3, and every position
// reachable in one or two moves.
TEST(Oracle, ValuesAgreeBelowTheRoot)
{
    for (const Graph& g : small_graphs(4)) {
        for (Variant v : kAllVariants) {
            if (is_connected_variant(v) && !is_connected(g)) continue;
            for (int k = 0; k <= 3; ++k) {
                GameSpec spec = spec_for(v, k, g);
                Solver solver(spec, g);
                Position root = solver.root();
                ASSERT_EQ(solver.value(root), naive_value(spec, g, root));
                if (status(spec, g, root) != Status::Ongoing) continue;
                for (const Move& a : legal_moves(spec, g, root)) {
                    Position p = apply(spec, g, root, a);
                    ASSERT_EQ(solver.value(p), naive_value(spec, g, p));
                    if (status(spec, g, p) != Status::Ongoing) continue;
                    for (const Move& b : legal_moves(spec, g, p)) {
                        Position q = apply(spec, g, p, b);
                        ASSERT_EQ(solver.value(q), naive_value(spec, g, q));
                    }
                }
            }
        }
    }
}

TEST(Solver, Determinism)
{
    OrderedGraph h = h_r(1);
    Graph fig3 = connectivity_gap_graph();
    std::vector<std::pair<GameSpec, Graph>> cases = {
        {GameSpec::make(Variant::OrderedVertex, 3, h.ordering), h.graph},
        {GameSpec::make(Variant::Vertex, 4, std::nullopt), fig3},
        {GameSpec::make(Variant::ConnectedVertex, 4, std::nullopt), fig3},
        {GameSpec::make(Variant::Arboricity, 2, std::nullopt), complete_graph(5)},
    };
    for (const auto& [spec, g] : cases) {
        SolveResult a = solve(spec, g), b = solve(spec, g);
        EXPECT_EQ(a.winner, b.winner);
        EXPECT_EQ(a.nodes_searched, b.nodes_searched);
        EXPECT_EQ(principal_variation(spec, g), principal_variation(spec, g));
    }
}

TEST(Solver, StrategySoundness)
{
    for (const Graph& g : small_graphs(4)) {
        for (Variant v : kAllVariants) {
            if (is_connected_variant(v) && !is_connected(g)) continue;
            for (int k = 0; k <= 3; ++k) {
                GameSpec spec = spec_for(v, k, g);
                Solver solver(spec, g);
                Status w = solver.solve().winner;
                Player side = w == Status::MakerWin ? Player::Maker : Player::Breaker;
                EXPECT_TRUE(strategy_holds(solver, solver.root(), side))
                    << to_graph6(g) << " " << variant_name(v) << " k=" << k;
            }
        }
    }
}

TEST(Solver, ColourRelabelling)
{
    // winner(pos) = winner(pi(pos)) for a colour swap applied to a whole line
    for (const Graph& g : enumerate_graphs(4, true)) {
        for (Variant v : {Variant::Vertex, Variant::ConnectedVertex, Variant::OrderedVertex, Variant::Arboricity}) {
            GameSpec spec = spec_for(v, 3, g);
            Position root = initial_position(spec, g);
            for (const Move& a : legal_moves(spec, g, root)) {
                Position p = apply(spec, g, root, a);
                if (status(spec, g, p) != Status::Ongoing) continue;
                for (const Move& b : legal_moves(spec, g, p)) {
                    Move a2 = a, b2 = b;
                    a2.colour = 4 - a.colour;
                    b2.colour = 4 - b.colour;
                    Position q = apply(spec, g, p, b);
                    Position q2 = apply(spec, g, apply(spec, g, root, a2), b2);
                    EXPECT_EQ(naive_value(spec, g, q), naive_value(spec, g, q2));
                }
            }
        }
    }
}

TEST(Solver, ResourceLimits)
{
    Graph g = connectivity_gap_graph();
    SolverOptions capped;
    capped.max_entries = 5;
    EXPECT_THROW(solve(GameSpec::make(Variant::Vertex, 4), g, capped), ResourceError);

    SolverOptions late;
    late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    EXPECT_THROW(solve(GameSpec::make(Variant::Vertex, 4), g, late), ResourceError);
}

} // namespace
} // namespace colgame
