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
#include "colgame/imagination.hpp"
#include "colgame/search.hpp"

namespace colgame {
namespace {

GameSpec arboricity(int k) { return GameSpec::make(Variant::Arboricity, k); }

// Breaker agent playing the first legal move of its own game.
class FirstLegalAgent : public StrategyAgent {
public:
    FirstLegalAgent(GameSpec spec, Graph g) : spec_(std::move(spec)), g_(std::move(g)) { reset(); }
    Player side() const override { return Player::Breaker; }
    void reset() override { pos_ = initial_position(spec_, g_); }
    void observe(const Move& m) override { pos_ = apply(spec_, g_, pos_, m); }
    Move propose() override
    {
        Move m = legal_moves(spec_, g_, pos_).front();
        pos_ = apply(spec_, g_, pos_, m);
        return m;
    }
    std::unique_ptr<StrategyAgent> clone() const override { return std::make_unique<FirstLegalAgent>(*this); }
    std::optional<std::string> state_key() const override { return exact_key(pos_).bytes(); }

private:
    GameSpec spec_;
    Graph g_;
    Position pos_;
};

// Always answers with the same edge and colour.
class StubbornAgent : public StrategyAgent {
public:
    Player side() const override { return Player::Breaker; }
    void reset() override {}
    void observe(const Move&) override {}
    Move propose() override { return Move{0, 0, 1}; }
    std::unique_ptr<StrategyAgent> clone() const override { return std::make_unique<StubbornAgent>(); }
};

TEST(SolverStrategy, Availability)
{
    EXPECT_NO_THROW(solver_strategy(arboricity(1), complete_graph(3), Player::Breaker));
    EXPECT_THROW(solver_strategy(arboricity(1), path_graph(3), Player::Breaker), RulesError);
    EXPECT_NO_THROW(solver_strategy(arboricity(1), path_graph(3), Player::Breaker, false));
    EXPECT_NO_THROW(solver_strategy(arboricity(2), complete_graph(5), Player::Breaker));
}

TEST(Verify, SolverAgents)
{
    Graph k3 = complete_graph(3);
    EXPECT_TRUE(verify_agent_wins(arboricity(1), k3, *solver_strategy(arboricity(1), k3, Player::Breaker))
                    .breaker_wins);

    Graph p3 = path_graph(3);
    VerifyResult r = verify_agent_wins(arboricity(1), p3, *solver_strategy(arboricity(1), p3, Player::Breaker, false));
    EXPECT_FALSE(r.breaker_wins);
    ASSERT_EQ(r.counterexample.size(), 2u);
    Position pos = initial_position(arboricity(1), p3);
    for (const Move& m : r.counterexample) pos = apply(arboricity(1), p3, pos, m);
    EXPECT_EQ(status(arboricity(1), p3, pos), Status::MakerWin);
}

TEST(Verify, IllegalAgentMove)
{
    EXPECT_THROW(verify_agent_wins(arboricity(2), complete_graph(4), StubbornAgent{}), RulesError);
}

TEST(Transform, CompleteFive)
{
    Graph k5 = complete_graph(5);
    auto agent = transform_breaker(solver_strategy(arboricity(2), k5, Player::Breaker), k5, 1);
    VerifyResult r = verify_agent_wins(arboricity(1), k5, *agent);
    EXPECT_TRUE(r.breaker_wins);
    EXPECT_GT(agent->stats().containment_checks, 0u);
}

TEST(Transform, RejectsZeroColours)
{
    Graph k3 = complete_graph(3);
    EXPECT_THROW(transform_breaker(solver_strategy(arboricity(1), k3, Player::Breaker), k3, 0), RulesError);
}

TEST(Transform, StubbornInnerAgentIsReported)
{
    Graph k4 = complete_graph(4);
    auto agent = transform_breaker(std::make_unique<StubbornAgent>(), k4, 1);
    EXPECT_THROW(verify_agent_wins(arboricity(1), k4, *agent), RulesError);
}

TEST(Transform, TraceAndLockstep)
{
    Graph k5 = complete_graph(5);
    auto agent = transform_breaker(solver_strategy(arboricity(2), k5, Player::Breaker), k5, 1);
    std::vector<std::string> lines;
    agent->set_trace([&lines](const std::string& line) { lines.push_back(line); });
    auto maker = solver_strategy(arboricity(1), k5, Player::Maker, false);
    Position pos = initial_position(arboricity(1), k5);
    while (status(arboricity(1), k5, pos) == Status::Ongoing) {
        Move m = pos.to_move() == Player::Maker ? maker->propose() : agent->propose();
        if (pos.to_move() == Player::Maker) {
            agent->observe(m);
        } else {
            maker->observe(m);
        }
        pos = apply(arboricity(1), k5, pos, m);
        for (int e = 0; e < k5.size(); ++e) {
            EXPECT_EQ(agent->real().colour_of(e) != 0, agent->imagined().colour_of(e) != 0);
        }
    }
    EXPECT_EQ(status(arboricity(1), k5, pos), Status::BreakerWin);
    ASSERT_EQ(static_cast<int>(lines.size()), pos.moves_played());
    for (const std::string& line : lines) EXPECT_NE(line.find("containment ok"), std::string::npos) << line;
}

// The containment argument does not rely on the wrapped agent winning, so even
// a naive inner agent must never trip a concede or an invariant check.
TEST(Transform, InvariantsHoldForAnyInnerAgent)
{
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n, false)) {
            for (int k = 1; k + 1 <= std::max(1, g.size()); ++k) {
                auto agent = transform_breaker(std::make_unique<FirstLegalAgent>(arboricity(k + 1), g), g, k);
                EXPECT_NO_THROW(verify_agent_wins(arboricity(k), g, *agent)) << to_graph6(g) << " k=" << k;
            }
        }
    }
}

} // namespace
} // namespace colgame
