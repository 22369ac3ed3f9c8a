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

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colgame/graph.hpp"
#include "colgame/rules.hpp"
#include "colgame/solver.hpp"

namespace colgame {

/**
 * A playable, stateful strategy for one side of a game.
 *
 * The driver calls observe() with every opponent move and propose() whenever
 * it is this side's turn; a proposed move is considered played. Agents must
 * be deterministic given their move history.
 */
class StrategyAgent {
public:
    virtual ~StrategyAgent() = default;

    virtual Player side() const = 0;
    virtual void reset() = 0;
    virtual void observe(const Move& m) = 0;
    virtual Move propose() = 0;
    virtual std::unique_ptr<StrategyAgent> clone() const = 0;

    /// Agents with equal keys behave identically from here on. nullopt when
    /// the agent cannot summarise its state; verification then walks the full tree.
    virtual std::optional<std::string> state_key() const { return std::nullopt; }
};

/// Plays Solver::best_move() for its side. Clones share the solver's memo table.
class SolverAgent : public StrategyAgent {
public:
    SolverAgent(std::shared_ptr<Solver> solver, Player side);

    Player side() const override { return side_; }
    void reset() override;
    void observe(const Move& m) override;
    Move propose() override;
    std::unique_ptr<StrategyAgent> clone() const override;
    std::optional<std::string> state_key() const override;

    const Position& position() const { return pos_; }

private:
    std::shared_ptr<Solver> solver_;
    Player side_;
    Position pos_;
};

/// With require_win, throws RulesError unless `side` wins the game.
std::unique_ptr<StrategyAgent> solver_strategy(const GameSpec& spec, const Graph& g, Player side,
                                               bool require_win = true);

/// Maker's move could not be copied into the imagined game with its colour.
class ConcedeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The imagined and real colourings stopped agreeing on played edges, or a
/// component of the imagined colouring escaped its real counterpart.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Counters shared by an ImaginationAgent and all of its clones.
struct ImaginationStats {
    std::uint64_t observed = 0;
    std::uint64_t proposed = 0;
    /// Proposals whose imagined colour had to be replaced in the real game.
    std::uint64_t recoloured = 0;
    std::uint64_t containment_checks = 0;
};

/**
 * Breaker strategy for the arboricity game with k colours built from a
 * Breaker strategy for k+1 colours.
 *
 * Keeps the real colouring (palette k) next to an imagined one (palette k+1)
 * driven by the wrapped agent. Maker's moves are copied into the imagined
 * game unchanged. The wrapped agent's answer (e, c) is played as (e, c) when
 * c <= k and that is legal for real, otherwise as (e, least legal colour).
 * After every move both colourings have the same played edges, and for each
 * c <= k every c-component of the imagined colouring lies inside a
 * c-component of the real one; either failing throws.
 */
class ImaginationAgent : public StrategyAgent {
public:
    using TraceSink = std::function<void(const std::string&)>;

    ImaginationAgent(std::unique_ptr<StrategyAgent> inner, Graph g, int k);
    ImaginationAgent(const ImaginationAgent& other);

    Player side() const override { return Player::Breaker; }
    void reset() override;
    void observe(const Move& m) override;
    Move propose() override;
    std::unique_ptr<StrategyAgent> clone() const override;
    std::optional<std::string> state_key() const override;

    const Position& real() const { return real_; }
    const Position& imagined() const { return imagined_; }
    const GameSpec& real_spec() const { return real_spec_; }
    const GameSpec& imagined_spec() const { return imagined_spec_; }
    const ImaginationStats& stats() const { return *stats_; }

    /// One line per move: real move, imagined move, containment result.
    void set_trace(TraceSink sink) { trace_ = std::move(sink); }

private:
    void check_invariants(const Move& real_move, const Move& imagined_move, std::string_view who);

    std::unique_ptr<StrategyAgent> inner_;
    Graph graph_;
    GameSpec real_spec_;
    GameSpec imagined_spec_;
    Position real_;
    Position imagined_;
    std::shared_ptr<ImaginationStats> stats_;
    TraceSink trace_;
};

/// `agent_kplus1` must be a Breaker agent for Arboricity with k+1 colours on g.
/// Throws RulesError for k < 1.
std::unique_ptr<ImaginationAgent> transform_breaker(std::unique_ptr<StrategyAgent> agent_kplus1, const Graph& g,
                                                    int k);

struct VerifyResult {
    bool breaker_wins = true;
    /// When Maker can win: a full move line ending in MakerWin.
    std::vector<Move> counterexample;
    std::uint64_t states = 0;
    std::uint64_t leaves = 0;
    std::uint64_t memo_hits = 0;
};

/**
 * Plays every legal Maker line against `breaker` (cloned along each branch).
 * States with equal position and agent state_key() are expanded once.
 * Throws RulesError with the move history if the agent proposes an illegal move.
 */
VerifyResult verify_agent_wins(const GameSpec& spec, const Graph& g, const StrategyAgent& breaker);

} // namespace colgame
