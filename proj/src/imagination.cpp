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

#include "colgame/imagination.hpp"

#include <unordered_map>

#include "colgame/error.hpp"

namespace colgame {

SolverAgent::SolverAgent(std::shared_ptr<Solver> solver, Player side)
    : solver_(std::move(solver)), side_(side), pos_(solver_->root())
{
}

void SolverAgent::reset() { pos_ = solver_->root(); }

void SolverAgent::observe(const Move& m) { pos_ = apply(solver_->spec(), solver_->graph(), pos_, m); }

Move SolverAgent::propose()
{
    if (pos_.to_move() != side_) throw RulesError("agent asked to move out of turn");
    Move m = solver_->best_move(pos_);
    pos_ = apply(solver_->spec(), solver_->graph(), pos_, m);
    return m;
}

std::unique_ptr<StrategyAgent> SolverAgent::clone() const { return std::make_unique<SolverAgent>(*this); }

std::optional<std::string> SolverAgent::state_key() const { return exact_key(pos_).bytes(); }

std::unique_ptr<StrategyAgent> solver_strategy(const GameSpec& spec, const Graph& g, Player side, bool require_win)
{
    auto solver = std::make_shared<Solver>(spec, g);
    if (require_win && solver->solve().winner != win_for(side)) {
        throw RulesError(std::string(to_string(side)) + " does not win " + std::string(variant_name(spec.variant)) +
                         " with k=" + std::to_string(spec.k) + "; no winning agent exists");
    }
    return std::make_unique<SolverAgent>(std::move(solver), side);
}

ImaginationAgent::ImaginationAgent(std::unique_ptr<StrategyAgent> inner, Graph g, int k)
    : inner_(std::move(inner)),
      graph_(std::move(g)),
      real_spec_(GameSpec::make(Variant::Arboricity, k)),
      imagined_spec_(GameSpec::make(Variant::Arboricity, k + 1)),
      real_(initial_position(real_spec_, graph_)),
      imagined_(initial_position(imagined_spec_, graph_)),
      stats_(std::make_shared<ImaginationStats>())
{
    if (k < 1) throw RulesError("imagination transform needs k >= 1");
    if (!inner_ || inner_->side() != Player::Breaker) throw RulesError("imagination transform wraps a Breaker agent");
}

ImaginationAgent::ImaginationAgent(const ImaginationAgent& other)
    : inner_(other.inner_->clone()),
      graph_(other.graph_),
      real_spec_(other.real_spec_),
      imagined_spec_(other.imagined_spec_),
      real_(other.real_),
      imagined_(other.imagined_),
      stats_(other.stats_),
      trace_(other.trace_)
{
}

void ImaginationAgent::reset()
{
    inner_->reset();
    real_ = initial_position(real_spec_, graph_);
    imagined_ = initial_position(imagined_spec_, graph_);
}

std::unique_ptr<StrategyAgent> ImaginationAgent::clone() const { return std::make_unique<ImaginationAgent>(*this); }

std::optional<std::string> ImaginationAgent::state_key() const
{
    auto inner = inner_->state_key();
    if (!inner) return std::nullopt;
    return exact_key(real_).bytes() + '|' + exact_key(imagined_).bytes() + '|' + *inner;
}

void ImaginationAgent::observe(const Move& m)
{
    ++stats_->observed;
    real_ = apply(real_spec_, graph_, real_, m);
    if (!colour_fits(imagined_spec_, graph_, imagined_, m.edge, m.colour)) {
        throw ConcedeError("Maker's move " + format_move(graph_, m) + " cannot be copied into the imagined game");
    }
    imagined_ = apply(imagined_spec_, graph_, imagined_, m);
    inner_->observe(m);
    check_invariants(m, m, "Maker");
}

Move ImaginationAgent::propose()
{
    ++stats_->proposed;
    if (status(real_spec_, graph_, real_) != Status::Ongoing) throw RulesError("propose called on a finished game");
    if (status(imagined_spec_, graph_, imagined_) != Status::Ongoing) {
        throw InvariantViolation("imagined game ended while the real one is ongoing");
    }

    const Move imagined_move = inner_->propose();
    if (imagined_move.edge < 0 || imagined_move.edge >= graph_.size()) {
        throw RulesError("wrapped agent proposed a non-edge move " + format_move(graph_, imagined_move));
    }
    imagined_ = apply(imagined_spec_, graph_, imagined_, imagined_move);

    Move real_move = imagined_move;
    if (!colour_fits(real_spec_, graph_, real_, real_move.edge, real_move.colour)) {
        ++stats_->recoloured;
        real_move.colour = 0;
        for (int c = 1; c <= real_spec_.k; ++c) {
            if (colour_fits(real_spec_, graph_, real_, real_move.edge, c)) {
                real_move.colour = c;
                break;
            }
        }
        // An edge with no colour left would already have ended the real game.
        if (real_move.colour == 0) throw InvariantViolation("edge " + format_move(graph_, imagined_move) + " is dead");
    }
    real_ = apply(real_spec_, graph_, real_, real_move);
    check_invariants(real_move, imagined_move, "Breaker");
    return real_move;
}

void ImaginationAgent::check_invariants(const Move& real_move, const Move& imagined_move, std::string_view who)
{
    ++stats_->containment_checks;
    if (real_move.edge != imagined_move.edge) {
        throw InvariantViolation("real move " + format_move(graph_, real_move) + " left the imagined location " +
                                 format_move(graph_, imagined_move));
    }
    for (int i = 0; i < graph_.size(); ++i) {
        if ((real_.colour_of(i) == 0) != (imagined_.colour_of(i) == 0)) {
            throw InvariantViolation("played edge sets differ at " + to_string(graph_.edges()[i]));
        }
    }
    for (int c = 1; c <= real_spec_.k; ++c) {
        for (Vertex v = 1; v <= graph_.order(); ++v) {
            Vertex root = imagined_.components().find(c, v);
            if (!real_.components().same(c, v, root)) {
                throw InvariantViolation("vertices " + std::to_string(v) + " and " + std::to_string(root) +
                                         " share a " + std::to_string(c) +
                                         "-component in the imagined game only");
            }
        }
    }
    if (trace_) {
        trace_("ply " + std::to_string(real_.moves_played()) + " " + std::string(who) + " real " +
               format_move(graph_, real_move) + " imagined " + format_move(graph_, imagined_move) +
               " containment ok");
    }
}

std::unique_ptr<ImaginationAgent> transform_breaker(std::unique_ptr<StrategyAgent> agent_kplus1, const Graph& g,
                                                    int k)
{
    if (k < 1) throw RulesError("imagination transform needs k >= 1");
    return std::make_unique<ImaginationAgent>(std::move(agent_kplus1), g, k);
}

namespace {

std::string history(const Graph& g, const std::vector<Move>& line)
{
    std::string out;
    for (const Move& m : line) out += (out.empty() ? "" : " ") + format_move(g, m);
    return out.empty() ? "(start)" : out;
}

class Verifier {
public:
    Verifier(const GameSpec& spec, const Graph& g) : spec_(spec), g_(g) {}

    // pos has Maker to move and is ongoing.
    bool breaker_holds(const Position& pos, const StrategyAgent& agent)
    {
        ++result.states;
        std::optional<std::string> key;
        if (auto agent_key = agent.state_key()) {
            key = exact_key(pos).bytes() + '#' + *agent_key;
            if (memo_.contains(*key)) {
                ++result.memo_hits;
                return true;
            }
        }
        for (const Move& m : legal_moves(spec_, g_, pos)) {
            line_.push_back(m);
            Position after_maker = apply(spec_, g_, pos, m);
            std::unique_ptr<StrategyAgent> branch = agent.clone();
            branch->observe(m);
            if (!settle(after_maker, *branch)) return false;
            line_.pop_back();
        }
        // only winning states are remembered; a loss ends the search
        if (key) memo_.emplace(std::move(*key), true);
        return true;
    }

    VerifyResult result;

private:
    // After Maker's move: the game may be over, else Breaker answers.
    bool settle(const Position& pos, StrategyAgent& agent)
    {
        Status s = status(spec_, g_, pos);
        if (s == Status::BreakerWin) {
            ++result.leaves;
            return true;
        }
        if (s == Status::MakerWin) return lose();

        Move reply = agent.propose();
        Position after;
        try {
            after = apply(spec_, g_, pos, reply);
        } catch (const RulesError& e) {
            throw RulesError(std::string(e.what()) + " after " + history(g_, line_));
        }
        line_.push_back(reply);
        s = status(spec_, g_, after);
        if (s == Status::BreakerWin) {
            ++result.leaves;
        } else if (s == Status::MakerWin) {
            return lose();
        } else if (!breaker_holds(after, agent)) {
            return false;
        }
        line_.pop_back();
        return true;
    }

    bool lose()
    {
        ++result.leaves;
        result.breaker_wins = false;
        result.counterexample = line_;
        return false;
    }

    const GameSpec& spec_;
    const Graph& g_;
    std::vector<Move> line_;
    std::unordered_map<std::string, bool> memo_;
};

} // namespace

VerifyResult verify_agent_wins(const GameSpec& spec, const Graph& g, const StrategyAgent& breaker)
{
    if (breaker.side() != Player::Breaker) throw RulesError("verify_agent_wins expects a Breaker agent");
    Verifier verifier(spec, g);
    Position start = initial_position(spec, g);
    Status s = status(spec, g, start);
    if (s == Status::MakerWin) {
        verifier.result.breaker_wins = false;
        verifier.result.leaves = 1;
    } else if (s == Status::Ongoing) {
        verifier.breaker_holds(start, breaker);
    } else {
        verifier.result.leaves = 1;
    }
    return verifier.result;
}

} // namespace colgame
