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

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "colgame/graph.hpp"
#include "colgame/rules.hpp"

namespace colgame {

struct SolveResult {
    Status winner = Status::Ongoing;
    std::uint64_t nodes_searched = 0;
    std::size_t table_entries = 0;
    std::chrono::duration<double> elapsed{};
};

struct SolverOptions {
    /// 0 means unbounded. Exceeding the cap throws ResourceError.
    std::size_t max_entries = 0;
    /// Exceeding the deadline throws ResourceError.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/**
 * Exact AND/OR search over a single game instance.
 *
 * Values are memoized per instance under canonical_key(), so one Solver can
 * answer value() and best_move() queries for any position of its game after
 * (or instead of) solving the root. Not thread-safe; use one Solver per thread.
 */
class Solver {
public:
    Solver(GameSpec spec, Graph g, SolverOptions options = {});

    const GameSpec& spec() const { return spec_; }
    const Graph& graph() const { return graph_; }
    const Position& root() const { return root_; }

    SolveResult solve();

    /// Winner of pos under optimal play; the status itself if pos is terminal.
    Status value(const Position& pos);

    /// First winning move for the side to move under ascending (element,
    /// colour) order, or the first legal move if that side loses. Throws
    /// RulesError on a terminal position.
    Move best_move(const Position& pos);

    /// Both sides playing best_move() from the initial position.
    std::vector<Move> principal_variation();

    std::uint64_t nodes_searched() const { return nodes_; }
    std::size_t table_entries() const { return table_.size(); }

private:
    bool mover_wins(const Position& pos);
    bool maker_cannot_lose(const Position& pos) const;
    void charge_node();

    GameSpec spec_;
    Graph graph_;
    SolverOptions options_;
    Position root_;
    std::vector<std::vector<int>> incident_edges_;
    std::unordered_map<PositionKey, bool, PositionKeyHash> table_;
    std::uint64_t nodes_ = 0;
};

SolveResult solve(const GameSpec& spec, const Graph& g, SolverOptions options = {});
Move best_move(const GameSpec& spec, const Graph& g, const Position& pos);
std::vector<Move> principal_variation(const GameSpec& spec, const Graph& g);

/// Plain recursive search: no memo table, no colour canonicalization, no pruning.
/// Exponential; meant as an oracle on tiny inputs.
SolveResult naive_solve(const GameSpec& spec, const Graph& g);
Status naive_value(const GameSpec& spec, const Graph& g, const Position& pos);

} // namespace colgame
