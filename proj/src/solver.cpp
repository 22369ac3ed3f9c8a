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

#include "colgame/solver.hpp"

#include <bit>

#include "colgame/error.hpp"

namespace colgame {

Solver::Solver(GameSpec spec, Graph g, SolverOptions options)
    : spec_(std::move(spec)), graph_(std::move(g)), options_(options), root_(initial_position(spec_, graph_))
{
    incident_edges_.resize(graph_.order() + 1);
    for (int i = 0; i < graph_.size(); ++i) {
        incident_edges_[graph_.edges()[i].u].push_back(i);
        incident_edges_[graph_.edges()[i].v].push_back(i);
    }
}

void Solver::charge_node()
{
    ++nodes_;
    if (options_.deadline && (nodes_ & 0xfff) == 1 && std::chrono::steady_clock::now() > *options_.deadline) {
        throw ResourceError("solver time budget exceeded after " + std::to_string(nodes_) + " nodes");
    }
}

// True when no unplayed element can ever become unplayable, so Maker wins
// whatever happens. Counts, for each element, how many colours could still
// end up around it; fewer than k means one colour always stays free.
bool Solver::maker_cannot_lose(const Position& pos) const
{
    const int k = spec_.k;
    switch (family_of(spec_.variant)) {
    case Family::VertexColouring:
        for (VertexMask free = graph_.all_vertices() & ~pos.played_vertices(); free; free &= free - 1) {
            Vertex v = std::countr_zero(free) + 1;
            int present = std::popcount(neighbour_colours(graph_, pos, v));
            int open = std::popcount(graph_.neighbours(v) & ~pos.played_vertices());
            if (present + open >= k) return false;
        }
        return true;
    case Family::EdgeColouring:
        for (int i = 0; i < graph_.size(); ++i) {
            if (pos.colour_of(i) != 0) continue;
            bool safe = false;
            for (Vertex w : {graph_.edges()[i].u, graph_.edges()[i].v}) {
                std::uint64_t present = 0;
                int open = 0;
                for (int j : incident_edges_[w]) {
                    if (j == i) continue;
                    if (pos.colour_of(j) == 0) {
                        ++open;
                    } else {
                        present |= std::uint64_t{1} << (pos.colour_of(j) - 1);
                    }
                }
                if (std::popcount(present) + open < k) safe = true;
            }
            if (!safe) return false;
        }
        return true;
    case Family::Marking:
        for (VertexMask free = graph_.all_vertices() & ~pos.played_vertices(); free; free &= free - 1) {
            if (graph_.degree(std::countr_zero(free) + 1) > k) return false;
        }
        return true;
    }
    return false;
}

bool Solver::mover_wins(const Position& pos)
{
    charge_node();
    const Player mover = pos.to_move();
    if (maker_cannot_lose(pos)) return mover == Player::Maker;

    PositionKey key = canonical_key(spec_, graph_, pos);
    if (auto it = table_.find(key); it != table_.end()) return it->second == (mover == Player::Maker);

    // Under colour symmetry all colours unused so far are interchangeable;
    // only the least of them needs trying.
    std::uint64_t used = ~std::uint64_t{0};
    int fresh = 0;
    if (is_colour_symmetric(spec_.variant)) {
        used = 0;
        for (std::uint8_t c : pos.elements()) {
            if (c) used |= std::uint64_t{1} << (c - 1);
        }
        fresh = std::countr_one(used) + 1;
    }

    bool wins = false;
    for (const Move& m : legal_moves(spec_, graph_, pos)) {
        if (m.colour > 0 && !(used & (std::uint64_t{1} << (m.colour - 1))) && m.colour != fresh) continue;
        Position child = apply(spec_, graph_, pos, m);
        Status s = status(spec_, graph_, child);
        bool child_good = s == Status::Ongoing ? !mover_wins(child) : s == win_for(mover);
        if (child_good) {
            wins = true;
            break;
        }
    }

    if (options_.max_entries && table_.size() >= options_.max_entries) {
        throw ResourceError("solver memo table exceeded " + std::to_string(options_.max_entries) + " entries");
    }
    table_.emplace(std::move(key), wins == (mover == Player::Maker));
    return wins;
}

Status Solver::value(const Position& pos)
{
    Status s = status(spec_, graph_, pos);
    if (s != Status::Ongoing) return s;
    Player mover = pos.to_move();
    return mover_wins(pos) ? win_for(mover) : win_for(opponent(mover));
}

SolveResult Solver::solve()
{
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.winner = value(root_);
    result.nodes_searched = nodes_;
    result.table_entries = table_.size();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

Move Solver::best_move(const Position& pos)
{
    if (status(spec_, graph_, pos) != Status::Ongoing) throw RulesError("best_move called on a finished game");
    const Status goal = win_for(pos.to_move());
    auto moves = legal_moves(spec_, graph_, pos);
    for (const Move& m : moves) {
        if (value(apply(spec_, graph_, pos, m)) == goal) return m;
    }
    return moves.front();
}

std::vector<Move> Solver::principal_variation()
{
    std::vector<Move> line;
    Position pos = root_;
    while (status(spec_, graph_, pos) == Status::Ongoing) {
        Move m = best_move(pos);
        line.push_back(m);
        pos = apply(spec_, graph_, pos, m);
    }
    return line;
}

SolveResult solve(const GameSpec& spec, const Graph& g, SolverOptions options)
{
    return Solver(spec, g, options).solve();
}

Move best_move(const GameSpec& spec, const Graph& g, const Position& pos)
{
    return Solver(spec, g).best_move(pos);
}

std::vector<Move> principal_variation(const GameSpec& spec, const Graph& g)
{
    return Solver(spec, g).principal_variation();
}

namespace {

Status naive_search(const GameSpec& spec, const Graph& g, const Position& pos, std::uint64_t& nodes)
{
    ++nodes;
    Status s = status(spec, g, pos);
    if (s != Status::Ongoing) return s;
    const Status goal = win_for(pos.to_move());
    for (const Move& m : legal_moves(spec, g, pos)) {
        if (naive_search(spec, g, apply(spec, g, pos, m), nodes) == goal) return goal;
    }
    return win_for(opponent(pos.to_move()));
}

} // namespace

SolveResult naive_solve(const GameSpec& spec, const Graph& g)
{
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.winner = naive_search(spec, g, initial_position(spec, g), result.nodes_searched);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

Status naive_value(const GameSpec& spec, const Graph& g, const Position& pos)
{
    std::uint64_t nodes = 0;
    return naive_search(spec, g, pos, nodes);
}

} // namespace colgame
