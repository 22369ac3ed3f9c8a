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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colgame/colour_components.hpp"
#include "colgame/graph.hpp"

namespace colgame {

enum class Variant {
    Vertex,
    ConnectedVertex,
    OrderedVertex,
    Greedy,
    OrderedGreedy,
    Arboricity,
    Marking,
    ConnectedMarking,
};

inline constexpr Variant kAllVariants[] = {
    Variant::Vertex,        Variant::ConnectedVertex, Variant::OrderedVertex, Variant::Greedy,
    Variant::OrderedGreedy, Variant::Arboricity,      Variant::Marking,       Variant::ConnectedMarking,
};

/// What the players play on: vertices with colours, edges with colours, or bare vertex marks.
enum class Family { VertexColouring, EdgeColouring, Marking };

Family family_of(Variant v);
bool is_connected_variant(Variant v);
bool is_ordered_variant(Variant v);
/// Variants whose rules are invariant under renaming colours.
bool is_colour_symmetric(Variant v);

/// Command-line names: vertex, cvertex, overtex, greedy, ogreedy, arboricity, marking, cmarking.
std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class Player { Maker, Breaker };
enum class Status { Ongoing, MakerWin, BreakerWin };

inline Player opponent(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }
inline Status win_for(Player p) { return p == Player::Maker ? Status::MakerWin : Status::BreakerWin; }
std::string_view to_string(Player p);
std::string_view to_string(Status s);

inline constexpr int kMaxPalette = 64;

struct GameSpec {
    Variant variant = Variant::Vertex;
    /// Palette size for colouring variants; back-degree bound s for marking variants.
    int k = 0;
    /// Required by the ordered variants, ignored otherwise.
    std::optional<VertexOrdering> ordering;

    static GameSpec make(Variant variant, int k, std::optional<VertexOrdering> ordering = std::nullopt)
    {
        return GameSpec{variant, k, std::move(ordering)};
    }
};

/**
 * Moves carry only the payload the variant lets a player choose:
 *   Vertex, ConnectedVertex   (vertex, colour)
 *   OrderedVertex             (colour); vertex is implied by the order
 *   Greedy                    (vertex); colour is forced first-fit
 *   OrderedGreedy             nothing
 *   Arboricity                (edge index, colour)
 *   Marking, ConnectedMarking (vertex)
 * legal_moves() fills in implied vertices for display; apply() accepts the
 * implied fields either as 0 or as their actual value.
 */
struct Move {
    Vertex vertex = 0;
    int edge = -1;
    int colour = 0;

    bool operator==(const Move&) const = default;
};

/// "v3c2", "e{1,4}c1", "v5", "-" and so on; colour 0 and absent vertices are omitted.
std::string format_move(const Graph& g, const Move& m);

/// Whitespace-separated integers in payload order: "v c", "c" (OrderedVertex),
/// "v" (Greedy, marking), "u v c" (Arboricity) and "" (OrderedGreedy).
/// Returns nullopt on a malformed entry; legality is apply()'s business.
std::optional<Move> parse_move(const GameSpec& spec, const Graph& g, std::string_view text);

/**
 * Game state. Built only by initial_position() and apply(); value-like.
 *
 * elements() holds one byte per vertex (vertex and marking families) or per
 * edge (Arboricity): 0 for unplayed, otherwise the colour (1 for a mark).
 */
class Position {
public:
    int moves_played() const { return moves_; }
    Player to_move() const { return moves_ % 2 == 0 ? Player::Maker : Player::Breaker; }
    std::span<const std::uint8_t> elements() const { return colour_; }
    int colour_of(int element) const { return colour_[element]; }
    /// Played vertices in the vertex and marking families.
    VertexMask played_vertices() const { return played_; }
    /// Arboricity only.
    const ColourComponents& components() const { return comps_; }
    /// Marking only: some vertex was marked above the back-degree bound.
    bool bound_violated() const { return latched_; }

    bool operator==(const Position&) const = default;

private:
    friend Position initial_position(const GameSpec&, const Graph&);
    friend Position apply(const GameSpec&, const Graph&, const Position&, const Move&);
    friend std::vector<Move> legal_moves(const GameSpec&, const Graph&, const Position&);
    friend Status status(const GameSpec&, const Graph&, const Position&);

    std::vector<std::uint8_t> colour_;
    VertexMask played_ = 0;
    int moves_ = 0;
    bool latched_ = false;
    Status status_ = Status::Ongoing;
    ColourComponents comps_;
};

/// Throws RulesError for a disconnected graph in a connected variant, a
/// missing or wrong-length ordering, or a negative k; CapacityError for k > 64
/// in a colouring variant.
Position initial_position(const GameSpec& spec, const Graph& g);

/// Ascending element index, then ascending colour. Empty iff the game is over.
std::vector<Move> legal_moves(const GameSpec& spec, const Graph& g, const Position& pos);

/// Throws RulesError naming the violated rule if m is not legal in pos.
Position apply(const GameSpec& spec, const Graph& g, const Position& pos, const Move& m);

Status status(const GameSpec& spec, const Graph& g, const Position& pos);

/// Bit (c-1) set iff colour c appears on a coloured neighbour of v.
std::uint64_t neighbour_colours(const Graph& g, const Position& pos, Vertex v);

/// The least colour absent from v's coloured neighbourhood.
int first_fit_colour(const Graph& g, const Position& pos, Vertex v);

/// Whether colour c may be put on element `element` ignoring turn, order and connectivity.
bool colour_fits(const GameSpec& spec, const Graph& g, const Position& pos, int element, int colour);

/// Opaque hashable state key. Excludes the turn, which follows from the move count.
class PositionKey {
public:
    PositionKey() = default;
    explicit PositionKey(std::string bytes) : bytes_(std::move(bytes)) {}
    const std::string& bytes() const { return bytes_; }
    bool operator==(const PositionKey&) const = default;

private:
    std::string bytes_;
};

struct PositionKeyHash {
    std::size_t operator()(const PositionKey& k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};

/// Colours are renamed in order of first occurrence for colour-symmetric
/// variants; Greedy, OrderedGreedy and marking variants use the exact state.
PositionKey canonical_key(const GameSpec& spec, const Graph& g, const Position& pos);

/// Exact state, no colour renaming.
PositionKey exact_key(const Position& pos);

} // namespace colgame
