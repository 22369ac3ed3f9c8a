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

#include "colgame/rules.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "colgame/error.hpp"

namespace colgame {

Family family_of(Variant v)
{
    switch (v) {
    case Variant::Arboricity: return Family::EdgeColouring;
    case Variant::Marking:
    case Variant::ConnectedMarking: return Family::Marking;
    default: return Family::VertexColouring;
    }
}

bool is_connected_variant(Variant v) { return v == Variant::ConnectedVertex || v == Variant::ConnectedMarking; }

bool is_ordered_variant(Variant v) { return v == Variant::OrderedVertex || v == Variant::OrderedGreedy; }

bool is_colour_symmetric(Variant v)
{
    return v == Variant::Vertex || v == Variant::ConnectedVertex || v == Variant::OrderedVertex ||
           v == Variant::Arboricity;
}

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 8> kNames = {{
    {Variant::Vertex, "vertex"},
    {Variant::ConnectedVertex, "cvertex"},
    {Variant::OrderedVertex, "overtex"},
    {Variant::Greedy, "greedy"},
    {Variant::OrderedGreedy, "ogreedy"},
    {Variant::Arboricity, "arboricity"},
    {Variant::Marking, "marking"},
    {Variant::ConnectedMarking, "cmarking"},
}};

} // namespace

std::string_view variant_name(Variant v)
{
    for (const auto& [variant, name] : kNames) {
        if (variant == v) return name;
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
    for (const auto& [variant, n] : kNames) {
        if (n == name) return variant;
    }
    return std::nullopt;
}

std::string_view to_string(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Ongoing: return "Ongoing";
    case Status::MakerWin: return "MakerWin";
    case Status::BreakerWin: return "BreakerWin";
    }
    return "?";
}

std::string format_move(const Graph& g, const Move& m)
{
    std::string out;
    if (m.edge >= 0 && m.edge < g.size()) {
        out = "e" + to_string(g.edges()[m.edge]);
    } else if (m.edge >= 0) {
        out = "e#" + std::to_string(m.edge);
    } else if (m.vertex > 0) {
        out = "v" + std::to_string(m.vertex);
    }
    if (m.colour > 0) out += "c" + std::to_string(m.colour);
    return out.empty() ? "-" : out;
}

std::optional<Move> parse_move(const GameSpec& spec, const Graph& g, std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<int> xs;
    int x = 0;
    while (in >> x) xs.push_back(x);
    if (!in.eof()) return std::nullopt;

    Move m;
    switch (spec.variant) {
    case Variant::Vertex:
    case Variant::ConnectedVertex:
        if (xs.size() != 2) return std::nullopt;
        m.vertex = xs[0];
        m.colour = xs[1];
        return m;
    case Variant::OrderedVertex:
        if (xs.size() != 1) return std::nullopt;
        m.colour = xs[0];
        return m;
    case Variant::Greedy:
    case Variant::Marking:
    case Variant::ConnectedMarking:
        if (xs.size() != 1) return std::nullopt;
        m.vertex = xs[0];
        return m;
    case Variant::OrderedGreedy:
        if (!xs.empty()) return std::nullopt;
        return m;
    case Variant::Arboricity: {
        if (xs.size() != 3) return std::nullopt;
        if (xs[0] < 1 || xs[1] < 1 || xs[0] > g.order() || xs[1] > g.order() || xs[0] == xs[1]) return std::nullopt;
        m.edge = g.edge_index(xs[0], xs[1]);
        if (m.edge < 0) return std::nullopt;
        m.colour = xs[2];
        return m;
    }
    }
    return std::nullopt;
}

std::uint64_t neighbour_colours(const Graph& g, const Position& pos, Vertex v)
{
    std::uint64_t mask = 0;
    for (VertexMask nb = g.neighbours(v) & pos.played_vertices(); nb; nb &= nb - 1) {
        int c = pos.colour_of(std::countr_zero(nb));
        mask |= std::uint64_t{1} << (c - 1);
    }
    return mask;
}

int first_fit_colour(const Graph& g, const Position& pos, Vertex v)
{
    return std::countr_one(neighbour_colours(g, pos, v)) + 1;
}

bool colour_fits(const GameSpec& spec, const Graph& g, const Position& pos, int element, int colour)
{
    if (colour < 1 || colour > spec.k || pos.colour_of(element) != 0) return false;
    switch (family_of(spec.variant)) {
    case Family::VertexColouring:
        return (neighbour_colours(g, pos, element + 1) & (std::uint64_t{1} << (colour - 1))) == 0;
    case Family::EdgeColouring: {
        const Edge& e = g.edges()[element];
        return !pos.components().same(colour, e.u, e.v);
    }
    case Family::Marking: return false;
    }
    return false;
}

namespace {

int element_count(const GameSpec& spec, const Graph& g)
{
    return family_of(spec.variant) == Family::EdgeColouring ? g.size() : g.order();
}

// Some unplayed element has no colour left, whatever the turn, order or connectivity.
bool some_element_blocked(const GameSpec& spec, const Graph& g, const Position& pos)
{
    const int k = spec.k;
    switch (family_of(spec.variant)) {
    case Family::VertexColouring: {
        const std::uint64_t full = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        for (VertexMask free = g.all_vertices() & ~pos.played_vertices(); free; free &= free - 1) {
            Vertex v = std::countr_zero(free) + 1;
            if ((neighbour_colours(g, pos, v) & full) == full) return true;
        }
        return false;
    }
    case Family::EdgeColouring: {
        for (int i = 0; i < g.size(); ++i) {
            if (pos.colour_of(i) != 0) continue;
            const Edge& e = g.edges()[i];
            bool blocked = true;
            for (int c = 1; c <= k && blocked; ++c) blocked = pos.components().same(c, e.u, e.v);
            if (blocked) return true;
        }
        return false;
    }
    case Family::Marking: return false;
    }
    return false;
}

Status evaluate_status(const GameSpec& spec, const Graph& g, const Position& pos)
{
    if (pos.bound_violated()) return Status::BreakerWin;
    if (some_element_blocked(spec, g, pos)) return Status::BreakerWin;
    if (pos.moves_played() == element_count(spec, g)) return Status::MakerWin;
    return Status::Ongoing;
}

// Vertices the next vertex-family or marking move may use.
VertexMask playable_vertices(const GameSpec& spec, const Graph& g, const Position& pos)
{
    VertexMask free = g.all_vertices() & ~pos.played_vertices();
    if (is_ordered_variant(spec.variant)) {
        return vertex_bit(spec.ordering->at(pos.moves_played()));
    }
    if (is_connected_variant(spec.variant) && pos.moves_played() > 0) {
        VertexMask frontier = 0;
        for (VertexMask p = pos.played_vertices(); p; p &= p - 1) frontier |= g.neighbours(std::countr_zero(p) + 1);
        free &= frontier;
    }
    return free;
}

[[noreturn]] void illegal(const Graph& g, const Move& m, const std::string& why)
{
    throw RulesError("illegal move " + format_move(g, m) + ": " + why);
}

} // namespace

Position initial_position(const GameSpec& spec, const Graph& g)
{
    if (spec.k < 0) throw RulesError("palette size / bound must be non-negative");
    if (family_of(spec.variant) != Family::Marking && spec.k > kMaxPalette) {
        throw CapacityError("palette size " + std::to_string(spec.k) + " exceeds 64");
    }
    if (is_connected_variant(spec.variant) && !is_connected(g)) {
        throw RulesError(std::string(variant_name(spec.variant)) + " requires a connected graph");
    }
    if (is_ordered_variant(spec.variant)) {
        if (!spec.ordering) throw RulesError(std::string(variant_name(spec.variant)) + " requires a vertex ordering");
        if (spec.ordering->size() != g.order()) throw RulesError("vertex ordering length differs from vertex count");
    }

    Position pos;
    pos.colour_.assign(element_count(spec, g), 0);
    if (spec.variant == Variant::Arboricity) pos.comps_ = ColourComponents(spec.k, g.order());
    pos.status_ = evaluate_status(spec, g, pos);
    return pos;
}

std::vector<Move> legal_moves(const GameSpec& spec, const Graph& g, const Position& pos)
{
    std::vector<Move> out;
    if (pos.status_ != Status::Ongoing) return out;

    switch (spec.variant) {
    case Variant::Vertex:
    case Variant::ConnectedVertex:
    case Variant::OrderedVertex:
        for (VertexMask p = playable_vertices(spec, g, pos); p; p &= p - 1) {
            Vertex v = std::countr_zero(p) + 1;
            std::uint64_t used = neighbour_colours(g, pos, v);
            for (int c = 1; c <= spec.k; ++c) {
                if (!(used & (std::uint64_t{1} << (c - 1)))) out.push_back(Move{v, -1, c});
            }
        }
        break;
    case Variant::Greedy:
    case Variant::OrderedGreedy:
    case Variant::Marking:
    case Variant::ConnectedMarking:
        for (VertexMask p = playable_vertices(spec, g, pos); p; p &= p - 1) {
            out.push_back(Move{std::countr_zero(p) + 1, -1, 0});
        }
        break;
    case Variant::Arboricity:
        for (int i = 0; i < g.size(); ++i) {
            if (pos.colour_of(i) != 0) continue;
            const Edge& e = g.edges()[i];
            for (int c = 1; c <= spec.k; ++c) {
                if (!pos.components().same(c, e.u, e.v)) out.push_back(Move{0, i, c});
            }
        }
        break;
    }
    if (out.empty()) {
        throw std::logic_error("stalemate: ongoing position without legal moves");
    }
    return out;
}

Position apply(const GameSpec& spec, const Graph& g, const Position& pos, const Move& m)
{
    if (pos.status_ != Status::Ongoing) {
        throw RulesError("illegal move " + format_move(g, m) + ": game is already over (" +
                         std::string(to_string(pos.status_)) + ")");
    }
    Position next = pos;
    const Family fam = family_of(spec.variant);

    if (fam == Family::EdgeColouring) {
        if (m.edge < 0 || m.edge >= g.size()) illegal(g, m, "no such edge");
        if (m.colour < 1 || m.colour > spec.k) illegal(g, m, "colour outside palette 1.." + std::to_string(spec.k));
        if (pos.colour_of(m.edge) != 0) illegal(g, m, "edge already coloured");
        const Edge& e = g.edges()[m.edge];
        if (!next.comps_.merge(m.colour, e.u, e.v)) illegal(g, m, "would close a monochromatic cycle");
        next.colour_[m.edge] = static_cast<std::uint8_t>(m.colour);
    } else {
        Vertex v = m.vertex;
        if (is_ordered_variant(spec.variant)) {
            Vertex due = spec.ordering->at(pos.moves_played());
            if (v != 0 && v != due) illegal(g, m, "vertex " + std::to_string(due) + " is next in the order");
            v = due;
        }
        if (v < 1 || v > g.order()) illegal(g, m, "no such vertex");
        if (pos.played_ & vertex_bit(v)) illegal(g, m, "vertex already played");
        if (!(playable_vertices(spec, g, pos) & vertex_bit(v))) {
            illegal(g, m, "vertex must be adjacent to an already played vertex");
        }

        int colour = 1;
        switch (spec.variant) {
        case Variant::Vertex:
        case Variant::ConnectedVertex:
        case Variant::OrderedVertex:
            colour = m.colour;
            if (colour < 1 || colour > spec.k) illegal(g, m, "colour outside palette 1.." + std::to_string(spec.k));
            if (neighbour_colours(g, pos, v) & (std::uint64_t{1} << (colour - 1))) {
                illegal(g, m, "a neighbour already has colour " + std::to_string(colour));
            }
            break;
        case Variant::Greedy:
        case Variant::OrderedGreedy:
            colour = first_fit_colour(g, pos, v);
            if (m.colour != 0 && m.colour != colour) {
                illegal(g, m, "first-fit forces colour " + std::to_string(colour));
            }
            // a forced colour above k can only arise on a vertex already counted as blocked
            if (colour > spec.k) next.latched_ = true;
            break;
        case Variant::Marking:
        case Variant::ConnectedMarking:
            if (m.colour != 0) illegal(g, m, "marking moves carry no colour");
            if (std::popcount(g.neighbours(v) & pos.played_) > spec.k) next.latched_ = true;
            break;
        case Variant::Arboricity: break;
        }
        next.colour_[v - 1] = static_cast<std::uint8_t>(colour);
        next.played_ |= vertex_bit(v);
    }
    ++next.moves_;
    next.status_ = evaluate_status(spec, g, next);
    return next;
}

Status status(const GameSpec&, const Graph&, const Position& pos) { return pos.status_; }

PositionKey canonical_key(const GameSpec& spec, const Graph& g, const Position& pos)
{
    std::string bytes(pos.elements().begin(), pos.elements().end());
    if (is_colour_symmetric(spec.variant)) {
        std::array<std::uint8_t, 256> rename{};
        std::uint8_t next = 0;
        for (char& ch : bytes) {
            auto c = static_cast<std::uint8_t>(ch);
            if (c == 0) continue;
            if (rename[c] == 0) rename[c] = ++next;
            ch = static_cast<char>(rename[c]);
        }
    } else if (family_of(spec.variant) == Family::Marking) {
        bytes.push_back(pos.bound_violated() ? 1 : 0);
    }
    (void)g;
    return PositionKey(std::move(bytes));
}

PositionKey exact_key(const Position& pos)
{
    std::string bytes(pos.elements().begin(), pos.elements().end());
    bytes.push_back(pos.bound_violated() ? 1 : 0);
    return PositionKey(std::move(bytes));
}

} // namespace colgame
