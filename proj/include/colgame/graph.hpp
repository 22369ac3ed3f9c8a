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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colgame {

/// Vertices are labelled 1..n on every public interface.
using Vertex = int;

/// Bit (v-1) stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/**
 * Finite simple undirected graph on vertices 1..n, n <= 64.
 *
 * Immutable once built. Edges are kept sorted lexicographically, so the
 * index of an edge in edges() is a stable element id for edge games.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws RulesError on self-loops, duplicates or out-of-range endpoints,
    /// CapacityError when n > 64.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    VertexMask neighbours(Vertex v) const { return adj_[v - 1]; }
    VertexMask all_vertices() const;
    bool adjacent(Vertex u, Vertex v) const { return (adj_[u - 1] & vertex_bit(v)) != 0; }
    int degree(Vertex v) const;
    int max_degree() const;

    /// Index of {u,v} in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const;
    bool has_edge(const Edge& e) const { return edge_index(e.u, e.v) >= 0; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexMask> adj_;
};

/// A linear order on the vertices: position t (0-based) holds the t-th vertex to colour.
class VertexOrdering {
public:
    VertexOrdering() = default;
    /// Throws RulesError unless `order` is a permutation of 1..order.size().
    explicit VertexOrdering(std::vector<Vertex> order);

    static VertexOrdering identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    Vertex at(int position) const { return order_[position]; }
    const std::vector<Vertex>& vertices() const { return order_; }
    bool is_identity() const;

    bool operator==(const VertexOrdering&) const = default;

private:
    std::vector<Vertex> order_;
};

/// Parses "n m" followed by m lines "u v" (1 <= u < v <= n). Blank lines and
/// lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 codec, byte-exact with the published format (n <= 64 here).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Throws RulesError if e is not an edge of g.
Graph delete_edge(const Graph& g, const Edge& e);

bool is_connected(const Graph& g);

/// True iff the vertices of `mask` induce a connected subgraph (empty counts).
bool induces_connected(const Graph& g, VertexMask mask);

} // namespace colgame
