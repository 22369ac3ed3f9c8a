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

#include "colgame/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "colgame/error.hpp"

namespace colgame {

std::string to_string(const Edge& e)
{
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    if (n < 0) throw RulesError("negative vertex count");
    if (n > kMaxVertices) {
        throw CapacityError("graph has " + std::to_string(n) + " vertices; at most 64 supported");
    }
    n_ = n;
    adj_.assign(n, 0);
    edges_.assign(edges.begin(), edges.end());
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.v > n) throw RulesError("edge " + to_string(e) + " out of range");
        if (e.u == e.v) throw RulesError("self-loop at vertex " + std::to_string(e.u));
        if (adjacent(e.u, e.v)) throw RulesError("duplicate edge " + to_string(e));
        adj_[e.u - 1] |= vertex_bit(e.v);
        adj_[e.v - 1] |= vertex_bit(e.u);
    }
    std::sort(edges_.begin(), edges_.end());
}

VertexMask Graph::all_vertices() const
{
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v - 1]); }

int Graph::max_degree() const
{
    int best = 0;
    for (VertexMask m : adj_) best = std::max(best, std::popcount(m));
    return best;
}

int Graph::edge_index(Vertex u, Vertex v) const
{
    Edge key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order) : order_(std::move(order))
{
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (Vertex v : order_) {
        if (v < 1 || v > n || seen[v]) throw RulesError("vertex ordering is not a permutation of 1..n");
        seen[v] = true;
    }
}

VertexOrdering VertexOrdering::identity(int n)
{
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    return VertexOrdering(std::move(order));
}

bool VertexOrdering::is_identity() const
{
    for (int i = 0; i < size(); ++i) {
        if (order_[i] != i + 1) return false;
    }
    return true;
}

namespace {

bool skippable(std::string_view line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

[[noreturn]] void fail_line(int lineno, const std::string& what)
{
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

// Reads exactly `count` integers from the line, nothing else.
std::vector<long long> read_ints(std::string_view line, int count, int lineno)
{
    std::istringstream in{std::string(line)};
    std::vector<long long> out;
    long long x = 0;
    while (in >> x) out.push_back(x);
    if (!in.eof()) fail_line(lineno, "expected integers, got '" + std::string(line) + "'");
    if (static_cast<int>(out.size()) != count) {
        fail_line(lineno, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    VertexMask seen_adj[kMaxVertices] = {};

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (skippable(line)) {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            auto nm = read_ints(line, 2, lineno);
            n = nm[0];
            m = nm[1];
            if (n < 0 || m < 0) fail_line(lineno, "negative count");
            if (n > kMaxVertices) throw CapacityError("line " + std::to_string(lineno) + ": at most 64 vertices supported");
            if (m > n * (n - 1) / 2) fail_line(lineno, "more edges than a simple graph allows");
            have_header = true;
        } else {
            if (static_cast<long long>(edges.size()) == m) fail_line(lineno, "more edge lines than announced");
            auto uv = read_ints(line, 2, lineno);
            long long u = uv[0], v = uv[1];
            if (u == v) fail_line(lineno, "self-loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1 || u > n || v > n) fail_line(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u > v) fail_line(lineno, "expected u < v");
            if (seen_adj[u - 1] & vertex_bit(static_cast<Vertex>(v))) {
                fail_line(lineno, "duplicate edge " + to_string(Edge(u, v)));
            }
            seen_adj[u - 1] |= vertex_bit(static_cast<Vertex>(v));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError("line 1: missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char ch : line) {
        auto b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126");
    }

    std::size_t pos = 0;
    long n = 0;
    if (static_cast<unsigned char>(line[0]) != 126) {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() < 4) throw ParseError("graph6: truncated size header");
        if (static_cast<unsigned char>(line[1]) == 126) throw ParseError("graph6: graphs this large are not supported");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
        if (n < 63) throw ParseError("graph6: non-minimal size header");
        pos = 4;
    }
    if (n > kMaxVertices) throw CapacityError("graph6: " + std::to_string(n) + " vertices; at most 64 supported");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos < bytes) throw ParseError("graph6: truncated bit vector");
    if (line.size() - pos > bytes) throw ParseError("graph6: trailing bytes after bit vector");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = line[pos + k / 6] - 63;
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(i + 1, j + 1);
        }
    }
    if (bits % 6 != 0) {
        int last = line[pos + bytes - 1] - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

Graph delete_edge(const Graph& g, const Edge& e)
{
    int idx = g.edge_index(e.u, e.v);
    if (idx < 0) throw RulesError("edge " + to_string(e) + " is not in the graph");
    std::vector<Edge> rest = g.edges();
    rest.erase(rest.begin() + idx);
    return Graph(g.order(), rest);
}

bool induces_connected(const Graph& g, VertexMask mask)
{
    if (mask == 0) return true;
    VertexMask reached = mask & (~mask + 1);
    VertexMask frontier = reached;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f; f &= f - 1) {
            next |= g.neighbours(std::countr_zero(f) + 1);
        }
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

bool is_connected(const Graph& g) { return induces_connected(g, g.all_vertices()); }

} // namespace colgame
