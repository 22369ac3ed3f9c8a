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

#include "colgame/families.hpp"

#include <charconv>
#include <vector>

#include "colgame/error.hpp"

namespace colgame {

OrderedGraph h_r(int r)
{
    if (r < 1) throw RulesError("h_r needs r >= 1");
    const int n = 2 * r + 7;
    const Vertex last = n;
    std::vector<Edge> edges{{1, 2}};
    for (int i = 1; i <= r; ++i) {
        edges.emplace_back(1, 2 * i + 1);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
        edges.emplace_back(2 * i + 2, last);
    }
    edges.emplace_back(1, 2 * r + 4);
    edges.emplace_back(1, 2 * r + 6);
    edges.emplace_back(1, last);
    edges.emplace_back(2, 2 * r + 5);
    edges.emplace_back(2, last);
    edges.emplace_back(2 * r + 3, 2 * r + 4);
    edges.emplace_back(2 * r + 4, 2 * r + 6);
    edges.emplace_back(2 * r + 6, last);
    return {Graph(n, edges), VertexOrdering::identity(n)};
}

Graph connectivity_gap_graph()
{
    return Graph(7, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 5}, {2, 6},
                     {2, 7}, {3, 5}, {3, 7}, {4, 6}, {5, 7}, {6, 7}});
}

GraphWithEdge edge_sensitive_graph()
{
    Graph g(8, {{4, 7}, {4, 5}, {5, 6}, {5, 8}, {2, 6}, {1, 2}, {3, 8}, {1, 3}, {6, 7}, {1, 6}, {7, 8}, {1, 8}});
    return {std::move(g), Edge(1, 3)};
}

OrderedGraph ordered_gap_graph(int k, int l)
{
    if (k < 3) throw RulesError("ordered gap graph needs k >= 3");
    if (l <= k) throw RulesError("ordered gap graph needs l > k");
    if (k == 3) return h_r(l - 3);

    const OrderedGraph core = h_r(l - k);
    const int lead = 2 * (k - 3);
    const int n = lead + core.graph.order();
    std::vector<Edge> edges;
    for (const Edge& e : core.graph.edges()) edges.emplace_back(e.u + lead, e.v + lead);
    for (int i = 2; i <= lead; i += 2) {
        for (int j = i + 2; j <= lead; j += 2) edges.emplace_back(i, j);
        for (Vertex v = lead + 1; v <= n; ++v) edges.emplace_back(i, v);
    }
    return {Graph(n, edges), VertexOrdering::identity(n)};
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3) throw RulesError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph(n, edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph star_graph(int n)
{
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return Graph(n, edges);
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph standard(std::string_view name, int n)
{
    if (n < 1) throw RulesError("standard families need n >= 1");
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "star") return star_graph(n);
    if (name == "edgeless") return edgeless_graph(n);
    throw RulesError("unknown graph family '" + std::string(name) + "'");
}

namespace {

std::vector<int> parse_params(std::string_view text, std::string_view spec)
{
    std::vector<int> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view part = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw RulesError("bad parameter in family spec '" + std::string(spec) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

OrderedGraph family_graph(std::string_view spec)
{
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::vector<int> params =
        colon == std::string_view::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1), spec);

    auto want = [&](std::size_t count) {
        if (params.size() != count) {
            throw RulesError("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
        }
    };
    auto identity = [](Graph g) {
        int n = g.order();
        return OrderedGraph{std::move(g), VertexOrdering::identity(n)};
    };

    if (name == "h_r" || name == "hr") {
        want(1);
        return h_r(params[0]);
    }
    if (name == "gap" || name == "ordered-gap") {
        want(2);
        return ordered_gap_graph(params[0], params[1]);
    }
    if (name == "fig3" || name == "connectivity-gap") {
        want(0);
        return identity(connectivity_gap_graph());
    }
    if (name == "fig4" || name == "edge-sensitive") {
        want(0);
        return identity(edge_sensitive_graph().graph);
    }
    if (name == "fig4-e" || name == "edge-sensitive-e") {
        want(0);
        auto [g, e] = edge_sensitive_graph();
        return identity(delete_edge(g, e));
    }
    want(1);
    return identity(standard(name, params[0]));
}

} // namespace colgame
