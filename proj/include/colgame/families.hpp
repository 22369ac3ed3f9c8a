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

#include <string>
#include <string_view>

#include "colgame/graph.hpp"

namespace colgame {

struct OrderedGraph {
    Graph graph;
    VertexOrdering ordering;
};

/**
 * The ordered graph H_r on 2r+7 vertices with the identity order.
 *
 * Vertex 1 is adjacent to 2, to every odd 3..2r+1, and to 2r+4, 2r+6, 2r+7.
 * Each pair (2i+1, 2i+2) is an edge and every 2i+2 (i = 1..r) sees 2r+7.
 * The tail is the path 2r+3 - 2r+4 - 2r+6 - 2r+7, vertex 2r+5 hangs off 2,
 * and 2 also sees 2r+7. With 3 colours Maker wins the ordered game; with
 * 3+r colours Breaker does. Throws RulesError for r < 1.
 */
OrderedGraph h_r(int r);

/// Seven vertices, 13 edges: Maker wins the vertex game with 4 colours but
/// needs 5 in the connected game.
Graph connectivity_gap_graph();

struct GraphWithEdge {
    Graph graph;
    Edge edge;
};

/// Eight vertices, 12 edges, and the edge {1,3}: the connected game colouring
/// number is 3 with the edge and 4 without it.
GraphWithEdge edge_sensitive_graph();

/**
 * Ordered graph on which Maker wins the ordered vertex game with k colours and
 * Breaker wins with l. For k = 3 this is h_r(l-3). Otherwise 2(k-3) leading
 * vertices u_1..u_{2(k-3)} precede a copy of h_r(l-k): odd u's are isolated,
 * even u's form a clique and see every vertex of the copy.
 * Requires k >= 3 and l > k.
 */
OrderedGraph ordered_gap_graph(int k, int l);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Centre 1 joined to leaves 2..n.
Graph star_graph(int n);
Graph edgeless_graph(int n);

/// path, cycle, complete, star, edgeless. Throws RulesError for unknown names or n < 1.
Graph standard(std::string_view name, int n);

/**
 * Resolves "NAME[:PARAMS]" family specs, e.g. "h_r:2", "fig3", "fig4",
 * "fig4-e", "gap:4,5", "complete:5". The ordering is the identity except for
 * ordered families, where it is the family's own order.
 */
OrderedGraph family_graph(std::string_view spec);

} // namespace colgame
