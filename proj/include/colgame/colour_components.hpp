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
#include <vector>

#include "colgame/graph.hpp"

namespace colgame {

/**
 * One disjoint-set forest per colour over the vertices of a graph. Tracks the
 * connected components of each colour class of a partial edge colouring.
 *
 * Quick-find layout: every vertex points straight at its root, and the root
 * is the least vertex of the component. Two instances built from the same
 * colour classes therefore compare equal regardless of merge order.
 */
class ColourComponents {
public:
    ColourComponents() = default;
    ColourComponents(int palette, int n);

    int palette() const { return palette_; }
    int order() const { return n_; }

    Vertex find(int colour, Vertex v) const;
    bool same(int colour, Vertex u, Vertex v) const { return find(colour, u) == find(colour, v); }

    /// Unions the components of u and v in `colour`; false if they already shared one.
    bool merge(int colour, Vertex u, Vertex v);

    bool operator==(const ColourComponents&) const = default;

private:
    std::uint8_t& parent(int colour, Vertex v) { return parent_[(colour - 1) * n_ + (v - 1)]; }
    std::uint8_t parent(int colour, Vertex v) const { return parent_[(colour - 1) * n_ + (v - 1)]; }

    int palette_ = 0;
    int n_ = 0;
    std::vector<std::uint8_t> parent_;
};

} // namespace colgame
