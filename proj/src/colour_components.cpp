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

#include "colgame/colour_components.hpp"

#include <utility>

namespace colgame {

ColourComponents::ColourComponents(int palette, int n)
    : palette_(palette), n_(n), parent_(static_cast<std::size_t>(palette) * n)
{
    for (int c = 1; c <= palette; ++c) {
        for (Vertex v = 1; v <= n; ++v) parent(c, v) = static_cast<std::uint8_t>(v);
    }
}

Vertex ColourComponents::find(int colour, Vertex v) const { return parent(colour, v); }

bool ColourComponents::merge(int colour, Vertex u, Vertex v)
{
    Vertex ru = find(colour, u);
    Vertex rv = find(colour, v);
    if (ru == rv) return false;
    if (rv < ru) std::swap(ru, rv);
    for (Vertex w = rv; w <= n_; ++w) {
        if (parent(colour, w) == rv) parent(colour, w) = static_cast<std::uint8_t>(ru);
    }
    return true;
}

} // namespace colgame
