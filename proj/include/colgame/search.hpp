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
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colgame/graph.hpp"
#include "colgame/parameters.hpp"
#include "colgame/rules.hpp"

namespace colgame {

/// Built-in enumeration stops here; larger orders must come from a graph6 stream.
inline constexpr int kMaxEnumeratedOrder = 8;

/**
 * Canonical relabelling: the labelling minimising the graph6-order adjacency
 * bit string, taken over all permutations that respect an iterated
 * degree-refinement of the vertices. Isomorphic graphs get identical results.
 * Intended for small graphs (n <= 11).
 */
Graph canonical_form(const Graph& g);

/// All graphs on n vertices up to isomorphism, in canonical form, sorted by graph6.
/// Throws RulesError for n > kMaxEnumeratedOrder.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// One graph6 line per graph; blank lines and a ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

struct Predicate {
    enum class Kind {
        /// chi_g < chi_cg, both determined within [1, k_hi].
        ChiGLessThanChiCg,
        /// Some edge e with G-e connected has col_cg(G-e) > col_cg(G).
        ColCgEdgeNonMonotone,
        /// The win profile of `variant` over [k_lo, k_hi] has a Maker-to-Breaker step.
        NonMonotoneProfile,
        /// Parameter `parameter` equals `value`.
        Threshold,
    };

    Kind kind = Kind::NonMonotoneProfile;
    Variant variant = Variant::Arboricity;
    /// k_hi = 0 picks the default top for the graph (see default_k_max()).
    int k_lo = 1;
    int k_hi = 0;
    std::string parameter;
    int value = 0;

    std::string name() const;

    /// chig-lt-chicg[:K], colcg-edge[:K], nonmono:VARIANT[:LO,HI], param:NAME=VALUE
    static Predicate parse(std::string_view text);
};

struct Hit {
    std::string graph6;
    std::string predicate;
    /// Ordered (field, value) pairs; a field may repeat (one per witnessing edge).
    std::vector<std::pair<std::string, std::string>> witness;
    std::vector<WinProfile> profiles;
};

struct Skipped {
    std::string graph6;
    std::string reason;
};

/// Exact; a budget overrun surfaces as ResourceError.
std::optional<Hit> evaluate(const Predicate& predicate, const Graph& g, SolverOptions options = {});

struct ScanOptions {
    int jobs = 1;
    /// Per-graph wall-clock budget; over-budget graphs are reported as skipped.
    std::optional<std::chrono::milliseconds> budget;
};

struct ScanReport {
    std::size_t evaluated = 0;
    std::vector<Hit> hits;
    std::vector<Skipped> skipped;
};

/// Results follow stream order whatever the worker count.
ScanReport scan(const std::vector<Graph>& source, const Predicate& predicate, const ScanOptions& options = {});

/// "graph6<TAB>predicate<TAB>field=value ..." line for a hit.
std::string format_hit(const Hit& hit);
std::string format_profile(const WinProfile& profile);

} // namespace colgame
