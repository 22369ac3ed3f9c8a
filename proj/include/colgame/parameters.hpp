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

#include <optional>
#include <string>
#include <vector>

#include "colgame/graph.hpp"
#include "colgame/rules.hpp"
#include "colgame/solver.hpp"

namespace colgame {

/// Outcome for every k in [k_lo, k_hi]. No monotonicity is assumed anywhere.
struct WinProfile {
    Variant variant = Variant::Vertex;
    int k_lo = 1;
    int k_hi = 0;
    std::vector<Status> outcomes;

    Status at(int k) const { return outcomes.at(k - k_lo); }
    /// Least k in range with a Maker win.
    std::optional<int> least_maker_win() const;
    /// Maker win at k implies Maker win at k+1 throughout the range.
    bool upward_closed() const;
};

/// Solves spec(k) for each k in [k_lo, k_hi]. Ordered variants use `ordering`,
/// defaulting to the identity.
WinProfile win_profile(const Graph& g, Variant variant, int k_lo, int k_hi,
                       std::optional<VertexOrdering> ordering = std::nullopt, SolverOptions options = {});

/// Every k in range with MakerWin at k and BreakerWin at k+1.
std::vector<int> monotonicity_violations(const WinProfile& profile);
std::vector<int> monotonicity_violations(const Graph& g, Variant variant, int k_lo, int k_hi,
                                         std::optional<VertexOrdering> ordering = std::nullopt,
                                         SolverOptions options = {});

/**
 * One named game parameter with the profile it was read from.
 *
 * Colouring parameters are min{k : MakerWin} over k in [1, k_max]. Marking
 * parameters are 1 + min{s : MakerWin} over s in [0, k_max - 1], i.e. the
 * same range of reported values.
 */
struct Parameter {
    std::string name;
    Variant variant = Variant::Vertex;
    /// False when the variant does not apply (connected variants on disconnected graphs).
    bool applicable = true;
    std::optional<int> value;
    /// No Maker win anywhere in range: the value lies above k_max.
    bool undetermined = false;
    WinProfile profile;
};

struct ParameterReport {
    int k_max = 0;
    std::vector<Parameter> parameters;

    const Parameter& get(std::string_view name) const;
};

/// Names used in reports: chi_g, chi_cg, gamma_g, arb_g, col_g, col_cg.
inline constexpr std::string_view kParameterNames[] = {"chi_g", "chi_cg", "gamma_g", "arb_g", "col_g", "col_cg"};

/// max(Delta+1, m, n): every parameter's profile ends in a Maker win at this k.
int default_k_max(const Graph& g);

Parameter compute_parameter(const Graph& g, std::string_view name, int k_max, SolverOptions options = {});

/// Throws RulesError for k_max < 1.
ParameterReport parameter_report(const Graph& g, std::optional<int> k_max = std::nullopt, SolverOptions options = {});

} // namespace colgame
