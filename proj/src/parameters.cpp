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

#include "colgame/parameters.hpp"

#include <algorithm>

#include "colgame/error.hpp"

namespace colgame {

std::optional<int> WinProfile::least_maker_win() const
{
    for (int k = k_lo; k <= k_hi; ++k) {
        if (at(k) == Status::MakerWin) return k;
    }
    return std::nullopt;
}

bool WinProfile::upward_closed() const { return monotonicity_violations(*this).empty(); }

WinProfile win_profile(const Graph& g, Variant variant, int k_lo, int k_hi, std::optional<VertexOrdering> ordering,
                       SolverOptions options)
{
    if (is_ordered_variant(variant) && !ordering) ordering = VertexOrdering::identity(g.order());
    WinProfile profile{variant, k_lo, k_hi, {}};
    for (int k = k_lo; k <= k_hi; ++k) {
        profile.outcomes.push_back(solve(GameSpec::make(variant, k, ordering), g, options).winner);
    }
    return profile;
}

std::vector<int> monotonicity_violations(const WinProfile& profile)
{
    std::vector<int> out;
    for (int k = profile.k_lo; k < profile.k_hi; ++k) {
        if (profile.at(k) == Status::MakerWin && profile.at(k + 1) == Status::BreakerWin) out.push_back(k);
    }
    return out;
}

std::vector<int> monotonicity_violations(const Graph& g, Variant variant, int k_lo, int k_hi,
                                         std::optional<VertexOrdering> ordering, SolverOptions options)
{
    return monotonicity_violations(win_profile(g, variant, k_lo, k_hi, std::move(ordering), options));
}

const Parameter& ParameterReport::get(std::string_view name) const
{
    for (const Parameter& p : parameters) {
        if (p.name == name) return p;
    }
    throw RulesError("no parameter named '" + std::string(name) + "'");
}

int default_k_max(const Graph& g) { return std::max({g.max_degree() + 1, g.size(), g.order(), 1}); }

namespace {

Variant parameter_variant(std::string_view name)
{
    if (name == "chi_g") return Variant::Vertex;
    if (name == "chi_cg") return Variant::ConnectedVertex;
    if (name == "gamma_g") return Variant::Greedy;
    if (name == "arb_g") return Variant::Arboricity;
    if (name == "col_g") return Variant::Marking;
    if (name == "col_cg") return Variant::ConnectedMarking;
    throw RulesError("unknown parameter '" + std::string(name) + "'");
}

} // namespace

Parameter compute_parameter(const Graph& g, std::string_view name, int k_max, SolverOptions options)
{
    if (k_max < 1) throw RulesError("k_max must be at least 1");
    Parameter p;
    p.name = std::string(name);
    p.variant = parameter_variant(name);
    if (is_connected_variant(p.variant) && !is_connected(g)) {
        p.applicable = false;
        p.profile = WinProfile{p.variant, 1, 0, {}};
        return p;
    }
    const bool marking = family_of(p.variant) == Family::Marking;
    const int offset = marking ? 1 : 0;
    p.profile = win_profile(g, p.variant, 1 - offset, k_max - offset, std::nullopt, options);
    if (auto least = p.profile.least_maker_win()) {
        p.value = *least + offset;
    } else {
        p.undetermined = true;
    }
    return p;
}

ParameterReport parameter_report(const Graph& g, std::optional<int> k_max, SolverOptions options)
{
    ParameterReport report;
    report.k_max = k_max.value_or(default_k_max(g));
    if (report.k_max < 1) throw RulesError("k_max must be at least 1");
    for (std::string_view name : kParameterNames) {
        report.parameters.push_back(compute_parameter(g, name, report.k_max, options));
    }
    return report;
}

} // namespace colgame
