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

#include "colgame/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>
#include <variant>

#include "colgame/error.hpp"

namespace colgame {

namespace {

// Iterated degree refinement; colours are ranks of sorted signatures, so the
// result does not depend on the input labelling.
std::vector<int> refine(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v + 1);
    int classes = -1;
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (int w = 0; w < n; ++w) {
                if (g.adjacent(v + 1, w + 1)) sig[v].second.push_back(colour[w]);
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        int now = static_cast<int>(sorted.size());
        if (now == classes) return colour;
        classes = now;
    }
}

struct Labelling {
    std::uint64_t code = ~std::uint64_t{0};
    std::vector<int> order; // new position i holds old vertex order[i] (0-based)
};

std::uint64_t code_of(const Graph& g, const std::vector<int>& order)
{
    std::uint64_t code = 0;
    const int n = static_cast<int>(order.size());
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i] + 1, order[j] + 1) ? 1 : 0);
    }
    return code;
}

template <class Visit>
void permute_blocks(std::size_t b, std::vector<int>& order, const std::vector<std::pair<int, int>>& blocks,
                    Visit& visit)
{
    if (b == blocks.size()) {
        visit(order);
        return;
    }
    auto first = order.begin() + blocks[b].first;
    auto last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do {
        permute_blocks(b + 1, order, blocks, visit);
    } while (std::next_permutation(first, last));
}

constexpr int kMaxCanonicalOrder = 11;

Labelling canonical_labelling(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw CapacityError("canonical form is brute force; at most " + std::to_string(kMaxCanonicalOrder) +
                            " vertices");
    }
    std::vector<int> colour = refine(g);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    Labelling best;
    best.order = order;
    auto visit = [&](const std::vector<int>& candidate) {
        std::uint64_t code = code_of(g, candidate);
        if (code < best.code) {
            best.code = code;
            best.order = candidate;
        }
    };
    permute_blocks(0, order, blocks, visit);
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& order)
{
    const int n = g.order();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(position[e.u - 1] + 1, position[e.v - 1] + 1);
    return Graph(n, edges);
}

} // namespace

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labelling(g).order); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only)
{
    if (n < 0) throw RulesError("vertex count must be non-negative");
    if (n > kMaxEnumeratedOrder) {
        throw CapacityError("built-in enumeration stops at n = " + std::to_string(kMaxEnumeratedOrder) +
                         "; supply a graph6 stream (--graph6) for larger graphs");
    }
    std::vector<Graph> level{Graph(0)};
    for (int order = 1; order <= n; ++order) {
        std::map<std::uint64_t, Graph> seen;
        for (const Graph& base : level) {
            for (VertexMask nbrs = 0; nbrs < (VertexMask{1} << (order - 1)); ++nbrs) {
                std::vector<Edge> edges = base.edges();
                for (VertexMask m = nbrs; m; m &= m - 1) edges.emplace_back(std::countr_zero(m) + 1, order);
                Graph grown(order, edges);
                Labelling lab = canonical_labelling(grown);
                if (!seen.contains(lab.code)) seen.emplace(lab.code, relabel(grown, lab.order));
            }
        }
        level.clear();
        for (auto& [code, graph] : seen) level.push_back(std::move(graph));
    }
    std::vector<Graph> out;
    for (Graph& g : level) {
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string Predicate::name() const
{
    switch (kind) {
    case Kind::ChiGLessThanChiCg: return "chig-lt-chicg";
    case Kind::ColCgEdgeNonMonotone: return "colcg-edge";
    case Kind::NonMonotoneProfile: return "nonmono:" + std::string(variant_name(variant));
    case Kind::Threshold: return "param:" + parameter + "=" + std::to_string(value);
    }
    return "?";
}

Predicate Predicate::parse(std::string_view text)
{
    auto bad = [&]() -> ParseError { return ParseError("unrecognised predicate '" + std::string(text) + "'"); };
    auto to_int = [&](std::string_view s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(std::string(s), &used);
            if (used != s.size()) throw bad();
            return v;
        } catch (const std::logic_error&) {
            throw bad();
        }
    };

    Predicate p;
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "chig-lt-chicg" || head == "colcg-edge") {
        p.kind = head == "chig-lt-chicg" ? Kind::ChiGLessThanChiCg : Kind::ColCgEdgeNonMonotone;
        if (!rest.empty()) p.k_hi = to_int(rest);
        return p;
    }
    if (head == "nonmono") {
        p.kind = Kind::NonMonotoneProfile;
        auto colon2 = rest.find(':');
        auto v = parse_variant(rest.substr(0, colon2));
        if (!v) throw bad();
        p.variant = *v;
        p.k_lo = family_of(p.variant) == Family::Marking ? 0 : 1;
        if (colon2 != std::string_view::npos) {
            std::string_view range = rest.substr(colon2 + 1);
            auto comma = range.find(',');
            if (comma == std::string_view::npos) throw bad();
            p.k_lo = to_int(range.substr(0, comma));
            p.k_hi = to_int(range.substr(comma + 1));
        }
        return p;
    }
    if (head == "param") {
        p.kind = Kind::Threshold;
        auto eq = rest.find('=');
        if (eq == std::string_view::npos) throw bad();
        p.parameter = std::string(rest.substr(0, eq));
        if (std::find(std::begin(kParameterNames), std::end(kParameterNames), p.parameter) ==
            std::end(kParameterNames)) {
            throw bad();
        }
        p.value = to_int(rest.substr(eq + 1));
        return p;
    }
    throw bad();
}

namespace {

int default_top(const Graph& g, Variant v)
{
    switch (family_of(v)) {
    case Family::VertexColouring: return g.max_degree() + 1;
    case Family::EdgeColouring: return std::max(g.size(), 1);
    case Family::Marking: return g.order();
    }
    return 1;
}

std::string value_text(const Parameter& p, int k_max)
{
    if (!p.applicable) return "n/a";
    if (p.value) return std::to_string(*p.value);
    return ">" + std::to_string(k_max);
}

} // namespace

std::optional<Hit> evaluate(const Predicate& predicate, const Graph& g, SolverOptions options)
{
    Hit hit;
    hit.graph6 = to_graph6(g);
    hit.predicate = predicate.name();

    switch (predicate.kind) {
    case Predicate::Kind::ChiGLessThanChiCg: {
        if (!is_connected(g)) return std::nullopt;
        const int top = predicate.k_hi > 0 ? predicate.k_hi : g.max_degree() + 1;
        Parameter chi = compute_parameter(g, "chi_g", top, options);
        Parameter chi_c = compute_parameter(g, "chi_cg", top, options);
        if (!chi.value || !chi_c.value || !(*chi.value < *chi_c.value)) return std::nullopt;
        hit.witness = {{"chi_g", std::to_string(*chi.value)}, {"chi_cg", std::to_string(*chi_c.value)}};
        hit.profiles = {chi.profile, chi_c.profile};
        return hit;
    }
    case Predicate::Kind::ColCgEdgeNonMonotone: {
        if (!is_connected(g)) return std::nullopt;
        const int top = predicate.k_hi > 0 ? predicate.k_hi : default_k_max(g);
        Parameter col = compute_parameter(g, "col_cg", top, options);
        if (!col.value) return std::nullopt;
        hit.witness.emplace_back("col_cg", std::to_string(*col.value));
        hit.profiles.push_back(col.profile);
        for (const Edge& e : g.edges()) {
            Graph h = delete_edge(g, e);
            if (!is_connected(h)) continue;
            Parameter col_e = compute_parameter(h, "col_cg", top, options);
            if (!col_e.value || *col_e.value > *col.value) {
                hit.witness.emplace_back("edge", to_string(e));
                hit.witness.emplace_back("col_cg_minus_e", value_text(col_e, top));
                hit.profiles.push_back(col_e.profile);
            }
        }
        if (hit.witness.size() == 1) return std::nullopt;
        return hit;
    }
    case Predicate::Kind::NonMonotoneProfile: {
        if (is_connected_variant(predicate.variant) && !is_connected(g)) return std::nullopt;
        const int top = predicate.k_hi > 0 ? predicate.k_hi : default_top(g, predicate.variant);
        WinProfile profile = win_profile(g, predicate.variant, predicate.k_lo, top, std::nullopt, options);
        std::vector<int> bad = monotonicity_violations(profile);
        if (bad.empty()) return std::nullopt;
        for (int k : bad) hit.witness.emplace_back("k", std::to_string(k));
        hit.profiles.push_back(std::move(profile));
        return hit;
    }
    case Predicate::Kind::Threshold: {
        const int top = predicate.k_hi > 0 ? predicate.k_hi : default_k_max(g);
        Parameter p = compute_parameter(g, predicate.parameter, top, options);
        if (!p.applicable || p.value != predicate.value) return std::nullopt;
        hit.witness.emplace_back(p.name, std::to_string(*p.value));
        hit.profiles.push_back(std::move(p.profile));
        return hit;
    }
    }
    return std::nullopt;
}

ScanReport scan(const std::vector<Graph>& source, const Predicate& predicate, const ScanOptions& options)
{
    using Outcome = std::variant<std::monostate, Hit, Skipped>;
    std::vector<Outcome> outcomes(source.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < source.size(); i = next++) {
            SolverOptions solver_options;
            if (options.budget) solver_options.deadline = std::chrono::steady_clock::now() + *options.budget;
            try {
                if (auto hit = evaluate(predicate, source[i], solver_options)) outcomes[i] = std::move(*hit);
            } catch (const ResourceError& e) {
                outcomes[i] = Skipped{to_graph6(source[i]), std::string("budget: ") + e.what()};
            } catch (const std::exception& e) {
                outcomes[i] = Skipped{to_graph6(source[i]), std::string("error: ") + e.what()};
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    }

    ScanReport report;
    report.evaluated = source.size();
    for (Outcome& o : outcomes) {
        if (auto* hit = std::get_if<Hit>(&o)) report.hits.push_back(std::move(*hit));
        if (auto* skip = std::get_if<Skipped>(&o)) report.skipped.push_back(std::move(*skip));
    }
    return report;
}

std::string format_profile(const WinProfile& profile)
{
    std::string out = std::string(variant_name(profile.variant)) + "[" + std::to_string(profile.k_lo) + ".." +
                      std::to_string(profile.k_hi) + "]:";
    for (Status s : profile.outcomes) out += s == Status::MakerWin ? " M" : " B";
    return out;
}

std::string format_hit(const Hit& hit)
{
    std::string out = hit.graph6 + "\t" + hit.predicate + "\t";
    bool first = true;
    for (const auto& [field, value] : hit.witness) {
        out += (first ? "" : " ") + field + "=" + value;
        first = false;
    }
    return out;
}

} // namespace colgame
