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

#include "colgame/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "colgame/error.hpp"
#include "colgame/families.hpp"
#include "colgame/imagination.hpp"
#include "colgame/parameters.hpp"
#include "colgame/search.hpp"
#include "colgame/solver.hpp"

namespace colgame {

namespace {

class Claim {
public:
    explicit Claim(ClaimResult& r) : r_(r) {}

    void expect(bool ok, const std::string& what)
    {
        if (!ok) failed_ = true;
        r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { r_.details.push_back("info " + what); }
    bool all_ok() const { return !failed_; }

private:
    ClaimResult& r_;
    bool failed_ = false;
};

std::string spec_text(Variant v, int k) { return std::string(variant_name(v)) + " k=" + std::to_string(k); }

void expect_winner(Claim& c, const std::string& graph_name, const Graph& g, const GameSpec& spec, Status want)
{
    Status got = solve(spec, g).winner;
    c.expect(got == want, graph_name + " " + spec_text(spec.variant, spec.k) + " -> " + std::string(to_string(got)) +
                              " (want " + std::string(to_string(want)) + ")");
}

std::vector<Graph> graphs_up_to(int n_max, bool connected_only)
{
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        for (Graph& g : enumerate_graphs(n, connected_only)) out.push_back(std::move(g));
    }
    return out;
}

void t1(Claim& c)
{
    Graph g = connectivity_gap_graph();
    for (int k = 1; k <= 4; ++k) {
        expect_winner(c, "fig3", g, GameSpec::make(Variant::Vertex, k), k < 4 ? Status::BreakerWin : Status::MakerWin);
    }
    for (int k = 1; k <= 5; ++k) {
        expect_winner(c, "fig3", g, GameSpec::make(Variant::ConnectedVertex, k),
                      k < 5 ? Status::BreakerWin : Status::MakerWin);
    }
}

void t2(Claim& c)
{
    auto [g, e] = edge_sensitive_graph();
    Graph h = delete_edge(g, e);
    expect_winner(c, "fig4", g, GameSpec::make(Variant::ConnectedMarking, 1), Status::BreakerWin);
    expect_winner(c, "fig4", g, GameSpec::make(Variant::ConnectedMarking, 2), Status::MakerWin);
    for (int s = 1; s <= 3; ++s) {
        expect_winner(c, "fig4-e", h, GameSpec::make(Variant::ConnectedMarking, s),
                      s < 3 ? Status::BreakerWin : Status::MakerWin);
    }
}

void t3(Claim& c)
{
    OrderedGraph h1 = h_r(1);
    OrderedGraph h2 = h_r(2);
    expect_winner(c, "H_1", h1.graph, GameSpec::make(Variant::OrderedVertex, 3, h1.ordering), Status::MakerWin);
    expect_winner(c, "H_1", h1.graph, GameSpec::make(Variant::OrderedVertex, 4, h1.ordering), Status::BreakerWin);
    expect_winner(c, "H_2", h2.graph, GameSpec::make(Variant::OrderedVertex, 3, h2.ordering), Status::MakerWin);
    expect_winner(c, "H_2", h2.graph, GameSpec::make(Variant::OrderedVertex, 5, h2.ordering), Status::BreakerWin);
    Status mid = solve(GameSpec::make(Variant::OrderedVertex, 4, h2.ordering), h2.graph).winner;
    c.note("H_2 overtex k=4 -> " + std::string(to_string(mid)) + " (reported, not asserted)");
}

void t4(Claim& c)
{
    OrderedGraph g = ordered_gap_graph(4, 5);
    c.expect(g.graph.order() == 11, "gap(4,5) has 11 vertices");
    expect_winner(c, "gap(4,5)", g.graph, GameSpec::make(Variant::OrderedVertex, 4, g.ordering), Status::MakerWin);
    expect_winner(c, "gap(4,5)", g.graph, GameSpec::make(Variant::OrderedVertex, 5, g.ordering), Status::BreakerWin);
}

void t5(Claim& c)
{
    OrderedGraph h1 = h_r(1);
    GameSpec spec = GameSpec::make(Variant::OrderedGreedy, 3, h1.ordering);
    Solver solver(spec, h1.graph);
    c.expect(solver.solve().winner == Status::BreakerWin, "H_1 ogreedy k=3 -> BreakerWin");
    Position pos = solver.root();
    std::string colours;
    for (const Move& m : solver.principal_variation()) {
        pos = apply(spec, h1.graph, pos, m);
        colours += std::to_string(pos.colour_of(m.vertex - 1));
    }
    c.expect(pos.moves_played() == 8, "trace has 8 moves (got " + std::to_string(pos.moves_played()) + ")");
    c.expect(colours == "12211213", "first-fit colours 1,2,2,1,1,2,1,3 (got " + colours + ")");
    c.expect(status(spec, h1.graph, pos) == Status::BreakerWin && pos.colour_of(8) == 0 &&
                 neighbour_colours(h1.graph, pos, 9) == 0b111,
             "vertex 9 uncoloured with colours 1,2,3 around it");
}

void t6(Claim& c)
{
    int graphs = 0, profiles_ok = 0;
    for (const Graph& g : graphs_up_to(5, false)) {
        ++graphs;
        WinProfile p = win_profile(g, Variant::Arboricity, 1, std::max(1, g.size()));
        auto bad = monotonicity_violations(p);
        if (bad.empty()) {
            ++profiles_ok;
        } else {
            c.expect(false, "MONOTONICITY VIOLATION on " + to_graph6(g) + ": " + format_profile(p));
        }
    }
    c.expect(graphs == 1 + 2 + 4 + 11 + 34, "all " + std::to_string(graphs) + " graphs with n <= 5 enumerated");
    c.expect(profiles_ok == graphs, std::to_string(profiles_ok) + "/" + std::to_string(graphs) +
                                        " arboricity profiles over [1,m] are upward-closed");
}

void t7(Claim& c)
{
    int cases = 0, verified = 0, concedes = 0, violations = 0;
    std::uint64_t checks = 0, states = 0;
    for (const Graph& g : graphs_up_to(5, false)) {
        for (int k = 1; k + 1 <= std::max(1, g.size()); ++k) {
            GameSpec upper = GameSpec::make(Variant::Arboricity, k + 1);
            if (solve(upper, g).winner != Status::BreakerWin) continue;
            ++cases;
            try {
                auto agent = transform_breaker(solver_strategy(upper, g, Player::Breaker), g, k);
                VerifyResult r = verify_agent_wins(GameSpec::make(Variant::Arboricity, k), g, *agent);
                checks += agent->stats().containment_checks;
                states += r.states;
                if (r.breaker_wins) {
                    ++verified;
                } else {
                    c.expect(false, to_graph6(g) + " k=" + std::to_string(k) + ": Maker beats the transformed agent");
                }
            } catch (const ConcedeError& e) {
                ++concedes;
                c.expect(false, to_graph6(g) + " k=" + std::to_string(k) + ": concede: " + e.what());
            } catch (const InvariantViolation& e) {
                ++violations;
                c.expect(false, to_graph6(g) + " k=" + std::to_string(k) + ": invariant: " + e.what());
            }
        }
    }
    c.expect(cases > 0 && verified == cases,
             std::to_string(verified) + "/" + std::to_string(cases) + " transformed Breaker agents verified");
    c.expect(concedes == 0, std::to_string(concedes) + " concede assertions");
    c.expect(violations == 0, std::to_string(violations) + " containment / edge-set violations");
    c.note(std::to_string(checks) + " invariant checks over " + std::to_string(states) + " verified states");
}

void t8(Claim& c)
{
    int compared = 0, mismatches = 0;
    for (const Graph& g : graphs_up_to(4, false)) {
        const bool connected = is_connected(g);
        for (Variant v : kAllVariants) {
            if (is_connected_variant(v) && !connected) continue;
            for (int k = 0; k <= 3; ++k) {
                GameSpec spec = GameSpec::make(v, k, VertexOrdering::identity(g.order()));
                Status fast = solve(spec, g).winner;
                Status slow = naive_solve(spec, g).winner;
                ++compared;
                if (fast != slow) {
                    ++mismatches;
                    c.expect(false, to_graph6(g) + " " + spec_text(v, k) + ": solve " + std::string(to_string(fast)) +
                                        " vs naive " + std::string(to_string(slow)));
                }
            }
        }
    }
    c.expect(mismatches == 0, std::to_string(compared - mismatches) + "/" + std::to_string(compared) +
                                  " solve/naive_solve comparisons agree");
}

// Memoised on the exact state only: no colour renaming, no pruning.
class ExactEvaluator {
public:
    ExactEvaluator(const GameSpec& spec, const Graph& g) : spec_(spec), g_(g) {}

    Status value(const Position& pos)
    {
        Status s = status(spec_, g_, pos);
        if (s != Status::Ongoing) return s;
        PositionKey key = exact_key(pos);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Status goal = win_for(pos.to_move());
        Status result = win_for(opponent(pos.to_move()));
        for (const Move& m : legal_moves(spec_, g_, pos)) {
            if (value(apply(spec_, g_, pos, m)) == goal) {
                result = goal;
                break;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    const GameSpec& spec_;
    const Graph& g_;
    std::unordered_map<PositionKey, Status, PositionKeyHash> memo_;
};

// Every reachable position of the game, each with one move history reaching it.
void reachable(const GameSpec& spec, const Graph& g, const Position& pos, std::vector<Move>& line,
               std::unordered_map<PositionKey, std::vector<Move>, PositionKeyHash>& out)
{
    if (!out.emplace(exact_key(pos), line).second) return;
    if (status(spec, g, pos) != Status::Ongoing) return;
    for (const Move& m : legal_moves(spec, g, pos)) {
        line.push_back(m);
        reachable(spec, g, apply(spec, g, pos, m), line, out);
        line.pop_back();
    }
}

void t9(Claim& c)
{
    const auto graphs5 = graphs_up_to(5, false);

    int closed = 0, profiles = 0;
    for (const Graph& g : graphs5) {
        for (Variant v : {Variant::Marking, Variant::ConnectedMarking, Variant::Greedy, Variant::OrderedGreedy}) {
            if (is_connected_variant(v) && !is_connected(g)) continue;
            const bool marking = family_of(v) == Family::Marking;
            WinProfile p = win_profile(g, v, 0, marking ? g.order() : g.max_degree() + 1);
            ++profiles;
            if (p.upward_closed()) {
                ++closed;
            } else {
                c.expect(false, "not upward-closed on " + to_graph6(g) + ": " + format_profile(p));
            }
        }
    }
    c.expect(closed == profiles,
             "(a) " + std::to_string(closed) + "/" + std::to_string(profiles) + " marking/greedy profiles upward-closed");

    int bounds = 0, bound_ok = 0;
    for (const Graph& g : graphs5) {
        for (Variant v : kAllVariants) {
            if (family_of(v) == Family::Marking) continue;
            if (is_connected_variant(v) && !is_connected(g)) continue;
            const int k = v == Variant::Arboricity ? g.size() : g.max_degree() + 1;
            if (v == Variant::Arboricity && k == 0) continue;
            ++bounds;
            Status s = solve(GameSpec::make(v, k, VertexOrdering::identity(g.order())), g).winner;
            if (s == Status::MakerWin) {
                ++bound_ok;
            } else {
                c.expect(false, to_graph6(g) + " " + spec_text(v, k) + " is not a Maker win");
            }
        }
    }
    c.expect(bound_ok == bounds, "(b) " + std::to_string(bound_ok) + "/" + std::to_string(bounds) +
                                     " trivial-bound instances (k=Delta+1, arboricity k=m) are Maker wins");

    std::uint64_t checked = 0, mismatches = 0;
    for (const Graph& g : graphs_up_to(4, false)) {
        for (Variant v : kAllVariants) {
            if (!is_colour_symmetric(v) || (is_connected_variant(v) && !is_connected(g))) continue;
            for (int k = 1; k <= 3; ++k) {
                GameSpec spec = GameSpec::make(v, k, VertexOrdering::identity(g.order()));
                ExactEvaluator eval(spec, g);
                std::unordered_map<PositionKey, std::vector<Move>, PositionKeyHash> positions;
                std::vector<Move> line;
                reachable(spec, g, initial_position(spec, g), line, positions);

                std::vector<int> perm(k);
                std::iota(perm.begin(), perm.end(), 1);
                std::vector<std::vector<int>> perms;
                do {
                    perms.push_back(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));

                for (const auto& [key, history] : positions) {
                    Position pos = initial_position(spec, g);
                    for (const Move& m : history) pos = apply(spec, g, pos, m);
                    const Status base = eval.value(pos);
                    for (const auto& p : perms) {
                        Position permuted = initial_position(spec, g);
                        for (Move m : history) {
                            m.colour = p[m.colour - 1];
                            permuted = apply(spec, g, permuted, m);
                        }
                        ++checked;
                        if (eval.value(permuted) != base) ++mismatches;
                    }
                }
            }
        }
    }
    c.expect(mismatches == 0, "(c) " + std::to_string(checked - mismatches) + "/" + std::to_string(checked) +
                                  " colour-permuted positions keep their winner");
}

bool has_witness(const Hit& hit, const std::string& field, const std::string& value)
{
    return std::find(hit.witness.begin(), hit.witness.end(), std::make_pair(field, value)) != hit.witness.end();
}

void t10(Claim& c)
{
    const std::vector<Graph> stream = {connectivity_gap_graph(), edge_sensitive_graph().graph};
    const std::string fig3 = to_graph6(stream[0]);
    const std::string fig4 = to_graph6(stream[1]);

    Predicate chi = Predicate::parse("chig-lt-chicg");
    ScanReport r1 = scan(stream, chi);
    auto h1 = std::find_if(r1.hits.begin(), r1.hits.end(), [&](const Hit& h) { return h.graph6 == fig3; });
    c.expect(h1 != r1.hits.end() && has_witness(*h1, "chi_g", "4") && has_witness(*h1, "chi_cg", "5"),
             "chig-lt-chicg flags fig3 with chi_g=4, chi_cg=5");
    for (const Hit& h : r1.hits) {
        auto again = evaluate(chi, parse_graph6(h.graph6));
        c.expect(again && again->witness == h.witness, "hit " + h.graph6 + " reproduces from its graph6");
    }

    Predicate col = Predicate::parse("colcg-edge");
    ScanReport r2 = scan(stream, col);
    auto h2 = std::find_if(r2.hits.begin(), r2.hits.end(), [&](const Hit& h) { return h.graph6 == fig4; });
    c.expect(h2 != r2.hits.end() && has_witness(*h2, "col_cg", "3") && has_witness(*h2, "edge", "{1,3}"),
             "colcg-edge flags fig4 with col_cg=3 and witness edge {1,3}");
    for (const Hit& h : r2.hits) {
        auto again = evaluate(col, parse_graph6(h.graph6));
        c.expect(again && again->witness == h.witness, "hit " + h.graph6 + " reproduces from its graph6");
    }

    std::vector<Graph> connected;
    for (int n = 1; n <= 6; ++n) {
        for (Graph& g : enumerate_graphs(n, true)) connected.push_back(std::move(g));
    }
    ScanReport r3 = scan(connected, Predicate::parse("nonmono:arboricity"));
    c.expect(r3.evaluated == 1 + 1 + 2 + 6 + 21 + 112,
             "scanned " + std::to_string(r3.evaluated) + " connected graphs with n <= 6");
    c.expect(r3.hits.empty() && r3.skipped.empty(),
             "nonmono:arboricity: " + std::to_string(r3.hits.size()) + " hits, " + std::to_string(r3.skipped.size()) +
                 " skipped");
}

struct ClaimDef {
    const char* id;
    const char* title;
    double budget;
    void (*body)(Claim&);
};

constexpr ClaimDef kClaims[] = {
    {"T1", "connectivity gap graph: chi_g = 4 < chi_cg = 5", 10, t1},
    {"T2", "edge-sensitive graph: col_cg 3, and 4 after deleting e", 5, t2},
    {"T3", "H_1, H_2 ordered game: Maker at 3, Breaker at 3+r", 60, t3},
    {"T4", "ordered gap graph (4,5): Maker at 4, Breaker at 5", 120, t4},
    {"T5", "H_1 ordered greedy with 3 colours: Breaker at vertex 9", 1, t5},
    {"T6", "arboricity profiles upward-closed, all graphs n <= 5", 600, t6},
    {"T7", "imagination transform verified, all graphs n <= 5", 900, t7},
    {"T8", "solve agrees with naive_solve, n <= 4, all variants", 300, t8},
    {"T9", "property suites: closure, trivial bounds, colour symmetry", 600, t9},
    {"T10", "search reproduces both counterexamples; no arboricity hits n <= 6", 900, t10},
};

} // namespace

std::vector<std::string> claim_ids()
{
    std::vector<std::string> out;
    for (const ClaimDef& d : kClaims) out.emplace_back(d.id);
    return out;
}

ClaimResult run_claim(std::string_view id)
{
    for (const ClaimDef& d : kClaims) {
        if (id != d.id) continue;
        ClaimResult result{d.id, d.title, false, 0, d.budget, {}};
        Claim claim(result);
        auto start = std::chrono::steady_clock::now();
        try {
            d.body(claim);
        } catch (const std::exception& e) {
            claim.expect(false, std::string("exception: ") + e.what());
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.checks_passed = claim.all_ok();
        return result;
    }
    throw RulesError("unknown claim '" + std::string(id) + "'");
}

std::string summary_line(const ClaimResult& r)
{
    char timing[96];
    std::snprintf(timing, sizeof timing, " (%.2f s / budget %.0f s)", r.seconds, r.budget_seconds);
    std::string verdict = r.passed() ? "PASS" : "FAIL";
    std::string over = r.checks_passed && !r.passed() ? " [over budget]" : "";
    return verdict + " " + r.id + " " + r.title + timing + over;
}

} // namespace colgame
