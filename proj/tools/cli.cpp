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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colgame/claims.hpp"
#include "colgame/error.hpp"
#include "colgame/families.hpp"
#include "colgame/imagination.hpp"
#include "colgame/parameters.hpp"
#include "colgame/search.hpp"
#include "colgame/solver.hpp"

namespace colgame::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphOptions {
    std::string graph_file;
    std::string graph6_file;
    std::string family;
    std::string order;
};

struct GameOptions {
    std::string variant;
    int colours = -1;
    int bound = -1;
};

struct Loaded {
    Graph graph;
    VertexOrdering ordering;
    std::string label;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void add_graph_flags(CLI::App& cmd, GraphOptions& g)
{
    cmd.add_option("--graph", g.graph_file, "edge-list file");
    cmd.add_option("--graph6", g.graph6_file, "graph6 file (first graph)");
    cmd.add_option("--family", g.family, "NAME[:PARAMS], e.g. fig3, fig4, fig4-e, h_r:2, gap:4,5, complete:5");
    cmd.add_option("--order", g.order, "vertex order: comma-separated permutation or a file holding one");
}

void add_game_flags(CLI::App& cmd, GameOptions& o)
{
    cmd.add_option("--variant", o.variant, "vertex|cvertex|overtex|greedy|ogreedy|arboricity|marking|cmarking")
        ->required();
    cmd.add_option("--colours,--colors", o.colours, "palette size k (colouring variants)");
    cmd.add_option("--bound", o.bound, "back-degree bound s (marking variants)");
}

VertexOrdering parse_order(const std::string& text, int n)
{
    std::string body = std::filesystem::exists(text) ? slurp(text) : text;
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<Vertex> order;
    Vertex v = 0;
    while (in >> v) order.push_back(v);
    if (!in.eof()) throw UsageError("--order: expected a comma-separated list of vertices");
    if (static_cast<int>(order.size()) != n) throw UsageError("--order: expected " + std::to_string(n) + " vertices");
    return VertexOrdering(std::move(order));
}

Loaded load_graph(const GraphOptions& o)
{
    int sources = !o.graph_file.empty() + !o.graph6_file.empty() + !o.family.empty();
    if (sources != 1) throw UsageError("give exactly one of --graph, --graph6, --family");
    Loaded out;
    if (!o.graph_file.empty()) {
        out.graph = parse_edge_list(slurp(o.graph_file));
        out.label = o.graph_file;
    } else if (!o.graph6_file.empty()) {
        std::istringstream in(slurp(o.graph6_file));
        auto graphs = read_graph6_stream(in);
        if (graphs.empty()) throw UsageError("'" + o.graph6_file + "' holds no graph");
        out.graph = graphs.front();
        out.label = o.graph6_file;
    } else {
        OrderedGraph og = family_graph(o.family);
        out.graph = std::move(og.graph);
        out.ordering = std::move(og.ordering);
        out.label = o.family;
    }
    if (!o.order.empty()) {
        out.ordering = parse_order(o.order, out.graph.order());
    } else if (out.ordering.size() != out.graph.order()) {
        out.ordering = VertexOrdering::identity(out.graph.order());
    }
    return out;
}

Variant variant_from(const GameOptions& o)
{
    auto v = parse_variant(o.variant);
    if (!v) throw UsageError("unknown variant '" + o.variant + "'");
    return *v;
}

GameSpec game_spec(const GameOptions& o, const Loaded& g)
{
    Variant v = variant_from(o);
    const bool marking = family_of(v) == Family::Marking;
    if (marking && o.colours >= 0) throw UsageError("marking variants take --bound, not --colours");
    if (!marking && o.bound >= 0) throw UsageError("colouring variants take --colours, not --bound");
    int k = marking ? o.bound : o.colours;
    if (k < 0) throw UsageError(marking ? "--bound is required" : "--colours is required");
    return GameSpec::make(v, k, g.ordering);
}

std::optional<SolverOptions> budget_options(int budget_ms)
{
    if (budget_ms <= 0) return SolverOptions{};
    SolverOptions opts;
    opts.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    return opts;
}

json profile_json(const WinProfile& p)
{
    json outcomes = json::object();
    for (int k = p.k_lo; k <= p.k_hi; ++k) outcomes[std::to_string(k)] = to_string(p.at(k));
    return json{{"variant", variant_name(p.variant)}, {"k_min", p.k_lo}, {"k_max", p.k_hi}, {"outcomes", outcomes}};
}

std::string describe_position(const GameSpec& spec, const Graph& g, const Position& pos)
{
    std::string out;
    const bool edges = family_of(spec.variant) == Family::EdgeColouring;
    for (int i = 0; i < static_cast<int>(pos.elements().size()); ++i) {
        if (!out.empty()) out += ' ';
        out += edges ? to_string(g.edges()[i]) : std::to_string(i + 1);
        out += ':';
        int c = pos.colour_of(i);
        out += c == 0 ? "-" : family_of(spec.variant) == Family::Marking ? "*" : std::to_string(c);
    }
    return out;
}

// ---- commands --------------------------------------------------------------

int cmd_solve(const GraphOptions& go, const GameOptions& gm, bool pv, bool as_json, int budget_ms, std::ostream& out)
{
    Loaded g = load_graph(go);
    GameSpec spec = game_spec(gm, g);
    Solver solver(spec, g.graph, *budget_options(budget_ms));
    SolveResult r = solver.solve();
    std::vector<Move> line;
    if (pv) line = solver.principal_variation();

    if (as_json) {
        json j{{"command", "solve"},
               {"graph6", to_graph6(g.graph)},
               {"variant", variant_name(spec.variant)},
               {"k", spec.k},
               {"winner", to_string(r.winner)},
               {"nodes_searched", r.nodes_searched},
               {"table_entries", r.table_entries},
               {"elapsed_s", r.elapsed.count()}};
        if (pv) {
            json moves = json::array();
            for (const Move& m : line) moves.push_back(format_move(g.graph, m));
            j["pv"] = moves;
        }
        out << j.dump(2) << "\n";
    } else {
        out << to_string(r.winner) << "\n";
        out << "graph " << g.label << " (" << to_graph6(g.graph) << "), " << variant_name(spec.variant)
            << " k=" << spec.k << ", " << r.nodes_searched << " nodes, " << r.table_entries << " table entries, "
            << r.elapsed.count() << " s\n";
        if (pv) {
            out << "pv:";
            for (const Move& m : line) out << " " << format_move(g.graph, m);
            out << "\n";
        }
    }
    return r.winner == Status::MakerWin ? kOk : kNegative;
}

int cmd_profile(const GraphOptions& go, const std::string& variant_text, int k_min, int k_max, bool as_json,
                std::ostream& out)
{
    Loaded g = load_graph(go);
    Variant v = variant_from(GameOptions{variant_text, -1, -1});
    const bool marking = family_of(v) == Family::Marking;
    if (k_min < 0) k_min = marking ? 0 : 1;
    if (k_max < 0) {
        k_max = family_of(v) == Family::EdgeColouring ? std::max(1, g.graph.size())
                : marking                             ? g.graph.order()
                                                      : g.graph.max_degree() + 1;
    }
    if (k_max < k_min) throw UsageError("--k-max below --k-min");
    WinProfile p = win_profile(g.graph, v, k_min, k_max, g.ordering);
    auto bad = monotonicity_violations(p);
    if (as_json) {
        json j = profile_json(p);
        j["command"] = "profile";
        j["graph6"] = to_graph6(g.graph);
        j["least_maker_win"] = p.least_maker_win() ? json(*p.least_maker_win()) : json(nullptr);
        j["monotonicity_violations"] = bad;
        out << j.dump(2) << "\n";
    } else {
        for (int k = k_min; k <= k_max; ++k) out << (marking ? "s=" : "k=") << k << " " << to_string(p.at(k)) << "\n";
        out << "monotonicity violations:";
        for (int k : bad) out << " " << k;
        out << (bad.empty() ? " none\n" : "\n");
    }
    return kOk;
}

int cmd_report(const GraphOptions& go, int k_max, bool as_json, std::ostream& out)
{
    Loaded g = load_graph(go);
    ParameterReport rep = parameter_report(g.graph, k_max > 0 ? std::optional<int>(k_max) : std::nullopt);
    if (as_json) {
        json params = json::array();
        for (const Parameter& p : rep.parameters) {
            params.push_back(json{{"name", p.name},
                                  {"applicable", p.applicable},
                                  {"value", p.value ? json(*p.value) : json(nullptr)},
                                  {"undetermined", p.undetermined},
                                  {"profile", profile_json(p.profile)}});
        }
        out << json{{"command", "report"}, {"graph6", to_graph6(g.graph)}, {"k_max", rep.k_max}, {"parameters", params}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "graph " << g.label << " (" << to_graph6(g.graph) << "), k_max=" << rep.k_max << "\n";
    for (const Parameter& p : rep.parameters) {
        out << p.name << " = ";
        if (!p.applicable) {
            out << "n/a (graph is disconnected)\n";
            continue;
        }
        out << (p.value ? std::to_string(*p.value) : "undetermined above k_max") << "    " << format_profile(p.profile)
            << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& only, bool verbose, std::ostream& out)
{
    std::vector<std::string> ids = claim_ids();
    if (!only.empty()) {
        std::vector<std::string> chosen;
        std::istringstream in(only);
        std::string id;
        while (std::getline(in, id, ',')) {
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UsageError("unknown claim '" + id + "'");
            chosen.push_back(id);
        }
        ids = chosen;
    }
    bool all = true;
    for (const std::string& id : ids) {
        ClaimResult r = run_claim(id);
        all = all && r.passed();
        out << summary_line(r) << "\n" << std::flush;
        for (const std::string& d : r.details) {
            if (verbose || d.rfind("ok", 0) != 0) out << "    " << d << "\n";
        }
    }
    return all ? kOk : kNegative;
}

int cmd_search(const GraphOptions& go, int n, bool connected, const std::string& predicate_text, int jobs,
               int budget_ms, bool as_json, std::ostream& out)
{
    Predicate predicate = Predicate::parse(predicate_text);
    std::vector<Graph> source;
    if (n >= 0) {
        if (!go.graph_file.empty() || !go.graph6_file.empty() || !go.family.empty()) {
            throw UsageError("--n cannot be combined with another graph source");
        }
        source = enumerate_graphs(n, connected);
    } else if (!go.graph6_file.empty()) {
        std::istringstream in(slurp(go.graph6_file));
        source = read_graph6_stream(in);
        if (connected) std::erase_if(source, [](const Graph& g) { return !is_connected(g); });
    } else {
        source.push_back(load_graph(go).graph);
    }

    ScanOptions options;
    options.jobs = jobs;
    if (budget_ms > 0) options.budget = std::chrono::milliseconds(budget_ms);
    ScanReport rep = scan(source, predicate, options);

    if (as_json) {
        json hits = json::array();
        for (const Hit& h : rep.hits) {
            json witness = json::array();
            for (const auto& [field, value] : h.witness) witness.push_back(json{{field, value}});
            json profiles = json::array();
            for (const WinProfile& p : h.profiles) profiles.push_back(profile_json(p));
            hits.push_back(json{{"graph6", h.graph6}, {"predicate", h.predicate}, {"witness", witness},
                                {"profiles", profiles}});
        }
        json skipped = json::array();
        for (const Skipped& s : rep.skipped) skipped.push_back(json{{"graph6", s.graph6}, {"reason", s.reason}});
        out << json{{"command", "search"},
                    {"predicate", predicate.name()},
                    {"evaluated", rep.evaluated},
                    {"hits", hits},
                    {"skipped", skipped}}
                   .dump(2)
            << "\n";
    } else {
        for (const Hit& h : rep.hits) out << format_hit(h) << "\n";
        for (const Skipped& s : rep.skipped) out << s.graph6 << "\tskipped\t" << s.reason << "\n";
        out << "# evaluated " << rep.evaluated << ", hits " << rep.hits.size() << ", skipped " << rep.skipped.size()
            << "\n";
    }
    return rep.hits.empty() ? kNegative : kOk;
}

int cmd_transform(const GraphOptions& go, int k, bool trace, std::ostream& out)
{
    if (k < 1) throw UsageError("--colours must be at least 1");
    Loaded g = load_graph(go);
    GameSpec upper = GameSpec::make(Variant::Arboricity, k + 1);
    GameSpec real = GameSpec::make(Variant::Arboricity, k);
    if (solve(upper, g.graph).winner != Status::BreakerWin) {
        out << "Breaker does not win the arboricity game with " << k + 1 << " colours; nothing to transform\n";
        return kNegative;
    }
    auto agent = transform_breaker(solver_strategy(upper, g.graph, Player::Breaker), g.graph, k);

    if (trace) {
        // one sample game: Maker follows the solver for k colours
        auto game = agent->clone();
        auto* imag = dynamic_cast<ImaginationAgent*>(game.get());
        imag->set_trace([&out](const std::string& line) { out << line << "\n"; });
        auto maker = solver_strategy(real, g.graph, Player::Maker, false);
        Position pos = initial_position(real, g.graph);
        while (status(real, g.graph, pos) == Status::Ongoing) {
            Move m = pos.to_move() == Player::Maker ? maker->propose() : game->propose();
            if (pos.to_move() == Player::Maker) {
                game->observe(m);
            } else {
                maker->observe(m);
            }
            pos = apply(real, g.graph, pos, m);
        }
        out << "sample game: " << to_string(status(real, g.graph, pos)) << "\n";
    }

    VerifyResult r = verify_agent_wins(real, g.graph, *agent);
    const ImaginationStats& st = agent->stats();
    out << "transformed Breaker agent (k=" << k << " from k+1=" << k + 1 << "): "
        << (r.breaker_wins ? "wins against every Maker line" : "LOSES") << "\n";
    out << "states " << r.states << ", leaves " << r.leaves << ", containment checks " << st.containment_checks
        << ", recoloured proposals " << st.recoloured << ", concedes 0\n";
    if (!r.breaker_wins) {
        out << "counterexample:";
        for (const Move& m : r.counterexample) out << " " << format_move(g.graph, m);
        out << "\n";
    }
    return r.breaker_wins ? kOk : kNegative;
}

int cmd_play(const GraphOptions& go, const GameOptions& gm, const std::string& human_text, std::istream& in,
             std::ostream& out)
{
    if (human_text != "maker" && human_text != "breaker") throw UsageError("--human must be maker or breaker");
    Loaded g = load_graph(go);
    GameSpec spec = game_spec(gm, g);
    const Player human = human_text == "maker" ? Player::Maker : Player::Breaker;
    Solver solver(spec, g.graph);
    Position pos = solver.root();

    out << "playing " << variant_name(spec.variant) << " k=" << spec.k << " on " << g.label << "; you are "
        << to_string(human) << "\n";
    while (status(spec, g.graph, pos) == Status::Ongoing) {
        out << "position: " << describe_position(spec, g.graph, pos) << "\n";
        if (pos.to_move() == human) {
            out << "your move> " << std::flush;
            std::string line;
            if (!std::getline(in, line)) {
                out << "\nsession aborted\n";
                return kNegative;
            }
            auto m = parse_move(spec, g.graph, line);
            if (!m) {
                out << "could not read a move from '" << line << "'\n";
                continue;
            }
            try {
                pos = apply(spec, g.graph, pos, *m);
            } catch (const RulesError& e) {
                out << e.what() << "\n";
            }
        } else {
            Move m = solver.best_move(pos);
            out << "solver plays " << format_move(g.graph, m) << "\n";
            pos = apply(spec, g.graph, pos, m);
        }
    }
    out << "position: " << describe_position(spec, g.graph, pos) << "\n";
    out << "result: " << to_string(status(spec, g.graph, pos)) << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solver for Maker-Breaker graph colouring games", "colgame"};
    app.require_subcommand(1);

    GraphOptions go;
    GameOptions gm;
    bool pv = false, as_json = false, trace = false, verbose = false, connected = false;
    int budget_ms = 0, k_min = -1, k_max = -1, n = -1, jobs = 1;
    std::string only, predicate, human = "maker";

    auto* solve_cmd = app.add_subcommand("solve", "decide the winner of one game");
    add_graph_flags(*solve_cmd, go);
    add_game_flags(*solve_cmd, gm);
    solve_cmd->add_flag("--pv", pv, "print the principal variation");
    solve_cmd->add_flag("--json", as_json, "JSON output");
    solve_cmd->add_option("--budget-ms", budget_ms, "abort (exit 3) after this many milliseconds");

    auto* profile_cmd = app.add_subcommand("profile", "winner for every k in a range");
    add_graph_flags(*profile_cmd, go);
    profile_cmd->add_option("--variant", gm.variant, "game variant")->required();
    profile_cmd->add_option("--k-min", k_min, "first k (or s)");
    profile_cmd->add_option("--k-max", k_max, "last k (or s)");
    profile_cmd->add_flag("--json", as_json, "JSON output");

    auto* report_cmd = app.add_subcommand("report", "all game parameters with their profiles");
    add_graph_flags(*report_cmd, go);
    report_cmd->add_option("--k-max", k_max, "largest palette considered");
    report_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the T1..T10 claim suite");
    verify_cmd->add_option("--only", only, "comma-separated claim ids");
    verify_cmd->add_flag("--verbose", verbose, "print every individual check");

    auto* search_cmd = app.add_subcommand("search", "scan graphs for a predicate");
    add_graph_flags(*search_cmd, go);
    search_cmd->add_option("--n", n, "enumerate all graphs on n <= 8 vertices");
    search_cmd->add_flag("--connected", connected, "connected graphs only");
    search_cmd->add_option("--predicate", predicate,
                           "chig-lt-chicg[:K] | colcg-edge[:K] | nonmono:VARIANT[:LO,HI] | param:NAME=VALUE")
        ->required();
    search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--budget-ms", budget_ms, "per-graph budget; slower graphs are reported as skipped");
    search_cmd->add_flag("--json", as_json, "JSON report");

    auto* transform_cmd = app.add_subcommand("transform", "imagination transform for the arboricity game");
    add_graph_flags(*transform_cmd, go);
    transform_cmd->add_option("--colours,--colors", gm.colours, "target palette k (agent built for k+1)")->required();
    transform_cmd->add_flag("--trace", trace, "print a traced sample game");

    auto* play_cmd = app.add_subcommand("play", "play against the solver in the terminal");
    add_graph_flags(*play_cmd, go);
    add_game_flags(*play_cmd, gm);
    play_cmd->add_option("--human", human, "maker or breaker");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "colgame: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(go, gm, pv, as_json, budget_ms, out);
        if (profile_cmd->parsed()) return cmd_profile(go, gm.variant, k_min, k_max, as_json, out);
        if (report_cmd->parsed()) return cmd_report(go, k_max, as_json, out);
        if (verify_cmd->parsed()) return cmd_verify(only, verbose, out);
        if (search_cmd->parsed()) return cmd_search(go, n, connected, predicate, jobs, budget_ms, as_json, out);
        if (transform_cmd->parsed()) return cmd_transform(go, gm.colours, trace, out);
        if (play_cmd->parsed()) return cmd_play(go, gm, human, in, out);
    } catch (const UsageError& e) {
        err << "colgame: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "colgame: " << e.what() << "\n";
        return kUsage;
    } catch (const RulesError& e) {
        err << "colgame: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        err << "colgame: " << e.what() << "\n";
        return kResource;
    } catch (const ResourceError& e) {
        err << "colgame: " << e.what() << "\n";
        return kResource;
    }
    return kUsage;
}

} // namespace colgame::cli
