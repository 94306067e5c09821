#pragma once

// Command-line front end: one subcommand per module capability, edge-list
// files in, text or JSON out. Exit codes: 0 success, 1 domain error, 2 usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdom/deficiency.hpp"
#include "pdom/domination.hpp"
#include "pdom/enumerate.hpp"
#include "pdom/family.hpp"
#include "pdom/graph.hpp"
#include "pdom/reinforcement.hpp"
#include "pdom/verifier.hpp"

namespace pdom::cli {

namespace detail {

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_edge_list(in);
}

inline void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

inline VertexSet parse_set(const std::string& csv, int universe) {
    VertexSet s(universe);
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        s.insert(std::stoi(item));
    }
    return s;
}

inline nlohmann::json set_to_json(const VertexSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : s.members()) a.push_back(v);
    return a;
}

}  // namespace detail

// Runs exactly one subcommand; everything the binary does goes through here
// so tests can drive it in-process.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"p-domination and p-reinforcement toolkit"};
    app.require_subcommand(1);

    std::string input, output, set_csv, method = "auto", kind, claim, format = "dot";
    int p = 2, n = 0, ops = 1, jobs = 1, max_n = 0, vertex = -1, budget = -1, t_param = -1;
    std::uint64_t seed = 0;
    bool json = false, count_only = false;

    auto* gamma = app.add_subcommand("gamma", "p-domination number of a graph");
    gamma->add_option("--p", p, "order p")->required();
    gamma->add_option("--input", input, "edge-list file")->required();
    gamma->add_flag("--json", json, "machine-readable output");

    auto* reinforce = app.add_subcommand("reinforce", "p-reinforcement number of a graph");
    reinforce->add_option("--p", p, "order p")->required();
    reinforce->add_option("--input", input, "edge-list file")->required();
    reinforce->add_option("--method", method, "eta, definition or auto")
        ->check(CLI::IsMember({"eta", "definition", "auto"}));
    reinforce->add_option("--budget", budget, "edge budget for the definition search");
    reinforce->add_flag("--json", json, "machine-readable output");

    auto* eta = app.add_subcommand("eta", "eta_p deficiency of a graph or of a given set");
    eta->add_option("--p", p, "order p")->required();
    eta->add_option("--input", input, "edge-list file")->required();
    eta->add_option("--set", set_csv, "evaluate eta_p(V, X, G) for this X (comma-separated)");
    eta->add_flag("--json", json, "machine-readable output");

    auto* mu = app.add_subcommand("mu", "mu_p over minimum sets, or at a given set and vertex");
    mu->add_option("--p", p, "order p")->required();
    mu->add_option("--input", input, "edge-list file")->required();
    mu->add_option("--set", set_csv, "evaluate against this set (comma-separated)");
    mu->add_option("--vertex", vertex, "evaluate mu_p at this vertex of --set");
    mu->add_flag("--json", json, "machine-readable output");

    auto* family = app.add_subcommand("family", "extremal tree family");
    family->require_subcommand(1);
    auto* fbuild = family->add_subcommand("build", "build a named block");
    fbuild->add_option("--p", p, "order p")->required();
    fbuild->add_option("--kind", kind, "star, spider, F, Ft or double_star")
        ->required()
        ->check(CLI::IsMember({"star", "spider", "F", "Ft", "double_star"}));
    fbuild->add_option("--t", t_param, "size parameter (spider legs, star leaves)");
    fbuild->add_option("--out", output, "write edge list here instead of stdout");
    fbuild->add_flag("--json", json, "machine-readable output");
    auto* fgen = family->add_subcommand("gen", "sample a random family member");
    fgen->add_option("--p", p, "order p")->required();
    fgen->add_option("--ops", ops, "number of growth operations")->required();
    fgen->add_option("--seed", seed, "random seed");
    fgen->add_option("--out", output, "write edge list here instead of stdout");
    fgen->add_flag("--json", json, "machine-readable output");
    auto* fcheck = family->add_subcommand("check", "decide family membership");
    fcheck->add_option("--p", p, "order p")->required();
    fcheck->add_option("--input", input, "edge-list file")->required();
    fcheck->add_flag("--json", json, "machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "non-isomorphic trees on n vertices");
    enumerate->add_option("--n", n, "vertex count")->required();
    enumerate->add_flag("--count-only", count_only, "print only the class count");
    enumerate->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run a claim suite over all small trees");
    verify->add_option("--claim", claim, "claim id (or figure-1)")->required();
    verify->add_option("--p", p, "order p");
    verify->add_option("--max-n", max_n, "largest tree size (0 = claim default)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", output, "write the JSON report here");

    auto* export_cmd = app.add_subcommand("export", "export a graph for visualization");
    export_cmd->add_option("--input", input, "edge-list file")->required();
    export_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}));
    export_cmd->add_option("--out", output, "write here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("pdom");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gamma->parsed()) {
            Graph g = detail::load_graph(input);
            auto cert = gamma_p(g, p);
            if (json) {
                nlohmann::json j{{"p", p},
                                 {"gamma_p", cert.value},
                                 {"witness", detail::set_to_json(cert.witness)},
                                 {"unique", cert.unique}};
                out << j.dump(2) << "\n";
            } else {
                out << "gamma_p = " << cert.value << "\n";
            }
        } else if (reinforce->parsed()) {
            Graph g = detail::load_graph(input);
            ReinforcementResult res;
            if (method == "definition") {
                res = r_p_by_definition(g, p, budget > 0 ? budget : p + 2);
            } else if (method == "eta") {
                if (gamma_p(g, p).value <= p)
                    res = r_p(g, p);  // convention applies regardless of the requested method
                else
                    res = r_p_by_eta(g, p);
            } else {
                res = r_p(g, p);
            }
            if (json) {
                nlohmann::json edges = nlohmann::json::array();
                for (const auto& [u, v] : res.witness_edges)
                    edges.push_back(nlohmann::json::array({u, v}));
                nlohmann::json j{{"p", p},
                                 {"method", to_string(res.method)},
                                 {"witness_edges", edges},
                                 {"witness_verified", res.witness_verified}};
                if (res.value)
                    j["r_p"] = *res.value;
                else
                    j["exceeded_budget"] = true;
                out << j.dump(2) << "\n";
            } else if (res.value) {
                out << "r_p = " << *res.value << "\n";
            } else {
                out << "r_p exceeds budget " << (budget > 0 ? budget : p + 2)
                    << " (search exhausted)\n";
            }
        } else if (eta->parsed()) {
            Graph g = detail::load_graph(input);
            if (!set_csv.empty()) {
                VertexSet x = detail::parse_set(set_csv, g.vertex_count());
                int value = eta_local(g, p, x, VertexSet::full(g.vertex_count()));
                if (json) {
                    out << nlohmann::json{{"p", p}, {"eta", value},
                                          {"X", detail::set_to_json(x)}}.dump(2)
                        << "\n";
                } else {
                    out << "eta_p(V, X, G) = " << value << "\n";
                }
            } else {
                auto w = eta_graph(g, p);
                if (json) {
                    out << nlohmann::json{{"p", p},
                                          {"eta", w.total},
                                          {"X", detail::set_to_json(w.x_set)}}.dump(2)
                        << "\n";
                } else {
                    out << "eta_p = " << w.total << "\n";
                }
            }
        } else if (mu->parsed()) {
            Graph g = detail::load_graph(input);
            if (vertex >= 0) {
                if (set_csv.empty()) throw std::runtime_error("--vertex requires --set");
                VertexSet d = detail::parse_set(set_csv, g.vertex_count());
                int value = mu_point(g, p, d, vertex);
                if (json) {
                    out << nlohmann::json{{"p", p}, {"x", vertex}, {"mu", value}}.dump(2) << "\n";
                } else {
                    out << "mu_p(x, X, G) = " << value << "\n";
                }
            } else {
                auto report = mu_graph(g, p);
                if (json) {
                    out << nlohmann::json{{"p", p},
                                          {"mu_p", report.graph_min},
                                          {"set", detail::set_to_json(report.best_set)},
                                          {"vertex", report.best_vertex}}.dump(2)
                        << "\n";
                } else {
                    out << "mu_p = " << report.graph_min << "\n";
                }
            }
        } else if (fbuild->parsed()) {
            BlockKind bk = kind == "star"          ? BlockKind::kStar
                           : kind == "spider"      ? BlockKind::kSpider
                           : kind == "F"           ? BlockKind::kF
                           : kind == "Ft"          ? BlockKind::kFt
                                                   : BlockKind::kDoubleStar;
            auto block = build_block(bk, p, t_param >= 0 ? std::optional<int>(t_param)
                                                         : std::nullopt);
            if (json) {
                nlohmann::json j{{"tree", to_edge_list_text(block.graph)},
                                 {"aset", detail::set_to_json(block.aset)}};
                detail::write_output(output, j.dump(2) + "\n", out);
            } else {
                detail::write_output(output, to_edge_list_text(block.graph), out);
            }
        } else if (fgen->parsed()) {
            auto [state, trace] = generate_member(p, ops, seed);
            if (json) {
                nlohmann::json j{{"tree", to_edge_list_text(state.tree)},
                                 {"aset", detail::set_to_json(state.aset)},
                                 {"trace", trace_to_json(trace)}};
                detail::write_output(output, j.dump(2) + "\n", out);
            } else {
                detail::write_output(output, to_edge_list_text(state.tree), out);
                out << trace_to_json(trace).dump() << "\n";
            }
        } else if (fcheck->parsed()) {
            Graph g = detail::load_graph(input);
            auto trace = recognize(g, p);
            if (json) {
                nlohmann::json j{{"member", trace.has_value()}};
                if (trace) j["trace"] = trace_to_json(*trace);
                out << j.dump(2) << "\n";
            } else if (trace) {
                out << "member\n" << trace_to_json(*trace).dump() << "\n";
            } else {
                out << "not a member\n";
            }
        } else if (enumerate->parsed()) {
            if (count_only) {
                long long count = 0;
                for_each_tree(n, [&](const Graph&) { ++count; });
                if (json)
                    out << nlohmann::json{{"n", n}, {"count", count}}.dump(2) << "\n";
                else
                    out << count << "\n";
            } else if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for_each_tree(n, [&](const Graph& t) { arr.push_back(to_edge_list_text(t)); });
                out << arr.dump(2) << "\n";
            } else {
                bool first = true;
                for_each_tree(n, [&](const Graph& t) {
                    if (!first) out << "\n";
                    out << to_edge_list_text(t);
                    first = false;
                });
            }
        } else if (verify->parsed()) {
            VerificationReport report;
            if (claim == "figure-1") {
                report = figure1_fixture_check();
            } else {
                report = run_theorem_suite(claim, p, max_n > 0 ? max_n : default_n_max(claim),
                                           jobs);
            }
            std::string payload = report_to_json(report).dump(2) + "\n";
            if (!output.empty()) detail::write_output(output, payload, out);
            out << "claim " << report.claim << ": " << (report.pass() ? "PASS" : "FAIL")
                << " (checked " << report.checked << ", violations " << report.violations.size()
                << ", " << report.elapsed_ms << " ms)\n";
            if (output.empty()) out << payload;
            if (!report.pass()) return 1;
        } else if (export_cmd->parsed()) {
            Graph g = detail::load_graph(input);
            detail::write_output(output, to_dot(g), out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pdom::cli
