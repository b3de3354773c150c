// Command-line surface for constructing, evolving, verifying, solving, and
// analyzing dynamic coprime labelings.
//
// Exit codes: 0 ok, 2 bad parameters, 3 infeasible, 4 representation
// overflow, 5 verification violation, 6 non-unit label, 7 incomplete
// factorization, 8 resource budget exhausted (sieve/solver/closure).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dcl/config.hpp"
#include "dcl/error.hpp"
#include "dcl/evolution.hpp"
#include "dcl/json_io.hpp"
#include "dcl/kernels.hpp"
#include "dcl/labeling.hpp"
#include "dcl/solver.hpp"

namespace {

using dcl::io::json;

constexpr int kExitOk = 0;
constexpr int kExitParams = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOverflow = 4;
constexpr int kExitViolation = 5;
constexpr int kExitNonUnit = 6;
constexpr int kExitFactorization = 7;
constexpr int kExitBudget = 8;

int exit_code_for(dcl::errc code) {
    switch (code) {
    case dcl::errc::invalid_parameter:
    case dcl::errc::not_bipartite: return kExitParams;
    case dcl::errc::overflow_policy: return kExitOverflow;
    case dcl::errc::non_unit: return kExitNonUnit;
    case dcl::errc::factorization_incomplete: return kExitFactorization;
    case dcl::errc::resource_budget: return kExitBudget;
    }
    return kExitParams;
}

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    if (!in) dcl::fail(dcl::errc::invalid_parameter, "cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_arg(const std::string &arg, const std::string &what) {
    std::string text = !arg.empty() && arg.front() == '{' ? arg : read_text(arg);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        dcl::fail(dcl::errc::invalid_parameter, what + " is not valid JSON: " + arg);
    return j;
}

// Transform argument: inline JSON, a file path, or the shorthand forms
// power:K, prime_index, modular_power:K:M, affine:P, additive_shift:C.
dcl::TransformSpec parse_transform_arg(const std::string &arg) {
    if (!arg.empty() && arg.front() != '{') {
        std::vector<std::string> parts;
        std::stringstream ss(arg);
        std::string piece;
        while (std::getline(ss, piece, ':')) parts.push_back(piece);
        auto as_int = [&](const std::string &s) {
            auto v = dcl::parse_int(s);
            if (!v) dcl::fail(dcl::errc::invalid_parameter, "bad transform parameter: " + s);
            return *v;
        };
        if (parts.size() == 1 && parts[0] == "prime_index") return dcl::TransformSpec::prime_index();
        if (parts.size() == 2 && parts[0] == "power")
            return dcl::TransformSpec::power(std::uint32_t(dcl::to_u64(as_int(parts[1]))));
        if (parts.size() == 3 && parts[0] == "modular_power")
            return dcl::TransformSpec::modular_power(
                std::uint32_t(dcl::to_u64(as_int(parts[1]))), as_int(parts[2]));
        if (parts.size() == 2 && parts[0] == "affine")
            return dcl::TransformSpec::affine(as_int(parts[1]));
        if (parts.size() == 2 && parts[0] == "additive_shift")
            return dcl::TransformSpec::additive_shift(as_int(parts[1]));
        if (parts.size() == 1 && !arg.empty() && arg.find('.') == std::string::npos &&
            arg.find('/') == std::string::npos)
            dcl::fail(dcl::errc::invalid_parameter, "unrecognized transform shorthand: " + arg);
    }
    return dcl::io::transform_from_json(parse_json_arg(arg, "transform"));
}

dcl::Int parse_big(const std::string &s, const std::string &what) {
    auto v = dcl::parse_int(s);
    if (!v) dcl::fail(dcl::errc::invalid_parameter, what + " must be a decimal integer");
    return *v;
}

struct CommonInputs {
    std::string family;
    std::uint32_t n = 0;
    std::string graph_arg;
    std::string f0_arg;

    bool has_family() const { return !family.empty(); }

    dcl::Graph load_graph() const {
        if (has_family()) {
            auto fam = dcl::family_from_name(family);
            if (!fam) dcl::fail(dcl::errc::invalid_parameter, "unknown family: " + family);
            return dcl::build_family(*fam, n);
        }
        if (graph_arg.empty())
            dcl::fail(dcl::errc::invalid_parameter, "provide --graph or --family/--n");
        return dcl::io::graph_from_json(parse_json_arg(graph_arg, "graph"));
    }

    dcl::Labeling load_f0(const dcl::Graph &g, const dcl::Config &cfg) const {
        if (f0_arg.empty() || f0_arg == "canonical") {
            if (!has_family())
                dcl::fail(dcl::errc::invalid_parameter,
                          "canonical labeling needs --family/--n; otherwise pass --f0");
            auto fam = dcl::family_from_name(family);
            return dcl::canonical_initial_labeling(*fam, n, cfg);
        }
        dcl::Labeling f = dcl::io::labeling_from_json(parse_json_arg(f0_arg, "labeling"));
        if (f.size() != g.vertex_count())
            dcl::fail(dcl::errc::invalid_parameter, "labeling does not cover the graph");
        return f;
    }
};

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) dcl::fail(dcl::errc::invalid_parameter, "cannot write file: " + out_path);
    out << text;
}

dcl::Config load_config() {
    dcl::Config cfg;
    const char *path = std::getenv("DCL_CONFIG");
    if (!path || !*path) return cfg;
    std::string text = read_text(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return cfg; // empty file
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        dcl::fail(dcl::errc::invalid_parameter,
                  std::string("config file is not valid JSON: ") + path);
    if (j.contains("sieve_index_budget")) cfg.sieve_index_budget = j["sieve_index_budget"];
    if (j.contains("exact_label_bits")) cfg.exact_label_bits = j["exact_label_bits"];
    if (j.contains("rho_iteration_budget")) cfg.rho_iteration_budget = j["rho_iteration_budget"];
    if (j.contains("closure_budget")) cfg.closure_budget = j["closure_budget"];
    if (j.contains("default_horizon")) cfg.default_horizon = j["default_horizon"];
    return cfg;
}

std::uint32_t config_default_horizon(const dcl::Config &cfg) { return cfg.default_horizon; }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"dynamic coprime labelings: construction, evolution, verification, analysis"};
    app.require_subcommand(1);

    dcl::Config cfg;
    try {
        cfg = load_config();
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParams;
    }
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized demos (0 = deterministic)");

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // construct ----------------------------------------------------------
    auto *construct = app.add_subcommand("construct", "build a family graph with a labeling");
    CommonInputs cin_construct;
    std::string labeling_mode = "canonical";
    std::uint64_t budget = 0;
    bool solve_flag = false;
    std::string format = "json";
    construct->add_option("--family", cin_construct.family, "path|cycle|wheel|hypercube|complete")
        ->required();
    construct->add_option("--n", cin_construct.n, "family size parameter")->required();
    construct->add_option("--labeling", labeling_mode, "canonical|solve");
    construct->add_flag("--solve", solve_flag, "shorthand for --labeling solve");
    construct->add_option("--budget", budget, "max label value k for --labeling solve");
    construct->add_option("--format", format, "json|dot");

    // evolve -------------------------------------------------------------
    auto *evolve = app.add_subcommand("evolve", "labels at time t under a transform");
    CommonInputs cin_evolve;
    std::string transform_arg;
    std::uint64_t time_t_arg = 0;
    std::string representation = "exact";
    std::string modulus_arg;
    std::string evolve_format = "json";
    evolve->add_option("--family", cin_evolve.family, "family name (with --n)");
    evolve->add_option("--n", cin_evolve.n, "family size parameter");
    evolve->add_option("--graph", cin_evolve.graph_arg, "graph JSON (inline or file)");
    evolve->add_option("--f0", cin_evolve.f0_arg, "initial labeling JSON or 'canonical'");
    evolve->add_option("--transform", transform_arg, "transform JSON/file/shorthand")->required();
    evolve->add_option("--t", time_t_arg, "time step")->required();
    evolve->add_option("--representation", representation, "exact|power|modular");
    evolve->add_option("--modulus", modulus_arg, "modulus for the modular representation");
    evolve->add_option("--format", evolve_format, "json|dot");

    // verify ---------------------------------------------------------------
    auto *verify = app.add_subcommand("verify", "check the DCL property over a horizon");
    CommonInputs cin_verify;
    std::string verify_transform;
    std::uint64_t horizon = config_default_horizon(cfg);
    bool horizon_set = false;
    bool allow_collisions = false;
    verify->add_option("--family", cin_verify.family, "family name (with --n)");
    verify->add_option("--n", cin_verify.n, "family size parameter");
    verify->add_option("--graph", cin_verify.graph_arg, "graph JSON (inline or file)");
    verify->add_option("--f0", cin_verify.f0_arg, "initial labeling JSON or 'canonical'");
    verify->add_option("--transform", verify_transform, "transform JSON/file/shorthand")
        ->required();
    verify->add_option("--horizon", horizon, "verification horizon T")
        ->each([&](const std::string &) { horizon_set = true; });
    verify->add_flag("--allow-modular-collisions", allow_collisions,
                     "downgrade modular label collisions to warnings");

    // solve ----------------------------------------------------------------
    auto *solve = app.add_subcommand("solve", "search for a coprime labeling");
    CommonInputs cin_solve;
    std::uint64_t solve_budget = 0;
    std::uint64_t max_nodes = 50'000'000;
    std::uint64_t time_limit_ms = 0;
    solve->add_option("--family", cin_solve.family, "family name (with --n)");
    solve->add_option("--n", cin_solve.n, "family size parameter");
    solve->add_option("--graph", cin_solve.graph_arg, "graph JSON (inline or file)");
    solve->add_option("--budget", solve_budget, "max label value k (default |V|)");
    solve->add_option("--max-nodes", max_nodes, "search node budget");
    solve->add_option("--time-limit-ms", time_limit_ms, "wall-clock budget (0 = none)");

    // period ---------------------------------------------------------------
    auto *period = app.add_subcommand("period", "vertex orders and graph period mod n");
    CommonInputs cin_period;
    std::string period_modulus;
    bool find_generating = false;
    period->add_option("--family", cin_period.family, "family name (with --n)");
    period->add_option("--n", cin_period.n, "family size parameter");
    period->add_option("--graph", cin_period.graph_arg, "graph JSON (inline or file)");
    period->add_option("--f0", cin_period.f0_arg, "labeling JSON or 'canonical'");
    period->add_option("--modulus", period_modulus, "modulus n")->required();
    period->add_flag("--find-generating", find_generating,
                     "search for a unit labeling that generates (Z/nZ)^x");

    // carmichael -------------------------------------------------------------
    auto *carmichael = app.add_subcommand("carmichael", "Korselt certificates");
    std::string carmichael_n;
    std::uint64_t scan_upto = 0;
    carmichael->add_option("n", carmichael_n, "single n to certify (positional)");
    carmichael->add_option("--number", carmichael_n, "single n to certify");
    carmichael->add_option("--scan-upto", scan_upto, "emit all Carmichael numbers <= N");

    // maps ---------------------------------------------------------------
    auto *maps = app.add_subcommand("maps", "list transform kinds and preservation status");
    std::string check_transform;
    std::uint64_t check_bound = 0;
    maps->add_option("--check", check_transform, "sample a transform on a finite box");
    maps->add_option("--bound", check_bound, "box bound for --check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            auto fam = dcl::family_from_name(cin_construct.family);
            if (!fam) dcl::fail(dcl::errc::invalid_parameter, "unknown family: " + cin_construct.family);
            dcl::Graph g = cin_construct.load_graph();
            if (solve_flag) labeling_mode = "solve";
            json out{{"family", cin_construct.family}, {"n", cin_construct.n}};
            out["graph"] = dcl::io::to_json(g);
            dcl::Labeling labeling;
            if (labeling_mode == "canonical") {
                labeling = dcl::canonical_initial_labeling(*fam, cin_construct.n, cfg);
                if (auto note = dcl::family_scope_note(*fam, cin_construct.n)) out["note"] = *note;
            } else if (labeling_mode == "solve") {
                dcl::SolveLimits limits;
                limits.max_nodes = max_nodes;
                std::uint64_t k = budget ? budget : g.vertex_count();
                dcl::SolveResult res = dcl::solve_coprime_labeling(g, k, limits);
                out["solver"] = dcl::io::to_json(res);
                if (res.status != dcl::SolveStatus::feasible) {
                    emit(dcl::io::dumps(out), out_path);
                    return res.status == dcl::SolveStatus::infeasible ? kExitInfeasible
                                                                      : kExitBudget;
                }
                labeling = *res.labeling;
            } else {
                dcl::fail(dcl::errc::invalid_parameter, "--labeling must be canonical|solve");
            }
            out["labeling"] = dcl::io::to_json(labeling);
            if (format == "dot")
                emit(dcl::io::labeling_to_dot(g, labeling), out_path);
            else
                emit(dcl::io::dumps(out), out_path);
            return kExitOk;
        }

        if (*evolve) {
            dcl::Graph g = cin_evolve.load_graph();
            dcl::Labeling f0 = cin_evolve.load_f0(g, cfg);
            dcl::TransformSpec spec = parse_transform_arg(transform_arg);
            dcl::Representation rep;
            dcl::Int modulus = 0;
            if (representation == "exact") {
                rep = dcl::Representation::exact;
            } else if (representation == "power") {
                rep = dcl::Representation::power_form;
            } else if (representation == "modular") {
                rep = dcl::Representation::modular;
                if (modulus_arg.empty() && spec.kind() == dcl::MapKind::modular_power)
                    modulus = spec.modulus();
                else
                    modulus = parse_big(modulus_arg, "--modulus");
            } else {
                dcl::fail(dcl::errc::invalid_parameter,
                          "--representation must be exact|power|modular");
            }
            dcl::Frame frame = dcl::evolve(g, f0, spec, time_t_arg, rep, modulus, cfg);
            if (evolve_format == "dot")
                emit(dcl::io::frame_to_dot(g, frame), out_path);
            else
                emit(dcl::io::dumps(dcl::io::to_json(frame)), out_path);
            return kExitOk;
        }

        if (*verify) {
            dcl::Graph g = cin_verify.load_graph();
            dcl::Labeling f0 = cin_verify.load_f0(g, cfg);
            dcl::TransformSpec spec = parse_transform_arg(verify_transform);
            dcl::RunOptions opts;
            opts.allow_modular_collisions = allow_collisions;
            std::uint64_t T = horizon_set ? horizon : cfg.default_horizon;
            dcl::DclRun run = dcl::verify_run(g, f0, spec, T, opts, cfg);
            json report = dcl::io::run_report_json(g, f0, spec, run);
            if (spec.kind() == dcl::MapKind::modular_power) {
                try {
                    report["period_report"] =
                        dcl::io::to_json(dcl::graph_period(f0, spec.modulus(), cfg));
                } catch (const dcl::error &) {
                    // non-unit labels: the run report stands on its own
                }
            }
            emit(dcl::io::dumps(report), out_path);
            return run.status == dcl::RunStatus::verified ? kExitOk : kExitViolation;
        }

        if (*solve) {
            dcl::Graph g = cin_solve.load_graph();
            dcl::SolveLimits limits;
            limits.max_nodes = max_nodes;
            if (time_limit_ms > 0)
                limits.time_limit = std::chrono::milliseconds(time_limit_ms);
            std::uint64_t k = solve_budget ? solve_budget : g.vertex_count();
            dcl::SolveResult res = dcl::solve_coprime_labeling(g, k, limits);
            json out = dcl::io::to_json(res);
            out["graph"] = dcl::io::to_json(g);
            emit(dcl::io::dumps(out), out_path);
            if (res.status == dcl::SolveStatus::feasible) return kExitOk;
            return res.status == dcl::SolveStatus::infeasible ? kExitInfeasible : kExitBudget;
        }

        if (*period) {
            dcl::Graph g = cin_period.load_graph();
            dcl::Int n = parse_big(period_modulus, "--modulus");
            dcl::Labeling f0;
            json out;
            if (find_generating) {
                auto found = dcl::find_generating_labeling(g, n, seed, cfg);
                if (!found)
                    dcl::fail(dcl::errc::resource_budget,
                              "no generating unit labeling found within the search budget");
                f0 = *found;
                out["f0"] = dcl::io::to_json(f0);
            } else {
                f0 = cin_period.load_f0(g, cfg);
            }
            out["period_report"] = dcl::io::to_json(dcl::graph_period(f0, n, cfg));
            emit(dcl::io::dumps(out), out_path);
            return kExitOk;
        }

        if (*carmichael) {
            if (scan_upto > 0) {
                if (scan_upto > 100'000'000)
                    dcl::fail(dcl::errc::resource_budget, "--scan-upto capped at 1e8");
                auto numbers = dcl::kernels::carmichael_scan(scan_upto);
                json arr = json::array();
                for (auto n : numbers) arr.push_back(n);
                emit(dcl::io::dumps(json{{"scan_upto", scan_upto}, {"carmichael_numbers", arr}}),
                     out_path);
                return kExitOk;
            }
            if (carmichael_n.empty())
                dcl::fail(dcl::errc::invalid_parameter, "pass --number N or --scan-upto N");
            dcl::Int n = parse_big(carmichael_n, "--number");
            dcl::KorseltCertificate cert = dcl::korselt_check(n, cfg);
            json out = dcl::io::to_json(cert);
            out["lambda"] = dcl::to_string(dcl::carmichael_lambda(n, cfg));
            emit(dcl::io::dumps(out), out_path);
            return kExitOk;
        }

        if (*maps) {
            if (!check_transform.empty()) {
                dcl::TransformSpec spec = parse_transform_arg(check_transform);
                if (check_bound < 2)
                    dcl::fail(dcl::errc::invalid_parameter, "--check needs --bound >= 2");
                auto verdict = dcl::sample_coprime_preservation(spec, check_bound, cfg);
                json out = dcl::io::to_json(verdict);
                out["transform"] = dcl::io::to_json(spec);
                out["bound"] = check_bound;
                emit(dcl::io::dumps(out), out_path);
                return kExitOk;
            }
            json arr = json::array();
            auto entry = [](const dcl::TransformSpec &spec, const std::string &domain) {
                return json{{"kind", dcl::map_kind_name(spec.kind())},
                            {"example", dcl::io::to_json(spec)},
                            {"coprime_preserving", domain}};
            };
            arr.push_back(entry(dcl::TransformSpec::power(2), "always"));
            arr.push_back(entry(dcl::TransformSpec::prime_index(), "always"));
            arr.push_back(entry(dcl::TransformSpec::modular_power(2, 561), "units-only"));
            arr.push_back(entry(dcl::TransformSpec::affine(2), "conditional (edge hypothesis)"));
            arr.push_back(entry(dcl::TransformSpec::additive_shift(1), "no"));
            emit(dcl::io::dumps(json{{"maps", arr}}), out_path);
            return kExitOk;
        }
    } catch (const dcl::error &err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err.code());
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParams;
    }
    return kExitParams;
}
