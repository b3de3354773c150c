#include "dcl/json_io.hpp"

#include <limits>

#include "dcl/error.hpp"

namespace dcl::io {

namespace {

json int_to_json(const Int &x) {
    if (fits_u64(x) && to_u64(x) <= std::uint64_t(std::numeric_limits<std::int64_t>::max()) &&
        to_u64(x) <= (std::uint64_t(1) << 53))
        return json(to_u64(x));
    return json(to_string(x));
}

Int int_from_json(const json &j, const std::string &what) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) fail(errc::invalid_parameter, what + " must be non-negative");
        return from_u64(std::uint64_t(v));
    }
    if (j.is_string()) {
        auto parsed = parse_int(j.get<std::string>());
        if (!parsed) fail(errc::invalid_parameter, what + " is not a decimal integer");
        return *parsed;
    }
    fail(errc::invalid_parameter, what + " must be an integer or decimal string");
}

json labels_to_json(const std::vector<Int> &values) {
    json labels = json::object();
    for (std::size_t v = 0; v < values.size(); ++v)
        labels[std::to_string(v)] = to_string(values[v]);
    return labels;
}

} // namespace

json to_json(const Graph &g) {
    json edges = json::array();
    for (const Edge &e : g.edges()) edges.push_back(json::array({e.a, e.b}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(errc::invalid_parameter, "graph JSON requires {\"n\", \"edges\"}");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            fail(errc::invalid_parameter, "graph edge must be a pair [a,b]");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph::from_edge_list(j.at("n").get<VertexId>(), edges);
}

json to_json(const Labeling &f) { return json{{"labels", labels_to_json(f.values)}}; }

Labeling labeling_from_json(const json &j) {
    if (!j.is_object() || !j.contains("labels") || !j.at("labels").is_object())
        fail(errc::invalid_parameter, "labeling JSON requires {\"labels\": {...}}");
    const json &labels = j.at("labels");
    Labeling f;
    f.values.assign(labels.size(), Int(0));
    for (const auto &[key, value] : labels.items()) {
        std::size_t v = 0;
        try {
            v = std::stoul(key);
        } catch (...) {
            fail(errc::invalid_parameter, "label key '" + key + "' is not a vertex id");
        }
        if (v >= f.values.size())
            fail(errc::invalid_parameter, "label keys must be dense in [0, |V|)");
        f.values[v] = int_from_json(value, "label of vertex " + key);
        if (f.values[v] < 1)
            fail(errc::invalid_parameter, "label of vertex " + key + " must be >= 1");
    }
    return f;
}

json to_json(const TransformSpec &spec) {
    json j{{"kind", map_kind_name(spec.kind())}};
    switch (spec.kind()) {
    case MapKind::power: j["k"] = spec.exponent(); break;
    case MapKind::prime_index: break;
    case MapKind::modular_power:
        j["k"] = spec.exponent();
        j["m"] = int_to_json(spec.modulus());
        break;
    case MapKind::affine: j["p"] = int_to_json(spec.prime()); break;
    case MapKind::additive_shift: j["c"] = int_to_json(spec.shift()); break;
    }
    return j;
}

TransformSpec transform_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind"))
        fail(errc::invalid_parameter, "transform JSON requires a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    auto exponent = [&]() -> std::uint32_t {
        if (!j.contains("k")) fail(errc::invalid_parameter, kind + " requires \"k\"");
        return j.at("k").get<std::uint32_t>();
    };
    if (kind == "power") return TransformSpec::power(exponent());
    if (kind == "prime_index") return TransformSpec::prime_index();
    if (kind == "modular_power") {
        if (!j.contains("m")) fail(errc::invalid_parameter, "modular_power requires \"m\"");
        return TransformSpec::modular_power(exponent(), int_from_json(j.at("m"), "modulus m"));
    }
    if (kind == "affine") {
        if (!j.contains("p")) fail(errc::invalid_parameter, "affine requires \"p\"");
        return TransformSpec::affine(int_from_json(j.at("p"), "prime p"));
    }
    if (kind == "additive_shift") {
        if (!j.contains("c")) fail(errc::invalid_parameter, "additive_shift requires \"c\"");
        return TransformSpec::additive_shift(int_from_json(j.at("c"), "shift c"));
    }
    fail(errc::invalid_parameter, "unknown transform kind '" + kind + "'");
}

json to_json(const Frame &frame) {
    json j{{"t", frame.t}};
    switch (frame.rep) {
    case Representation::exact:
        j["representation"] = "exact";
        j["labels"] = labels_to_json(frame.exact);
        break;
    case Representation::power_form: {
        j["representation"] = "power";
        json labels = json::object();
        for (std::size_t v = 0; v < frame.powers.size(); ++v)
            labels[std::to_string(v)] = json{{"base", to_string(frame.powers[v].base)},
                                             {"exponent", to_string(frame.powers[v].exponent)}};
        j["labels"] = labels;
        break;
    }
    case Representation::modular:
        j["representation"] = "modular";
        j["modulus"] = to_string(frame.modulus);
        j["labels"] = labels_to_json(frame.residues);
        break;
    }
    return j;
}

json to_json(const VerifyReport &report) {
    json violations = json::array();
    for (const auto &[edge, g] : report.violations)
        violations.push_back(json{{"edge", json::array({edge.a, edge.b})}, {"gcd", to_string(g)}});
    json j{{"ok", report.ok}, {"injective", report.injective}, {"violations", violations}};
    if (report.duplicate)
        j["duplicate"] = json::array({report.duplicate->first, report.duplicate->second});
    return j;
}

json to_json(const MapVerdict &verdict) {
    json j{{"preserved", verdict.preserved}, {"trials", verdict.trials}};
    if (verdict.counterexample) {
        const auto &ce = *verdict.counterexample;
        j["counterexample"] = json{{"a", to_string(ce.a)},
                                   {"b", to_string(ce.b)},
                                   {"ga", to_string(ce.ga)},
                                   {"gb", to_string(ce.gb)},
                                   {"gcd", to_string(ce.witness)}};
    }
    return j;
}

json to_json(const AffineHypothesisReport &report) {
    json edges = json::array();
    for (const auto &entry : report.edges) {
        json divisors = json::array();
        for (const auto &check : entry.divisors) {
            json d{{"q", to_string(check.q)}};
            switch (check.status) {
            case DivisorStatus::checked:
                d["status"] = "checked";
                d["residue"] = to_string(check.residue);
                d["member"] = check.member;
                break;
            case DivisorStatus::skipped_q_equals_p: d["status"] = "indeterminate_q_equals_p"; break;
            case DivisorStatus::skipped_q_divides_p_minus_1:
                d["status"] = "indeterminate_q_divides_p_minus_1";
                break;
            }
            divisors.push_back(d);
        }
        edges.push_back(json{{"edge", json::array({entry.edge.a, entry.edge.b})},
                             {"a", to_string(entry.a)},
                             {"b", to_string(entry.b)},
                             {"d", to_string(entry.d)},
                             {"divisors", divisors}});
    }
    json fallback = json::array();
    for (const Edge &e : report.fallback) fallback.push_back(json::array({e.a, e.b}));
    return json{{"p", to_string(report.p)},
                {"overall", report.overall},
                {"edges", edges},
                {"fallback_edges", fallback}};
}

json to_json(const KorseltCertificate &cert) {
    json divisibility = json::array();
    for (const auto &[p, divides] : cert.divisibility)
        divisibility.push_back(json{{"p", to_string(p)}, {"divides", divides}});
    return json{{"n", to_string(cert.n)},
                {"is_carmichael", cert.is_carmichael},
                {"composite", cert.composite},
                {"square_free", cert.square_free},
                {"certified", cert.certified},
                {"divisibility", divisibility}};
}

json to_json(const SolveResult &result) {
    json j{{"nodes_explored", result.nodes_explored}, {"budget_k", result.budget_k}};
    switch (result.status) {
    case SolveStatus::feasible: j["status"] = "feasible"; break;
    case SolveStatus::infeasible: j["status"] = "infeasible"; break;
    case SolveStatus::timeout: j["status"] = "timeout"; break;
    }
    if (result.labeling) j["labeling"] = to_json(*result.labeling);
    return j;
}

json to_json(const PeriodReport &report) {
    return json{{"modulus", to_string(report.modulus)},
                {"vertex_orders", labels_to_json(report.vertex_orders)},
                {"lambda_G", to_string(report.lambda_graph)},
                {"lambda", to_string(report.lambda)},
                {"divides", report.divides},
                {"generates", report.generates},
                {"equality", report.equality}};
}

json to_json(const BoundednessReport &report) {
    switch (report.kind) {
    case Boundedness::bounded: {
        json labels = json::array();
        for (const Int &x : report.label_set) labels.push_back(to_string(x));
        return json{{"kind", "bounded"},
                    {"period", to_string(report.period)},
                    {"transient", report.transient},
                    {"label_set", labels}};
    }
    case Boundedness::unbounded: {
        json traj = json::array();
        for (const Int &x : report.witness_trajectory) traj.push_back(to_string(x));
        return json{{"kind", "unbounded"},
                    {"witness_vertex", report.witness_vertex},
                    {"witness_trajectory", traj}};
    }
    case Boundedness::inconclusive: return json{{"kind", "inconclusive"}};
    }
    return json{{"kind", "inconclusive"}};
}

json run_report_json(const Graph &g, const Labeling &f0, const TransformSpec &spec,
                     const DclRun &run) {
    json violations = json::array();
    for (const StepReport &step : run.steps)
        for (const auto &violation : step.violations)
            violations.push_back(json{{"t", step.t},
                                      {"edge", json::array({violation.edge.a, violation.edge.b})},
                                      {"gcd", to_string(violation.gcd)}});
    json j{{"graph", to_json(g)},
           {"transform", to_json(spec)},
           {"f0", to_json(f0)},
           {"horizon", run.horizon},
           {"structural_guarantee", run.structural_guarantee},
           {"violations", violations}};
    switch (run.status) {
    case RunStatus::verified: j["status"] = "verified"; break;
    case RunStatus::gcd_violation:
        j["status"] = "violation";
        j["violation"] = json{{"t", run.violation_t},
                              {"edge", json::array({run.violation_edge->a, run.violation_edge->b})},
                              {"gcd", to_string(run.violation_gcd)}};
        break;
    case RunStatus::injectivity_violation:
        j["status"] = "injectivity_violation";
        j["violation"] = json{{"t", run.violation_t},
                              {"vertices", json::array({run.violation_collision->first,
                                                        run.violation_collision->second})}};
        break;
    }
    return j;
}

std::string to_dot(const Graph &g, const std::vector<std::string> &node_labels) {
    std::string out = "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + node_labels[v] + "\"];\n";
    for (const Edge &e : g.edges())
        out += "  " + std::to_string(e.a) + " -- " + std::to_string(e.b) + ";\n";
    out += "}\n";
    return out;
}

std::string frame_to_dot(const Graph &g, const Frame &frame) {
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        switch (frame.rep) {
        case Representation::exact: labels.push_back(to_string(frame.exact[v])); break;
        case Representation::power_form:
            labels.push_back(to_string(frame.powers[v].base) + "^" +
                             to_string(frame.powers[v].exponent));
            break;
        case Representation::modular: labels.push_back(to_string(frame.residues[v])); break;
        }
    }
    return to_dot(g, labels);
}

std::string labeling_to_dot(const Graph &g, const Labeling &f) {
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(to_string(f[v]));
    return to_dot(g, labels);
}

std::string dumps(const json &j) { return j.dump(2) + "\n"; }

} // namespace dcl::io
