#include "homolab/io.hpp"

#include <fstream>
#include <sstream>

namespace homolab {

Json to_json(const Q& q) { return to_string(q); }

Json float_json(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

Q rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(std::to_string(j.get<long long>()));
    if (j.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return parse_rational(os.str());
    }
    throw MalformedInputError("expected a rational, got " + j.dump());
}

Json complex_to_json(const SimplicialComplex& k, const std::optional<Provenance>& prov)
{
    Json j;
    j["maximal_simplices"] = Json::array();
    for (const Simplex& s : k.maximal_simplices()) j["maximal_simplices"].push_back(s);
    Json w = Json::object();
    for (const auto& [s, v] : k.explicit_weights())
        if (v != 1) w[simplex_key(s)] = to_json(v);
    if (!w.empty()) j["weights"] = w;
    if (prov) {
        Json p{{"family", prov->family}, {"d", prov->d}, {"n", prov->n}};
        p["seed"] = prov->seed ? Json(*prov->seed) : Json(nullptr);
        j["provenance"] = p;
    }
    return j;
}

SimplicialComplex complex_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
        throw MalformedInputError("complex JSON needs a maximal_simplices array");
    std::vector<std::vector<int>> maximal;
    for (const Json& s : j["maximal_simplices"]) {
        if (!s.is_array() || s.empty()) throw MalformedInputError("maximal simplex must be a non-empty array");
        std::vector<int> v;
        for (const Json& x : s) {
            if (!x.is_number_integer()) throw MalformedInputError("vertex ids must be integers");
            v.push_back(x.get<int>());
        }
        maximal.push_back(v);
    }
    std::map<Simplex, Q> weights;
    if (j.contains("weights")) {
        if (!j["weights"].is_object()) throw MalformedInputError("weights must be an object");
        for (const auto& [key, val] : j["weights"].items()) weights[parse_simplex_key(key)] = rational_from_json(val);
    }
    return build_complex(maximal, weights);
}

Json coefficient_map(const Chain& c)
{
    Json m = Json::object();
    for (const auto& [s, v] : c.coeffs) m[simplex_key(s)] = to_json(v);
    return m;
}

Json chain_to_json(const Chain& c) { return Json{{"dim", c.dim}, {"coefficients", coefficient_map(c)}}; }

Json chain_to_json(const FChain& c)
{
    Json m = Json::object();
    for (const auto& [s, v] : c.coeffs) m[simplex_key(s)] = float_json(v);
    return Json{{"dim", c.dim}, {"coefficients", m}};
}

Chain chain_from_json(const Json& j, std::optional<int> dim)
{
    if (!j.is_object()) throw MalformedInputError("chain must be a JSON object");
    const Json* map = &j;
    if (j.contains("coefficients")) {
        map = &j["coefficients"];
        if (j.contains("dim")) dim = j["dim"].get<int>();
    }
    if (!map->is_object()) throw MalformedInputError("chain coefficients must be an object");
    std::vector<std::pair<Simplex, Q>> terms;
    for (const auto& [key, val] : map->items()) {
        Simplex s = parse_simplex_key(key);
        if (dim && simplex_dim(s) != *dim) throw MalformedInputError("chain mixes dimensions at " + key);
        dim = simplex_dim(s);
        terms.emplace_back(s, rational_from_json(val));
    }
    if (!dim) throw MalformedInputError("empty chain needs an explicit dim");
    Chain c(*dim);
    for (const auto& [s, v] : terms) c.add(s, v);
    return c;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInputError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const SpectralReport& r)
{
    Json ev = Json::array();
    for (double x : r.eigenvalues) ev.push_back(float_json(x));
    Json j{{"eigenvalues", ev},
           {"zero_threshold", float_json(r.zero_threshold)},
           {"has_gap", r.has_gap},
           {"gap", r.has_gap ? float_json(r.gap) : Json(nullptr)},
           {"lambda_max", float_json(r.lambda_max)},
           {"harmonic_dim", r.harmonic_dim},
           {"ill_conditioned", r.ill_conditioned},
           {"max_residual", float_json(r.max_residual)}};
    j["betti"] = r.betti ? Json(*r.betti) : Json(nullptr);
    return j;
}

Json to_json(const BettiRun& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"simplex", simplex_key(s.simplex)},
                         {"null_homologous", s.null_homologous},
                         {"delta", s.delta},
                         {"queries", s.queries}});
    return Json{{"d", r.d},           {"tester", r.tester},   {"betti", r.betti},
                {"invocations", r.invocations}, {"queries", r.queries}, {"aborted", r.aborted},
                {"abort_reason", r.abort_reason}, {"steps", steps}};
}

Json to_json(const FlowResult& r)
{
    Json j{{"finite", r.finite}, {"backend", to_string(r.backend)}};
    if (!r.finite) {
        j["resistance"] = "inf";
        return j;
    }
    if (r.backend == Backend::Exact) {
        j["resistance"] = to_json(r.resistance);
        j["flow"] = chain_to_json(r.flow);
    } else {
        j["flow"] = chain_to_json(r.flow_f);
        j["residual"] = float_json(r.residual);
    }
    j["resistance_float"] = float_json(r.resistance_f);
    return j;
}

Json to_json(const PotentialResult& r)
{
    Json j{{"finite", r.finite}};
    if (!r.finite) {
        j["capacitance"] = "inf";
        return j;
    }
    j["capacitance"] = to_json(r.capacitance);
    j["capacitance_float"] = float_json(to_double(r.capacitance));
    j["potential"] = chain_to_json(r.potential);
    return j;
}

Json to_json(const SNFResult& r)
{
    Json diag = Json::array();
    for (const Z& z : r.diagonal) diag.push_back(z.get_str());
    Json j{{"rows", r.rows}, {"cols", r.cols}, {"rank", r.rank}, {"diagonal", diag}, {"operations", r.operations}};
    j["abs_det"] = r.abs_det ? Json(r.abs_det->get_str()) : Json(nullptr);
    return j;
}

Json to_json(const TorsionReport& r)
{
    Json rows = Json::array(), cols = Json::array();
    for (const auto& s : r.argmax_rows) rows.push_back(simplex_key(s));
    for (const auto& s : r.argmax_cols) cols.push_back(simplex_key(s));
    Json j{{"d", r.d},
           {"n", r.n},
           {"n0", r.n0},
           {"exhaustive", r.exhaustive},
           {"submatrices", r.submatrices},
           {"t_max", r.t_max.get_str()},
           {"argmax_rows", rows},
           {"argmax_cols", cols},
           {"hadamard_bound", float_json(r.hadamard_bound)},
           {"hadamard_ok", r.hadamard_ok},
           {"c", float_json(r.c)},
           {"resistance_bound", float_json(r.resistance_bound)},
           {"capacitance_bound", float_json(r.capacitance_bound)},
           {"resistance_violation", r.resistance_violation},
           {"capacitance_violation", r.capacitance_violation}};
    j["measured_resistance"] = r.measured_resistance ? float_json(*r.measured_resistance) : Json(nullptr);
    j["measured_capacitance"] = r.measured_capacitance ? float_json(*r.measured_capacitance) : Json(nullptr);
    return j;
}

Json to_json(const CollapseSequence& s)
{
    Json pairs = Json::array();
    for (const auto& [sigma, tau] : s.pairs) pairs.push_back({{"sigma", simplex_key(sigma)}, {"tau", simplex_key(tau)}});
    Json j{{"pairs", pairs}, {"result", complex_to_json(s.result)}, {"result_dim", s.result.dim()},
           {"reached_target", s.reached_target}};
    j["target_dim"] = s.target_dim ? Json(*s.target_dim) : Json(nullptr);
    return j;
}

Json to_json(const WitnessBounds& b)
{
    return Json{{"w_plus", to_json(b.w_plus)}, {"w_minus", to_json(b.w_minus)}, {"method", b.method},
                {"instances", b.instances}};
}

Json to_json(const EvaluationResult& r)
{
    return Json{{"decision", r.decision ? "positive" : "negative"},
                {"p0", float_json(r.p0)},
                {"p_star", float_json(r.p_star)},
                {"threshold", float_json(r.threshold)},
                {"t", r.t},
                {"shots", r.shots},
                {"zero_outcomes", r.zero_outcomes},
                {"oracle_queries_per_shot", r.oracle_queries_per_shot},
                {"u_applications_per_shot", r.u_applications_per_shot},
                {"walk_steps_per_reflection", r.walk_steps_per_reflection},
                {"incidence_queries_per_u", r.incidence_queries_per_u},
                {"oracle_queries_total", float_json(r.oracle_queries_total)},
                {"incidence_queries_total", float_json(r.incidence_queries_total)},
                {"phase_gap", float_json(r.phase_gap)},
                {"qubits", r.qubits},
                {"bounds", to_json(r.bounds)}};
}

Json to_json(const InitialState& s)
{
    return Json{{"resistance", to_json(s.resistance)},
                {"augmented_norm2", to_json(s.augmented_norm2)},
                {"formula_norm2", to_json(s.formula_norm2)},
                {"empty_component", to_json(s.empty_component)},
                {"overlap2", to_json(s.overlap2)},
                {"rounds_outer", s.rounds_outer},
                {"rounds_inner", s.rounds_inner},
                {"rounds", s.rounds},
                {"bound", float_json(s.bound)}};
}

Json to_json(const DualityCheck& c)
{
    Json j{{"equal", c.equal}, {"checks", to_json(c.checks)}};
    j["capacitance"] = c.capacitance_finite ? to_json(c.capacitance) : Json("inf");
    j["dual_resistance"] = c.resistance_finite ? to_json(c.dual_resistance) : Json("inf");
    j["difference"] = c.capacitance_finite && c.resistance_finite ? to_json(c.difference) : Json(nullptr);
    return j;
}

Json to_json(const EmbeddedDualData& d)
{
    Json edges = Json::array();
    for (const auto& e : d.edges) {
        Json je{{"label", e.label}, {"weight", to_json(e.weight)}};
        je["tail"] = e.tail >= 0 ? Json(d.vertices[e.tail]) : Json(nullptr);
        je["head"] = e.head >= 0 ? Json(d.vertices[e.head]) : Json(nullptr);
        edges.push_back(je);
    }
    return Json{{"d", d.d}, {"vertices", d.vertices}, {"edges", edges}, {"split_void", d.split_index},
                {"checks", to_json(d.checks)}};
}

}  // namespace homolab
