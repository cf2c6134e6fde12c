#include "homolab/betti.hpp"
#include "homolab/collapse.hpp"
#include "homolab/duality.hpp"
#include "homolab/families.hpp"
#include "homolab/flow.hpp"
#include "homolab/io.hpp"
#include "homolab/snf.hpp"
#include "homolab/spansim.hpp"
#include "homolab/spectra.hpp"
#include "homolab/suites.hpp"
#include "homolab/szegedy.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

using namespace homolab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitVerification = 2;

struct Options {
    std::string input, gamma, sub, sub0, out, csv, family = "Bdn", method = "all", tester = "classical-exact";
    std::string backend = "auto", kind = "up", suite = "all", flow, x;
    int d = 1, n = 1, dim = 1, samples = 200, n_max = 5;
    std::optional<int> copies, target_dim;
    std::optional<std::uint64_t> seed;
    double budget = 1e-6;
    bool verify = false, all_instances = false, szegedy = false, initial_state = false, bounds = false;
};

int thread_count()
{
    int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("HOMOLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, hw);
    }
    return hw;
}

Json plan_json(CLI::App* sub)
{
    Json plan{{"command", sub->get_name()}};
    Json args = Json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string name = opt->get_name();
        while (!name.empty() && name[0] == '-') name.erase(0, 1);
        args[name] = opt->get_type_size() == 0 ? Json(true) : Json(opt->as<std::string>());
    }
    plan["args"] = args;
    return plan;
}

void emit(const Options& o, const Json& j)
{
    if (o.out.empty())
        std::cout << dump(j);
    else
        write_text_file(o.out, dump(j));
}

Json load_input(const Options& o)
{
    if (o.input.empty()) throw CLI::RequiredError("--input");
    return read_json_file(o.input);
}

Chain load_gamma(const Options& o, const Json& input, const char* key = "gamma")
{
    if (!o.gamma.empty()) return chain_from_json(read_json_file(o.gamma));
    if (input.contains(key)) return chain_from_json(input[key]);
    throw CLI::RequiredError("--gamma");
}

SimplicialComplex load_sub(const Json& input, const std::string& path)
{
    if (!path.empty()) return complex_from_json(read_json_file(path));
    if (input.contains("subcomplex")) return complex_from_json(input["subcomplex"]);
    throw CLI::RequiredError("--sub");
}

GeneratedFamily generate_family(const std::string& family, int d, int n, std::optional<int> copies)
{
    if (family == "Bdn" || family == "B") return resistance_family(d, n);
    if (family == "PQ" || family == "Qdn" || family == "Pdn") return capacitance_family(d, n);
    if (family == "M" || family == "Mdn") return many_small(d, n, copies);
    throw CLI::ValidationError("--family", "unknown family " + family + " (Bdn, PQ, Mdn, block)");
}

int cmd_generate(const Options& o, Json& rep)
{
    if (o.family == "block") {
        BuildingBlock b = building_block(o.d);
        rep.update(complex_to_json(b.complex, Provenance{"block", o.d, 0, o.seed}));
        rep["f"] = chain_to_json(b.f);
        rep["f_norm2"] = to_json(b.f_norm2);
        rep["checks"] = to_json(b.checks);
        return b.checks.all_pass() ? kExitOk : kExitVerification;
    }
    GeneratedFamily g = generate_family(o.family, o.d, o.n, o.copies);
    // The report is itself a complex file usable as --input.
    rep.update(complex_to_json(g.complex, Provenance{g.family, g.d, g.n, o.seed}));
    rep["gamma"] = chain_to_json(g.gamma_raw);
    rep["gamma_norm2"] = to_json(g.gamma_norm2);
    rep["witness"] = chain_to_json(g.witness);
    if (g.sub) rep["subcomplex"] = complex_to_json(*g.sub);
    rep["log"] = g.log;
    rep["checks"] = to_json(g.checks);
    return g.checks.all_pass() ? kExitOk : kExitVerification;
}

NullHomologyTester make_tester(const Options& o)
{
    if (o.tester == "classical-exact") return classical_exact_tester();
    if (o.tester == "classical-float") return classical_float_tester();
    if (o.tester == "span-sim") return span_sim_tester(o.budget, o.seed.value_or(1));
    throw CLI::ValidationError("--tester", "unknown tester " + o.tester);
}

int cmd_betti(const Options& o, Json& rep)
{
    SimplicialComplex k = complex_from_json(load_input(o));
    std::optional<int> inc, mat, hodge;
    if (o.method == "incremental" || o.method == "all") {
        BettiRun run = incremental_betti(k, o.dim, make_tester(o), std::nullopt, o.seed);
        rep["incremental"] = to_json(run);
        if (!run.aborted) inc = run.betti;
    }
    if (o.method == "matrix" || o.method == "all") {
        mat = matrix_reduction_betti(k, o.dim);
        rep["matrix_reduction"] = *mat;
    }
    if (o.method == "hodge" || o.method == "all") {
        hodge = betti_via_hodge(k, o.dim);
        rep["hodge"] = *hodge;
    }
    if (o.method != "incremental" && o.method != "matrix" && o.method != "hodge" && o.method != "all")
        throw CLI::ValidationError("--method", "expected incremental, matrix, hodge or all");
    bool agree = true;
    std::vector<int> vals;
    for (const auto& v : {inc, mat, hodge})
        if (v) vals.push_back(*v);
    for (int v : vals) agree = agree && v == vals.front();
    rep["agree"] = agree;
    return agree ? kExitOk : kExitVerification;
}

int cmd_resistance(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    Chain g = load_gamma(o, in);
    if (o.backend == "nullspace") {
        rep["result"] = to_json(effective_resistance_nullspace(k, g));
    } else {
        Backend b = o.backend == "exact" ? Backend::Exact : o.backend == "float" ? Backend::Float : Backend::Auto;
        if (o.backend != "exact" && o.backend != "float" && o.backend != "auto")
            throw CLI::ValidationError("--backend", "expected exact, float, auto or nullspace");
        rep["result"] = to_json(effective_resistance(k, g, b));
    }
    if (in.contains("gamma_norm2") && o.gamma.empty()) rep["gamma_norm2"] = in["gamma_norm2"];
    return kExitOk;
}

int cmd_capacitance(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    SimplicialComplex l = load_sub(in, o.sub);
    rep["result"] = to_json(effective_capacitance(l, k, load_gamma(o, in)));
    if (in.contains("gamma_norm2") && o.gamma.empty()) rep["gamma_norm2"] = in["gamma_norm2"];
    return kExitOk;
}

int cmd_spectral_gap(const Options& o, Json& rep)
{
    SimplicialComplex k = complex_from_json(load_input(o));
    LaplacianMatrix m = laplacian(k, o.dim, parse_laplacian_kind(o.kind));
    rep["kind"] = to_string(m.kind);
    rep["spectrum"] = to_json(spectrum(m));
    int code = kExitOk;
    if (o.verify) {
        VerificationReport v = verify_spectrum_identities(k, o.dim);
        rep["identities"] = to_json(v);
        if (!v.all_pass()) code = kExitVerification;
    }
    return code;
}

int cmd_snf(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    BoundaryOperator b = boundary_matrix(k, o.dim);
    if (!o.sub.empty()) {
        SimplicialComplex l = complex_from_json(read_json_file(o.sub));
        SimplicialComplex l0 = o.sub0.empty() ? SimplicialComplex() : complex_from_json(read_json_file(o.sub0));
        b = relative_boundary_matrix(k, l, l0, o.dim);
    }
    SNFResult r = smith_normal_form(b.to_z());
    rep["snf"] = to_json(r);
    rep["torsion"] = torsion_cardinality(b).get_str();
    if (o.bounds) rep["bounds"] = to_json(bounds_report(k, o.dim, o.samples, o.seed.value_or(1)));
    return kExitOk;
}

int cmd_collapse(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    CollapseSequence seq = greedy_collapse(k, o.target_dim);
    VerificationReport v = verify_collapse_sequence(seq);
    rep["sequence"] = to_json(seq);
    if (!o.flow.empty()) {
        Chain f = chain_from_json(read_json_file(o.flow));
        Chain g = load_gamma(o, in);
        Chain moved = transport_chain(seq, f, g);
        rep["transported"] = chain_to_json(moved);
        v.add("transported chain bounds gamma", apply_boundary(seq.result, moved) == g);
    }
    rep["checks"] = to_json(v);
    return v.all_pass() ? kExitOk : kExitVerification;
}

std::string bits(const std::vector<bool>& x)
{
    std::string s;
    for (bool b : x) s += b ? '1' : '0';
    return s;
}

int cmd_span_sim(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    Chain g = load_gamma(o, in);
    SpanProgram p = build_span_program(k, g);
    WitnessBounds b = witness_bounds(p);
    rep["bounds"] = to_json(b);
    rep["columns"] = Json::array();
    for (const auto& c : p.columns) rep["columns"].push_back(c.label);
    int code = kExitOk;
    std::uint64_t seed = o.seed.value_or(1);
    auto one = [&](const std::vector<bool>& x) {
        WitnessSizes w = witness_sizes(p, x);
        EvaluationResult e = simulate_evaluation(p, x, o.budget, seed, b);
        bool classical = is_null_homologous(instance_complex(k, p.d, x), g);
        Json row{{"x", bits(x)}, {"classical", classical ? "positive" : "negative"}, {"evaluation", to_json(e)}};
        row["w_plus"] = w.w_plus ? to_json(*w.w_plus) : Json(nullptr);
        row["w_minus"] = w.w_minus ? to_json(*w.w_minus) : Json(nullptr);
        row["agree"] = e.decision == classical;
        if (e.decision != classical) code = kExitVerification;
        return row;
    };
    if (o.all_instances) {
        if (p.size() > 20) throw ResourceError("--all-instances supports at most 20 columns");
        Json table = Json::array();
        for (long long m = 0; m < (1LL << p.size()); ++m) {
            std::vector<bool> x(p.size());
            for (int i = 0; i < p.size(); ++i) x[i] = (m >> i) & 1;
            table.push_back(one(x));
        }
        rep["instances"] = table;
    } else {
        std::vector<bool> x = p.all_ones();
        if (!o.x.empty()) {
            if (static_cast<int>(o.x.size()) != p.size()) throw CLI::ValidationError("--x", "length must equal the column count");
            for (int i = 0; i < p.size(); ++i) {
                if (o.x[i] != '0' && o.x[i] != '1') throw CLI::ValidationError("--x", "expected a bitstring");
                x[i] = o.x[i] == '1';
            }
        }
        rep["instance"] = one(x);
    }
    if (o.initial_state) rep["initial_state"] = to_json(prepare_initial_state(k, g));
    if (o.szegedy) {
        VerificationReport v = verify_szegedy(k, g.dim + 1);
        rep["szegedy"] = to_json(v);
        if (!v.all_pass()) code = kExitVerification;
    }
    return code;
}

int cmd_duality(const Options& o, Json& rep)
{
    Json in = load_input(o);
    SimplicialComplex k = complex_from_json(in);
    if (!in.contains("voids") || !in.contains("gamma1") || !in.contains("gamma2"))
        throw MalformedInputError("duality input needs voids, gamma1 and gamma2");
    std::vector<Chain> voids;
    for (const Json& v : in["voids"]) voids.push_back(chain_from_json(v, k.dim()));
    Chain g1 = chain_from_json(in["gamma1"]), g2 = chain_from_json(in["gamma2"]);
    Chain g = in.contains("gamma") || !o.gamma.empty() ? load_gamma(o, in) : apply_boundary(k, g1);
    EmbeddedDualData data = build_dual(k, voids, g1, g2, g);
    rep["dual"] = to_json(data);
    int code = data.checks.all_pass() ? kExitOk : kExitVerification;
    std::vector<SimplicialComplex> ls;
    if (!o.sub.empty())
        ls.push_back(complex_from_json(read_json_file(o.sub)));
    else
        ls = duality_subcomplexes(data);
    Json rows = Json::array();
    for (const SimplicialComplex& l : ls) {
        DualityCheck c = check_duality(data, l);
        Json row = to_json(c);
        row["subcomplex"] = complex_to_json(l);
        rows.push_back(row);
        if (!c.equal || !c.checks.all_pass()) code = kExitVerification;
    }
    rep["checks"] = rows;
    return code;
}

int cmd_verify(const Options& o, Json& rep)
{
    VerificationReport v = run_suite(o.suite);
    rep["suite"] = o.suite;
    rep["report"] = to_json(v);
    return v.all_pass() ? kExitOk : kExitVerification;
}

std::string csv_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int cmd_sweep(const Options& o, Json& rep)
{
    if (o.family != "Bdn" && o.family != "B" && o.family != "PQ" && o.family != "Qdn")
        throw CLI::ValidationError("--family", "sweep supports Bdn and PQ");
    bool cap = o.family == "PQ" || o.family == "Qdn";
    int points = o.n_max;
    std::vector<Json> rows(points);
    std::vector<std::string> lines(points);
    std::mutex mu;
    int next = 0;
    auto worker = [&]() {
        for (;;) {
            int i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= points) return;
                i = next++;
            }
            int n = i + 1;
            GeneratedFamily g = cap ? capacitance_family(o.d, n) : resistance_family(o.d, n);
            SpectralReport sp = spectrum(laplacian(g.complex, o.d - 1, LaplacianKind::Up));
            FlowResult r = effective_resistance(g.complex, g.gamma_raw, Backend::Exact);
            Json row{{"n", n}, {"lambda_min", sp.has_gap ? float_json(sp.gap) : Json(nullptr)}};
            std::string line = std::to_string(n) + "," + (sp.has_gap ? csv_number(sp.gap) : "");
            if (r.finite) {
                Q rv = scale_resistance(r.resistance, g.gamma_norm2);
                row["resistance"] = to_json(rv);
                line += "," + csv_number(to_double(rv));
            } else {
                row["resistance"] = "inf";
                line += ",inf";
            }
            if (cap) {
                PotentialResult c = effective_capacitance(*g.sub, g.complex, g.gamma_raw);
                Q cv = scale_capacitance(c.capacitance, g.gamma_norm2);
                row["capacitance"] = c.finite ? to_json(cv) : Json("inf");
                line += "," + (c.finite ? csv_number(to_double(cv)) : std::string("inf"));
            } else {
                line += ",";
            }
            row["checks_pass"] = g.checks.all_pass();
            std::lock_guard<std::mutex> lock(mu);
            rows[i] = row;
            lines[i] = line;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(thread_count(), points); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    rep["rows"] = rows;
    if (!o.csv.empty()) {
        std::string text = "n,lambda_min,resistance,capacitance\n";
        for (const auto& l : lines) text += l + "\n";
        write_text_file(o.csv, text);
    }
    bool ok = true;
    for (const auto& r : rows) ok = ok && r["checks_pass"].get<bool>();
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"homolab: effective resistance, capacitance and spectral tools for simplicial complexes"};
    app.require_subcommand(1);
    Options o;
    auto input = [&](CLI::App* s) { s->add_option("--input", o.input, "complex JSON")->check(CLI::ExistingFile); };
    auto gamma = [&](CLI::App* s) { s->add_option("--gamma", o.gamma, "chain JSON")->check(CLI::ExistingFile); };
    auto out = [&](CLI::App* s) { s->add_option("--out", o.out, "output path (default stdout)"); };
    auto dim = [&](CLI::App* s) { s->add_option("--dim", o.dim, "dimension")->check(CLI::NonNegativeNumber); };
    auto seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "random seed"); };

    CLI::App* gen = app.add_subcommand("generate", "generate a worst-case family complex");
    gen->add_option("--family", o.family, "Bdn, PQ, Mdn or block");
    gen->add_option("--d", o.d, "dimension")->check(CLI::Range(1, 6));
    gen->add_option("--n", o.n, "levels")->check(CLI::Range(1, 64));
    gen->add_option("--copies", o.copies, "copies for Mdn")->check(CLI::PositiveNumber);
    seed(gen);
    out(gen);

    CLI::App* bet = app.add_subcommand("betti", "Betti numbers");
    input(bet);
    dim(bet);
    bet->add_option("--method", o.method, "incremental, matrix, hodge or all");
    bet->add_option("--tester", o.tester, "classical-exact, classical-float or span-sim");
    bet->add_option("--budget", o.budget, "error budget for span-sim")->check(CLI::Range(1e-15, 0.5));
    seed(bet);
    out(bet);

    CLI::App* res = app.add_subcommand("resistance", "effective resistance of a cycle");
    input(res);
    gamma(res);
    res->add_option("--backend", o.backend, "exact, float, auto or nullspace");
    out(res);

    CLI::App* cap = app.add_subcommand("capacitance", "effective capacitance of a cycle");
    input(cap);
    gamma(cap);
    cap->add_option("--sub", o.sub, "subcomplex JSON")->check(CLI::ExistingFile);
    out(cap);

    CLI::App* gap = app.add_subcommand("spectral-gap", "Laplacian spectrum and gap");
    input(gap);
    dim(gap);
    gap->add_option("--kind", o.kind, "up, down, combinatorial, weighted-up or normalized-up");
    gap->add_flag("--verify", o.verify, "check the spectral identities");
    out(gap);

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form and torsion");
    input(snf);
    dim(snf);
    snf->add_option("--sub", o.sub, "subcomplex L")->check(CLI::ExistingFile);
    snf->add_option("--sub0", o.sub0, "subcomplex L0")->check(CLI::ExistingFile);
    snf->add_flag("--bounds", o.bounds, "torsion and witness bounds report");
    snf->add_option("--samples", o.samples, "submatrix samples")->check(CLI::PositiveNumber);
    seed(snf);
    out(snf);

    CLI::App* col = app.add_subcommand("collapse", "greedy collapse");
    input(col);
    gamma(col);
    col->add_option("--target-dim", o.target_dim, "stop dimension")->check(CLI::NonNegativeNumber);
    col->add_option("--flow", o.flow, "chain to transport")->check(CLI::ExistingFile);
    out(col);

    CLI::App* span = app.add_subcommand("span-sim", "simulated span-program evaluation");
    input(span);
    gamma(span);
    span->add_option("--x", o.x, "input bitstring over the d-simplices");
    span->add_flag("--all-instances", o.all_instances, "every input bitstring");
    span->add_option("--budget", o.budget, "error budget")->check(CLI::Range(1e-15, 0.5));
    span->add_flag("--szegedy", o.szegedy, "verify the walk workspace");
    span->add_flag("--initial-state", o.initial_state, "initial state preparation");
    seed(span);
    out(span);

    CLI::App* dual = app.add_subcommand("duality", "capacitance against dual resistance");
    input(dual);
    gamma(dual);
    dual->add_option("--sub", o.sub, "subcomplex L (default: all valid L)")->check(CLI::ExistingFile);
    out(dual);

    CLI::App* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("--suite", o.suite, "suite name or all");
    out(ver);

    CLI::App* sw = app.add_subcommand("sweep", "growth table over n = 1..n-max");
    sw->add_option("--family", o.family, "Bdn or PQ");
    sw->add_option("--d", o.d, "dimension")->check(CLI::Range(1, 6));
    sw->add_option("--n-max", o.n_max, "largest n")->check(CLI::Range(1, 32));
    sw->add_option("--csv", o.csv, "CSV output path");
    out(sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitRuntime;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Json rep{{"plan", plan_json(cmd)}};
    int code = kExitOk;
    try {
        const std::string name = cmd->get_name();
        if (name == "generate") code = cmd_generate(o, rep);
        else if (name == "betti") code = cmd_betti(o, rep);
        else if (name == "resistance") code = cmd_resistance(o, rep);
        else if (name == "capacitance") code = cmd_capacitance(o, rep);
        else if (name == "spectral-gap") code = cmd_spectral_gap(o, rep);
        else if (name == "snf") code = cmd_snf(o, rep);
        else if (name == "collapse") code = cmd_collapse(o, rep);
        else if (name == "span-sim") code = cmd_span_sim(o, rep);
        else if (name == "duality") code = cmd_duality(o, rep);
        else if (name == "verify") code = cmd_verify(o, rep);
        else if (name == "sweep") code = cmd_sweep(o, rep);
        rep["exit_code"] = code;
        emit(o, rep);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return code;
}
