#include "homolab/suites.hpp"

#include "homolab/chainmaps.hpp"
#include "homolab/collapse.hpp"
#include "homolab/coloring.hpp"
#include "homolab/families.hpp"
#include "homolab/spansim.hpp"
#include "homolab/spectra.hpp"
#include "homolab/szegedy.hpp"

#include <algorithm>
#include <cmath>

namespace homolab {

namespace {

SimplicialComplex simplex_complex(int d)
{
    std::vector<int> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = i;
    return build_complex({v});
}

SimplicialComplex cone_over(const SimplicialComplex& k)
{
    int apex = k.max_vertex() + 1;
    std::vector<Simplex> cells = k.maximal_simplices();
    for (const Simplex& s : k.maximal_simplices()) {
        Simplex t = s;
        t.push_back(apex);
        cells.push_back(t);
    }
    return SimplicialComplex::from_simplices(cells);
}

SimplicialComplex tetrahedron_boundary() { return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

VerificationReport spectra_suite()
{
    VerificationReport rep;
    std::vector<std::pair<std::string, SimplicialComplex>> ks = {
        {"Delta3", simplex_complex(3)},
        {"dDelta3", tetrahedron_boundary()},
        {"B_2^2", resistance_family(2, 2).complex},
        {"torus", build_complex({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {2, 0, 5}, {0, 5, 3}, {3, 4, 6},
                                 {4, 6, 0}, {4, 5, 0}, {5, 0, 1}, {5, 3, 1}, {3, 1, 6}, {6, 1, 2}, {6, 2, 0}})},
    };
    for (const auto& [name, k] : ks)
        for (int d = 0; d < k.dim(); ++d) rep.merge(verify_spectrum_identities(k, d), name + " d=" + std::to_string(d) + " ");
    return rep;
}

VerificationReport chain_map_suite()
{
    VerificationReport rep;
    for (int d = 1; d <= 3; ++d) {
        SimplicialComplex k = simplex_complex(d);
        rep.merge(stellar_subdivision(k).checks, "stellar Delta^" + std::to_string(d) + " ");
        rep.merge(prism(k).checks, "prism Delta^" + std::to_string(d) + " ");
        rep.merge(stellar_prism(k).checks, "stellar prism Delta^" + std::to_string(d) + " ");
    }
    for (int d = 2; d <= 3; ++d) rep.merge(building_block(d).checks, "B_" + std::to_string(d) + " ");
    return rep;
}

VerificationReport family_suite()
{
    VerificationReport rep;
    for (int n = 1; n <= 3; ++n) {
        rep.merge(resistance_family(2, n).checks, "B_2^" + std::to_string(n) + " ");
        rep.merge(capacitance_family(2, n).checks, "Q_2^" + std::to_string(n) + " ");
    }
    return rep;
}

VerificationReport collapse_suite()
{
    VerificationReport rep;
    for (int n = 1; n <= 3; ++n) {
        GeneratedFamily b = resistance_family(2, n);
        CollapseSequence sb = greedy_collapse(b.complex, 1);
        rep.merge(verify_collapse_sequence(sb), "B_2^" + std::to_string(n) + " ");
        rep.add("B_2^" + std::to_string(n) + " reaches dimension 1", sb.reached_target && sb.result.dim() <= 1);
        GeneratedFamily q = capacitance_family(2, n);
        CollapseSequence sp = greedy_collapse(*q.sub, 1);
        rep.merge(verify_collapse_sequence(sp), "P_2^" + std::to_string(n) + " ");
        rep.add("P_2^" + std::to_string(n) + " reaches dimension 1", sp.reached_target && sp.result.dim() <= 1);
        SimplicialComplex cone = cone_over(b.complex);
        CollapseSequence sc = greedy_collapse(cone, 2);
        Chain moved = transport_chain(sc, b.witness, b.gamma_raw);
        rep.add("cone over B_2^" + std::to_string(n) + " transported chain bounds gamma",
                apply_boundary(sc.result, moved) == b.gamma_raw);
        rep.add("P_2^" + std::to_string(n) + " null-homology preserved",
                is_null_homologous(*q.sub, q.gamma_raw) == is_null_homologous(sp.result, q.gamma_raw));
    }
    return rep;
}

VerificationReport szegedy_suite()
{
    VerificationReport rep;
    rep.merge(verify_szegedy(simplex_complex(2), 2), "Delta2 ");
    rep.merge(verify_szegedy(tetrahedron_boundary(), 2), "dDelta3 ");
    rep.merge(verify_szegedy(simplex_complex(3), 2), "Delta3 ");
    rep.merge(verify_szegedy(resistance_family(2, 1).complex, 2), "B_2^1 ");
    rep.merge(verify_szegedy(resistance_family(2, 2).complex, 2), "B_2^2 ");
    return rep;
}

VerificationReport span_sim_suite()
{
    VerificationReport rep;
    std::vector<std::pair<std::string, std::pair<SimplicialComplex, Chain>>> cases = {
        {"dDelta3", {tetrahedron_boundary(), boundary(single<Q>(Simplex{0, 1, 2}))}},
        {"Delta2", {simplex_complex(2), boundary(single<Q>(Simplex{0, 1, 2}))}},
    };
    GeneratedFamily q = capacitance_family(2, 1);
    cases.push_back({"Q_2^1", {q.complex, q.gamma_raw}});
    for (const auto& [name, kg] : cases) {
        const auto& [k, g] = kg;
        SpanProgram p = build_span_program(k, g);
        WitnessBounds b = witness_bounds(p);
        int n = p.size(), mismatches = 0, wrong = 0;
        for (long long m = 0; m < (1LL << n); ++m) {
            std::vector<bool> x(n);
            for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1;
            WitnessSizes w = witness_sizes(p, x);
            SimplicialComplex kx = instance_complex(k, p.d, x);
            if (w.positive) {
                FlowResult r = effective_resistance(kx, g, Backend::Exact);
                mismatches += !(r.finite && r.resistance == *w.w_plus);
            } else {
                PotentialResult c = effective_capacitance(kx, k, g);
                mismatches += !(c.finite && c.capacitance == *w.w_minus);
            }
            wrong += simulate_evaluation(p, x, 1e-6, 1, b).decision != w.positive;
        }
        rep.add(name + " witness sizes", mismatches == 0, std::to_string(mismatches) + " mismatches");
        rep.add(name + " decisions", wrong == 0, std::to_string(wrong) + " wrong");
        InitialState s = prepare_initial_state(k, g);
        rep.add(name + " initial state norm", s.augmented_norm2 == s.formula_norm2,
                to_string(s.augmented_norm2) + " vs " + to_string(s.formula_norm2));
    }
    return rep;
}

VerificationReport duality_suite()
{
    VerificationReport rep;
    std::vector<std::pair<std::string, EmbeddedDualData>> data;
    for (int t = 0; t < 4; ++t) data.push_back({"dDelta3 tau" + std::to_string(t), tetrahedron_dual(t)});
    data.push_back({"octahedron", octahedron_dual()});
    data.push_back({"4-cycle 0-2", four_cycle_dual(0, 2)});
    for (const auto& [name, dd] : data) {
        rep.merge(dd.checks, name + " ");
        int total = 0, equal = 0;
        for (const SimplicialComplex& l : duality_subcomplexes(dd)) {
            DualityCheck c = check_duality(dd, l);
            ++total;
            equal += c.equal && c.checks.all_pass();
        }
        rep.add(name + " capacitance equals dual resistance", equal == total,
                std::to_string(equal) + "/" + std::to_string(total));
    }
    return rep;
}

VerificationReport coloring_suite()
{
    VerificationReport rep;
    for (int n = 1; n <= 2; ++n) {
        SimplicialComplex k = resistance_family(2, n).complex;
        int n0 = static_cast<int>(k.count(0));
        std::optional<ColoringData> c;
        for (int budget = 3; budget <= n0 && !c; ++budget) c = random_proper_coloring(k, budget, 50, 7);
        if (!c) {
            rep.add("B_2^" + std::to_string(n) + " coloring", false, "no proper coloring found");
            continue;
        }
        SpectralReport a = spectrum(laplacian(k, 1, LaplacianKind::Up));
        SpectralReport b = spectrum(laplacian(c->pattern, 1, LaplacianKind::Up));
        double diff = std::abs(a.gap - b.gap);
        rep.add("B_2^" + std::to_string(n) + " pattern gap", a.has_gap && b.has_gap && diff <= 1e-8,
                std::to_string(c->colors_used) + " colors, |difference| " + std::to_string(diff));
    }
    return rep;
}

}  // namespace

FlowFormulaInstances standard_flow_instances()
{
    FlowFormulaInstances inst;
    // Graph path 0-1-2: series with gamma = 2 - 0.
    {
        SeriesInstance s;
        s.name = "path";
        s.k = build_complex({{0, 1}, {1, 2}});
        s.k1 = build_complex({{0, 1}});
        s.k2 = build_complex({{1, 2}});
        s.gamma1 = boundary(single<Q>(Simplex{0, 1}));
        s.gamma2 = boundary(single<Q>(Simplex{1, 2}));
        s.gamma = s.gamma1 + s.gamma2;
        inst.series.push_back(s);
    }
    {
        SeriesInstance s;
        s.name = "square";
        s.k = build_complex({{0, 1, 2}, {0, 2, 3}});
        s.k1 = build_complex({{0, 1, 2}});
        s.k2 = build_complex({{0, 2, 3}});
        s.gamma1 = boundary(single<Q>(Simplex{0, 1, 2}));
        s.gamma2 = boundary(single<Q>(Simplex{0, 2, 3}));
        s.gamma = s.gamma1 + s.gamma2;
        inst.series.push_back(s);
    }
    {
        ParallelInstance p;
        p.name = "two paths";
        p.k = build_complex({{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
        p.k1 = build_complex({{0, 1}, {1, 4}});
        p.k2 = build_complex({{0, 2}, {2, 3}, {3, 4}});
        p.gamma = Chain(0);
        p.gamma.add(Simplex{4}, Q(1));
        p.gamma.add(Simplex{0}, Q(-1));
        inst.parallel.push_back(p);
    }
    {
        ParallelInstance p;
        p.name = "tetrahedron";
        p.k = tetrahedron_boundary();
        p.k1 = build_complex({{0, 1, 2}});
        p.k2 = build_complex({{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        p.gamma = boundary(single<Q>(Simplex{0, 1, 2}));
        inst.parallel.push_back(p);
    }
    {
        MonotoneInstance m;
        m.name = "tetrahedron minus a face";
        m.k = tetrahedron_boundary();
        m.l = build_complex({{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        m.gamma = boundary(single<Q>(Simplex{0, 1, 2}));
        inst.monotone.push_back(m);
        GeneratedFamily b = resistance_family(2, 2);
        m.name = "B_2^2 in its cone";
        m.l = b.complex;
        m.k = cone_over(b.complex);
        m.gamma = b.gamma_raw;
        inst.monotone.push_back(m);
    }
    return inst;
}

EmbeddedDualData tetrahedron_dual(int triangle)
{
    SimplicialComplex k = tetrahedron_boundary();
    Chain v = boundary(single<Q>(Simplex{0, 1, 2, 3}));
    Simplex tau = k.simplices(2).at(triangle);
    Chain g1 = single<Q>(tau, v.get(tau));
    Chain g2 = v - g1;
    return build_dual(k, {v}, g1, g2, apply_boundary(k, g1));
}

EmbeddedDualData octahedron_dual()
{
    const int ring[4] = {2, 3, 4, 5};
    std::vector<std::vector<int>> tris;
    Chain top(2), bottom(2);
    for (int i = 0; i < 4; ++i) {
        int a = ring[i], b = ring[(i + 1) % 4];
        tris.push_back({0, a, b});
        tris.push_back({1, a, b});
        auto [s1, g1] = map_simplex(Simplex{0, 1, 2}, [&](int x) { return x == 0 ? 0 : x == 1 ? a : b; });
        top.add(s1, Q(g1));
        auto [s2, g2] = map_simplex(Simplex{0, 1, 2}, [&](int x) { return x == 0 ? 1 : x == 1 ? b : a; });
        bottom.add(s2, Q(g2));
    }
    SimplicialComplex k = build_complex(tris);
    return build_dual(k, {top + bottom}, top, bottom, apply_boundary(k, top));
}

EmbeddedDualData four_cycle_dual(int s, int t)
{
    if (s == t || s < 0 || t < 0 || s > 3 || t > 3) throw DomainError("four-cycle duality needs distinct s, t in 0..3");
    SimplicialComplex k = build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto step = [](int i) {
        int j = (i + 1) % 4;
        return std::make_pair(make_simplex({i, j}), i < j ? 1 : -1);
    };
    Chain v(1), g1(1);
    for (int i = 0; i < 4; ++i) {
        auto [e, sg] = step(i);
        v.add(e, Q(sg));
    }
    for (int i = s; i != t; i = (i + 1) % 4) {
        auto [e, sg] = step(i);
        g1.add(e, Q(sg));
    }
    return build_dual(k, {v}, g1, v - g1, apply_boundary(k, g1));
}

std::vector<SimplicialComplex> duality_subcomplexes(const EmbeddedDualData& data)
{
    std::vector<SimplicialComplex> out;
    const auto& tops = data.k.simplices(data.d);
    std::vector<Simplex> base;
    for (int i = 0; i < data.d; ++i)
        for (const Simplex& s : data.k.simplices(i)) base.push_back(s);
    for (long long m = 0; m < (1LL << tops.size()); ++m) {
        std::vector<Simplex> sel = base;
        for (std::size_t i = 0; i < tops.size(); ++i)
            if ((m >> i) & 1) sel.push_back(tops[i]);
        SimplicialComplex l = SimplicialComplex::from_simplices(sel);
        if (!is_null_homologous(l, data.gamma)) out.push_back(l);
    }
    return out;
}

std::vector<std::string> suite_names()
{
    return {"spectra", "flow-formulas", "chain-maps", "families", "collapse", "szegedy", "span-sim", "duality", "coloring"};
}

VerificationReport run_suite(const std::string& name)
{
    if (name == "all") {
        VerificationReport rep;
        for (const std::string& s : suite_names()) rep.merge(run_suite(s), s + ": ");
        return rep;
    }
    if (name == "spectra") return spectra_suite();
    if (name == "flow-formulas" || name == "appendixB") return verify_flow_formulas(standard_flow_instances());
    if (name == "chain-maps") return chain_map_suite();
    if (name == "families") return family_suite();
    if (name == "collapse") return collapse_suite();
    if (name == "szegedy") return szegedy_suite();
    if (name == "span-sim") return span_sim_suite();
    if (name == "duality") return duality_suite();
    if (name == "coloring") return coloring_suite();
    throw MalformedInputError("unknown suite: " + name);
}

}  // namespace homolab
