#include "homolab/flow.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace homolab {

std::string to_string(Backend b)
{
    switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Float: return "float";
    case Backend::Auto: return "auto";
    }
    return "?";
}

bool is_cycle(const Chain& gamma)
{
    if (gamma.dim <= 0) return true;
    return boundary(gamma).is_zero();
}

namespace {

void require_cycle_in(const SimplicialComplex& k, const Chain& gamma)
{
    for (const auto& [s, v] : gamma.coeffs) {
        if (simplex_dim(s) != gamma.dim) throw DomainError("chain contains a simplex of the wrong dimension");
        if (!k.contains(s)) throw MembershipError("cycle support not in complex: " + simplex_key(s));
    }
    if (!is_cycle(gamma)) throw DomainError("gamma is not a cycle");
}

std::vector<Q> inverse_weights(const SimplicialComplex& k, const std::vector<Simplex>& cols)
{
    std::vector<Q> c;
    c.reserve(cols.size());
    for (const Simplex& s : cols) c.push_back(1 / k.weight(s));
    return c;
}

FlowResult resistance_float(const SimplicialComplex& k, const FChain& gamma)
{
    FlowResult out;
    out.backend = Backend::Float;
    int d = gamma.dim + 1;
    if (gamma.is_zero()) {
        out.finite = true;
        out.flow_f = FChain(d);
        return out;
    }
    if (d > k.dim()) return out;
    BoundaryOperator b = boundary_operator(k, d);
    Eigen::MatrixXd a = b.to_dense();
    Eigen::VectorXd sw(b.cols());
    for (int j = 0; j < b.cols(); ++j) sw[j] = std::sqrt(to_double(k.weight(b.col_simplices[j])));
    a = a * sw.asDiagonal();
    Eigen::VectorXd g = to_eigen(gamma, b.row_simplices);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    Eigen::VectorXd y = cod.solve(g);
    double res = (a * y - g).norm();
    out.residual = res;
    if (res > 1e-8 * g.norm()) return out;
    out.finite = true;
    out.resistance_f = y.squaredNorm();
    Eigen::VectorXd x = sw.asDiagonal() * y;
    out.flow_f = from_eigen(x, b.col_simplices, d);
    return out;
}

}  // namespace

FlowResult effective_resistance(const SimplicialComplex& k, const Chain& gamma, Backend backend)
{
    require_cycle_in(k, gamma);
    int d = gamma.dim + 1;
    if (backend == Backend::Auto)
        backend = (d <= k.dim() && static_cast<int>(k.count(d)) > kExactColumnLimit) ? Backend::Float : Backend::Exact;
    if (backend == Backend::Float) return resistance_float(k, to_float(gamma));

    FlowResult out;
    out.backend = Backend::Exact;
    if (gamma.is_zero()) {
        out.finite = true;
        out.resistance = 0;
        out.flow = Chain(d);
        out.flow_f = FChain(d);
        return out;
    }
    if (d > k.dim()) return out;
    BoundaryOperator b = boundary_operator(k, d);
    EnergyMinimum em = min_weighted_energy(b.to_q(), to_vector(gamma, b.row_simplices),
                                           inverse_weights(k, b.col_simplices));
    if (!em.feasible) return out;
    out.finite = true;
    out.resistance = em.value;
    out.resistance_f = to_double(em.value);
    out.flow = from_vector(em.x, b.col_simplices, d);
    out.flow_f = to_float(out.flow);
    return out;
}

FlowResult effective_resistance(const SimplicialComplex& k, const FChain& gamma)
{
    for (const auto& [s, v] : gamma.coeffs)
        if (!k.contains(s)) throw MembershipError("cycle support not in complex: " + simplex_key(s));
    if (gamma.dim > 0) {
        FChain bd = boundary(gamma);
        double scale = 0, err = 0;
        for (const auto& [s, v] : gamma.coeffs) scale += v * v;
        for (const auto& [s, v] : bd.coeffs) err += v * v;
        if (err > 1e-16 * std::max(1.0, scale)) throw DomainError("gamma is not a cycle");
    }
    return resistance_float(k, gamma);
}

FlowResult effective_resistance_nullspace(const SimplicialComplex& k, const Chain& gamma)
{
    require_cycle_in(k, gamma);
    int d = gamma.dim + 1;
    FlowResult out;
    out.backend = Backend::Exact;
    if (d > k.dim()) {
        if (gamma.is_zero()) {
            out.finite = true;
            out.resistance = 0;
        }
        return out;
    }
    BoundaryOperator b = boundary_operator(k, d);
    QMatrix e = b.to_q();
    auto x0 = solve_any(e, to_vector(gamma, b.row_simplices));
    if (!x0) return out;
    std::vector<Q> winv = inverse_weights(k, b.col_simplices);
    std::vector<std::vector<Q>> ns = nullspace(e);
    const int m = static_cast<int>(ns.size());
    std::vector<Q> x = *x0;
    if (m > 0) {
        QMatrix g(m, m);
        std::vector<Q> rhs(m, Q(0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                Q s = 0;
                for (int c = 0; c < e.cols; ++c)
                    if (ns[i][c] != 0 && ns[j][c] != 0) s += ns[i][c] * winv[c] * ns[j][c];
                g(i, j) = s;
            }
            Q s = 0;
            for (int c = 0; c < e.cols; ++c)
                if (ns[i][c] != 0 && x[c] != 0) s += ns[i][c] * winv[c] * x[c];
            rhs[i] = -s;
        }
        auto t = solve_any(g, rhs);
        if (!t) throw NumericError("nullspace Gram system is singular");
        for (int i = 0; i < m; ++i)
            if ((*t)[i] != 0)
                for (int c = 0; c < e.cols; ++c) x[c] += (*t)[i] * ns[i][c];
    }
    Q energy = 0;
    for (int c = 0; c < e.cols; ++c) energy += x[c] * x[c] * winv[c];
    out.finite = true;
    out.resistance = energy;
    out.resistance_f = to_double(energy);
    out.flow = from_vector(x, b.col_simplices, d);
    out.flow_f = to_float(out.flow);
    return out;
}

bool is_null_homologous(const SimplicialComplex& k, const Chain& gamma, Backend backend)
{
    require_cycle_in(k, gamma);
    if (gamma.is_zero()) return true;
    int d = gamma.dim + 1;
    if (d > k.dim()) return false;
    if (backend == Backend::Float) return resistance_float(k, to_float(gamma)).finite;
    BoundaryOperator b = boundary_operator(k, d);
    return in_column_span(b.to_z(), clear_denominators(to_vector(gamma, b.row_simplices)));
}

Q flow_energy(const SimplicialComplex& k, const Chain& f)
{
    Q e = 0;
    for (const auto& [s, v] : f.coeffs) e += v * v / k.weight(s);
    return e;
}

Q potential_energy(const SimplicialComplex& k, const Chain& p)
{
    Q e = 0;
    int d = p.dim + 1;
    if (d > k.dim()) return e;
    for (const Simplex& s : k.simplices(d)) {
        Q v = 0;
        for (const auto& [f, sg] : signed_facets(s)) {
            Q c = p.get(f);
            if (c != 0) v += sg * c;
        }
        if (v != 0) e += v * v * k.weight(s);
    }
    return e;
}

PotentialResult effective_capacitance(const SimplicialComplex& l, const SimplicialComplex& k, const Chain& gamma)
{
    if (!l.is_subcomplex_of(k)) throw ContainmentError("L is not a subcomplex of K");
    require_cycle_in(l, gamma);
    if (!is_null_homologous(k, gamma)) throw DomainError("capacitance undefined: gamma does not bound in K");
    PotentialResult out;
    if (is_null_homologous(l, gamma)) return out;

    const int d = gamma.dim + 1;
    const std::vector<Simplex>& rows = l.simplices(d - 1);
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<Q>> basis;
    if (d <= l.dim() && l.count(d) > 0) {
        BoundaryOperator bl = boundary_operator(l, d);
        QMatrix bt(bl.cols(), n);
        for (int c = 0; c < bl.cols(); ++c)
            for (const auto& [r, s] : bl.columns[c]) bt(c, r) = s;
        basis = nullspace(bt);
    } else {
        for (int i = 0; i < n; ++i) {
            std::vector<Q> e(n, Q(0));
            e[i] = 1;
            basis.push_back(e);
        }
    }
    const int m = static_cast<int>(basis.size());
    std::vector<Q> gv = to_vector(gamma, rows);
    std::vector<Q> g(m);
    for (int j = 0; j < m; ++j) g[j] = dot(basis[j], gv);

    QMatrix mm(m, m);
    for (const Simplex& s : k.simplices(d)) {
        if (l.contains(s)) continue;
        std::vector<Q> a(m, Q(0));
        bool any = false;
        for (const auto& [f, sg] : signed_facets(s)) {
            int r = l.index_of(f);
            if (r < 0) continue;
            for (int j = 0; j < m; ++j)
                if (basis[j][r] != 0) {
                    a[j] += sg * basis[j][r];
                    any = true;
                }
        }
        if (!any) continue;
        Q w = k.weight(s);
        for (int i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (a[j] != 0) mm(i, j) += w * a[i] * a[j];
        }
    }
    auto sol = solve_any(mm, g);
    if (!sol) throw NumericError("capacitance system inconsistent although gamma bounds in K");
    Q gs = dot(g, *sol);
    if (gs == 0) throw NumericError("degenerate capacitance system");
    out.finite = true;
    out.capacitance = 1 / gs;
    std::vector<Q> p(n, Q(0));
    for (int j = 0; j < m; ++j) {
        Q t = (*sol)[j] / gs;
        if (t == 0) continue;
        for (int r = 0; r < n; ++r)
            if (basis[j][r] != 0) p[r] += t * basis[j][r];
    }
    out.potential = from_vector(p, rows, d - 1);
    return out;
}

namespace {

std::set<Simplex> top_set(const SimplicialComplex& k, int d)
{
    if (d > k.dim()) return {};
    const auto& v = k.simplices(d);
    return {v.begin(), v.end()};
}

/// dim(im A1 ∩ im A2) via rank(A1) + rank(A2) - rank([A1 | A2]) over a shared row basis.
int image_intersection_dim(const SimplicialComplex& k, const SimplicialComplex& k1, const SimplicialComplex& k2, int d)
{
    const std::vector<Simplex>& rows = k.simplices(d - 1);
    auto build = [&](const std::vector<const SimplicialComplex*>& parts) {
        std::vector<Simplex> cols;
        for (const auto* p : parts)
            if (d <= p->dim()) cols.insert(cols.end(), p->simplices(d).begin(), p->simplices(d).end());
        ZMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [f, sg] : signed_facets(cols[c])) {
                auto it = std::lower_bound(rows.begin(), rows.end(), f);
                m(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = sg;
            }
        return rank(m);
    };
    return build({&k1}) + build({&k2}) - build({&k1, &k2});
}

std::string fmtq(const FlowResult& r) { return r.finite ? to_string(r.resistance) : std::string("inf"); }

}  // namespace

VerificationReport verify_flow_formulas(const FlowFormulaInstances& inst)
{
    VerificationReport rep;
    for (const SeriesInstance& s : inst.series) {
        const int d = s.gamma.dim + 1;
        auto t1 = top_set(s.k1, d), t2 = top_set(s.k2, d), t = top_set(s.k, d);
        std::set<Simplex> uni = t1;
        uni.insert(t2.begin(), t2.end());
        bool disjoint = uni.size() == t1.size() + t2.size();
        if (!disjoint || uni != t || !(s.gamma1 + s.gamma2 == s.gamma) || !is_null_homologous(s.k1, s.gamma1) ||
            !is_null_homologous(s.k2, s.gamma2)) {
            rep.add("series " + s.name, true, "skipped: hypotheses not met");
            continue;
        }
        FlowResult r = effective_resistance(s.k, s.gamma, Backend::Exact);
        FlowResult r1 = effective_resistance(s.k1, s.gamma1, Backend::Exact);
        FlowResult r2 = effective_resistance(s.k2, s.gamma2, Backend::Exact);
        Q bound = r1.resistance + r2.resistance;
        bool unique = image_intersection_dim(s.k, s.k1, s.k2, d) == 0;
        bool ok = r.finite && r.resistance <= bound && (!unique || r.resistance == bound);
        rep.add("series " + s.name, ok,
                "R=" + fmtq(r) + " R1+R2=" + to_string(bound) + (unique ? " (equality case)" : ""));
    }
    for (const ParallelInstance& p : inst.parallel) {
        const int d = p.gamma.dim + 1;
        auto t1 = top_set(p.k1, d), t2 = top_set(p.k2, d), t = top_set(p.k, d);
        std::set<Simplex> uni = t1;
        uni.insert(t2.begin(), t2.end());
        if (uni.size() != t1.size() + t2.size() || uni != t || !is_null_homologous(p.k1, p.gamma) ||
            !is_null_homologous(p.k2, p.gamma)) {
            rep.add("parallel " + p.name, true, "skipped: hypotheses not met");
            continue;
        }
        FlowResult r = effective_resistance(p.k, p.gamma, Backend::Exact);
        FlowResult r1 = effective_resistance(p.k1, p.gamma, Backend::Exact);
        FlowResult r2 = effective_resistance(p.k2, p.gamma, Backend::Exact);
        Q bound = r1.resistance * r2.resistance / (r1.resistance + r2.resistance);
        bool eq_case = image_intersection_dim(p.k, p.k1, p.k2, d) == 1;
        bool ok = r.finite && r.resistance <= bound && (!eq_case || r.resistance == bound);
        rep.add("parallel " + p.name, ok,
                "R=" + fmtq(r) + " bound=" + to_string(bound) + (eq_case ? " (equality case)" : ""));
    }
    for (const MonotoneInstance& m : inst.monotone) {
        if (!m.l.is_subcomplex_of(m.k) || !is_null_homologous(m.l, m.gamma)) {
            rep.add("monotone " + m.name, true, "skipped: hypotheses not met");
            continue;
        }
        FlowResult rk = effective_resistance(m.k, m.gamma, Backend::Exact);
        FlowResult rl = effective_resistance(m.l, m.gamma, Backend::Exact);
        rep.add("monotone " + m.name, rk.finite && rk.resistance <= rl.resistance,
                "R(K)=" + fmtq(rk) + " R(L)=" + fmtq(rl));
    }
    return rep;
}

}  // namespace homolab
