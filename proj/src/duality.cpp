#include "homolab/duality.hpp"

#include "homolab/betti.hpp"
#include "homolab/flow.hpp"
#include "homolab/linalg.hpp"

#include <set>

namespace homolab {

namespace {

std::set<Simplex> support(const Chain& c)
{
    std::set<Simplex> s;
    for (const auto& [sx, v] : c.coeffs) s.insert(sx);
    return s;
}

Chain boundary_of(const SimplicialComplex& k, const ExtendedChain& c, const Chain& gamma)
{
    Chain b = apply_boundary(k, c.cells);
    b -= gamma.scaled(c.sigma);
    return b;
}

}  // namespace

EmbeddedDualData build_dual(const SimplicialComplex& k, const std::vector<Chain>& voids, const Chain& gamma1,
                            const Chain& gamma2, const Chain& gamma)
{
    EmbeddedDualData out;
    out.k = k;
    out.d = k.dim();
    int d = out.d;
    if (d < 1) throw DomainError("duality: complex must have dimension at least 1");
    if (gamma.dim != d - 1 || gamma1.dim != d || gamma2.dim != d)
        throw DomainError("duality: gamma must be a (d-1)-chain and Gamma_1, Gamma_2 d-chains");
    out.voids = voids;
    out.gamma = gamma;
    out.gamma1 = gamma1;
    out.gamma2 = gamma2;

    for (std::size_t i = 0; i < voids.size(); ++i) {
        if (voids[i].dim != d) throw DomainError("void " + std::to_string(i) + " is not a d-chain");
        if (!apply_boundary(k, voids[i]).is_zero())
            throw DomainError("void " + std::to_string(i) + " fails the boundary-of-boundary condition");
    }
    int beta = matrix_reduction_betti(k, d);
    if (static_cast<int>(voids.size()) != beta)
        throw DomainError("duality: " + std::to_string(voids.size()) + " bounded voids but beta_d = " +
                          std::to_string(beta));
    Chain infinity(d);
    for (const Chain& v : voids) infinity -= v;
    for (const Simplex& s : k.simplices(d)) {
        int nonzero = 0;
        for (const Chain& v : voids) {
            Q c = v.get(s);
            if (c != 0 && c != 1 && c != -1) throw DomainError("orientation condition: coefficient not +-1 on " + simplex_key(s));
            nonzero += c != 0;
        }
        Q c = infinity.get(s);
        if (c != 0 && c != 1 && c != -1) throw DomainError("orientation condition: " + simplex_key(s) + " has equal signs on two voids");
        nonzero += c != 0;
        if (nonzero > 2) throw DomainError("orientation condition: " + simplex_key(s) + " bounds more than two voids");
    }

    if (!(apply_boundary(k, gamma1) == gamma)) throw DomainError("partition condition: d Gamma_1 != gamma");
    if (!(apply_boundary(k, gamma2) == gamma.scaled(Q(-1)))) throw DomainError("partition condition: d Gamma_2 != -gamma");
    std::set<Simplex> s1 = support(gamma1), s2 = support(gamma2), both = s1;
    for (const Simplex& s : s2)
        if (!both.insert(s).second) throw DomainError("partition condition: supports of Gamma_1 and Gamma_2 intersect");
    for (std::size_t i = 0; i < voids.size(); ++i)
        if (support(voids[i]) == both && gamma1 + gamma2 == voids[i]) out.split_index = static_cast<int>(i);
    if (out.split_index < 0)
        throw DomainError("partition condition: Gamma_1 + Gamma_2 is not the boundary of any bounded void");

    for (std::size_t i = 0; i < voids.size(); ++i) {
        if (static_cast<int>(i) == out.split_index) continue;
        out.vertices.push_back("V" + std::to_string(i));
        out.vertex_columns.push_back({voids[i], Q(0)});
    }
    out.s_star = static_cast<int>(out.vertices.size());
    out.vertices.push_back("s*");
    out.vertex_columns.push_back({gamma1, Q(1)});
    out.t_star = static_cast<int>(out.vertices.size());
    out.vertices.push_back("t*");
    out.vertex_columns.push_back({gamma2, Q(-1)});
    out.infinity = static_cast<int>(out.vertices.size());
    out.vertices.push_back("inf");
    out.vertex_columns.push_back({infinity, Q(0)});

    for (const Simplex& s : k.simplices(d)) {
        DualEdge e;
        e.label = simplex_key(s);
        e.simplex = s;
        e.weight = 1 / k.weight(s);
        for (int v = 0; v < static_cast<int>(out.vertex_columns.size()); ++v) {
            Q c = out.vertex_columns[v].cells.get(s);
            if (c == 1) e.head = v;
            if (c == -1) e.tail = v;
        }
        out.edges.push_back(e);
    }
    out.edges.push_back({"Sigma", Simplex{}, out.t_star, out.s_star, Q(1)});

    bool closed = true;
    for (const auto& c : out.vertex_columns) closed = closed && boundary_of(k, c, gamma).is_zero();
    out.checks.add("split voids are cycles", closed);

    // dim H_1(K*) = (n_d + 1) - rank(void columns) - rank(d_d).
    int nd = static_cast<int>(k.count(d));
    QMatrix vm(nd + 1, static_cast<int>(out.vertex_columns.size()));
    for (int j = 0; j < vm.cols; ++j) {
        for (const auto& [s, v] : out.vertex_columns[j].cells.coeffs) vm(k.index_of(s), j) = v;
        vm(nd, j) = out.vertex_columns[j].sigma;
    }
    int h1 = nd + 1 - rank(vm) - rank(boundary_operator(k, d).to_q());
    out.checks.add("dual first homology vanishes", h1 == 0, "dim H_1(K*) = " + std::to_string(h1));
    return out;
}

std::optional<Q> dual_resistance(const EmbeddedDualData& data, const SimplicialComplex& l, Chain* circulation)
{
    if (!l.is_subcomplex_of(data.k)) throw ContainmentError("duality: L is not a subcomplex of K");
    std::vector<Simplex> free;
    for (const Simplex& s : data.k.simplices(data.d))
        if (!l.contains(s)) free.push_back(s);
    int nv = static_cast<int>(data.vertex_columns.size());
    std::vector<Q> b(nv);
    for (int v = 0; v < nv; ++v) b[v] = -data.vertex_columns[v].sigma;
    if (free.empty()) return std::nullopt;
    QMatrix e(nv, static_cast<int>(free.size()));
    std::vector<Q> cost;
    for (int j = 0; j < e.cols; ++j) {
        for (int v = 0; v < nv; ++v) e(v, j) = data.vertex_columns[v].cells.get(free[j]);
        cost.push_back(data.k.weight(free[j]));
    }
    EnergyMinimum m = min_weighted_energy(e, b, cost);
    if (!m.feasible) return std::nullopt;
    if (circulation) *circulation = from_vector(m.x, free, data.d);
    return m.value;
}

DualityCheck check_duality(const EmbeddedDualData& data, const SimplicialComplex& l)
{
    const SimplicialComplex& k = data.k;
    if (!is_null_homologous(k, data.gamma)) throw DomainError("duality: gamma is not null-homologous in K");
    if (!l.is_subcomplex_of(k)) throw ContainmentError("duality: L is not a subcomplex of K");
    for (const auto& [s, v] : data.gamma.coeffs)
        if (!l.contains(s)) throw DomainError("duality: gamma is not supported in L");
    for (const Simplex& s : k.simplices(data.d - 1))
        if (!l.contains(s)) throw DomainError("duality: L must contain the (d-1)-skeleton of K, missing " + simplex_key(s));
    if (is_null_homologous(l, data.gamma)) throw DomainError("duality: gamma bounds in L");

    DualityCheck out;
    PotentialResult pot = effective_capacitance(l, k, data.gamma);
    out.capacitance_finite = pot.finite;
    out.capacitance = pot.capacitance;
    auto r = dual_resistance(data, l, &out.circulation);
    out.resistance_finite = r.has_value();
    if (r) out.dual_resistance = *r;
    out.equal = out.capacitance_finite && out.resistance_finite && out.capacitance == out.dual_resistance;
    if (out.capacitance_finite && out.resistance_finite) out.difference = abs(out.capacitance - out.dual_resistance);

    if (pot.finite) {
        // f = -delta p is a unit circulation with the potential's energy.
        Chain f(data.d);
        bool vanishes_on_l = true;
        Q energy = 0;
        for (const Simplex& s : k.simplices(data.d)) {
            Q v = 0;
            for (const auto& [face, sign] : signed_facets(s)) v += sign * pot.potential.get(face);
            v = -v;
            if (l.contains(s)) {
                vanishes_on_l = vanishes_on_l && v == 0;
                continue;
            }
            f.add(s, v);
            energy += v * v * k.weight(s);
        }
        bool cycle = true;
        for (const auto& c : data.vertex_columns) {
            Q div = c.sigma;
            for (const auto& [s, v] : f.coeffs) div += c.cells.get(s) * v;
            cycle = cycle && div == 0;
        }
        out.checks.add("potential vanishes on L", vanishes_on_l);
        out.checks.add("image is a unit circulation", cycle);
        out.checks.add("energies agree", energy == pot.capacitance, to_string(energy) + " vs " + to_string(pot.capacitance));
    }
    out.checks.add("capacitance equals dual resistance", out.equal,
                   (out.capacitance_finite ? to_string(out.capacitance) : std::string("inf")) + " vs " +
                       (out.resistance_finite ? to_string(out.dual_resistance) : std::string("inf")));
    return out;
}

}  // namespace homolab
