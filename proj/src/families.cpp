#include "homolab/families.hpp"

#include "homolab/flow.hpp"

#include <algorithm>

namespace homolab {

Simplex level_simplex(int d, int j)
{
    Simplex s;
    for (int i = 0; i <= d; ++i) s.push_back(family_vertex(d, i, j));
    return s;
}

Q scale_resistance(const Q& raw, const Q& norm2) { return raw / norm2; }
Q scale_capacitance(const Q& raw, const Q& norm2) { return raw * norm2; }

namespace {

Chain level_boundary(int d, int j) { return boundary(single<Q>(level_simplex(d, j))); }

bool disjoint_support(const Chain& a, const Chain& b)
{
    for (const auto& [s, v] : a.coeffs)
        if (b.coeffs.count(s)) return false;
    return true;
}

bool supported_in(const SimplicialComplex& k, const Chain& c)
{
    for (const auto& [s, v] : c.coeffs)
        if (!k.contains(s)) return false;
    return true;
}

std::vector<Simplex> mapped_cells(const SimplicialComplex& k, const std::function<int(int)>& f)
{
    std::vector<Simplex> out;
    for (const Simplex& s : k.maximal_simplices()) {
        auto [img, sign] = map_simplex(s, f);
        if (sign == 0) throw DomainError("vertex map collapses a simplex");
        out.push_back(img);
    }
    return out;
}

Z pow_z(long base, unsigned e)
{
    Z r;
    Z b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

BuildingBlock building_block(int d)
{
    if (d < 1) throw DomainError("building block needs d >= 1");
    BuildingBlock out;
    out.d = d;
    Simplex sigma = level_simplex(d, 0);
    std::vector<std::vector<int>> facets;
    for (int i = 0; i <= d; ++i) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != i) f.push_back(v);
        facets.push_back(f);
    }
    SimplicialComplex bd = build_complex(facets);
    DerivedComplex sp = stellar_prism(bd);
    out.checks.merge(sp.checks, "stellar prism: ");

    for (const auto& [facet, v] : sp.maps.stellar_vertex) {
        int missing = -1;
        for (int i = 0; i <= d; ++i)
            if (!std::binary_search(facet.begin(), facet.end(), i)) missing = i;
        out.relabel[v] = family_vertex(d, missing, 1);
    }
    auto g = [&](int v) {
        auto it = out.relabel.find(v);
        return it == out.relabel.end() ? v : it->second;
    };
    out.complex = SimplicialComplex::from_simplices(mapped_cells(sp.complex, g));

    Chain raw = pushforward(sp.maps.at("SP").apply(boundary(single<Q>(sigma))), g);
    Chain target = level_boundary(d, 0) + level_boundary(d, 1).scaled(Q(d));
    if (boundary(raw) == target) {
        out.f = raw;
    } else if (boundary(raw.scaled(Q(-1))) == target) {
        out.f = raw.scaled(Q(-1));
    } else {
        throw NumericError("building block chain has the wrong boundary");
    }
    out.f_norm2 = out.f.norm2();
    out.checks.add("block boundary d f = d(sigma x 0) + d d(sigma x 1)", true);
    out.checks.add("block chain supported in B_d", supported_in(out.complex, out.f));
    std::size_t merged = sp.complex.count(d) - out.complex.count(d);
    out.checks.add("d-simplex count after identification", out.complex.count(d) > 0,
                   std::to_string(out.complex.count(d)) + " d-simplices, " + std::to_string(merged) + " merged");
    return out;
}

GeneratedFamily resistance_family(int d, int n)
{
    if (d < 1 || n < 1) throw DomainError("resistance_family needs d, n >= 1");
    BuildingBlock blk = building_block(d);
    GeneratedFamily fam;
    fam.family = "B";
    fam.d = d;
    fam.n = n;
    fam.checks.merge(blk.checks, "block: ");
    std::vector<Simplex> cells{level_simplex(d, 0)};
    fam.y.push_back(single<Q>(level_simplex(d, 0)));
    for (int k = 1; k <= n; ++k) {
        auto phi = [&](int v) { return v <= d ? family_vertex(d, v, k) : family_vertex(d, v - d - 1, k - 1); };
        auto c = mapped_cells(blk.complex, phi);
        cells.insert(cells.end(), c.begin(), c.end());
        Chain fk = pushforward(blk.f, phi);
        const Chain& prev = fam.y.back();
        Chain yk = fk - prev.scaled(Q(d));
        bool orth = disjoint_support(fk, prev);
        bool rec = yk.norm2() == fk.norm2() + Q(d * d) * prev.norm2();
        fam.checks.add("copy " + std::to_string(k) + ": f_k and y_{k-1} have disjoint supports", orth);
        fam.checks.add("copy " + std::to_string(k) + ": |y_k|^2 = |f_k|^2 + d^2 |y_{k-1}|^2", rec);
        fam.f.push_back(fk);
        fam.y.push_back(yk);
    }
    fam.complex = SimplicialComplex::from_simplices(cells);
    fam.gamma_raw = level_boundary(d, n);
    fam.gamma_norm2 = fam.gamma_raw.norm2();
    fam.witness = fam.y.back();
    fam.checks.add("d y_n = d(sigma x n)", boundary(fam.witness) == fam.gamma_raw);
    fam.checks.add("|d y_n|^2 = d+1", fam.gamma_norm2 == Q(d + 1));
    bool supp = true;
    for (const Chain& c : fam.f) supp = supp && supported_in(fam.complex, c);
    fam.checks.add("block chains supported in B_d^n", supp);
    int r = rank(boundary_operator(fam.complex, d).to_z());
    fam.checks.add("ker d_d = 0", r == static_cast<int>(fam.complex.count(d)),
                   "rank " + std::to_string(r) + " of " + std::to_string(fam.complex.count(d)) + " columns");
    fam.log.push_back("B_" + std::to_string(d) + "^" + std::to_string(n) + ": " + std::to_string(fam.complex.count(d)) +
                      " d-simplices, |y_n|^2 = " + to_string(fam.witness.norm2()));
    return fam;
}

GeneratedFamily capacitance_family(int d, int n)
{
    if (d < 1 || n < 1) throw DomainError("capacitance_family needs d, n >= 1");
    BuildingBlock blk = building_block(d);
    GeneratedFamily fam;
    fam.family = "PQ";
    fam.d = d;
    fam.n = n;
    fam.checks.merge(blk.checks, "block: ");
    const Simplex bottom = level_simplex(d, 0);
    std::vector<Simplex> cells{bottom};
    fam.y.push_back(Chain(d));
    const Q inv_d = Q(1) / d;
    for (int k = 1; k <= n; ++k) {
        auto phi = [&](int v) { return v + (k - 1) * (d + 1); };
        auto c = mapped_cells(blk.complex, phi);
        cells.insert(cells.end(), c.begin(), c.end());
        Chain fk = pushforward(blk.f, phi);
        Chain yk = fk.scaled(inv_d) - fam.y.back().scaled(inv_d);
        fam.f.push_back(fk);
        fam.y.push_back(yk);
    }
    fam.complex = SimplicialComplex::from_simplices(cells);
    SimplicialComplex p = fam.complex.without({bottom});
    fam.gamma_raw = level_boundary(d, n);
    fam.gamma_norm2 = fam.gamma_raw.norm2();

    Q coef = Q(1) / Q(pow_z(d, static_cast<unsigned>(n)));
    if (n % 2 == 0) coef = -coef;  // (-1)^{n-1} d^{-n}
    const Chain& yn = fam.y.back();
    Chain part1 = fam.gamma_raw + level_boundary(d, 0).scaled(coef);
    fam.checks.add("part 1: d y_n = d(sigma x n) + (-1)^{n-1} d^{-n} d(sigma x 0)", boundary(yn) == part1);
    fam.checks.add("part 1: y_n supported in P_d^n", supported_in(p, yn));
    fam.witness = yn + single<Q>(bottom, Q(-coef));
    fam.checks.add("part 2: witness boundary is d(sigma x n)", boundary(fam.witness) == fam.gamma_raw);
    fam.checks.add("part 2: witness supported in Q_d^n", supported_in(fam.complex, fam.witness));
    fam.checks.add("part 3: d(sigma x n) does not bound in P_d^n", !is_null_homologous(p, fam.gamma_raw));
    fam.sub = p;
    fam.log.push_back("Q_" + std::to_string(d) + "^" + std::to_string(n) + ": " + std::to_string(fam.complex.count(d)) +
                      " d-simplices");
    return fam;
}

GeneratedFamily many_small(int d, int n, std::optional<int> copies)
{
    GeneratedFamily one = resistance_family(d, n);
    int m = copies ? *copies : static_cast<int>(one.complex.count(d));
    if (m < 1) throw DomainError("many_small needs at least one copy");
    if (static_cast<std::size_t>(m) * one.complex.total_size() > kManySmallCap)
        throw ResourceError("M_d^n with " + std::to_string(m) + " copies exceeds the size cap");
    GeneratedFamily fam;
    fam.family = "M";
    fam.d = d;
    fam.n = n;
    fam.checks.merge(one.checks, "component: ");
    const int off = (n + 1) * (d + 1);
    std::vector<Simplex> cells;
    for (int c = 0; c < m; ++c)
        for (Simplex s : one.complex.maximal_simplices()) {
            for (int& v : s) v += c * off;
            cells.push_back(s);
        }
    fam.complex = SimplicialComplex::from_simplices(cells);
    fam.gamma_raw = one.gamma_raw;
    fam.gamma_norm2 = one.gamma_norm2;
    fam.witness = one.witness;
    fam.f = one.f;
    fam.y = one.y;
    fam.checks.add("copy count", fam.complex.count(d) == m * one.complex.count(d),
                   std::to_string(m) + " copies of " + std::to_string(one.complex.count(d)) + " d-simplices");
    fam.log.push_back("M_" + std::to_string(d) + "^" + std::to_string(n) + ": " + std::to_string(m) + " copies");
    return fam;
}

}  // namespace homolab
