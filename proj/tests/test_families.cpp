#include "fixtures.hpp"
#include "homolab/chainmaps.hpp"
#include "homolab/families.hpp"
#include "homolab/flow.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace homolab;

namespace {

void require_checks(const VerificationReport& r)
{
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
}

Z power(long base, int e)
{
    Z out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

TEST_CASE("building blocks carry the prescribed chain")
{
    const std::size_t cells[] = {0, 2, 9, 24};
    for (int d = 1; d <= 3; ++d) {
        BuildingBlock b = building_block(d);
        require_checks(b.checks);
        CHECK(b.complex.count(d) == cells[d]);
        Chain expected = boundary(single<Q>(level_simplex(d, 0))) + boundary(single<Q>(level_simplex(d, 1), Q(d)));
        CHECK(apply_boundary(b.complex, b.f) == expected);
        CHECK(b.f.norm2() == b.f_norm2);
    }
}

TEST_CASE("resistance family follows the y recursion and the QP oracle")
{
    for (int d = 2; d <= 3; ++d) {
        int top = d == 2 ? 4 : 2;
        Q prev = 1;
        for (int n = 1; n <= top; ++n) {
            GeneratedFamily g = resistance_family(d, n);
            require_checks(g.checks);
            const Chain& y = g.y[n];
            CHECK(apply_boundary(g.complex, y).norm2() == d + 1);
            CHECK(y.norm2() == g.f[n - 1].norm2() + Q(d * d) * prev);
            prev = y.norm2();
            auto oracle = oracles::resistance_qp(g.complex, g.gamma_raw);
            REQUIRE(oracle);
            CHECK(scale_resistance(*oracle, g.gamma_norm2) == y.norm2() / (d + 1));
            FlowResult r = effective_resistance(g.complex, g.gamma_raw, Backend::Exact);
            CHECK(r.resistance == *oracle);
        }
    }
}

TEST_CASE("capacitance family equals (d+1) d^(2n) by the QP oracle")
{
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= (d == 2 ? 4 : 2); ++n) {
            GeneratedFamily g = capacitance_family(d, n);
            require_checks(g.checks);
            REQUIRE(g.sub);
            CHECK(g.sub->is_subcomplex_of(g.complex));
            auto oracle = oracles::capacitance_qp(*g.sub, g.complex, g.gamma_raw);
            REQUIRE(oracle);
            CHECK(scale_capacitance(*oracle, g.gamma_norm2) == Q(power(d, 2 * n) * (d + 1)));
            PotentialResult c = effective_capacitance(*g.sub, g.complex, g.gamma_raw);
            CHECK(c.capacitance == *oracle);
            CHECK(apply_boundary(g.complex, g.witness) == g.gamma_raw);
        }
    }
}

TEST_CASE("many-small family is a disjoint union of copies")
{
    GeneratedFamily one = resistance_family(2, 2);
    GeneratedFamily m = many_small(2, 2, 3);
    CHECK(m.complex.count(2) == 3 * one.complex.count(2));
    CHECK(m.complex.count(0) == 3 * one.complex.count(0));
    CHECK(connected_components(m.complex).size() == 3);
}

TEST_CASE("chain maps commute with the boundary on every basis chain")
{
    for (int d = 1; d <= 3; ++d) {
        SimplicialComplex k = fixtures::simplex(d);
        for (const DerivedComplex& dc : {stellar_subdivision(k), prism(k), stellar_prism(k)}) {
            require_checks(dc.checks);
            for (const auto& [name, map] : dc.maps.maps) {
                if (name == "P" || name == "SP") continue;
                for (const auto& [s, image] : map.columns) {
                    if (s.size() < 2) continue;
                    Chain c = single<Q>(s);
                    CHECK_MESSAGE(boundary(image) == map.apply(boundary(c)), name << " on " << simplex_key(s));
                    // The stellar prism subdivides the top copy, so only S I1 lands in it.
                    if (name == "I1" && dc.maps.maps.count("SP")) continue;
                    for (const auto& [cell, coeff] : image.coeffs) CHECK_MESSAGE(dc.complex.contains(cell), name << " " << simplex_key(cell));
                }
            }
        }
    }
}

TEST_CASE("prism operators satisfy the chain homotopy formulas")
{
    for (int d = 1; d <= 3; ++d) {
        SimplicialComplex k = fixtures::simplex(d);
        DerivedComplex pr = prism(k);
        const ChainMap& p = pr.maps.at("P");
        for (int e = 0; e <= d; ++e)
            for (const Simplex& s : k.simplices(e)) {
                Chain c = single<Q>(s);
                Chain lhs = boundary(p.apply(c));
                if (e > 0) lhs += p.apply(boundary(c));
                CHECK(lhs == pr.maps.at("I1").apply(c) - pr.maps.at("I0").apply(c));
            }
        DerivedComplex sp = stellar_prism(k);
        const ChainMap& h = sp.maps.at("SP");
        for (int e = 0; e <= d; ++e)
            for (const Simplex& s : k.simplices(e)) {
                Chain c = single<Q>(s);
                Chain lhs = boundary(h.apply(c));
                if (e > 0) lhs += h.apply(boundary(c));
                Chain rhs = sp.maps.at("S").apply(sp.maps.at("I1").apply(c)) - sp.maps.at("I0").apply(c);
                CHECK_MESSAGE(lhs == rhs, "SP on " << simplex_key(s));
            }
    }
}

TEST_CASE("top cell counts of derived complexes")
{
    for (int d = 1; d <= 3; ++d) {
        SimplicialComplex k = fixtures::simplex(d);
        CHECK(stellar_subdivision(k).complex.count(d) == static_cast<std::size_t>(d + 1));
        CHECK(prism(k).complex.count(d + 1) == static_cast<std::size_t>(d + 1));
        CHECK(stellar_prism(k).complex.count(d + 1) == stellar_prism_top_count(d, 1));
    }
}

TEST_CASE("cone identity on the augmented boundary")
{
    Chain c = single<Q>(Simplex{0, 1});
    Chain lhs = boundary(cone_last(c, 9), true) + cone_last(boundary(c, true), 9);
    CHECK(lhs == c);
}

TEST_CASE("invalid family parameters are rejected")
{
    CHECK_THROWS_AS(resistance_family(0, 1), DomainError);
    CHECK_THROWS_AS(capacitance_family(2, 0), DomainError);
}
