#include "fixtures.hpp"
#include "homolab/families.hpp"
#include "homolab/snf.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homolab;

namespace {

ZMatrix random_z(std::mt19937_64& rng, int r, int c, int span)
{
    ZMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

ZMatrix product(const ZMatrix& a, const ZMatrix& b)
{
    ZMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            for (int j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

}  // namespace

TEST_CASE("invariant factors match determinantal divisors")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 120; ++t) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        ZMatrix m = random_z(rng, r, c, t % 2 ? 6 : 2);
        SNFResult s = smith_normal_form(m);
        CHECK(s.diagonal == oracles::invariant_factors(m));
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
            if (s.diagonal[i + 1] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        if (r == c) {
            REQUIRE(s.abs_det);
            CHECK(*s.abs_det == abs(oracles::leibniz(m)));
        }
    }
}

TEST_CASE("recorded transforms diagonalize the input")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        ZMatrix m = random_z(rng, 3 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 4), 5);
        SNFResult s = smith_normal_form(m, true);
        REQUIRE(s.p);
        REQUIRE(s.q);
        ZMatrix d = product(product(*s.p, m), *s.q);
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j) CHECK(d(i, j) == (i == j ? s.diagonal[i] : Z(0)));
        CHECK(abs(determinant(*s.p)) == 1);
        CHECK(abs(determinant(*s.q)) == 1);
    }
}

TEST_CASE("known diagonal forms")
{
    ZMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    CHECK(smith_normal_form(m).diagonal == std::vector<Z>{Z(2), Z(4)});
    ZMatrix e(0, 0);
    CHECK(smith_normal_form(e).diagonal.empty());
    CHECK(torsion_cardinality(BoundaryOperator{}) == 1);
}

TEST_CASE("projective plane carries Z/2 torsion")
{
    SimplicialComplex p = fixtures::rp2();
    CHECK(torsion_cardinality(p, p, SimplicialComplex{}, 2) == 2);
    SNFResult s = smith_normal_form(boundary_matrix(p, 2).to_z());
    CHECK(std::count(s.diagonal.begin(), s.diagonal.end(), Z(2)) == 1);
    SimplicialComplex t = fixtures::torus();
    CHECK(torsion_cardinality(t, t, SimplicialComplex{}, 2) == 1);
}

TEST_CASE("Hadamard bound on sampled submatrices of family boundaries")
{
    for (const auto& k : {fixtures::simplex(3), fixtures::rp2(), resistance_family(2, 1).complex}) {
        TorsionReport r = bounds_report(k, 2, 500, 5);
        CHECK(r.hadamard_ok);
        CHECK(r.submatrices > 0);
        CHECK(r.t_max >= 1);
    }
}

TEST_CASE("exhaustive T_max on the tetrahedron is 1")
{
    TorsionReport r = bounds_report(fixtures::simplex(3), 2, 1, 1);
    CHECK(r.exhaustive);
    CHECK(r.t_max == 1);
    CHECK(r.n == 4);
}

TEST_CASE("relative matrix drops L0 rows")
{
    SimplicialComplex k = fixtures::simplex(2);
    SimplicialComplex l0 = build_complex({{0, 1}});
    BoundaryOperator m = relative_boundary_matrix(k, k, l0, 2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK_THROWS_AS(relative_boundary_matrix(l0, k, l0, 2), MembershipError);
}
