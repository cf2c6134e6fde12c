#include "fixtures.hpp"
#include "homolab/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homolab;
using fixtures::q;

namespace {

ZMatrix random_z(std::mt19937_64& rng, int r, int c, int span)
{
    ZMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

}  // namespace

TEST_CASE("determinant matches the Leibniz expansion")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        ZMatrix m = random_z(rng, n, n, 4);
        CHECK(determinant(m) == oracles::leibniz(m));
    }
}

TEST_CASE("rank matches the largest nonsingular minor")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        ZMatrix m = random_z(rng, r, c, 1);
        CHECK(rank(m) == oracles::minor_rank(m));
        CHECK(rank(to_q(m)) == oracles::minor_rank(m));
    }
}

TEST_CASE("solve, span membership and nullspace are consistent")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        int r = 2 + static_cast<int>(rng() % 4), c = 2 + static_cast<int>(rng() % 4);
        QMatrix a = to_q(random_z(rng, r, c, 2));
        std::vector<Q> x(c);
        for (auto& v : x) v = q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        std::vector<Q> b = multiply(a, x);
        auto sol = solve_any(a, b);
        REQUIRE(sol);
        CHECK(multiply(a, *sol) == b);
        CHECK(in_column_span(a, b));
        auto ns = nullspace(a);
        CHECK(static_cast<int>(ns.size()) == c - rank(a));
        for (const auto& v : ns)
            for (const Q& e : multiply(a, v)) CHECK(e == 0);
    }
    QMatrix a(2, 1);
    a(0, 0) = 1;
    a(1, 0) = 1;
    CHECK_FALSE(solve_any(a, {Q(1), Q(2)}));
    CHECK_FALSE(in_column_span(a, {Q(1), Q(2)}));
}

TEST_CASE("weighted energy minimum on two parallel resistors")
{
    // x1 + x2 = 1 with costs 1 and 3: x = (3/4, 1/4), energy 3/4.
    QMatrix e(1, 2);
    e(0, 0) = 1;
    e(0, 1) = 1;
    EnergyMinimum m = min_weighted_energy(e, {Q(1)}, {Q(1), Q(3)});
    REQUIRE(m.feasible);
    CHECK(m.x[0] == q(3, 4));
    CHECK(m.x[1] == q(1, 4));
    CHECK(m.value == q(3, 4));
    QMatrix z(1, 1);
    CHECK_FALSE(min_weighted_energy(z, {Q(1)}, {Q(1)}).feasible);
}

TEST_CASE("clearing denominators keeps the direction primitive")
{
    auto v = clear_denominators({q(1, 2), q(-3, 4), Q(0)});
    CHECK(v == std::vector<Z>{Z(2), Z(-3), Z(0)});
}
