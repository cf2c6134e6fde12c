#include "fixtures.hpp"
#include "homolab/betti.hpp"
#include "homolab/spansim.hpp"
#include "homolab/spectra.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace homolab;

namespace {

/// beta_d from ranks computed by the minor oracle.
int oracle_betti(const SimplicialComplex& k, int d)
{
    if (d > k.dim()) return 0;
    int rd = d == 0 ? 0 : oracles::minor_rank(boundary_matrix(k, d).to_z());
    int ru = d + 1 > k.dim() ? 0 : oracles::minor_rank(boundary_matrix(k, d + 1).to_z());
    return static_cast<int>(k.count(d)) - rd - ru;
}

}  // namespace

TEST_CASE("three Betti routes agree on random complexes")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed);
        for (int d = 0; d <= std::min(2, k.dim()); ++d) {
            int m = matrix_reduction_betti(k, d);
            CHECK(incremental_betti(k, d, classical_exact_tester()).betti == m);
            CHECK(betti_via_hodge(k, d) == m);
        }
    }
}

TEST_CASE("matrix reduction matches a minor-rank oracle on small complexes")
{
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed, 5, 2, 4);
        for (int d = 0; d <= std::min(1, k.dim()); ++d) CHECK(matrix_reduction_betti(k, d) == oracle_betti(k, d));
    }
}

TEST_CASE("torus and projective plane over the rationals")
{
    SimplicialComplex t = fixtures::torus();
    CHECK(incremental_betti(t, 1, classical_exact_tester()).betti == 2);
    CHECK(incremental_betti(t, 2, classical_exact_tester()).betti == 1);
    SimplicialComplex p = fixtures::rp2();
    CHECK(incremental_betti(p, 1, classical_exact_tester()).betti == 0);
    CHECK(matrix_reduction_betti(p, 2) == 0);
}

TEST_CASE("step deltas sum to the Betti number and respect the order")
{
    SimplicialComplex k = fixtures::sphere2();
    std::vector<Simplex> order(k.simplices(1).rbegin(), k.simplices(1).rend());
    order.insert(order.end(), k.simplices(2).rbegin(), k.simplices(2).rend());
    BettiRun run = incremental_betti(k, 1, classical_exact_tester(), order);
    CHECK(run.order == order);
    int sum = 0;
    for (const auto& s : run.steps) sum += s.delta;
    CHECK(sum == run.betti);
    CHECK(run.betti == 0);
    CHECK(run.invocations == static_cast<long long>(k.count(1) + k.count(2)));
}

TEST_CASE("shuffled orders give the same answer")
{
    SimplicialComplex k = fixtures::torus();
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(incremental_betti(k, 1, classical_exact_tester(), std::nullopt, seed).betti == 2);
}

TEST_CASE("float tester agrees on the small fixtures")
{
    for (const auto& k : {fixtures::torus(), fixtures::sphere2(), fixtures::simplex(3)})
        for (int d = 0; d <= 2; ++d)
            CHECK(incremental_betti(k, d, classical_float_tester()).betti == matrix_reduction_betti(k, d));
}

TEST_CASE("span-program tester reproduces Betti numbers and counts queries")
{
    for (const auto& k : {fixtures::sphere2(), fixtures::simplex(2), build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}})}) {
        for (int d = 0; d <= 1; ++d) {
            BettiRun run = incremental_betti(k, d, span_sim_tester(1e-6, 3));
            CHECK(run.betti == matrix_reduction_betti(k, d));
            if (d == 1) CHECK(run.queries > 0);
        }
    }
}

TEST_CASE("an order that is not a permutation is rejected")
{
    SimplicialComplex k = fixtures::simplex(2);
    std::vector<Simplex> bad = {Simplex{0, 1}, Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 1, 2}};
    CHECK_THROWS_AS(incremental_betti(k, 1, classical_exact_tester(), bad), DomainError);
}
