#include "fixtures.hpp"
#include "homolab/betti.hpp"
#include "homolab/collapse.hpp"
#include "homolab/families.hpp"
#include "homolab/flow.hpp"
#include "homolab/linalg.hpp"

#include <doctest.h>

#include <algorithm>

using namespace homolab;

namespace {

SimplicialComplex cone(const SimplicialComplex& k)
{
    int apex = k.max_vertex() + 1;
    std::vector<Simplex> cells = k.maximal_simplices();
    for (Simplex s : k.maximal_simplices()) {
        s.push_back(apex);
        cells.push_back(s);
    }
    return SimplicialComplex::from_simplices(cells);
}

void same_betti(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (int d = 0; d <= a.dim(); ++d) {
        int bb = d <= b.dim() ? matrix_reduction_betti(b, d) : 0;
        CHECK(matrix_reduction_betti(a, d) == bb);
    }
}

}  // namespace

TEST_CASE("a full simplex collapses to a point")
{
    for (int d = 1; d <= 3; ++d) {
        CollapseSequence s = greedy_collapse(fixtures::simplex(d));
        CHECK(s.result.total_size() == 1);
        for (const auto& c : verify_collapse_sequence(s).checks) CHECK_MESSAGE(c.pass, c.name);
    }
}

TEST_CASE("free pairs have exactly one coface")
{
    SimplicialComplex k = build_complex({{0, 1, 2}, {2, 3}});
    auto pairs = find_collapse_pairs(k);
    CHECK(!pairs.empty());
    for (const auto& [sigma, tau] : pairs) {
        CHECK(sigma.size() == tau.size() + 1);
        int cofaces = 0;
        for (int d = 0; d <= k.dim(); ++d)
            for (const Simplex& s : k.simplices(d))
                if (s.size() == tau.size() + 1 && std::includes(s.begin(), s.end(), tau.begin(), tau.end())) ++cofaces;
        CHECK(cofaces == 1);
    }
    CHECK(find_collapse_pairs(fixtures::sphere2()).empty());
}

TEST_CASE("family complexes collapse to graphs and keep their homology")
{
    for (int n = 1; n <= 3; ++n) {
        GeneratedFamily b = resistance_family(2, n);
        CollapseSequence sb = greedy_collapse(b.complex, 1);
        CHECK(sb.reached_target);
        CHECK(sb.result.dim() <= 1);
        same_betti(b.complex, sb.result);
        GeneratedFamily q = capacitance_family(2, n);
        CollapseSequence sp = greedy_collapse(*q.sub, 1);
        CHECK(sp.reached_target);
        CHECK(sp.result.dim() <= 1);
        same_betti(*q.sub, sp.result);
    }
}

TEST_CASE("transported chains keep their boundary")
{
    for (int n = 1; n <= 3; ++n) {
        GeneratedFamily b = resistance_family(2, n);
        CollapseSequence s = greedy_collapse(cone(b.complex), 2);
        for (const auto& c : verify_collapse_sequence(s).checks) CHECK(c.pass);
        Chain moved = transport_chain(s, b.witness, b.gamma_raw);
        CHECK(apply_boundary(s.result, moved) == b.gamma_raw);
    }
}

TEST_CASE("null-homology survives collapse on random complexes")
{
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed, 7, 3, 6);
        CollapseSequence s = greedy_collapse(k);
        same_betti(k, s.result);
        if (s.result.dim() < 1) continue;
        BoundaryOperator b1 = boundary_matrix(s.result, 1);
        for (const auto& v : nullspace(b1.to_q())) {
            Chain gamma = from_vector(v, b1.col_simplices, 1);
            CHECK(is_null_homologous(k, gamma) == is_null_homologous(s.result, gamma));
            ++compared;
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("a chain that does not bound gamma is rejected")
{
    SimplicialComplex k = fixtures::simplex(2);
    CollapseSequence s = greedy_collapse(k, 1);
    Chain wrong = single<Q>(Simplex{0, 1, 2}, Q(2));
    CHECK_THROWS_AS(transport_chain(s, wrong, boundary(single<Q>(Simplex{0, 1, 2}))), DomainError);
}
