#include "fixtures.hpp"
#include "homolab/betti.hpp"
#include "homolab/coloring.hpp"
#include "homolab/families.hpp"
#include "homolab/flow.hpp"
#include "homolab/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace homolab;

TEST_CASE("triangle graph Laplacian is 0, 3, 3")
{
    SimplicialComplex k = build_complex({{0, 1}, {1, 2}, {0, 2}});
    SpectralReport r = spectrum(laplacian(k, 0, LaplacianKind::Up));
    REQUIRE(r.eigenvalues.size() == 3);
    CHECK(r.eigenvalues[0] == doctest::Approx(0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(3));
    CHECK(r.eigenvalues[2] == doctest::Approx(3));
    CHECK(r.harmonic_dim == 1);
    CHECK(r.gap == doctest::Approx(3));
}

TEST_CASE("path graph eigenvalues follow 2 - 2 cos")
{
    for (int n = 2; n <= 9; ++n) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        SpectralReport r = spectrum(laplacian(build_complex(edges), 0, LaplacianKind::Up));
        for (int j = 0; j < n; ++j)
            CHECK(r.eigenvalues[j] == doctest::Approx(2 - 2 * std::cos(std::numbers::pi * j / n)).epsilon(1e-10));
    }
}

TEST_CASE("hollow triangle has one harmonic 1-chain")
{
    SimplicialComplex k = build_complex({{0, 1}, {1, 2}, {0, 2}});
    SpectralReport r = spectrum(laplacian(k, 1, LaplacianKind::Combinatorial));
    REQUIRE(r.betti);
    CHECK(*r.betti == 1);
    CHECK(betti_via_hodge(k, 1) == 1);
}

TEST_CASE("Hodge Betti numbers of the torus and projective plane")
{
    SimplicialComplex t = fixtures::torus();
    CHECK(betti_via_hodge(t, 0) == 1);
    CHECK(betti_via_hodge(t, 1) == 2);
    CHECK(betti_via_hodge(t, 2) == 1);
    SimplicialComplex p = fixtures::rp2();
    CHECK(betti_via_hodge(p, 1) == 0);
    CHECK(betti_via_hodge(p, 2) == 0);
}

TEST_CASE("spectral identities hold on random complexes")
{
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed);
        for (int d = 0; d < std::max(1, k.dim()); ++d) {
            VerificationReport r = verify_spectrum_identities(k, d);
            for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
        }
    }
}

TEST_CASE("up and down spectra share their nonzero part")
{
    SimplicialComplex k = fixtures::torus();
    SpectralReport up = spectrum(laplacian(k, 0, LaplacianKind::Up));
    SpectralReport down = spectrum(laplacian(k, 1, LaplacianKind::Down));
    CHECK(spectra_match(nonzero_part(up), nonzero_part(down), 1e-9));
}

TEST_CASE("extremal boundary cycle has resistance 1 / lambda_min")
{
    std::vector<SimplicialComplex> ks = {fixtures::simplex(2), fixtures::simplex(3), fixtures::torus()};
    for (int n = 1; n <= 3; ++n) ks.push_back(resistance_family(2, n).complex);
    for (const auto& k : ks) {
        ExtremalCycle e = extremal_boundary_cycle(k, 1);
        FlowResult r = effective_resistance(k, e.cycle);
        REQUIRE(r.finite);
        CHECK(e.lambda_min * r.resistance_f == doctest::Approx(1).epsilon(1e-7));
        CHECK(e.cycle.norm2() == doctest::Approx(1).epsilon(1e-9));
    }
}

TEST_CASE("pattern complex keeps the up-Laplacian gap")
{
    SimplicialComplex k = resistance_family(2, 1).complex;
    auto data = random_proper_coloring(k, static_cast<int>(k.count(0)), 20, 7);
    REQUIRE(data);
    CHECK(data->properness.proper());
    double a = spectrum(laplacian(k, 1, LaplacianKind::Up)).gap;
    double b = spectrum(laplacian(data->pattern, 1, LaplacianKind::Up)).gap;
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("improper colorings are rejected")
{
    SimplicialComplex k = fixtures::simplex(2);
    CHECK_THROWS_AS(pattern_complex(k, Coloring{{0, 0}, {1, 0}, {2, 1}}), DomainError);
    CHECK_FALSE(check_coloring(k, Coloring{{0, 0}, {1, 0}, {2, 1}}).edge_condition);
}

TEST_CASE("Laplacian kinds parse by name")
{
    for (LaplacianKind k : {LaplacianKind::Up, LaplacianKind::Down, LaplacianKind::Combinatorial,
                            LaplacianKind::WeightedUp, LaplacianKind::NormalizedUp})
        CHECK(parse_laplacian_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_laplacian_kind("sideways"), MalformedInputError);
}
