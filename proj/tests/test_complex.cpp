#include "fixtures.hpp"
#include "homolab/io.hpp"

#include <doctest.h>

using namespace homolab;
using fixtures::q;

TEST_CASE("closure generates every face")
{
    SimplicialComplex k = build_complex({{0, 1, 2}, {2, 3}});
    CHECK(k.count(0) == 4);
    CHECK(k.count(1) == 4);
    CHECK(k.count(2) == 1);
    CHECK(k.contains(Simplex{0, 2}));
    CHECK_FALSE(k.contains(Simplex{0, 3}));
    CHECK(k.total_size() == 9);
}

TEST_CASE("closure is idempotent on maximal simplices")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed);
        std::vector<std::vector<int>> maximal;
        for (const Simplex& s : k.maximal_simplices()) maximal.push_back(s);
        CHECK(build_complex(maximal) == k);
    }
}

TEST_CASE("boundary of boundary vanishes on every basis chain")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimplicialComplex k = fixtures::random_complex(seed, 8, 3);
        for (int d = 2; d <= k.dim(); ++d)
            for (const Simplex& s : k.simplices(d)) CHECK(boundary(boundary(single<Q>(s))).is_zero());
    }
}

TEST_CASE("boundary columns carry d+1 entries with alternating signs")
{
    SimplicialComplex k = fixtures::simplex(3);
    for (int d = 1; d <= 3; ++d) {
        BoundaryOperator b = boundary_matrix(k, d);
        for (const auto& col : b.columns) CHECK(col.size() == static_cast<std::size_t>(d + 1));
    }
    Chain c = boundary(single<Q>(Simplex{0, 1, 2}));
    CHECK(c.get(Simplex{1, 2}) == 1);
    CHECK(c.get(Simplex{0, 2}) == -1);
    CHECK(c.get(Simplex{0, 1}) == 1);
}

TEST_CASE("augmented boundary sends a vertex to the empty simplex")
{
    Chain v = single<Q>(Simplex{4}, Q(3));
    Chain b = boundary(v, true);
    CHECK(b.get(Simplex{}) == 3);
    CHECK(boundary(v).is_zero());
}

TEST_CASE("weights parse from rationals and decimals")
{
    Json j = Json::parse(R"({"maximal_simplices": [[0,1,2]], "weights": {"0,1,2": "3/2", "0,1": "0.25"}})");
    SimplicialComplex k = complex_from_json(j);
    CHECK(k.weight(Simplex{0, 1, 2}) == q(3, 2));
    CHECK(k.weight(Simplex{0, 1}) == q(1, 4));
    CHECK(k.weight(Simplex{1, 2}) == 1);
    CHECK_FALSE(k.is_unweighted());
    CHECK(complex_from_json(complex_to_json(k)) == k);
}

TEST_CASE("malformed complex JSON is rejected")
{
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"simplices": []})")), MalformedInputError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"maximal_simplices": [["a"]]})")), MalformedInputError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"maximal_simplices": [[0,1]], "weights": {"0,1": "x"}})")),
                    MalformedInputError);
}

TEST_CASE("chains round-trip through JSON")
{
    Chain c = boundary(single<Q>(Simplex{0, 1, 2}, q(2, 3)));
    CHECK(chain_from_json(chain_to_json(c)) == c);
    CHECK(chain_from_json(coefficient_map(c)) == c);
    CHECK_THROWS_AS(chain_from_json(Json::parse(R"({"0,1": 1, "2": 1})")), MalformedInputError);
}

TEST_CASE("selection, removal and containment")
{
    SimplicialComplex k = fixtures::sphere2();
    std::vector<bool> keep = {true, false, false, true};
    SimplicialComplex l = k.with_top_selection(2, keep);
    CHECK(l.count(2) == 2);
    CHECK(l.count(1) == 6);
    CHECK(l.is_subcomplex_of(k));
    CHECK_FALSE(k.is_subcomplex_of(l));
    CHECK_THROWS_AS(k.without({Simplex{0, 1}}), DomainError);
    CHECK(k.without({Simplex{0, 1, 2}}).count(2) == 3);
}

TEST_CASE("disjoint union shifts vertices")
{
    SimplicialComplex a = fixtures::simplex(2);
    SimplicialComplex u = disjoint_union(a, a, 10);
    CHECK(u.count(0) == 6);
    CHECK(u.contains(Simplex{10, 11, 12}));
    CHECK(connected_components(u).size() == 2);
}

TEST_CASE("membership errors for foreign chains")
{
    SimplicialComplex k = fixtures::simplex(2);
    CHECK_THROWS_AS(apply_boundary(k, single<Q>(Simplex{0, 1, 5})), MembershipError);
}

TEST_CASE("rational text forms")
{
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("1.25") == q(5, 4));
    CHECK(parse_rational("-3e-2") == q(-3, 100));
    CHECK(parse_rational("0.025") == q(1, 40));
    CHECK(parse_rational("010/03") == q(10, 3));
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(to_string(q(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedInputError);
    CHECK(round12(0.1 + 0.2) == 0.3);
}
