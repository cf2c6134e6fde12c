#pragma once

#include "homolab/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace homolab {

using Coloring = std::map<int, int>;

struct PropernessReport {
    bool edge_condition = true;      ///< (1) endpoints of every edge differ
    bool distinct_condition = true;  ///< (2) distinct (d-1)-simplices have distinct color sets
    std::string detail;
    bool proper() const { return edge_condition && distinct_condition; }
};

struct ColoringData {
    Coloring coloring;
    PropernessReport properness;
    int generalized_degree = 0;
    int colors_used = 0;
    int attempts_used = 0;
    SimplicialComplex pattern;
};

PropernessReport check_coloring(const SimplicialComplex& k, const Coloring& c);

/// K_c = {{c(v) : v in s} : s in K}; DomainError naming the violated condition if c is improper.
SimplicialComplex pattern_complex(const SimplicialComplex& k, const Coloring& c);

/// Delta(K) = max over 1 <= i < j <= d of the largest number of j-simplices containing an i-simplex.
int generalized_degree(const SimplicialComplex& k);

/**
 * Randomized greedy search: vertices in random order take a random color from
 * [0, budget) that keeps both conditions among colored vertices. Returns the
 * first coloring that verifies as proper, or nullopt after `attempts` tries.
 */
std::optional<ColoringData> random_proper_coloring(const SimplicialComplex& k, int color_budget, int attempts,
                                                   std::uint64_t seed);

}  // namespace homolab
