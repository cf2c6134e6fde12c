#pragma once

#include "homolab/complex.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homolab {

struct TesterOutcome {
    bool null_homologous = false;
    long long queries = 0;  ///< simulated oracle queries, 0 for classical testers
};

/// A null-homology tester sees only the prefix complex and the cycle.
struct NullHomologyTester {
    std::string id;
    std::function<TesterOutcome(const SimplicialComplex& prefix, const Chain& gamma)> test;
};

NullHomologyTester classical_exact_tester();
NullHomologyTester classical_float_tester();

struct BettiStep {
    Simplex simplex;
    bool null_homologous = false;
    int delta = 0;  ///< +1, -1 or 0
    long long queries = 0;
};

struct BettiRun {
    int d = 0;
    std::string tester;
    std::vector<Simplex> order;
    std::vector<BettiStep> steps;
    int betti = 0;
    long long invocations = 0;
    long long queries = 0;
    bool aborted = false;
    std::string abort_reason;
};

/**
 * Incremental Betti computation. Each d-simplex whose boundary already bounds
 * in the prefix adds a cycle; each (d+1)-simplex whose boundary does not yet
 * bound kills one.
 *
 * @param order optional insertion order: every d-simplex, then every (d+1)-simplex
 * @param seed  when set (and no order is given), shuffle within each dimension
 */
BettiRun incremental_betti(const SimplicialComplex& k, int d, const NullHomologyTester& tester,
                           const std::optional<std::vector<Simplex>>& order = std::nullopt,
                           std::optional<std::uint64_t> seed = std::nullopt);

/// beta_d = n_d - rank d_d - rank d_{d+1} over the integers.
int matrix_reduction_betti(const SimplicialComplex& k, int d);

}  // namespace homolab
