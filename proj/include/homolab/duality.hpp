#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homolab {

/// A d-chain of K extended by a coefficient on the extra cell Sigma.
struct ExtendedChain {
    Chain cells;
    Q sigma = 0;
};

struct DualEdge {
    std::string label;
    Simplex simplex;   ///< empty for Sigma*
    int tail = -1;     ///< dual vertex with coefficient -1
    int head = -1;     ///< dual vertex with coefficient +1
    Q weight;          ///< w*(sigma*) = 1 / w(sigma)
};

struct EmbeddedDualData {
    SimplicialComplex k;
    int d = 0;
    std::vector<Chain> voids;        ///< bounded void boundaries as given
    int split_index = -1;            ///< void partitioned by Gamma_1, Gamma_2
    Chain gamma1, gamma2, gamma;
    /// Dual vertices: unsplit bounded voids, then s*, t*, then the unbounded void.
    std::vector<std::string> vertices;
    std::vector<ExtendedChain> vertex_columns;
    std::vector<DualEdge> edges;     ///< one per d-simplex, then Sigma*
    int s_star = -1, t_star = -1, infinity = -1;
    VerificationReport checks;
};

/**
 * Build the dual graph of an embedded complex from its void boundaries.
 * The split uses d V_s = Gamma_1 + Sigma and d V_t = Gamma_2 - Sigma with
 * d Sigma = -gamma, so that d o d = 0 holds on the split voids.
 */
EmbeddedDualData build_dual(const SimplicialComplex& k, const std::vector<Chain>& voids, const Chain& gamma1,
                            const Chain& gamma2, const Chain& gamma);

struct DualityCheck {
    bool capacitance_finite = false;
    Q capacitance;
    bool resistance_finite = false;
    Q dual_resistance;
    Q difference;
    bool equal = false;
    Chain circulation;   ///< minimizing circulation on K_d \ L_d (Sigma* carries 1)
    VerificationReport checks;
};

/// Minimum energy of a unit s*t*-circulation in L*.
std::optional<Q> dual_resistance(const EmbeddedDualData& data, const SimplicialComplex& l,
                                 Chain* circulation = nullptr);

/**
 * C_gamma(L, K) against R_{s*t*}(L*), with the potential/circulation bijection checked.
 * L must contain the (d-1)-skeleton of K and gamma must not bound in L.
 */
DualityCheck check_duality(const EmbeddedDualData& data, const SimplicialComplex& l);

}  // namespace homolab
