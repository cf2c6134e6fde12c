#pragma once

#include "homolab/chainmaps.hpp"
#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homolab {

/// Vertex (v_i, level j) of a family complex.
inline int family_vertex(int d, int i, int j) { return j * (d + 1) + i; }

/// sigma x {j} as a d-simplex.
Simplex level_simplex(int d, int j);

struct BuildingBlock {
    int d = 0;
    SimplicialComplex complex;   ///< vertices (v_i, 0) = i, (v_i, 1) = d + 1 + i
    Chain f;                     ///< d f = d(sigma x 0) + d * d(sigma x 1)
    Q f_norm2;
    std::map<int, int> relabel;  ///< stellar vertex -> (v_i, 1)
    VerificationReport checks;
};

BuildingBlock building_block(int d);

struct GeneratedFamily {
    std::string family;                     ///< "B", "PQ", "M"
    int d = 0;
    int n = 0;
    std::optional<std::uint64_t> seed;
    SimplicialComplex complex;              ///< B_d^n, Q_d^n or M_d^n
    std::optional<SimplicialComplex> sub;   ///< P_d^n
    Chain gamma_raw;                        ///< gamma = gamma_raw / sqrt(gamma_norm2)
    Q gamma_norm2 = 1;
    std::vector<Chain> f;                   ///< block chains in family coordinates, f[k-1] for copy k
    std::vector<Chain> y;                   ///< y[0..n]
    Chain witness;                          ///< chain with boundary gamma_raw in the ambient complex
    std::vector<std::string> log;
    VerificationReport checks;
};

/// B_d^n with gamma = d(sigma x n) / sqrt(d+1) and y_n = f_n - d y_{n-1}.
GeneratedFamily resistance_family(int d, int n);

/// P_d^n inside Q_d^n with gamma = d(sigma x n) / sqrt(d+1).
GeneratedFamily capacitance_family(int d, int n);

/// Disjoint copies of B_d^n, offset by (n+1)(d+1) vertices each.
inline constexpr std::size_t kManySmallCap = 200000;
GeneratedFamily many_small(int d, int n, std::optional<int> copies = std::nullopt);

/// Exact R_gamma for the unit cycle of a family: R(gamma_raw) / gamma_norm2.
Q scale_resistance(const Q& raw, const Q& norm2);
/// Exact C_gamma for the unit cycle: C(gamma_raw) * gamma_norm2.
Q scale_capacitance(const Q& raw, const Q& norm2);

}  // namespace homolab
