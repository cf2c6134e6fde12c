#pragma once

#include "homolab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homolab {

struct SNFResult {
    int rows = 0;
    int cols = 0;
    std::vector<Z> diagonal;     ///< min(rows, cols) entries, d_i | d_{i+1}, zeros last
    int rank = 0;
    std::optional<Z> abs_det;    ///< square input only
    std::optional<ZMatrix> p;    ///< unimodular, p * m * q = diag
    std::optional<ZMatrix> q;
    long long operations = 0;    ///< elementary operations performed
};

/// Smith normal form with smallest-magnitude pivoting over big integers.
SNFResult smith_normal_form(const ZMatrix& m, bool record_transforms = false);

/**
 * Relative boundary matrix d_d[L, L0]: columns are the d-simplices of L, rows
 * the (d-1)-simplices of L not in L0. Throws MembershipError when L or L0 is
 * not contained in K.
 */
BoundaryOperator relative_boundary_matrix(const SimplicialComplex& k, const SimplicialComplex& l,
                                          const SimplicialComplex& l0, int d);

/// Column and row selection of d_d[K] given as simplex lists.
BoundaryOperator boundary_submatrix(const SimplicialComplex& k, int d, const std::vector<Simplex>& cols,
                                    const std::vector<Simplex>& rows);

/// Product of the nonzero invariant factors (1 for an empty matrix).
Z torsion_cardinality(const BoundaryOperator& m);
Z torsion_cardinality(const SimplicialComplex& k, const SimplicialComplex& l, const SimplicialComplex& l0, int d);

/// Square-submatrix pair count above which T_max is sampled rather than enumerated.
inline constexpr double kExhaustivePairLimit = 2e5;

struct TorsionReport {
    int d = 0;
    int n = 0;                  ///< min(n_{d-1}, n_d)
    int n0 = 0;
    bool exhaustive = false;
    long long submatrices = 0;  ///< square submatrices evaluated
    Z t_max = 1;                ///< exact when exhaustive, sampled maximum otherwise
    std::vector<Simplex> argmax_rows, argmax_cols;
    double hadamard_bound = 0;  ///< sqrt(d+1)^n
    bool hadamard_ok = true;    ///< every evaluated |det|^2 <= (d+1)^m
    double c = 1;
    double resistance_bound = 0;   ///< c n^2 T^2
    double capacitance_bound = 0;  ///< c n n0 T^2
    std::optional<double> measured_resistance;
    std::optional<double> measured_capacitance;
    bool resistance_violation = false;
    bool capacitance_violation = false;
};

TorsionReport bounds_report(const SimplicialComplex& k, int d, int samples, std::uint64_t seed,
                            std::optional<double> measured_resistance = std::nullopt,
                            std::optional<double> measured_capacitance = std::nullopt, double c = 1.0);

}  // namespace homolab
