#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <string>
#include <vector>

namespace homolab {

enum class Backend { Exact, Float, Auto };

std::string to_string(Backend b);

/// Column count above which Backend::Auto switches to floating least squares.
inline constexpr int kExactColumnLimit = 400;

/// Minimum-energy unit gamma-flow.
struct FlowResult {
    bool finite = false;
    Backend backend = Backend::Exact;
    Q resistance;              ///< exact backend
    double resistance_f = 0;   ///< always populated when finite
    Chain flow;                ///< exact backend
    FChain flow_f;             ///< float backend, or converted exact flow
    double residual = 0;       ///< ||d flow - gamma|| (float backend)
};

/// Minimum-energy unit gamma-potential in L, energy measured on K.
struct PotentialResult {
    bool finite = false;
    Q capacitance;
    Chain potential;
};

/// True iff the chain has zero boundary (dimension 0 chains count as cycles).
bool is_cycle(const Chain& gamma);

/**
 * Effective resistance R_gamma(K) = min { sum f(s)^2 / w(s) : d f = gamma }.
 * Returns finite == false when gamma is not a boundary in K.
 * Throws DomainError when gamma is not a cycle.
 */
FlowResult effective_resistance(const SimplicialComplex& k, const Chain& gamma, Backend backend = Backend::Auto);

/// Floating least-squares route for a real-valued cycle.
FlowResult effective_resistance(const SimplicialComplex& k, const FChain& gamma);

/// Same quantity through a particular solution plus a nullspace parametrization.
FlowResult effective_resistance_nullspace(const SimplicialComplex& k, const Chain& gamma);

/**
 * Effective capacitance C_gamma(L, K). Infinite when gamma bounds in L.
 * Throws ContainmentError if L is not a subcomplex of K and DomainError when
 * gamma is not a cycle or does not bound in K.
 */
PotentialResult effective_capacitance(const SimplicialComplex& l, const SimplicialComplex& k, const Chain& gamma);

/// Exact rank test for gamma in im d_d (float: residual <= 1e-8 ||gamma||).
bool is_null_homologous(const SimplicialComplex& k, const Chain& gamma, Backend backend = Backend::Exact);

/// Flow energy sum f(s)^2 / w(s).
Q flow_energy(const SimplicialComplex& k, const Chain& f);

/// Potential energy sum (p^T d s)^2 w(s) over the top simplices of K.
Q potential_energy(const SimplicialComplex& k, const Chain& p);

struct SeriesInstance {
    std::string name;
    SimplicialComplex k, k1, k2;
    Chain gamma, gamma1, gamma2;
};

struct ParallelInstance {
    std::string name;
    SimplicialComplex k, k1, k2;
    Chain gamma;
};

struct MonotoneInstance {
    std::string name;
    SimplicialComplex k, l;  ///< l is a subcomplex of k
    Chain gamma;
};

struct FlowFormulaInstances {
    std::vector<SeriesInstance> series;
    std::vector<ParallelInstance> parallel;
    std::vector<MonotoneInstance> monotone;
};

/**
 * Series, parallel and monotonicity checks. Instances whose hypotheses fail
 * are reported as skipped (pass) with the reason in the detail.
 */
VerificationReport verify_flow_formulas(const FlowFormulaInstances& inst);

}  // namespace homolab
