#pragma once

#include "homolab/betti.hpp"
#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homolab {

/// One column of A = d sqrt(W): an input index with its boundary and weight.
struct SpanColumn {
    std::string label;
    Simplex simplex;                         ///< empty for a virtual column
    std::vector<std::pair<int, Q>> entries;  ///< (row, boundary coefficient)
    Q weight = 1;
};

/**
 * Span program P_K = (H, U, tau, A): H = C_d(K) with H_{i,1} = span{sigma_i},
 * H_{i,0} = {0}, target tau = gamma, A = d sqrt(W).
 */
struct SpanProgram {
    int d = 0;
    std::vector<Simplex> rows;       ///< (d-1)-simplices
    std::vector<SpanColumn> columns;
    Chain tau;
    std::vector<Q> tau_vec;

    int size() const { return static_cast<int>(columns.size()); }
    /// Exact evaluation: is tau in the span of the selected columns.
    bool evaluate(const std::vector<bool>& x) const;
    Eigen::MatrixXd a_matrix() const;  ///< d sqrt(W) in floating point
    std::vector<bool> all_ones() const { return std::vector<bool>(columns.size(), true); }
};

SpanProgram build_span_program(const SimplicialComplex& k, const Chain& gamma);

/// Append a virtual column with boundary gamma and weight 1 (the |empty> cell).
SpanProgram with_virtual_column(const SpanProgram& p, const std::string& label = "empty");

/// K(x) = K^{d-1} plus the selected d-simplices.
SimplicialComplex instance_complex(const SimplicialComplex& k, int d, const std::vector<bool>& x);

struct WitnessSizes {
    bool positive = false;
    std::optional<Q> w_plus;   ///< finite iff positive
    std::optional<Q> w_minus;  ///< finite iff negative
};

/**
 * w+ = tau^T (A_x A_x^T)^+ tau through an exact Laplacian solve;
 * w- = min ||<w|A||^2 over <w|tau> = 1, <w|A Pi_x = 0 through an exact KKT solve.
 */
WitnessSizes witness_sizes(const SpanProgram& p, const std::vector<bool>& x);

struct WitnessBounds {
    Q w_plus;             ///< W+ (max over positive inputs) or a certified upper bound
    Q w_minus;            ///< W- likewise
    std::string method;   ///< "exhaustive", "structural" or "cramer"
    long long instances = 0;
};

/// Exhaustive for at most this many columns.
inline constexpr int kExhaustiveWitnessColumns = 12;

WitnessBounds witness_bounds(const SpanProgram& p);

struct InitialState {
    Q resistance;              ///< R = ||w0||^2 from the span program
    Q augmented_norm2;         ///< ||w0'||^2 from the augmented program
    Q formula_norm2;           ///< R / (R + 1)
    Q empty_component;         ///< <empty|w0'> = R / (R + 1)
    Q overlap2;                ///< squared w0 component of w0'/||w0'|| = 1 / (R + 1)
    Eigen::VectorXd w0;        ///< A^+ tau, unnormalized
    long long rounds_outer = 0;
    long long rounds_inner = 0;
    long long rounds = 0;      ///< nested amplification rounds, r1 * r2
    double bound = 0;          ///< sqrt(R) + sqrt(1/R)
};

/// Exact w0 and the appended-column amplitude amplification accounting.
InitialState prepare_initial_state(const SimplicialComplex& k, const Chain& gamma);

/// Query charges in one place.
struct QueryModel {
    static long long per_reflection_input_queries() { return 2; }
    static long long superposition_queries(long long m);  ///< ceil(sqrt(m)), at least 1
};

/// Query-counted functional oracles over one complex.
class OracleModels {
public:
    OracleModels(const SimplicialComplex& k, int d);

    Simplex list(int i);                                        ///< O_list
    bool member(const Simplex& s);                              ///< O_memb
    std::pair<Simplex, int> down_incidence(const Simplex& tau, int j);
    std::optional<Simplex> up_incidence(const Simplex& sigma, int j);

    long long charge_ub();  ///< one U_B: ceil(sqrt(d+1)) down-incidence queries
    long long charge_uc();  ///< one U_C: ceil(sqrt(d_max)) up-incidence queries

    int d_max() const { return d_max_; }

    struct Tally {
        long long list = 0, member = 0, down = 0, up = 0;
        long long total() const { return list + member + down + up; }
    } tally;

private:
    const SimplicialComplex* k_;
    int d_;
    int d_max_ = 0;
    std::map<Simplex, std::vector<Simplex>> cofaces_;
};

/// Frozen phase-estimation precision multiplier (see README).
inline constexpr double kPhasePrecisionConstant = 4.0;
/// Largest phase-estimation length simulated.
inline constexpr double kMaxPhaseLength = 68719476736.0;  // 2^36

struct EvaluationResult {
    bool decision = false;        ///< true: tau reachable (positive)
    double p0 = 0;                ///< exact probability of phase outcome 0
    double threshold = 0;         ///< p*/2
    double p_star = 0;            ///< 1 / (W- ||w0||^2)
    long long t = 0;              ///< phase-estimation length
    long long shots = 0;
    long long zero_outcomes = 0;
    long long oracle_queries_per_shot = 0;  ///< 2 (T - 1)
    long long u_applications_per_shot = 0;  ///< T - 1
    long long walk_steps_per_reflection = 0;
    long long incidence_queries_per_u = 0;
    double oracle_queries_total = 0;
    double incidence_queries_total = 0;
    double phase_gap = 0;         ///< lower bound 2 sigma_min used for the walk count
    WitnessBounds bounds;
    int qubits = 0;
};

/**
 * Classical simulation of phase estimation of w0 / ||w0|| on R_{H(x)} R_{ker A}.
 * Outcome 0 has probability sum_k |<v_k|w0>|^2 F_T(phi_k); the decision is
 * "negative" when the sampled frequency of 0 reaches half of p_star.
 */
EvaluationResult simulate_evaluation(const SpanProgram& p, const std::vector<bool>& x, double error_budget,
                                     std::uint64_t seed, const std::optional<WitnessBounds>& bounds = std::nullopt);

/// Fejer kernel F_T(phi) = sin^2(T phi / 2) / (T^2 sin^2(phi / 2)).
double fejer(long long t, double phi);

/**
 * Null-homology tester for the incremental algorithm: the program on the
 * prefix plus a virtual column carrying gamma, evaluated at x = (1, ..., 1, 0).
 */
NullHomologyTester span_sim_tester(double error_budget = 1e-6, std::uint64_t seed = 1);

}  // namespace homolab
