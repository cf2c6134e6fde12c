#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace homolab {

/// Largest product-space dimension n_{d-1} * n_d accepted.
inline constexpr long long kSzegedyProductCap = 4096;

/**
 * Szegedy walk workspace on C_{d-1} (x) C_d. Columns of M_B are
 * b_tau = |d tau>|tau> / sqrt(d+1); columns of M_C are
 * c_sigma = sum_{tau > sigma} sqrt(w(tau) / deg sigma) |sigma>|tau>.
 * U = R_C R_B acts as +1 on (B + C)^perp, so spectra are computed on B + C.
 */
struct SzegedyWorkspace {
    int d = 0;
    std::vector<Simplex> rows;    ///< (d-1)-simplices
    std::vector<Simplex> cols;    ///< d-simplices
    std::vector<Simplex> excluded;  ///< zero-degree (d-1)-simplices, no c column
    long long product_dim = 0;
    Eigen::MatrixXd mb;           ///< N x n_d
    Eigen::MatrixXd mc;           ///< N x (n_{d-1} - excluded)
    Eigen::MatrixXd basis;        ///< orthonormal basis of B + C
    Eigen::MatrixXd u_restricted; ///< U on B + C
    std::vector<double> phases;   ///< all N eigenphases in (-pi, pi], ascending
    Eigen::MatrixXcd eigvecs;     ///< eigenvectors of u_restricted (basis coordinates)
    Eigen::VectorXd eigphases;    ///< phases of u_restricted, matching eigvecs
    int qubits = 0;
};

SzegedyWorkspace build_szegedy(const SimplicialComplex& k, int d);

/// (1/sqrt(d+1)) D^{-1/2} d sqrt(W) on the non-excluded rows.
Eigen::MatrixXd discriminant_closed_form(const SimplicialComplex& k, int d);

/**
 * Checks: M_C^T M_B against the closed form, dim ker agreement with d_d,
 * eigenphases against +-2 arccos of the singular values, the +1 and -1
 * projector decompositions, V = M_B^T R_{U-} M_B against R_{ker d}, and the
 * phase gap of -U against 2 sqrt(lambda_min / (d+1)).
 */
VerificationReport verify_szegedy(const SimplicialComplex& k, int d, double tol = 1e-8);

struct PhaseGapReport {
    double phase_gap = 0;     ///< of -U
    double sigma_min = 0;     ///< smallest nonzero singular value of M_C^T M_B
    double lambda_min = 0;    ///< smallest nonzero normalized up-Laplacian eigenvalue
    double bound = 0;         ///< 2 sqrt(lambda_min / (d+1))
};

PhaseGapReport szegedy_phase_gap(const SimplicialComplex& k, int d);

}  // namespace homolab
