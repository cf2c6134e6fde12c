#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homolab {

enum class LaplacianKind { Up, Down, Combinatorial, WeightedUp, NormalizedUp };

std::string to_string(LaplacianKind k);
LaplacianKind parse_laplacian_kind(const std::string& s);

/// Dense symmetric Laplacian together with its row basis.
struct LaplacianMatrix {
    LaplacianKind kind = LaplacianKind::Up;
    int d = 0;
    Eigen::MatrixXd matrix;
    std::vector<Simplex> basis;      ///< row simplices actually present
    std::vector<double> degrees;     ///< normalized kind only, aligned with basis
    std::vector<Simplex> excluded;   ///< zero-degree rows dropped (normalized kind)
};

/// Largest matrix the dense eigensolver accepts.
inline constexpr int kSpectralCap = 2000;

/**
 * Assemble a Laplacian of K in dimension d.
 *
 * @param exclude_zero_degree for the normalized kind, drop rows of degree 0
 *        instead of raising a DomainError
 */
LaplacianMatrix laplacian(const SimplicialComplex& k, int d, LaplacianKind kind, bool exclude_zero_degree = true);

struct SpectralReport {
    std::vector<double> eigenvalues;  ///< ascending
    double zero_threshold = 0;
    bool has_gap = false;
    double gap = 0;
    double lambda_max = 0;
    int harmonic_dim = 0;
    std::optional<int> betti;         ///< set for the combinatorial kind
    bool ill_conditioned = false;     ///< an eigenvalue sits within a factor 10 of the threshold
    double max_residual = 0;          ///< max ||Mv - lambda v|| over eigenpairs
};

/// Full spectrum; gap is the first eigenvalue above zero_tol * max(1, lambda_max).
SpectralReport spectrum(const Eigen::MatrixXd& m, double zero_tol = 1e-9);
SpectralReport spectrum(const LaplacianMatrix& m, double zero_tol = 1e-9);

/// Betti number as the harmonic dimension of the combinatorial Laplacian.
int betti_via_hodge(const SimplicialComplex& k, int d, double zero_tol = 1e-9);

/**
 * Unit-norm boundary cycle of dimension d achieving lambda_min of L_d^up
 * (an eigenvector of the smallest nonzero eigenvalue).
 */
struct ExtremalCycle {
    double lambda_min = 0;
    FChain cycle;
};
ExtremalCycle extremal_boundary_cycle(const SimplicialComplex& k, int d, double zero_tol = 1e-9);

/**
 * Spectral identities in dimension d: up/down nonzero spectra, union over
 * components, combinatorial gap as a minimum, the normalized-gap sandwich, and
 * lambda_max(L_d) <= n_0 (unweighted complexes).
 */
VerificationReport verify_spectrum_identities(const SimplicialComplex& k, int d, double tol = 1e-8);

/// Nonzero part of a sorted spectrum.
std::vector<double> nonzero_part(const SpectralReport& r);

/// Multiset equality of sorted lists up to tol * max(1, scale).
bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol);

}  // namespace homolab
