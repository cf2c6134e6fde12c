#pragma once

#include "homolab/rational.hpp"

#include <optional>
#include <vector>

namespace homolab {

/// Dense row-major matrix over an exact scalar type.
template <class T>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}

    T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

using QMatrix = DenseMatrix<Q>;
using ZMatrix = DenseMatrix<Z>;

QMatrix to_q(const ZMatrix& m);
QMatrix transpose(const QMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
std::vector<Q> multiply(const QMatrix& a, const std::vector<Q>& x);
Q dot(const std::vector<Q>& a, const std::vector<Q>& b);

/// Rank over Q via fraction-free (Bareiss) elimination.
int rank(const ZMatrix& m);
int rank(const QMatrix& m);

/// |det| is returned with sign; fraction-free elimination, exact.
Z determinant(const ZMatrix& m);

/// True iff b lies in the column span of A over Q (fraction-free test).
bool in_column_span(const ZMatrix& A, const std::vector<Z>& b);
bool in_column_span(const QMatrix& A, const std::vector<Q>& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Q>> solve_any(const QMatrix& A, const std::vector<Q>& b);

/// Basis of the right kernel of A.
std::vector<std::vector<Q>> nullspace(const QMatrix& A);

struct EnergyMinimum {
    bool feasible = false;
    std::vector<Q> x;
    Q value;
};

/**
 * Minimise sum_i cost[i] * x[i]^2 subject to E x = b (cost strictly positive).
 *
 * Solved through the normal equations (E C^{-1} E^T) z = b, x = C^{-1} E^T z.
 */
EnergyMinimum min_weighted_energy(const QMatrix& E, const std::vector<Q>& b, const std::vector<Q>& cost);

/// Scale a rational vector to a primitive integer vector with the same span.
std::vector<Z> clear_denominators(const std::vector<Q>& v);

}  // namespace homolab
