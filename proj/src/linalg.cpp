#include "homolab/linalg.hpp"

#include <utility>

namespace homolab {

QMatrix to_q(const ZMatrix& m)
{
    QMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = Q(m.a[i]);
    return out;
}

QMatrix transpose(const QMatrix& m)
{
    QMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b)
{
    if (a.cols != b.rows) throw DomainError("matrix size mismatch");
    QMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Q& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<Q> multiply(const QMatrix& a, const std::vector<Q>& x)
{
    if (a.cols != static_cast<int>(x.size())) throw DomainError("matrix-vector size mismatch");
    std::vector<Q> out(a.rows, Q(0));
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            if (a(i, k) != 0 && x[k] != 0) out[i] += a(i, k) * x[k];
    return out;
}

Q dot(const std::vector<Q>& a, const std::vector<Q>& b)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

namespace {

// Bareiss elimination on a copy, columns left to right; returns pivot columns.
std::vector<int> bareiss(ZMatrix m, Z* det_out)
{
    std::vector<int> pivots;
    Z prev = 1;
    int r = 0;
    int sign = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j) {
                Z v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    if (det_out) {
        if (m.rows != m.cols || static_cast<int>(pivots.size()) < m.rows)
            *det_out = 0;
        else
            *det_out = sign * prev;
    }
    return pivots;
}

ZMatrix scale_rows(const QMatrix& m)
{
    ZMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        Z l = 1;
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols; ++j) {
            Q v = m(i, j) * l;
            out(i, j) = v.get_num();
        }
    }
    return out;
}

}  // namespace

int rank(const ZMatrix& m) { return static_cast<int>(bareiss(m, nullptr).size()); }

int rank(const QMatrix& m) { return rank(scale_rows(m)); }

Z determinant(const ZMatrix& m)
{
    if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
    if (m.rows == 0) return 1;
    Z det;
    bareiss(m, &det);
    return det;
}

bool in_column_span(const ZMatrix& A, const std::vector<Z>& b)
{
    if (static_cast<int>(b.size()) != A.rows) throw DomainError("vector length mismatch");
    ZMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    auto piv = bareiss(aug, nullptr);
    return piv.empty() || piv.back() != A.cols;
}

bool in_column_span(const QMatrix& A, const std::vector<Q>& b)
{
    QMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    ZMatrix z = scale_rows(aug);
    auto piv = bareiss(z, nullptr);
    return piv.empty() || piv.back() != A.cols;
}

std::vector<int> rref(QMatrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (int j = c; j < m.cols; ++j)
            if (m(r, j) != 0) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (int j = c; j < m.cols; ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<std::vector<Q>> solve_any(const QMatrix& A, const std::vector<Q>& b)
{
    if (static_cast<int>(b.size()) != A.rows) throw DomainError("vector length mismatch");
    QMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    std::vector<Q> x(A.cols, Q(0));
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(static_cast<int>(k), A.cols);
    return x;
}

std::vector<std::vector<Q>> nullspace(const QMatrix& A)
{
    QMatrix m = A;
    auto piv = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::vector<Q>> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Q> v(A.cols, Q(0));
        v[free] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

EnergyMinimum min_weighted_energy(const QMatrix& E, const std::vector<Q>& b, const std::vector<Q>& cost)
{
    if (static_cast<int>(cost.size()) != E.cols) throw DomainError("cost length mismatch");
    QMatrix G(E.rows, E.rows);
    for (int j = 0; j < E.cols; ++j) {
        if (cost[j] <= 0) throw DomainError("energy costs must be positive");
        Q inv = 1 / cost[j];
        for (int r = 0; r < E.rows; ++r) {
            if (E(r, j) == 0) continue;
            Q er = E(r, j) * inv;
            for (int s = 0; s < E.rows; ++s)
                if (E(s, j) != 0) G(r, s) += er * E(s, j);
        }
    }
    EnergyMinimum out;
    auto z = solve_any(G, b);
    if (!z) return out;
    out.feasible = true;
    out.x.assign(E.cols, Q(0));
    for (int j = 0; j < E.cols; ++j) {
        Q s = 0;
        for (int r = 0; r < E.rows; ++r)
            if (E(r, j) != 0 && (*z)[r] != 0) s += E(r, j) * (*z)[r];
        out.x[j] = s / cost[j];
    }
    out.value = dot(b, *z);
    return out;
}

std::vector<Z> clear_denominators(const std::vector<Q>& v)
{
    Z l = 1;
    for (const Q& q : v)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Z> out;
    out.reserve(v.size());
    for (const Q& q : v) {
        Q s = q * l;
        out.push_back(s.get_num());
    }
    return out;
}

}  // namespace homolab
