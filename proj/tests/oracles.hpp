#pragma once

// Test-side reference computations. None of these call the library's linear algebra.

#include "homolab/complex.hpp"
#include "homolab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace oracles {

using homolab::Q;
using homolab::Simplex;
using homolab::SimplicialComplex;
using homolab::Z;
using homolab::ZMatrix;

/// Leibniz expansion of a small square integer matrix.
inline Z leibniz(const ZMatrix& m)
{
    std::vector<int> p(m.rows);
    std::iota(p.begin(), p.end(), 0);
    Z total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < m.rows; ++i)
            for (int j = i + 1; j < m.rows; ++j) inv += p[i] > p[j];
        Z term = inv % 2 ? -1 : 1;
        for (int i = 0; i < m.rows; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Calls f on every size-k subset of {0..n-1}.
template <class F>
void for_each_subset(int n, int k, F&& f)
{
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline ZMatrix minor_of(const ZMatrix& m, const std::vector<int>& r, const std::vector<int>& c)
{
    ZMatrix s(static_cast<int>(r.size()), static_cast<int>(c.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = m(r[i], c[j]);
    return s;
}

/// Invariant factors as ratios of determinantal divisors (gcd of k x k minors).
inline std::vector<Z> invariant_factors(const ZMatrix& m)
{
    int n = std::min(m.rows, m.cols);
    std::vector<Z> out(n, Z(0));
    Z prev = 1;
    for (int k = 1; k <= n; ++k) {
        Z g = 0;
        for_each_subset(m.rows, k, [&](const std::vector<int>& r) {
            for_each_subset(m.cols, k, [&](const std::vector<int>& c) {
                Z det = leibniz(minor_of(m, r, c));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        if (g == 0) break;
        out[k - 1] = g / prev;
        prev = g;
    }
    return out;
}

/// Rank as the size of the largest nonsingular minor.
inline int minor_rank(const ZMatrix& m)
{
    int best = 0;
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        bool found = false;
        for_each_subset(m.rows, k, [&](const std::vector<int>& r) {
            if (found) return;
            for_each_subset(m.cols, k, [&](const std::vector<int>& c) {
                if (!found && leibniz(minor_of(m, r, c)) != 0) found = true;
            });
        });
        if (!found) break;
        best = k;
    }
    return best;
}

/// Graph effective resistance between s and t as a ratio of reduced Laplacian determinants.
inline Q kirchhoff_resistance(int n, const std::vector<std::pair<int, int>>& edges, int s, int t)
{
    auto reduced = [&](const std::vector<int>& drop) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
        auto pos = [&](int v) {
            auto it = std::find(keep.begin(), keep.end(), v);
            return it == keep.end() ? -1 : static_cast<int>(it - keep.begin());
        };
        int k = static_cast<int>(keep.size());
        ZMatrix m(k, k);
        for (auto [a, b] : edges) {
            int ia = pos(a), ib = pos(b);
            if (ia >= 0) m(ia, ia) += 1;
            if (ib >= 0) m(ib, ib) += 1;
            if (ia >= 0 && ib >= 0) {
                m(ia, ib) -= 1;
                m(ib, ia) -= 1;
            }
        }
        // Bareiss elimination keeps this exact for the larger graphs.
        Z prev = 1;
        int sign = 1;
        for (int c = 0; c < k; ++c) {
            int piv = c;
            while (piv < k && m(piv, c) == 0) ++piv;
            if (piv == k) return Z(0);
            if (piv != c) {
                for (int j = 0; j < k; ++j) std::swap(m(c, j), m(piv, j));
                sign = -sign;
            }
            for (int i = c + 1; i < k; ++i) {
                for (int j = c + 1; j < k; ++j) m(i, j) = (m(i, j) * m(c, c) - m(i, c) * m(c, j)) / prev;
                m(i, c) = 0;
            }
            prev = m(c, c);
        }
        return k == 0 ? Z(1) : Z(sign * m(k - 1, k - 1));
    };
    Q out(reduced({s, t}), reduced({s}));
    out.canonicalize();
    return out;
}

/// Signed boundary of a simplex, computed directly.
inline std::vector<std::pair<Simplex, int>> facets(const Simplex& s)
{
    std::vector<std::pair<Simplex, int>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        out.push_back({f, i % 2 ? -1 : 1});
    }
    return out;
}

/// Some solution of M x = b by Gauss-Jordan over Q, or nothing when inconsistent.
inline std::optional<std::vector<Q>> gauss_solve(std::vector<std::vector<Q>> m, std::vector<Q> b)
{
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(b[p], b[r]);
        Q inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Q> x(cols, Q(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

/**
 * Capacitance by the constrained quadratic program
 * min sum_{s in K_d} w(s) (p . ds)^2  s.t.  p . ds = 0 for s in L_d,  p . gamma = 1,
 * solved through its KKT system. Nothing when infeasible.
 */
inline std::optional<Q> capacitance_qp(const SimplicialComplex& l, const SimplicialComplex& k,
                                       const homolab::Chain& gamma)
{
    int d = gamma.dim + 1;
    const auto& rows = k.simplices(d - 1);
    int n = static_cast<int>(rows.size());
    auto row_of = [&](const Simplex& s) {
        return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), s) - rows.begin());
    };
    auto column = [&](const Simplex& s) {
        std::vector<Q> v(n, Q(0));
        for (auto& [f, sign] : facets(s)) v[row_of(f)] += sign;
        return v;
    };
    std::vector<std::vector<Q>> cons;
    if (d <= l.dim())
        for (const Simplex& s : l.simplices(d)) cons.push_back(column(s));
    std::vector<Q> g(n, Q(0));
    for (const auto& [s, c] : gamma.coeffs) g[row_of(s)] = c;
    cons.push_back(g);
    int m = static_cast<int>(cons.size());
    std::vector<std::vector<Q>> kkt(n + m, std::vector<Q>(n + m, Q(0)));
    if (d <= k.dim())
        for (const Simplex& s : k.simplices(d)) {
            std::vector<Q> a = column(s);
            Q w = 2 * k.weight(s);
            for (int i = 0; i < n; ++i)
                if (a[i] != 0)
                    for (int j = 0; j < n; ++j)
                        if (a[j] != 0) kkt[i][j] += w * a[i] * a[j];
        }
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i) {
            kkt[i][n + c] = cons[c][i];
            kkt[n + c][i] = cons[c][i];
        }
    std::vector<Q> rhs(n + m, Q(0));
    rhs[n + m - 1] = 1;
    auto sol = gauss_solve(kkt, rhs);
    if (!sol) return std::nullopt;
    Q energy = 0;
    if (d <= k.dim())
        for (const Simplex& s : k.simplices(d)) {
            Q t = 0;
            for (auto& [f, sign] : facets(s)) t += sign * (*sol)[row_of(f)];
            energy += k.weight(s) * t * t;
        }
    return energy;
}

/**
 * Resistance by the KKT system of min sum f(s)^2 / w(s) subject to df = gamma.
 * Nothing when gamma is not a boundary.
 */
inline std::optional<Q> resistance_qp(const SimplicialComplex& k, const homolab::Chain& gamma)
{
    int d = gamma.dim + 1;
    if (d > k.dim()) return std::nullopt;
    const auto& rows = k.simplices(d - 1);
    const auto& cols = k.simplices(d);
    int n = static_cast<int>(cols.size()), m = static_cast<int>(rows.size());
    auto row_of = [&](const Simplex& s) {
        return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), s) - rows.begin());
    };
    std::vector<std::vector<Q>> kkt(n + m, std::vector<Q>(n + m, Q(0)));
    for (int j = 0; j < n; ++j) {
        kkt[j][j] = 2 / k.weight(cols[j]);
        for (auto& [f, sign] : facets(cols[j])) {
            kkt[n + row_of(f)][j] += sign;
            kkt[j][n + row_of(f)] += sign;
        }
    }
    std::vector<Q> rhs(n + m, Q(0));
    for (const auto& [s, c] : gamma.coeffs) rhs[n + row_of(s)] = c;
    auto sol = gauss_solve(kkt, rhs);
    if (!sol) return std::nullopt;
    Q energy = 0;
    for (int j = 0; j < n; ++j) energy += (*sol)[j] * (*sol)[j] / k.weight(cols[j]);
    return energy;
}

}  // namespace oracles
