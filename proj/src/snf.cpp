#include "homolab/snf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace homolab {

namespace {

ZMatrix identity(int n)
{
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

class Reducer {
public:
    Reducer(const ZMatrix& m, bool rec) : a(m), record(rec)
    {
        if (record) {
            p = identity(m.rows);
            q = identity(m.cols);
        }
    }

    void swap_rows(int i, int j)
    {
        if (i == j) return;
        for (int c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
        if (record)
            for (int c = 0; c < p.cols; ++c) std::swap(p(i, c), p(j, c));
        ++ops;
    }
    void swap_cols(int i, int j)
    {
        if (i == j) return;
        for (int r = 0; r < a.rows; ++r) std::swap(a(r, i), a(r, j));
        if (record)
            for (int r = 0; r < q.rows; ++r) std::swap(q(r, i), q(r, j));
        ++ops;
    }
    /// row dst -= k * row src
    void sub_row(int dst, int src, const Z& k)
    {
        for (int c = 0; c < a.cols; ++c)
            if (a(src, c) != 0) a(dst, c) -= k * a(src, c);
        if (record)
            for (int c = 0; c < p.cols; ++c)
                if (p(src, c) != 0) p(dst, c) -= k * p(src, c);
        ++ops;
    }
    /// col dst -= k * col src
    void sub_col(int dst, int src, const Z& k)
    {
        for (int r = 0; r < a.rows; ++r)
            if (a(r, src) != 0) a(r, dst) -= k * a(r, src);
        if (record)
            for (int r = 0; r < q.rows; ++r)
                if (q(r, src) != 0) q(r, dst) -= k * q(r, src);
        ++ops;
    }
    void negate_row(int i)
    {
        for (int c = 0; c < a.cols; ++c) a(i, c) = -a(i, c);
        if (record)
            for (int c = 0; c < p.cols; ++c) p(i, c) = -p(i, c);
        ++ops;
    }

    ZMatrix a, p, q;
    bool record;
    long long ops = 0;
};

}  // namespace

SNFResult smith_normal_form(const ZMatrix& m, bool record_transforms)
{
    Reducer r(m, record_transforms);
    ZMatrix& a = r.a;
    const int n = std::min(a.rows, a.cols);
    int t = 0;
    for (; t < n; ++t) {
        bool empty = false;
        for (;;) {
            int bi = -1, bj = -1;
            Z best;
            for (int i = t; i < a.rows; ++i)
                for (int j = t; j < a.cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Z v = abs(a(i, j));
                    if (bi < 0 || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) {
                empty = true;
                break;
            }
            r.swap_rows(t, bi);
            r.swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (a(i, t) == 0) continue;
                Z k = a(i, t) / a(t, t);
                if (k != 0) r.sub_row(i, t, k);
                if (a(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (a(t, j) == 0) continue;
                Z k = a(t, j) / a(t, t);
                if (k != 0) r.sub_col(j, t, k);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < a.rows && bad < 0; ++i)
                for (int j = t + 1; j < a.cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            r.sub_row(t, bad, Z(-1));
        }
        if (empty) break;
        if (a(t, t) < 0) r.negate_row(t);
    }

    SNFResult out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.operations = r.ops;
    for (int i = 0; i < n; ++i) {
        out.diagonal.push_back(a(i, i));
        if (a(i, i) != 0) ++out.rank;
    }
    if (m.rows == m.cols) {
        Z det = 1;
        for (const Z& x : out.diagonal) det *= x;
        out.abs_det = det;
    }
    if (record_transforms) {
        out.p = r.p;
        out.q = r.q;
    }
    return out;
}

BoundaryOperator boundary_submatrix(const SimplicialComplex& k, int d, const std::vector<Simplex>& cols,
                                    const std::vector<Simplex>& rows)
{
    if (d < 1) throw DomainError("boundary dimension must be at least 1");
    BoundaryOperator op;
    op.d = d;
    op.row_simplices = rows;
    op.col_simplices = cols;
    std::sort(op.row_simplices.begin(), op.row_simplices.end());
    std::sort(op.col_simplices.begin(), op.col_simplices.end());
    for (const Simplex& s : op.row_simplices)
        if (simplex_dim(s) != d - 1 || !k.contains(s)) throw MembershipError("row simplex not in K_{d-1}: " + simplex_key(s));
    for (const Simplex& s : op.col_simplices) {
        if (simplex_dim(s) != d || !k.contains(s)) throw MembershipError("column simplex not in K_d: " + simplex_key(s));
        std::vector<std::pair<int, int>> col;
        for (const auto& [f, sg] : signed_facets(s)) {
            auto it = std::lower_bound(op.row_simplices.begin(), op.row_simplices.end(), f);
            if (it != op.row_simplices.end() && *it == f) col.emplace_back(static_cast<int>(it - op.row_simplices.begin()), sg);
        }
        std::sort(col.begin(), col.end());
        op.columns.push_back(std::move(col));
    }
    return op;
}

BoundaryOperator relative_boundary_matrix(const SimplicialComplex& k, const SimplicialComplex& l,
                                          const SimplicialComplex& l0, int d)
{
    if (!l.is_subcomplex_of(k)) throw MembershipError("L is not contained in K");
    if (!l0.is_subcomplex_of(k)) throw MembershipError("L0 is not contained in K");
    std::vector<Simplex> cols, rows;
    if (d <= l.dim()) cols = l.simplices(d);
    if (d - 1 <= l.dim())
        for (const Simplex& s : l.simplices(d - 1))
            if (!l0.contains(s)) rows.push_back(s);
    return boundary_submatrix(k, d, cols, rows);
}

Z torsion_cardinality(const BoundaryOperator& m)
{
    Z t = 1;
    for (const Z& x : smith_normal_form(m.to_z()).diagonal)
        if (x != 0) t *= x;
    return t;
}

Z torsion_cardinality(const SimplicialComplex& k, const SimplicialComplex& l, const SimplicialComplex& l0, int d)
{
    return torsion_cardinality(relative_boundary_matrix(k, l, l0, d));
}

namespace {

double binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TorsionReport bounds_report(const SimplicialComplex& k, int d, int samples, std::uint64_t seed,
                            std::optional<double> measured_resistance, std::optional<double> measured_capacitance,
                            double c)
{
    if (samples < 1) throw DomainError("bounds_report needs at least one sample");
    if (d < 1 || d > k.dim()) throw DomainError("bounds_report: dimension out of range");
    TorsionReport rep;
    rep.d = d;
    rep.c = c;
    rep.n0 = static_cast<int>(k.count(0));
    ZMatrix full = boundary_operator(k, d).to_z();
    const int nr = full.rows, nc = full.cols;
    rep.n = std::min(nr, nc);

    double pairs = 0;
    for (int m = 1; m <= rep.n; ++m) pairs += binom(nr, m) * binom(nc, m);
    rep.exhaustive = pairs <= kExhaustivePairLimit;

    Z dpow = d + 1;
    auto evaluate = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        const int m = static_cast<int>(rs.size());
        ZMatrix sub(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub(i, j) = full(rs[i], cs[j]);
        Z det = abs(determinant(sub));
        ++rep.submatrices;
        Z lim;
        mpz_pow_ui(lim.get_mpz_t(), dpow.get_mpz_t(), static_cast<unsigned long>(m));
        if (det * det > lim) rep.hadamard_ok = false;
        if (det > rep.t_max) {
            rep.t_max = det;
            rep.argmax_rows.clear();
            rep.argmax_cols.clear();
            const auto& rsimp = k.simplices(d - 1);
            const auto& csimp = k.simplices(d);
            for (int i : rs) rep.argmax_rows.push_back(rsimp[i]);
            for (int j : cs) rep.argmax_cols.push_back(csimp[j]);
        }
    };

    if (rep.exhaustive) {
        for (int m = 1; m <= rep.n; ++m)
            for_each_subset(nr, m, [&](const std::vector<int>& rs) {
                for_each_subset(nc, m, [&](const std::vector<int>& cs) { evaluate(rs, cs); });
            });
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> rows(nr), cols(nc);
        std::uniform_int_distribution<int> msize(1, rep.n);
        for (int s = 0; s < samples; ++s) {
            int m = msize(rng);
            std::iota(rows.begin(), rows.end(), 0);
            std::iota(cols.begin(), cols.end(), 0);
            std::shuffle(rows.begin(), rows.end(), rng);
            std::shuffle(cols.begin(), cols.end(), rng);
            std::vector<int> rs(rows.begin(), rows.begin() + m), cs(cols.begin(), cols.begin() + m);
            std::sort(rs.begin(), rs.end());
            std::sort(cs.begin(), cs.end());
            evaluate(rs, cs);
        }
    }

    rep.hadamard_bound = std::pow(std::sqrt(static_cast<double>(d + 1)), rep.n);
    double t = to_double(Q(rep.t_max));
    rep.resistance_bound = c * rep.n * rep.n * t * t;
    rep.capacitance_bound = c * rep.n * rep.n0 * t * t;
    rep.measured_resistance = measured_resistance;
    rep.measured_capacitance = measured_capacitance;
    if (measured_resistance) rep.resistance_violation = *measured_resistance > rep.resistance_bound * (1 + 1e-12);
    if (measured_capacitance) rep.capacitance_violation = *measured_capacitance > rep.capacitance_bound * (1 + 1e-12);
    return rep;
}

}  // namespace homolab
