#pragma once

#include "homolab/linalg.hpp"
#include "homolab/rational.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace homolab {

/// Strictly increasing vertex ids; dimension is size() - 1.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// "0,1,2" key used by the JSON formats.
std::string simplex_key(const Simplex& s);
Simplex parse_simplex_key(const std::string& key);

/// Sorted copy; throws MalformedInputError on duplicate or negative ids.
Simplex make_simplex(std::vector<int> vertices);

/// Codimension-one faces with their orientation signs (-1)^j.
std::vector<std::pair<Simplex, int>> signed_facets(const Simplex& s);

/**
 * Sparse chain with coefficients in T. Zero coefficients are never stored.
 */
template <class T>
struct ChainT {
    int dim = 0;
    std::map<Simplex, T> coeffs;

    ChainT() = default;
    explicit ChainT(int d) : dim(d) {}

    void add(const Simplex& s, const T& v)
    {
        if (v == T(0)) return;
        auto it = coeffs.find(s);
        if (it == coeffs.end()) {
            coeffs.emplace(s, v);
            return;
        }
        it->second += v;
        if (it->second == T(0)) coeffs.erase(it);
    }

    T get(const Simplex& s) const
    {
        auto it = coeffs.find(s);
        return it == coeffs.end() ? T(0) : it->second;
    }

    bool is_zero() const { return coeffs.empty(); }
    std::size_t size() const { return coeffs.size(); }

    ChainT& operator+=(const ChainT& o)
    {
        for (const auto& [s, v] : o.coeffs) add(s, v);
        return *this;
    }
    ChainT& operator-=(const ChainT& o)
    {
        for (const auto& [s, v] : o.coeffs) add(s, T(-v));
        return *this;
    }
    ChainT scaled(const T& k) const
    {
        ChainT out(dim);
        if (k == T(0)) return out;
        for (const auto& [s, v] : coeffs) out.coeffs.emplace(s, T(v * k));
        return out;
    }
    friend ChainT operator+(ChainT a, const ChainT& b) { return a += b; }
    friend ChainT operator-(ChainT a, const ChainT& b) { return a -= b; }
    friend bool operator==(const ChainT& a, const ChainT& b) { return a.coeffs == b.coeffs; }

    T norm2() const
    {
        T s(0);
        for (const auto& [k, v] : coeffs) s += v * v;
        return s;
    }
};

using Chain = ChainT<Q>;
using FChain = ChainT<double>;
using IChain = ChainT<long long>;

template <class T>
ChainT<T> single(const Simplex& s, const T& v = T(1))
{
    ChainT<T> c(simplex_dim(s));
    c.add(s, v);
    return c;
}

FChain to_float(const Chain& c);
IChain to_integer_chain(const Chain& c);  ///< throws DomainError on non-integers
Chain to_rational(const IChain& c);

/**
 * Purely combinatorial boundary. In augmented mode the boundary of a vertex is
 * the empty simplex, which makes the chain-map identities hold in degree 0.
 */
template <class T>
ChainT<T> boundary(const ChainT<T>& f, bool augmented = false)
{
    ChainT<T> out(f.dim - 1);
    for (const auto& [s, v] : f.coeffs) {
        if (s.size() == 1) {
            if (augmented) out.add(Simplex{}, v);
            continue;
        }
        for (const auto& [face, sign] : signed_facets(s)) out.add(face, sign > 0 ? v : T(-v));
    }
    return out;
}

/// Oriented image under a vertex map; sign 0 means the image is degenerate.
std::pair<Simplex, int> map_simplex(const Simplex& s, const std::function<int(int)>& f);

template <class T>
ChainT<T> pushforward(const ChainT<T>& c, const std::function<int(int)>& f)
{
    ChainT<T> out(c.dim);
    for (const auto& [s, v] : c.coeffs) {
        auto [img, sign] = map_simplex(s, f);
        if (sign == 0) continue;
        out.add(img, sign > 0 ? v : T(-v));
    }
    return out;
}

/**
 * Downward-closed weighted simplicial complex with canonical (lexicographic)
 * simplex order inside each dimension.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closure of the given simplices. Weights default to 1.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices,
                                            const std::map<Simplex, Q>& weights = {});

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int d) const;
    const std::vector<Simplex>& simplices(int d) const;
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }
    std::size_t total_size() const;

    Q weight(const Simplex& s) const;
    const std::map<Simplex, Q>& explicit_weights() const { return weights_; }
    bool is_unweighted() const;
    void set_weight(const Simplex& s, const Q& w);

    std::vector<Simplex> maximal_simplices() const;
    std::vector<int> vertices() const;
    int max_vertex() const;

    /// Simplices of dimension <= k.
    SimplicialComplex skeleton(int k) const;
    /// K^{d-1} together with the d-simplices whose mask entry is true.
    SimplicialComplex with_top_selection(int d, const std::vector<bool>& keep) const;
    /// Removes the listed simplices; throws DomainError if the result is not closed.
    SimplicialComplex without(const std::vector<Simplex>& removed) const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    /// Number of (d+1)-cofaces of each d-simplex.
    std::vector<int> coface_counts(int d) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.by_dim_ == b.by_dim_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, int>> index_;
    std::map<Simplex, Q> weights_;
};

/**
 * Build the closure of the maximal simplices.
 *
 * @param maximal_simplices vertex lists (any order inside each list)
 * @param weights optional positive weights keyed by generated simplices
 */
SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal_simplices,
                                const std::map<Simplex, Q>& weights = {});

/// Disjoint union with the second complex's vertices shifted by `offset`.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b, int offset);

/// Image complex under a vertex map (weights carried when simplices stay distinct).
SimplicialComplex image_complex(const SimplicialComplex& k, const std::function<int(int)>& f);

/// Connected components as vertex-induced subcomplexes.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k);

/**
 * Integral boundary operator with rows indexed by (d-1)-simplices and columns
 * by d-simplices in canonical order.
 */
struct BoundaryOperator {
    int d = 0;
    std::vector<Simplex> row_simplices;
    std::vector<Simplex> col_simplices;
    std::vector<std::vector<std::pair<int, int>>> columns;  ///< (row, sign) per column

    int rows() const { return static_cast<int>(row_simplices.size()); }
    int cols() const { return static_cast<int>(col_simplices.size()); }

    ZMatrix to_z() const;
    QMatrix to_q() const;
    Eigen::MatrixXd to_dense() const;
    /// Keep the listed rows and columns (relative boundary matrices).
    BoundaryOperator restricted(const std::vector<bool>& keep_rows, const std::vector<bool>& keep_cols) const;
};

/// Public entry point: requires 1 <= d <= dim(K).
BoundaryOperator boundary_matrix(const SimplicialComplex& k, int d);
/// Unchecked variant used internally: any d >= 1, possibly with zero rows or columns.
BoundaryOperator boundary_operator(const SimplicialComplex& k, int d);

/// Boundary of a chain supported in K; throws MembershipError otherwise.
Chain apply_boundary(const SimplicialComplex& k, const Chain& f);

/// Coefficient vector in the given basis; throws MembershipError on foreign simplices.
std::vector<Q> to_vector(const Chain& c, const std::vector<Simplex>& basis);
Eigen::VectorXd to_eigen(const FChain& c, const std::vector<Simplex>& basis);
Chain from_vector(const std::vector<Q>& v, const std::vector<Simplex>& basis, int dim);
FChain from_eigen(const Eigen::VectorXd& v, const std::vector<Simplex>& basis, int dim);

}  // namespace homolab
