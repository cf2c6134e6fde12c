#include "homolab/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homolab {

std::string simplex_key(const Simplex& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Simplex parse_simplex_key(const std::string& key)
{
    std::vector<int> v;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw MalformedInputError("malformed simplex key: " + key);
        for (char c : tok)
            if (c < '0' || c > '9') throw MalformedInputError("malformed simplex key: " + key);
        v.push_back(std::stoi(tok));
    }
    return make_simplex(v);
}

Simplex make_simplex(std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw MalformedInputError("negative vertex id");
        if (i && vertices[i] == vertices[i - 1]) throw MalformedInputError("duplicate vertex in simplex");
    }
    return vertices;
}

std::vector<std::pair<Simplex, int>> signed_facets(const Simplex& s)
{
    std::vector<std::pair<Simplex, int>> out;
    out.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != j) f.push_back(s[i]);
        out.emplace_back(std::move(f), (j % 2 == 0) ? 1 : -1);
    }
    return out;
}

FChain to_float(const Chain& c)
{
    FChain out(c.dim);
    for (const auto& [s, v] : c.coeffs) out.add(s, v.get_d());
    return out;
}

IChain to_integer_chain(const Chain& c)
{
    IChain out(c.dim);
    for (const auto& [s, v] : c.coeffs) {
        if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw DomainError("chain is not integral");
        out.add(s, v.get_num().get_si());
    }
    return out;
}

Chain to_rational(const IChain& c)
{
    Chain out(c.dim);
    for (const auto& [s, v] : c.coeffs) out.add(s, Q(static_cast<long>(v)));
    return out;
}

std::pair<Simplex, int> map_simplex(const Simplex& s, const std::function<int(int)>& f)
{
    std::vector<int> img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = f(s[i]);
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < img.size(); ++i)
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < img.size(); ++i)
        if (img[i] == img[i - 1]) return {img, 0};
    return {img, sign};
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices,
                                                    const std::map<Simplex, Q>& weights)
{
    std::set<Simplex> closed;
    for (const Simplex& s : simplices) {
        if (s.empty()) continue;
        Simplex t = make_simplex(s);
        if (closed.count(t)) continue;
        const std::size_t n = t.size();
        if (n > 20) throw ResourceError("simplex dimension too large for closure");
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i)) face.push_back(t[i]);
            closed.insert(std::move(face));
        }
    }
    SimplicialComplex k;
    for (const Simplex& s : closed) {
        int d = simplex_dim(s);
        if (static_cast<int>(k.by_dim_.size()) <= d) k.by_dim_.resize(d + 1);
        k.by_dim_[d].push_back(s);
    }
    k.index_.resize(k.by_dim_.size());
    for (std::size_t d = 0; d < k.by_dim_.size(); ++d) {
        auto& v = k.by_dim_[d];
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i) k.index_[d].emplace(v[i], static_cast<int>(i));
    }
    for (const auto& [s, w] : weights) {
        if (!k.contains(s)) throw MembershipError("weight key not in complex: " + simplex_key(s));
        k.set_weight(s, w);
    }
    return k;
}

std::size_t SimplicialComplex::count(int d) const
{
    if (d < 0 || d > dim()) return 0;
    return by_dim_[d].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> empty;
    if (d < 0 || d > dim()) return empty;
    return by_dim_[d];
}

int SimplicialComplex::index_of(const Simplex& s) const
{
    int d = simplex_dim(s);
    if (d < 0 || d > dim()) return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

std::size_t SimplicialComplex::total_size() const
{
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

Q SimplicialComplex::weight(const Simplex& s) const
{
    auto it = weights_.find(s);
    return it == weights_.end() ? Q(1) : it->second;
}

bool SimplicialComplex::is_unweighted() const
{
    for (const auto& [s, w] : weights_)
        if (w != 1) return false;
    return true;
}

void SimplicialComplex::set_weight(const Simplex& s, const Q& w)
{
    if (w <= 0) throw DomainError("non-positive weight on " + simplex_key(s));
    if (!contains(s)) throw MembershipError("weight key not in complex: " + simplex_key(s));
    if (w == 1)
        weights_.erase(s);
    else
        weights_[s] = w;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        std::vector<int> cof = coface_counts(d);
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
            if (cof[i] == 0) out.push_back(by_dim_[d][i]);
    }
    return out;
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> out;
    for (const Simplex& s : simplices(0)) out.push_back(s[0]);
    return out;
}

int SimplicialComplex::max_vertex() const
{
    const auto& v = simplices(0);
    return v.empty() ? -1 : v.back()[0];
}

SimplicialComplex SimplicialComplex::skeleton(int k) const
{
    std::vector<Simplex> keep;
    std::map<Simplex, Q> w;
    for (int d = 0; d <= std::min(k, dim()); ++d)
        for (const Simplex& s : by_dim_[d]) keep.push_back(s);
    for (const auto& [s, v] : weights_)
        if (simplex_dim(s) <= k) w.emplace(s, v);
    return from_simplices(keep, w);
}

SimplicialComplex SimplicialComplex::with_top_selection(int d, const std::vector<bool>& keep) const
{
    if (keep.size() != count(d)) throw DomainError("selection mask has wrong length");
    std::vector<Simplex> out;
    std::map<Simplex, Q> w;
    for (int e = 0; e < std::min(d, dim() + 1); ++e)
        for (const Simplex& s : by_dim_[e]) out.push_back(s);
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i]) out.push_back(by_dim_[d][i]);
    SimplicialComplex res = from_simplices(out);
    for (const auto& [s, v] : weights_)
        if (res.contains(s)) res.set_weight(s, v);
    return res;
}

SimplicialComplex SimplicialComplex::without(const std::vector<Simplex>& removed) const
{
    std::set<Simplex> gone(removed.begin(), removed.end());
    SimplicialComplex k;
    for (int d = 0; d <= dim(); ++d) {
        std::vector<Simplex> level;
        for (const Simplex& s : by_dim_[d])
            if (!gone.count(s)) {
                if (d > 0)
                    for (const auto& [f, sg] : signed_facets(s))
                        if (gone.count(f)) throw DomainError("removal leaves a complex that is not closed");
                level.push_back(s);
            }
        if (level.empty()) break;
        k.by_dim_.push_back(std::move(level));
    }
    while (!k.by_dim_.empty() && k.by_dim_.back().empty()) k.by_dim_.pop_back();
    k.index_.resize(k.by_dim_.size());
    for (std::size_t d = 0; d < k.by_dim_.size(); ++d)
        for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) k.index_[d].emplace(k.by_dim_[d][i], static_cast<int>(i));
    for (const auto& [s, v] : weights_)
        if (k.contains(s)) k.weights_[s] = v;
    return k;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    for (const auto& level : by_dim_)
        for (const Simplex& s : level)
            if (!other.contains(s)) return false;
    return true;
}

std::vector<int> SimplicialComplex::coface_counts(int d) const
{
    std::vector<int> out(count(d), 0);
    for (const Simplex& t : simplices(d + 1))
        for (const auto& [f, sg] : signed_facets(t)) ++out[index_of(f)];
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal_simplices,
                                const std::map<Simplex, Q>& weights)
{
    std::vector<Simplex> ss;
    ss.reserve(maximal_simplices.size());
    for (const auto& v : maximal_simplices) {
        if (v.empty()) throw MalformedInputError("empty simplex in input");
        ss.push_back(make_simplex(v));
    }
    return SimplicialComplex::from_simplices(ss, weights);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b, int offset)
{
    if (offset <= a.max_vertex()) throw DomainError("offset does not separate the vertex sets");
    std::vector<Simplex> ss = a.maximal_simplices();
    std::map<Simplex, Q> w = a.explicit_weights();
    for (Simplex s : b.maximal_simplices()) {
        for (int& v : s) v += offset;
        ss.push_back(s);
    }
    for (const auto& [s0, v] : b.explicit_weights()) {
        Simplex s = s0;
        for (int& x : s) x += offset;
        w.emplace(s, v);
    }
    return SimplicialComplex::from_simplices(ss, w);
}

SimplicialComplex image_complex(const SimplicialComplex& k, const std::function<int(int)>& f)
{
    std::vector<Simplex> ss;
    for (const Simplex& s : k.maximal_simplices()) {
        auto [img, sign] = map_simplex(s, f);
        if (sign == 0) throw DomainError("vertex map collapses a simplex");
        ss.push_back(img);
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(ss);
    for (const auto& [s, w] : k.explicit_weights()) out.set_weight(map_simplex(s, f).first, w);
    return out;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k)
{
    std::vector<int> verts = k.vertices();
    std::map<int, int> pos;
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Simplex& e : k.simplices(1)) parent[find(pos[e[0]])] = find(pos[e[1]]);
    std::map<int, std::vector<Simplex>> groups;
    std::map<int, std::map<Simplex, Q>> wgroups;
    for (const Simplex& s : k.maximal_simplices()) groups[find(pos[s[0]])].push_back(s);
    for (const auto& [s, w] : k.explicit_weights()) wgroups[find(pos[s[0]])].emplace(s, w);
    std::vector<SimplicialComplex> out;
    for (const auto& [root, ss] : groups) out.push_back(SimplicialComplex::from_simplices(ss, wgroups[root]));
    return out;
}

ZMatrix BoundaryOperator::to_z() const
{
    ZMatrix m(rows(), cols());
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, s] : columns[c]) m(r, c) = s;
    return m;
}

QMatrix BoundaryOperator::to_q() const { return homolab::to_q(to_z()); }

Eigen::MatrixXd BoundaryOperator::to_dense() const
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows(), cols());
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, s] : columns[c]) m(r, c) = s;
    return m;
}

BoundaryOperator BoundaryOperator::restricted(const std::vector<bool>& keep_rows, const std::vector<bool>& keep_cols) const
{
    if (static_cast<int>(keep_rows.size()) != rows() || static_cast<int>(keep_cols.size()) != cols())
        throw DomainError("restriction mask has wrong length");
    BoundaryOperator out;
    out.d = d;
    std::vector<int> newrow(rows(), -1);
    for (int r = 0; r < rows(); ++r)
        if (keep_rows[r]) {
            newrow[r] = out.rows();
            out.row_simplices.push_back(row_simplices[r]);
        }
    for (int c = 0; c < cols(); ++c) {
        if (!keep_cols[c]) continue;
        out.col_simplices.push_back(col_simplices[c]);
        std::vector<std::pair<int, int>> col;
        for (const auto& [r, s] : columns[c])
            if (newrow[r] >= 0) col.emplace_back(newrow[r], s);
        out.columns.push_back(std::move(col));
    }
    return out;
}

BoundaryOperator boundary_operator(const SimplicialComplex& k, int d)
{
    if (d < 1) throw DomainError("boundary dimension must be at least 1");
    BoundaryOperator op;
    op.d = d;
    op.row_simplices = k.simplices(d - 1);
    op.col_simplices = k.simplices(d);
    op.columns.reserve(op.col_simplices.size());
    for (const Simplex& s : op.col_simplices) {
        std::vector<std::pair<int, int>> col;
        for (const auto& [f, sg] : signed_facets(s)) col.emplace_back(k.index_of(f), sg);
        std::sort(col.begin(), col.end());
        op.columns.push_back(std::move(col));
    }
    return op;
}

BoundaryOperator boundary_matrix(const SimplicialComplex& k, int d)
{
    if (d < 1 || d > k.dim())
        throw DomainError("boundary_matrix: d=" + std::to_string(d) + " outside [1, " + std::to_string(k.dim()) + "]");
    return boundary_operator(k, d);
}

Chain apply_boundary(const SimplicialComplex& k, const Chain& f)
{
    if (f.dim < 1) throw DomainError("apply_boundary needs a chain of dimension >= 1");
    for (const auto& [s, v] : f.coeffs) {
        if (simplex_dim(s) != f.dim) throw DomainError("chain contains a simplex of the wrong dimension");
        if (!k.contains(s)) throw MembershipError("chain support not in complex: " + simplex_key(s));
    }
    return boundary(f);
}

std::vector<Q> to_vector(const Chain& c, const std::vector<Simplex>& basis)
{
    std::vector<Q> v(basis.size(), Q(0));
    for (const auto& [s, x] : c.coeffs) {
        auto it = std::lower_bound(basis.begin(), basis.end(), s);
        if (it == basis.end() || *it != s) throw MembershipError("simplex outside basis: " + simplex_key(s));
        v[it - basis.begin()] = x;
    }
    return v;
}

Eigen::VectorXd to_eigen(const FChain& c, const std::vector<Simplex>& basis)
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [s, x] : c.coeffs) {
        auto it = std::lower_bound(basis.begin(), basis.end(), s);
        if (it == basis.end() || *it != s) throw MembershipError("simplex outside basis: " + simplex_key(s));
        v[it - basis.begin()] = x;
    }
    return v;
}

Chain from_vector(const std::vector<Q>& v, const std::vector<Simplex>& basis, int dim)
{
    Chain c(dim);
    for (std::size_t i = 0; i < v.size(); ++i) c.add(basis[i], v[i]);
    return c;
}

FChain from_eigen(const Eigen::VectorXd& v, const std::vector<Simplex>& basis, int dim)
{
    FChain c(dim);
    for (Eigen::Index i = 0; i < v.size(); ++i) c.add(basis[i], v[i]);
    return c;
}

}  // namespace homolab
