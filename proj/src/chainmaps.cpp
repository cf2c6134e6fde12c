#include "homolab/chainmaps.hpp"

#include <algorithm>
#include <set>

namespace homolab {

Chain ChainMap::image(const Simplex& s) const
{
    auto it = columns.find(s);
    if (it == columns.end()) throw DomainError("chain map " + name + " undefined on " + simplex_key(s));
    return it->second;
}

Chain ChainMap::apply(const Chain& c) const
{
    Chain out;
    bool first = true;
    for (const auto& [s, v] : c.coeffs) {
        Chain img = image(s);
        if (first) {
            out = Chain(img.dim);
            first = false;
        }
        out += img.scaled(v);
    }
    return out;
}

const ChainMap& ChainMapSet::at(const std::string& name) const
{
    auto it = maps.find(name);
    if (it == maps.end()) throw DomainError("no chain map named " + name);
    return it->second;
}

std::vector<Simplex> faces_of(const Simplex& s, bool proper)
{
    std::vector<Simplex> out;
    const int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (proper && mask == (1u << n) - 1) continue;
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chain cone_last(const Chain& c, int v)
{
    Chain out(c.dim + 1);
    for (const auto& [t, x] : c.coeffs) {
        if (!t.empty() && t.back() >= v) throw DomainError("cone vertex must exceed every vertex of the base");
        Simplex s = t;
        s.push_back(v);
        out.add(s, t.size() % 2 == 0 ? x : Q(-x));
    }
    return out;
}

namespace {

int require_pure(const SimplicialComplex& k)
{
    if (k.dim() < 0) throw DomainError("complex is empty");
    const int d = k.dim();
    for (const Simplex& s : k.maximal_simplices())
        if (simplex_dim(s) != d) throw DomainError("complex is not pure: maximal simplex " + simplex_key(s));
    return d;
}

bool supported_in(const SimplicialComplex& k, const Chain& c)
{
    for (const auto& [s, v] : c.coeffs)
        if (!s.empty() && !k.contains(s)) return false;
    return true;
}

Simplex shift(const Simplex& s, int off)
{
    Simplex t = s;
    for (int& v : t) v += off;
    return t;
}

/// sigma^j = {(v_0,0),...,(v_j,0),(v_j,1),...,(v_k,1)}
Simplex prism_piece(const Simplex& s, int j, int off)
{
    Simplex t;
    for (int i = 0; i <= j; ++i) t.push_back(s[i]);
    for (int i = j; i < static_cast<int>(s.size()); ++i) t.push_back(s[i] + off);
    return t;
}

Chain prism_chain(const Simplex& s, int off)
{
    Chain c(simplex_dim(s) + 1);
    for (int j = 0; j < static_cast<int>(s.size()); ++j) c.add(prism_piece(s, j, off), j % 2 == 0 ? Q(1) : Q(-1));
    return c;
}

std::vector<Simplex> all_simplices(const SimplicialComplex& k, int max_dim)
{
    std::vector<Simplex> out;
    for (int e = 0; e <= std::min(max_dim, k.dim()); ++e)
        out.insert(out.end(), k.simplices(e).begin(), k.simplices(e).end());
    return out;
}

void check_cone_identity(VerificationReport& rep, const SimplicialComplex& target, const Simplex& sigma,
                         const ChainMap& b, int v)
{
    bool ok = true;
    std::string bad;
    for (const auto& [phi, img] : b.columns) {
        Chain lhs = boundary(img);
        Chain rhs = single<Q>(phi) - cone_last(boundary(single<Q>(phi), true), v);
        if (!(lhs == rhs) || !supported_in(target, img)) {
            ok = false;
            bad = simplex_key(phi);
            break;
        }
    }
    rep.add("cone identity d b + b d = 1 at " + simplex_key(sigma), ok, ok ? "" : "fails on " + bad);
}

}  // namespace

DerivedComplex stellar_subdivision(const SimplicialComplex& k)
{
    const int d = require_pure(k);
    DerivedComplex out;
    ChainMapSet& m = out.maps;
    const int base = k.max_vertex() + 1;
    const std::vector<Simplex>& top = k.simplices(d);

    std::vector<Simplex> cells;
    if (d == 0) {
        for (std::size_t i = 0; i < top.size(); ++i) cells.push_back({base + static_cast<int>(i)});
    } else {
        for (const Simplex& s : k.skeleton(d - 1).maximal_simplices()) cells.push_back(s);
    }
    for (std::size_t i = 0; i < top.size(); ++i) {
        const Simplex& sigma = top[i];
        int v = base + static_cast<int>(i);
        m.stellar_vertex[sigma] = v;
        ChainMap b;
        b.name = "b_" + simplex_key(sigma);
        for (const Simplex& tau : faces_of(sigma, true)) {
            b.columns[tau] = cone_last(single<Q>(tau), v);
            if (simplex_dim(tau) == d - 1) {
                Simplex c = tau;
                c.push_back(v);
                cells.push_back(c);
            }
        }
        m.b[sigma] = b;
    }
    out.complex = SimplicialComplex::from_simplices(cells);

    ChainMap s_map;
    s_map.name = "S";
    for (const Simplex& s : all_simplices(k, d)) {
        if (simplex_dim(s) < d) {
            s_map.columns[s] = single<Q>(s);
        } else {
            int v = m.stellar_vertex.at(s);
            s_map.columns[s] = cone_last(boundary(single<Q>(s), true), v);
        }
    }
    m.maps["S"] = s_map;

    VerificationReport& rep = out.checks;
    for (const Simplex& sigma : top) check_cone_identity(rep, out.complex, sigma, m.b.at(sigma), m.stellar_vertex.at(sigma));
    bool ok = true;
    for (const Simplex& s : all_simplices(k, d)) {
        Chain img = s_map.image(s);
        if (!supported_in(out.complex, img)) ok = false;
        if (s.size() > 1 && !(boundary(img) == s_map.apply(boundary(single<Q>(s))))) ok = false;
    }
    rep.add("chain map d S = S d", ok);
    std::size_t expect = d == 0 ? top.size() : (d + 1) * top.size();
    rep.add("top cell count (d+1) n_d", out.complex.count(d) == expect,
            std::to_string(out.complex.count(d)) + " top cells");
    if (!rep.all_pass()) throw NumericError("stellar subdivision failed its identity checks");
    return out;
}

DerivedComplex prism(const SimplicialComplex& k)
{
    DerivedComplex out;
    ChainMapSet& m = out.maps;
    if (k.dim() < 0) {
        out.complex = k;
        return out;
    }
    const int off = k.max_vertex() + 1;
    m.level_offset = off;
    std::vector<Simplex> cells;
    ChainMap i0{"I0", {}}, i1{"I1", {}}, p{"P", {}};
    for (const Simplex& s : all_simplices(k, k.dim())) {
        i0.columns[s] = single<Q>(s);
        i1.columns[s] = single<Q>(shift(s, off));
        p.columns[s] = prism_chain(s, off);
        for (const auto& [piece, c] : p.columns[s].coeffs) cells.push_back(piece);
    }
    out.complex = SimplicialComplex::from_simplices(cells);
    bool ok = true;
    std::string bad;
    for (const Simplex& s : all_simplices(k, k.dim())) {
        Chain lhs = boundary(p.columns[s]);
        if (s.size() > 1) lhs += p.apply(boundary(single<Q>(s)));
        Chain rhs = i1.columns[s] - i0.columns[s];
        if (!(lhs == rhs) || !supported_in(out.complex, p.columns[s])) {
            ok = false;
            bad = simplex_key(s);
            break;
        }
    }
    out.checks.add("prism identity P d + d P = I1 - I0", ok, ok ? "" : "fails on " + bad);
    m.maps["I0"] = i0;
    m.maps["I1"] = i1;
    m.maps["P"] = p;
    if (!out.checks.all_pass()) throw NumericError("prism failed its identity check");
    return out;
}

std::size_t stellar_prism_top_count(int d, std::size_t n_d)
{
    return n_d * (static_cast<std::size_t>(d) * (d + 1) + 1);
}

DerivedComplex stellar_prism(const SimplicialComplex& k)
{
    const int d = require_pure(k);
    DerivedComplex out;
    ChainMapSet& m = out.maps;
    const int off = k.max_vertex() + 1;
    const int base = 2 * off;
    m.level_offset = off;
    const std::vector<Simplex>& top = k.simplices(d);

    std::vector<Simplex> cells;
    ChainMap i0{"I0", {}}, i1{"I1", {}}, p{"P", {}}, s_map{"S", {}}, sp{"SP", {}};
    for (const Simplex& s : all_simplices(k, d)) {
        i0.columns[s] = single<Q>(s);
        i1.columns[s] = single<Q>(shift(s, off));
        if (simplex_dim(s) < d) {
            p.columns[s] = prism_chain(s, off);
            for (const auto& [piece, c] : p.columns[s].coeffs) cells.push_back(piece);
        }
    }
    for (std::size_t i = 0; i < top.size(); ++i) {
        const Simplex& sigma = top[i];
        int v = base + static_cast<int>(i);
        m.stellar_vertex[sigma] = v;
        std::vector<Simplex> dom;
        for (const Simplex& tau : faces_of(sigma, true))
            for (const auto& [piece, c] : prism_chain(tau, off).coeffs) dom.push_back(piece);
        dom.push_back(sigma);
        std::set<Simplex> closed;
        for (const Simplex& s : dom)
            for (const Simplex& f : faces_of(s)) closed.insert(f);
        ChainMap b;
        b.name = "b_" + simplex_key(sigma);
        for (const Simplex& phi : closed) {
            b.columns[phi] = cone_last(single<Q>(phi), v);
            Simplex c = phi;
            c.push_back(v);
            cells.push_back(c);
        }
        m.b[sigma] = b;
    }
    out.complex = SimplicialComplex::from_simplices(cells);

    for (const Simplex& s : all_simplices(k, d)) {
        Simplex up = shift(s, off);
        if (simplex_dim(s) < d) {
            s_map.columns[up] = single<Q>(up);
            sp.columns[s] = p.columns[s];
        } else {
            const ChainMap& b = m.b.at(s);
            Chain i1_bd = d == 0 ? single<Q>(Simplex{}) : i1.apply(boundary(single<Q>(s)));
            s_map.columns[up] = cone_last(i1_bd, m.stellar_vertex.at(s));
            Chain c = b.apply(i0.columns[s]) + b.apply(p.apply(boundary(single<Q>(s))));
            sp.columns[s] = c.scaled(Q(-1));
        }
    }

    VerificationReport& rep = out.checks;
    for (const Simplex& sigma : top) check_cone_identity(rep, out.complex, sigma, m.b.at(sigma), m.stellar_vertex.at(sigma));
    {
        bool ok = true;
        for (const Simplex& s : all_simplices(k, d - 1)) {
            Chain lhs = boundary(p.columns[s]);
            if (s.size() > 1) lhs += p.apply(boundary(single<Q>(s)));
            if (!(lhs == i1.columns[s] - i0.columns[s])) ok = false;
        }
        rep.add("prism identity P d + d P = I1 - I0", ok);
    }
    {
        bool ok = true;
        std::string bad;
        for (const Simplex& s : all_simplices(k, d)) {
            Chain lhs = boundary(sp.columns[s]);
            if (s.size() > 1) lhs += sp.apply(boundary(single<Q>(s)));
            Chain rhs = s_map.apply(i1.columns[s]) - i0.columns[s];
            if (!(lhs == rhs) || !supported_in(out.complex, sp.columns[s])) {
                ok = false;
                bad = simplex_key(s);
                break;
            }
        }
        rep.add("stellar prism identity d SP + SP d = S I1 - I0", ok, ok ? "" : "fails on " + bad);
    }
    rep.add("top cell count n_d (d (d+1) + 1)", out.complex.count(d + 1) == stellar_prism_top_count(d, top.size()),
            std::to_string(out.complex.count(d + 1)) + " top cells");
    m.maps["I0"] = i0;
    m.maps["I1"] = i1;
    m.maps["P"] = p;
    m.maps["S"] = s_map;
    m.maps["SP"] = sp;
    if (!rep.all_pass()) throw NumericError("stellar prism failed its identity checks");
    return out;
}

}  // namespace homolab
