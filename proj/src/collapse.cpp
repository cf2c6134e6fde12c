#include "homolab/collapse.hpp"

#include <map>
#include <set>

namespace homolab {

namespace {

/// Live simplices with immediate coface sets.
class CollapseState {
public:
    explicit CollapseState(const SimplicialComplex& k)
    {
        for (int e = 0; e <= k.dim(); ++e)
            for (const Simplex& s : k.simplices(e)) cofaces_[s];
        for (int e = 1; e <= k.dim(); ++e)
            for (const Simplex& s : k.simplices(e))
                for (const auto& [f, sg] : signed_facets(s)) cofaces_[f].insert(s);
    }

    bool alive(const Simplex& s) const { return cofaces_.count(s) > 0; }

    bool is_free(const Simplex& tau, const Simplex& sigma) const
    {
        auto it = cofaces_.find(tau);
        if (it == cofaces_.end() || it->second.size() != 1 || *it->second.begin() != sigma) return false;
        auto js = cofaces_.find(sigma);
        return js != cofaces_.end() && js->second.empty();
    }

    std::vector<CollapsePair> pairs() const
    {
        std::vector<CollapsePair> out;
        for (const auto& [tau, cof] : cofaces_)
            if (cof.size() == 1 && cofaces_.at(*cof.begin()).empty()) out.emplace_back(*cof.begin(), tau);
        return out;
    }

    void remove(const Simplex& s)
    {
        cofaces_.erase(s);
        if (s.size() > 1)
            for (const auto& [f, sg] : signed_facets(s)) cofaces_[f].erase(s);
    }

private:
    std::map<Simplex, std::set<Simplex>> cofaces_;
};

}  // namespace

std::vector<CollapsePair> find_collapse_pairs(const SimplicialComplex& k)
{
    return CollapseState(k).pairs();
}

CollapseSequence greedy_collapse(const SimplicialComplex& k, std::optional<int> target_dim)
{
    CollapseSequence seq;
    seq.source = k;
    seq.target_dim = target_dim;
    CollapseState st(k);
    std::vector<Simplex> removed;
    for (;;) {
        std::vector<CollapsePair> cand = st.pairs();
        const CollapsePair* best = nullptr;
        for (const CollapsePair& p : cand) {
            int ds = simplex_dim(p.first);
            if (target_dim && ds <= *target_dim) continue;
            if (!best || ds > simplex_dim(best->first) ||
                (ds == simplex_dim(best->first) && p.second < best->second))
                best = &p;
        }
        if (!best) break;
        CollapsePair p = *best;
        st.remove(p.first);
        st.remove(p.second);
        removed.push_back(p.first);
        removed.push_back(p.second);
        seq.pairs.push_back(p);
    }
    seq.result = k.without(removed);
    seq.reached_target = !target_dim || seq.result.dim() <= *target_dim;
    return seq;
}

VerificationReport verify_collapse_sequence(const CollapseSequence& seq)
{
    VerificationReport rep;
    std::map<Simplex, int> live;
    const SimplicialComplex& k = seq.source;
    for (int e = 0; e <= k.dim(); ++e)
        for (const Simplex& s : k.simplices(e)) live[s] = 1;
    bool ok = true;
    std::string bad;
    std::vector<Simplex> removed;
    for (std::size_t i = 0; i < seq.pairs.size() && ok; ++i) {
        const auto& [sigma, tau] = seq.pairs[i];
        if (!live.count(sigma) || !live.count(tau) || tau.size() + 1 != sigma.size() ||
            !std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) {
            ok = false;
            bad = "step " + std::to_string(i) + " is not a face pair of live simplices";
            break;
        }
        for (const auto& [s, flag] : live) {
            if (s == sigma || s == tau || s.size() <= tau.size()) continue;
            if (std::includes(s.begin(), s.end(), tau.begin(), tau.end())) {
                ok = false;
                bad = "step " + std::to_string(i) + ": " + simplex_key(tau) + " is also a face of " + simplex_key(s);
                break;
            }
        }
        live.erase(sigma);
        live.erase(tau);
        removed.push_back(sigma);
        removed.push_back(tau);
    }
    rep.add("every pair is free when applied", ok, bad);
    bool same = ok && k.without(removed) == seq.result;
    rep.add("result equals source minus removed simplices", same);
    return rep;
}

Chain transport_chain(const CollapseSequence& seq, const Chain& f, const Chain& gamma)
{
    if (!(boundary(f) == gamma)) throw DomainError("transport precondition: d f != gamma");
    for (const auto& [s, v] : gamma.coeffs)
        if (!seq.result.contains(s)) throw DomainError("gamma is not supported in the collapsed complex");
    const int d = f.dim;
    Chain cur = f;
    for (const auto& [sigma, tau] : seq.pairs) {
        if (simplex_dim(sigma) == d) {
            if (cur.get(sigma) != 0) throw NumericError("collapsed d-simplex carries flow");
        } else if (simplex_dim(tau) == d) {
            Q ft = cur.get(tau);
            if (ft == 0) continue;
            Chain bd = boundary(single<Q>(sigma));
            cur -= bd.scaled(bd.get(tau) * ft);
        }
    }
    return cur;
}

}  // namespace homolab
