#include "homolab/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace homolab {

namespace {

int color_of(const Coloring& c, int v)
{
    auto it = c.find(v);
    if (it == c.end()) throw DomainError("vertex " + std::to_string(v) + " has no color");
    return it->second;
}

std::vector<int> color_set(const Coloring& c, const Simplex& s)
{
    std::vector<int> out;
    for (int v : s) out.push_back(color_of(c, v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PropernessReport check_coloring(const SimplicialComplex& k, const Coloring& c)
{
    PropernessReport rep;
    for (int v : k.vertices()) color_of(c, v);
    if (k.dim() >= 1)
        for (const Simplex& e : k.simplices(1))
            if (color_of(c, e[0]) == color_of(c, e[1])) {
                rep.edge_condition = false;
                rep.detail = "condition (1): edge " + simplex_key(e) + " has both endpoints colored " +
                             std::to_string(color_of(c, e[0]));
                return rep;
            }
    const int d = k.dim();
    if (d >= 1) {
        std::map<std::vector<int>, Simplex> seen;
        for (const Simplex& s : k.simplices(d - 1)) {
            auto key = color_set(c, s);
            auto [it, fresh] = seen.emplace(key, s);
            if (!fresh) {
                rep.distinct_condition = false;
                rep.detail = "condition (2): (d-1)-simplices " + simplex_key(it->second) + " and " + simplex_key(s) +
                             " share a color set";
                return rep;
            }
        }
    }
    return rep;
}

SimplicialComplex pattern_complex(const SimplicialComplex& k, const Coloring& c)
{
    PropernessReport rep = check_coloring(k, c);
    if (!rep.proper()) throw DomainError("improper coloring: " + rep.detail);
    return image_complex(k, [&](int v) { return color_of(c, v); });
}

int generalized_degree(const SimplicialComplex& k)
{
    const int d = k.dim();
    int best = 0;
    for (int i = 1; i < d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            std::map<Simplex, int> count;
            for (const Simplex& t : k.simplices(j)) {
                const int n = static_cast<int>(t.size());
                std::vector<bool> pick(n, false);
                std::fill(pick.begin(), pick.begin() + i + 1, true);
                do {
                    Simplex f;
                    for (int a = 0; a < n; ++a)
                        if (pick[a]) f.push_back(t[a]);
                    ++count[f];
                } while (std::prev_permutation(pick.begin(), pick.end()));
            }
            for (const auto& [s, m] : count) best = std::max(best, m);
        }
    return best;
}

std::optional<ColoringData> random_proper_coloring(const SimplicialComplex& k, int color_budget, int attempts,
                                                   std::uint64_t seed)
{
    if (color_budget < 1 || attempts < 1) throw DomainError("color budget and attempts must be positive");
    const std::vector<int> verts = k.vertices();
    const int d = k.dim();
    std::map<int, std::vector<Simplex>> ridges_at;
    std::map<int, std::vector<int>> nbrs;
    if (d >= 1) {
        for (const Simplex& e : k.simplices(1)) {
            nbrs[e[0]].push_back(e[1]);
            nbrs[e[1]].push_back(e[0]);
        }
        for (const Simplex& s : k.simplices(d - 1))
            for (int v : s) ridges_at[v].push_back(s);
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        std::vector<int> order = verts;
        std::shuffle(order.begin(), order.end(), rng);
        Coloring c;
        std::map<std::vector<int>, int> used;  // color sets of fully colored ridges
        bool failed = false;
        for (int v : order) {
            std::vector<int> palette(color_budget);
            std::iota(palette.begin(), palette.end(), 0);
            std::shuffle(palette.begin(), palette.end(), rng);
            bool placed = false;
            for (int col : palette) {
                bool ok = true;
                for (int u : nbrs[v])
                    if (c.count(u) && c[u] == col) ok = false;
                std::vector<std::vector<int>> added;
                if (ok) {
                    c[v] = col;
                    for (const Simplex& s : ridges_at[v]) {
                        bool full = std::all_of(s.begin(), s.end(), [&](int u) { return c.count(u) > 0; });
                        if (!full) continue;
                        auto key = color_set(c, s);
                        if (used.count(key) || std::find(added.begin(), added.end(), key) != added.end()) {
                            ok = false;
                            break;
                        }
                        added.push_back(key);
                    }
                    if (!ok) c.erase(v);
                }
                if (ok) {
                    for (auto& key : added) used[key] = 1;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                failed = true;
                break;
            }
        }
        if (failed) continue;
        ColoringData out;
        out.coloring = c;
        out.properness = check_coloring(k, c);
        if (!out.properness.proper()) continue;
        out.generalized_degree = generalized_degree(k);
        std::set<int> cols;
        for (const auto& [v, col] : c) cols.insert(col);
        out.colors_used = static_cast<int>(cols.size());
        out.attempts_used = attempt;
        out.pattern = pattern_complex(k, c);
        return out;
    }
    return std::nullopt;
}

}  // namespace homolab
