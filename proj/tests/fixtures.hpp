#pragma once

#include "homolab/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using homolab::Q;
using homolab::Simplex;
using homolab::SimplicialComplex;

/// Canonical rational a/b.
inline Q q(long a, long b = 1)
{
    Q out(a, b);
    out.canonicalize();
    return out;
}

inline SimplicialComplex simplex(int d)
{
    std::vector<int> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = i;
    return homolab::build_complex({v});
}

inline SimplicialComplex sphere2() { return homolab::build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

/// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus()
{
    std::vector<std::vector<int>> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return homolab::build_complex(t);
}

/// 6-vertex real projective plane.
inline SimplicialComplex rp2()
{
    return homolab::build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                   {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Closure of a few random simplices on at most max_vertices vertices.
inline SimplicialComplex random_complex(std::uint64_t seed, int max_vertices = 8, int max_dim = 3, int max_cells = 8)
{
    std::mt19937_64 rng(seed);
    int nv = 3 + static_cast<int>(rng() % (max_vertices - 2));
    int cells = 1 + static_cast<int>(rng() % max_cells);
    std::vector<std::vector<int>> maximal;
    for (int c = 0; c < cells; ++c) {
        int size = 1 + static_cast<int>(rng() % (max_dim + 1));
        std::vector<int> all(nv);
        for (int i = 0; i < nv; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::min(size, nv));
        maximal.push_back(all);
    }
    return homolab::build_complex(maximal);
}

}  // namespace fixtures
