#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <map>
#include <string>

namespace homolab {

/// Linear map on chains, stored column-wise: the image of each basis simplex.
struct ChainMap {
    std::string name;
    std::map<Simplex, Chain> columns;

    Chain image(const Simplex& s) const;
    Chain apply(const Chain& c) const;
};

struct ChainMapSet {
    std::map<Simplex, ChainMap> b;           ///< cone maps b_sigma, keyed by the d-simplex
    std::map<std::string, ChainMap> maps;    ///< "S", "I0", "I1", "P", "SP"
    std::map<Simplex, int> stellar_vertex;   ///< v_sigma per d-simplex
    int level_offset = 0;                    ///< (v,1) = v + level_offset
    std::map<int, int> relabel;              ///< vertex identification, when applied

    const ChainMap& at(const std::string& name) const;
};

struct DerivedComplex {
    SimplicialComplex complex;
    ChainMapSet maps;
    VerificationReport checks;
};

/// Every face of s, including s, excluding the empty simplex.
std::vector<Simplex> faces_of(const Simplex& s, bool proper = false);

/// Cone with v_sigma appended last: (-1)^{|tau|} (tau + v); the empty simplex maps to v.
Chain cone_last(const Chain& c, int v);

/**
 * Stellar subdivision of a pure d-complex. v_sigma = max vertex + 1 + index of
 * sigma in K_d. Checks d b + b d = 1 on proper faces and d S = S d.
 */
DerivedComplex stellar_subdivision(const SimplicialComplex& k);

/// Prism K x [0,1] with (v,0) = v and (v,1) = v + max vertex + 1.
DerivedComplex prism(const SimplicialComplex& k);

/**
 * Stellar prism of a pure d-complex: bottom copy as K, top copy stellar
 * subdivided. v_sigma = 2 (max vertex + 1) + index of sigma.
 * Checks d SP + SP d = S I1 - I0 along with the prism identity.
 */
DerivedComplex stellar_prism(const SimplicialComplex& k);

/// Top cell count of the stellar prism of a pure d-complex: n_d (d (d+1) + 1).
std::size_t stellar_prism_top_count(int d, std::size_t n_d);

}  // namespace homolab
