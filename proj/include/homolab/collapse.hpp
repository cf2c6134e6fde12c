#pragma once

#include "homolab/complex.hpp"
#include "homolab/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homolab {

/// (sigma, tau) with tau a free face of sigma.
using CollapsePair = std::pair<Simplex, Simplex>;

struct CollapseSequence {
    std::vector<CollapsePair> pairs;
    SimplicialComplex source;
    SimplicialComplex result;
    std::optional<int> target_dim;
    bool reached_target = true;
};

/// All collapse pairs, ordered by tau then sigma.
std::vector<CollapsePair> find_collapse_pairs(const SimplicialComplex& k);

/**
 * Repeatedly remove the lexicographically smallest free pair among those
 * whose sigma has maximal dimension, while some pair has dim sigma > target_dim.
 */
CollapseSequence greedy_collapse(const SimplicialComplex& k, std::optional<int> target_dim = std::nullopt);

/// Replay a sequence on its source, re-checking freeness at every step.
VerificationReport verify_collapse_sequence(const CollapseSequence& seq);

/**
 * Move a chain f with d f = gamma onto the collapsed complex, keeping the
 * boundary. Throws DomainError if d f != gamma or gamma leaves the result.
 */
Chain transport_chain(const CollapseSequence& seq, const Chain& f, const Chain& gamma);

}  // namespace homolab
