#pragma once

// Isotropy strata of a torus representation. A point whose nonzero
// isotypical projections are the classes in S has isotropy group
// H_S = {t : theta(t) = 1 for theta in S}, the annihilator of the integer
// span L(S). H_S fixes V0 and every component whose weight lies in L(S); for
// an abelian group the normalizer of H_S is the whole torus, so the stratum
// through the point is an open piece of that fixed space.

#include "torusrep/weight_system.hpp"

#include <string>
#include <vector>

namespace torusrep {

/// Subset enumeration refuses systems with more weight classes than this.
inline constexpr std::size_t kMaxStrataClasses = 18;

struct StratumRecord {
    std::vector<std::size_t> support;            // union of all supports with this isotropy
    IntMatrix lattice;                           // HNF basis of L(support)
    std::size_t isotropy_dim = 0;                // k - rank(support)
    std::vector<Integer> isotropy_invariants;    // SNF of the support matrix, zero-padded to k
    std::size_t fixed_dim_of_isotropy = 0;
    std::size_t stratum_dim = 0;
    std::size_t quotient_dim = 0;
    std::size_t quotient_codim = 0;

    [[nodiscard]] bool principal() const noexcept { return quotient_codim == 0; }
};

/// One record per distinct isotropy subgroup, ordered lexicographically by
/// the HNF of L(support). The empty support (isotropy T^k) is always present.
/// Throws PreconditionError above kMaxStrataClasses weight classes.
std::vector<StratumRecord> enumerate_strata(const WeightSystem& ws);

/// No non-principal stratum has codimension 1 in the orbit space.
bool boundary_empty(const WeightSystem& ws);

/// For torus actions trivial copolarity is equivalent to an empty boundary.
bool has_trivial_copolarity(const WeightSystem& ws);

struct CandidateReport {
    bool candidate = false;
    std::vector<std::string> failed;  // one entry per violated clause
};

/// Necessary conditions on the identity-component action of a minimal
/// reduction: no fixed space, faithful, indecomposable, empty boundary.
CandidateReport minimal_reduction_candidate(const WeightSystem& ws);

}  // namespace torusrep
