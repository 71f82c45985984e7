#pragma once

// Exhaustive, bounded verification sweeps. The universe of a sweep is every
// weight system with fixed_dim 0, k in `ks`, between 1 and max_classes
// distinct weight classes with entries in [-max_entry, max_entry] and
// multiplicities in [1, max_mult]. Involution sweeps further range over
// order_two_matrices(k) and candidate_involutions(ws, A).

#include "torusrep/json_io.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace torusrep {

inline constexpr int kMaxSweepEntry = 3;
inline constexpr std::size_t kMaxSweepClasses = 4;
inline constexpr std::size_t kMaxSweepK = 2;
inline constexpr std::size_t kMaxSweepMult = 3;

struct SweepRanges {
    std::vector<std::size_t> ks;
    int max_entry = 2;
    std::size_t max_classes = 4;
    std::size_t max_mult = 2;
};

struct SweepResult {
    std::string theorem;
    SweepRanges ranges;
    std::size_t enumerated = 0;   // weight systems
    std::size_t extensions = 0;   // (A, omega) pairs examined, involution sweeps only
    std::size_t passing = 0;      // inputs meeting the theorem's hypotheses
    std::map<std::string, std::size_t> tallies;
    std::vector<Json> counterexamples;  // sorted by their JSON encoding

    [[nodiscard]] bool clean() const noexcept { return counterexamples.empty(); }
};

/// The accepted theorem ids: cor2.7, lem3.3, lem3.4, thm4.1, prop3.8.
const std::vector<std::string>& theorem_ids();

/// Defaults per theorem id; InputError for an unknown id.
SweepRanges default_ranges(const std::string& theorem);

/// Throws InputError when the ranges leave the bounded universe or do not fit
/// the theorem (cor2.7 needs k >= 2, thm4.1 needs k = 1).
void check_ranges(const std::string& theorem, const SweepRanges& ranges);

/// Sign-canonical nonzero vectors of Z^k with entries in [-max_entry, max_entry], ascending.
std::vector<IntVector> canonical_vectors(std::size_t k, int max_entry);

/// Every weight system of the universe for one k, in a fixed order.
std::vector<WeightSystem> enumerate_weight_systems(std::size_t k, int max_entry, std::size_t max_classes,
                                                   std::size_t max_mult);

/// Runs the sweep on `threads` workers (0 = hardware concurrency). The result
/// does not depend on the thread count.
SweepResult run_sweep(const std::string& theorem, const SweepRanges& ranges, unsigned threads = 0);

Json to_json(const SweepResult& r);

}  // namespace torusrep
