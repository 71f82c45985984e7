#pragma once

// Decomposability of torus representations. A representation splits when the
// weight classes admit a bipartition whose spans meet only in zero, i.e. the
// ranks of the two parts add up to the rank of the whole system. The finest
// such splitting is given by the connected components of the linear matroid
// on the weight classes.

#include "torusrep/weight_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusrep {

/// Above this many weight classes find_split_witness stops enumerating
/// bipartitions and reads the witness off the matroid components.
inline constexpr std::size_t kExhaustiveSplitLimit = 12;

struct SplitWitness {
    std::vector<std::size_t> theta1;  // contains class 0
    std::vector<std::size_t> theta2;

    friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

struct BlockDecomposition {
    std::size_t flat_dim = 0;
    std::vector<std::vector<std::size_t>> blocks;  // ordered by smallest member
};

struct InducedLines {
    std::vector<IntVector> representatives;  // primitive, sign-canonical, sorted
    std::vector<std::size_t> line_of_class;  // index into representatives

    [[nodiscard]] std::size_t count() const noexcept { return representatives.size(); }
};

enum class SplitReason {
    FlatFactor,    // nonzero fixed space next to a nontrivial part
    TrivialSplit,  // the action is trivial on a space of dimension >= 2
    Witness,       // rank-additive bipartition of the weight classes
    None,
};

struct Decomposability {
    bool decomposable = false;
    SplitReason reason = SplitReason::None;
    std::optional<SplitWitness> witness;
};

std::string to_string(SplitReason reason);

InducedLines induced_lines(const WeightSystem& ws);

/// Canonical witness: the first bipartition, in increasing order of the
/// theta1 bitmask, with theta1 containing class 0. Returns nullopt for fewer
/// than two weight classes.
std::optional<SplitWitness> find_split_witness(const WeightSystem& ws);

Decomposability is_decomposable(const WeightSystem& ws);

/// Connected components of the linear matroid on the rows of `rows`, computed
/// from the fundamental circuits of a greedy basis.
std::vector<std::vector<std::size_t>> matroid_components(const IntMatrix& rows);

BlockDecomposition indecomposable_blocks(const WeightSystem& ws);

/// Faithful, indecomposable and k >= 2 imply at least k + 1 induced lines.
/// Throws PreconditionError naming the failed hypothesis.
bool check_line_bound(const WeightSystem& ws);

}  // namespace torusrep
