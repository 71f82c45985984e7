#pragma once

// A real representation of the torus T^k, stored as its fixed-space
// dimension plus the multiset of nonzero integer weights. Each weight class
// (theta identified with -theta) is one real isotypical component of real
// dimension 2 * multiplicity.

#include "torusrep/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace torusrep {

struct RawWeight {
    IntVector vector;
    std::size_t multiplicity = 1;
};

struct Weight {
    IntVector vector;  // sign-canonical: first nonzero entry positive
    std::size_t multiplicity = 1;

    friend bool operator==(const Weight&, const Weight&) = default;
};

struct IsotypicalComponent {
    IntVector weight;
    std::size_t multiplicity = 0;
    std::size_t real_dim = 0;
    std::size_t coordinate_offset = 0;
};

class WeightSystem {
public:
    WeightSystem() = default;

    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    [[nodiscard]] std::size_t fixed_dim() const noexcept { return fixed_dim_; }
    [[nodiscard]] const std::vector<Weight>& weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t num_classes() const noexcept { return weights_.size(); }

    /// One row per weight class, in stored order.
    [[nodiscard]] IntMatrix weight_matrix() const;

    /// Rows of the classes whose bit is set in `mask`.
    [[nodiscard]] IntMatrix support_matrix(std::uint64_t mask) const;
    [[nodiscard]] IntMatrix support_matrix(const std::vector<std::size_t>& classes) const;

    /// Blocks tile [fixed_dim, total_dim) in stored order.
    [[nodiscard]] std::vector<IsotypicalComponent> components() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

    friend WeightSystem canonicalize(std::size_t k, std::size_t fixed_dim, const std::vector<RawWeight>& raw);

private:
    std::size_t k_ = 0;
    std::size_t fixed_dim_ = 0;
    std::vector<Weight> weights_;
};

/// Merges theta with -theta, sums multiplicities and sorts classes
/// lexicographically. Throws InputError on k == 0, a zero weight, a length
/// mismatch or a zero multiplicity.
WeightSystem canonicalize(std::size_t k, std::size_t fixed_dim, const std::vector<RawWeight>& raw);

/// Flips the sign so the first nonzero entry is positive.
IntVector sign_canonical(IntVector v);

std::size_t total_dim(const WeightSystem& ws);

/// The weights span the dual Lie algebra (kernel is finite).
bool has_discrete_kernel(const WeightSystem& ws);

/// The weights generate the full character lattice Z^k (kernel is trivial).
bool is_faithful(const WeightSystem& ws);

/// total_dim minus the dimension of a principal orbit.
std::size_t cohomogeneity(const WeightSystem& ws);

}  // namespace torusrep
