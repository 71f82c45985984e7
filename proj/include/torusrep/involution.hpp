#pragma once

// Involutive extensions G = T^k u wT^k of a torus representation. The
// involution w acts on the Lie algebra of T^k by the integer matrix A and on
// V by an orthogonal involution `omega`, written in the block coordinates of
// WeightSystem::components(): V0 first, then one 2-plane per unit of
// multiplicity of each weight class. On such a 2-plane the torus generator x
// acts by theta(x) * J, J the rotation generator [[0,-1],[1,0]].

#include "torusrep/weight_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusrep {

// Names carried by LemmaViolation.
inline constexpr const char* kNoCodimOne = "no-codim-one-nice-involution";
inline constexpr const char* kCodimBounds = "nice-involution-codim-bounds";
inline constexpr const char* kNontrivialOnComponents = "involution-nontrivial-on-components";
inline constexpr const char* kMaximalCodimStructure = "maximal-codim-structure";
inline constexpr const char* kCodimTwoSplit = "codim-two-split-structure";

struct InvolutiveExtension {
    WeightSystem ws;
    IntMatrix a;           // k x k, action on the torus Lie algebra
    RationalMatrix omega;  // total_dim x total_dim, action on V
};

struct ValidationResult {
    bool valid = true;
    std::string violation;  // first violated identity, empty when valid

    explicit operator bool() const noexcept { return valid; }
};

/// Checks shapes, A^2 = I, omega^T omega = I, omega^2 = I and
/// omega D(e_j) omega^-1 = D(A e_j) for every basis vector e_j.
ValidationResult validate(const InvolutiveExtension& ext);

/// The infinitesimal action D(x) of x in the torus Lie algebra on V.
RationalMatrix torus_generator(const WeightSystem& ws, std::span<const Integer> x);

std::size_t fixed_space_dim(const InvolutiveExtension& ext);

/// dim Z_G(w) = dim ker(A - I), the Ad(w)-fixed subalgebra.
std::size_t centralizer_dim(const InvolutiveExtension& ext);

/// dim V^w + dim G - dim Z_G(w) == dim V - 1. Throws PreconditionError for omega == I.
bool is_nice_involution(const InvolutiveExtension& ext);

struct CodimReport {
    std::size_t codim = 0;
    std::size_t centralizer_dim = 0;
    std::size_t lower = 2;
    std::size_t upper = 0;  // k + 1
};

/// For a nice involution: 2 <= codim V^w <= k + 1 and dim Z_G(w) <= k - 1.
/// Throws PreconditionError when not nice, LemmaViolation on a failed bound.
CodimReport codim_bounds_check(const InvolutiveExtension& ext);

struct InvolutionSplit {
    std::vector<std::size_t> v_plus;   // classes on the annihilator of the +1 eigenspace
    std::vector<std::size_t> v_minus;  // classes on the annihilator of the -1 eigenspace
    std::vector<std::size_t> v_bar;
    std::size_t dim_plus = 0;
    std::size_t dim_minus = 0;
    std::size_t dim_bar = 0;
    IntVector line_plus;   // primitive generator of the line s+
    IntVector line_minus;  // primitive generator of the line s-
};

/// The raw partition V = V+ + V- + Vbar. Requires k == 2 and A with both
/// eigenvalues +1 and -1; throws PreconditionError otherwise.
InvolutionSplit partition_by_involution(const InvolutiveExtension& ext);

/// partition_by_involution for a nice involution of codimension 2, followed
/// by the structural checks: V+ = 0, Vbar is two classes of real dimension 2
/// exchanged by omega and by the transpose action of A, omega = I on V-, and
/// exactly three induced lines. Throws LemmaViolation(kCodimTwoSplit).
InvolutionSplit split_by_involution(const InvolutiveExtension& ext);

/// For a nice involution with dim Z_G(w) == 0: omega is not the identity on
/// any isotypical component.
bool nontriviality_check(const InvolutiveExtension& ext);

enum class VerdictKind {
    MaximalCodim,  // codim V^w = k + 1, cohomogeneity k + 2
    Chm4,          // k = 2, codim 2, dim V- = 2
    Exceptional,   // k = 2, codim 2, dim V- >= 4, cohomogeneity 2 + dim V-
};

struct CohomogeneityVerdict {
    VerdictKind kind = VerdictKind::MaximalCodim;
    std::size_t chm = 0;
    std::size_t dim_v_minus = 0;
    std::optional<InvolutionSplit> split;
};

std::string to_string(VerdictKind kind);

/// Runs the codimension chain for a nice involution over a minimal-reduction
/// candidate with k in {1, 2}. Throws PreconditionError outside that domain
/// and LemmaViolation when a structural consequence fails.
CohomogeneityVerdict conclude_cohomogeneity(const InvolutiveExtension& ext);

// Constructors for the two canonical families.

/// A = -I, omega = diag(1, -1) on every 2-plane, identity on V0.
InvolutiveExtension conjugation_extension(const WeightSystem& ws);

/// omega exchanges classes i and j plane by plane and acts on every other
/// class as forced by A (identity when theta A = theta, conjugation when
/// theta A = -theta). Throws InputError if A does not map class i to class j
/// and every other class to itself.
InvolutiveExtension block_swap_extension(const WeightSystem& ws, const IntMatrix& a, std::size_t i, std::size_t j);

/// Image of each class under theta -> theta A as (class index, sign), or
/// nullopt when A does not permute the classes with matching multiplicities.
struct ClassImage {
    std::size_t target = 0;
    int sign = 1;
};
std::optional<std::vector<ClassImage>> class_permutation(const WeightSystem& ws, const IntMatrix& a);

/// All k x k matrices with entries in {-1, 0, 1} and A^2 = I.
std::vector<IntMatrix> order_two_matrices(std::size_t k);

/// Enumeration family for sweeps: omega maps each class to its image under A
/// plane by plane through +-I (sign +1) or +-diag(1,-1) (sign -1), with an
/// optional reversal of the planes inside a self-mapped class of
/// multiplicity >= 2. One sign per class (per exchanged pair). V0 is fixed
/// pointwise and omega = I is skipped.
std::vector<InvolutiveExtension> candidate_involutions(const WeightSystem& ws, const IntMatrix& a);

}  // namespace torusrep
