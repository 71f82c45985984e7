#pragma once

// Floating-point checks for H = SO(2) x SO(n) acting on
// W = (R^2 (x) R^n) + W2, where SO(2) rotates the j-th plane of W2 with
// integer weight a_j and SO(n) acts trivially on W2.
//
// Coordinates: W1 is the 2 x n matrix X stored row-major (index r*n + c),
// followed by the planes of W2. The Lie algebra basis is the so(2)
// generator J first, then E_pq = e_p e_q^T - e_q e_p^T for p < q in
// lexicographic order.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace torusrep::numlab {

struct FamilySpec {
    int n = 3;
    std::vector<int> circle_weights;
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    double svd_tol = 1e-8;  // relative singular-value cutoff
};

/// Throws InputError unless n >= 3, at least one weight, all weights nonzero,
/// samples >= 1 and svd_tol in (0, 1).
void check_spec(const FamilySpec& spec);

std::size_t dim_w(const FamilySpec& spec);
std::size_t dim_h(const FamilySpec& spec);

/// Column b is the b-th Lie algebra basis element applied to `point`.
Eigen::MatrixXd action_matrix(const FamilySpec& spec, const Eigen::VectorXd& point);

struct RankDecision {
    std::size_t rank = 0;
    bool stable = true;  // same rank at 0.1x and 10x the tolerance
};

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol);
RankDecision audited_rank(const Eigen::MatrixXd& m, double rel_tol);

/// Standard normal coordinates; sample i is seeded from (seed, i) only.
Eigen::VectorXd sample_point(const FamilySpec& spec, std::size_t index);

struct OrbitProbe {
    Eigen::VectorXd point;
    std::size_t orbit_dim = 0;
    std::size_t isotropy_algebra_dim = 0;
    bool stable = true;
};

OrbitProbe probe(const FamilySpec& spec, const Eigen::VectorXd& point);

struct SampleSummary {
    std::vector<OrbitProbe> probes;
    std::size_t max_orbit_dim = 0;
    std::size_t first_max_index = 0;
    double modal_fraction = 0.0;  // share of samples attaining max_orbit_dim
    bool tol_stable = true;
};

SampleSummary sample_orbits(const FamilySpec& spec);

struct NumericResult {
    std::size_t value = 0;
    bool tol_stable = true;
};

/// dim H minus the largest sampled orbit dimension.
NumericResult principal_isotropy_algebra_dim(const FamilySpec& spec);

/// dim W minus the largest sampled orbit dimension.
NumericResult cohomogeneity_numeric(const FamilySpec& spec);

/// Same quantity computed on the unit sphere: orbit dimensions of normalized
/// samples measured in the tangent space of the sphere, plus one.
NumericResult cohomogeneity_via_sphere(const FamilySpec& spec);

/// dim of the normalizer of the principal isotropy algebra k in h, minus
/// dim k. Requires n >= 4 (throws PreconditionError for n = 3, where the
/// principal isotropy is finite and the Lie algebra computation says nothing).
NumericResult lrs_quotient_dim(const FamilySpec& spec);

/// A circle representation without fixed points is polar iff it has at most one plane.
bool circle_rep_is_polar(const std::vector<int>& weights);

/// Closed forms the numerics are checked against.
std::size_t expected_isotropy_dim(int n);
std::size_t expected_cohomogeneity(const FamilySpec& spec);

struct FamilyReport {
    int n = 0;
    std::vector<int> weights;
    std::size_t chm = 0;
    std::size_t isotropy_dim = 0;
    std::optional<std::size_t> lrs_dim;  // empty for n = 3
    bool tol_stable = true;
};

FamilyReport family_report(const FamilySpec& spec);

}  // namespace torusrep::numlab
