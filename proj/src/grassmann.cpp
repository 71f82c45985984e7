#include "torusrep/grassmann.hpp"

#include "torusrep/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace torusrep::numlab {

namespace {

// Skew-symmetric n x n matrix of the so(n) part of a Lie algebra vector.
Eigen::MatrixXd so_n_part(const Eigen::VectorXd& x, int n) {
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index b = 1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++b) {
            y(p, q) = x(b);
            y(q, p) = -x(b);
        }
    return y;
}

Eigen::VectorXd from_so_n(const Eigen::MatrixXd& y, std::size_t dimension) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension));
    const auto n = static_cast<int>(y.rows());
    Eigen::Index b = 1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++b) x(b) = y(p, q);
    return x;
}

// [x, y] in so(2) + so(n); the so(2) factor is central
Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int n) {
    const Eigen::MatrixXd a = so_n_part(x, n);
    const Eigen::MatrixXd b = so_n_part(y, n);
    return from_so_n(a * b - b * a, static_cast<std::size_t>(x.size()));
}

}  // namespace

void check_spec(const FamilySpec& spec) {
    if (spec.n < 3) throw InputError("n must be at least 3, got " + std::to_string(spec.n));
    if (spec.circle_weights.empty()) throw InputError("at least one circle weight is required");
    if (std::any_of(spec.circle_weights.begin(), spec.circle_weights.end(), [](int a) { return a == 0; }))
        throw InputError("circle weights must be nonzero");
    if (spec.samples == 0) throw InputError("samples must be positive");
    if (!(spec.svd_tol > 0.0 && spec.svd_tol < 1.0)) throw InputError("svd_tol must lie in (0, 1)");
}

std::size_t dim_w(const FamilySpec& spec) { return 2 * static_cast<std::size_t>(spec.n) + 2 * spec.circle_weights.size(); }

std::size_t dim_h(const FamilySpec& spec) {
    const auto n = static_cast<std::size_t>(spec.n);
    return 1 + n * (n - 1) / 2;
}

Eigen::MatrixXd action_matrix(const FamilySpec& spec, const Eigen::VectorXd& point) {
    const int n = spec.n;
    const auto dw = static_cast<Eigen::Index>(dim_w(spec));
    if (point.size() != dw) throw InputError("point has the wrong dimension");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dw, static_cast<Eigen::Index>(dim_h(spec)));
    const auto x = [&](int r, int c) { return point(r * n + c); };

    // so(2): J rotates the R^2 factor and each W2 plane with its weight
    for (int c = 0; c < n; ++c) {
        m(0 * n + c, 0) = -x(1, c);
        m(1 * n + c, 0) = x(0, c);
    }
    for (std::size_t j = 0; j < spec.circle_weights.size(); ++j) {
        const Eigen::Index o = 2 * n + 2 * static_cast<Eigen::Index>(j);
        const double a = spec.circle_weights[j];
        m(o, 0) = -a * point(o + 1);
        m(o + 1, 0) = a * point(o);
    }

    // so(n): X -> X E_pq^T
    Eigen::Index b = 1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++b)
            for (int r = 0; r < 2; ++r) {
                m(r * n + p, b) += x(r, q);
                m(r * n + q, b) -= x(r, p);
            }
    return m;
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.size() == 0) return 0;
    const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cutoff = rel_tol * s(0);
    return static_cast<std::size_t>((s.array() > cutoff).count());
}

RankDecision audited_rank(const Eigen::MatrixXd& m, double rel_tol) {
    const std::size_t r = numerical_rank(m, rel_tol);
    return {r, numerical_rank(m, rel_tol * 0.1) == r && numerical_rank(m, rel_tol * 10.0) == r};
}

Eigen::VectorXd sample_point(const FamilySpec& spec, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd p(static_cast<Eigen::Index>(dim_w(spec)));
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = normal(rng);
    return p;
}

OrbitProbe probe(const FamilySpec& spec, const Eigen::VectorXd& point) {
    const RankDecision d = audited_rank(action_matrix(spec, point), spec.svd_tol);
    return {point, d.rank, dim_h(spec) - d.rank, d.stable};
}

SampleSummary sample_orbits(const FamilySpec& spec) {
    check_spec(spec);
    SampleSummary s;
    s.probes.reserve(spec.samples);
    for (std::size_t i = 0; i < spec.samples; ++i) {
        s.probes.push_back(probe(spec, sample_point(spec, i)));
        if (!s.probes.back().stable) s.tol_stable = false;
        if (s.probes.back().orbit_dim > s.max_orbit_dim || i == 0) {
            s.max_orbit_dim = s.probes.back().orbit_dim;
            s.first_max_index = i;
        }
    }
    const auto hits = std::count_if(s.probes.begin(), s.probes.end(),
                                    [&](const OrbitProbe& p) { return p.orbit_dim == s.max_orbit_dim; });
    s.modal_fraction = static_cast<double>(hits) / static_cast<double>(spec.samples);
    return s;
}

NumericResult principal_isotropy_algebra_dim(const FamilySpec& spec) {
    const SampleSummary s = sample_orbits(spec);
    return {dim_h(spec) - s.max_orbit_dim, s.tol_stable};
}

NumericResult cohomogeneity_numeric(const FamilySpec& spec) {
    const SampleSummary s = sample_orbits(spec);
    return {dim_w(spec) - s.max_orbit_dim, s.tol_stable};
}

NumericResult cohomogeneity_via_sphere(const FamilySpec& spec) {
    check_spec(spec);
    const auto dw = static_cast<Eigen::Index>(dim_w(spec));
    std::size_t best = 0;
    bool stable = true;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        const Eigen::VectorXd p = sample_point(spec, i).normalized();
        const Eigen::MatrixXd tangent = Eigen::MatrixXd::Identity(dw, dw) - p * p.transpose();
        const RankDecision d = audited_rank(tangent * action_matrix(spec, p), spec.svd_tol);
        stable = stable && d.stable;
        best = std::max(best, d.rank);
    }
    const std::size_t sphere_chm = dim_w(spec) - 1 - best;
    return {sphere_chm + 1, stable};
}

NumericResult lrs_quotient_dim(const FamilySpec& spec) {
    check_spec(spec);
    if (spec.n < 4)
        throw PreconditionError("n = 3: the principal isotropy algebra is zero and the finite part Z2 "
                                "is invisible to a Lie algebra computation");
    const SampleSummary s = sample_orbits(spec);
    const Eigen::MatrixXd m = action_matrix(spec, s.probes[s.first_max_index].point);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto dh = static_cast<Eigen::Index>(dim_h(spec));
    const auto r = static_cast<Eigen::Index>(s.max_orbit_dim);
    const Eigen::MatrixXd row_space = svd.matrixV().leftCols(r);
    const Eigen::MatrixXd isotropy = svd.matrixV().rightCols(dh - r);

    // x normalizes k iff the row-space component of [x, kappa] vanishes for every basis vector kappa of k
    const Eigen::Index blocks = isotropy.cols();
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(blocks * r, dh);
    for (Eigen::Index b = 0; b < dh; ++b) {
        const Eigen::VectorXd e = Eigen::VectorXd::Unit(dh, b);
        for (Eigen::Index i = 0; i < blocks; ++i)
            system.block(i * r, b, r, 1) = row_space.transpose() * bracket(e, isotropy.col(i), spec.n);
    }
    const RankDecision d = audited_rank(system, spec.svd_tol);
    const std::size_t normalizer = static_cast<std::size_t>(dh) - d.rank;
    return {normalizer - static_cast<std::size_t>(blocks), s.tol_stable && d.stable};
}

bool circle_rep_is_polar(const std::vector<int>& weights) { return weights.size() <= 1; }

std::size_t expected_isotropy_dim(int n) {
    const auto m = static_cast<std::size_t>(n - 2);
    return m * (m - 1) / 2;
}

std::size_t expected_cohomogeneity(const FamilySpec& spec) { return 2 + 2 * spec.circle_weights.size(); }

FamilyReport family_report(const FamilySpec& spec) {
    check_spec(spec);
    const SampleSummary s = sample_orbits(spec);
    FamilyReport rep;
    rep.n = spec.n;
    rep.weights = spec.circle_weights;
    rep.chm = dim_w(spec) - s.max_orbit_dim;
    rep.isotropy_dim = dim_h(spec) - s.max_orbit_dim;
    rep.tol_stable = s.tol_stable;
    if (spec.n >= 4) {
        const NumericResult lrs = lrs_quotient_dim(spec);
        rep.lrs_dim = lrs.value;
        rep.tol_stable = rep.tol_stable && lrs.tol_stable;
    }
    return rep;
}

}  // namespace torusrep::numlab
