#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torusrep/errors.hpp"
#include "torusrep/weight_system.hpp"

#include <algorithm>
#include <numeric>

using namespace torusrep;
using oracle::int_vector;
using oracle::ws;

namespace {

// gcd of all k x k minors of the weight rows; 1 iff the rows generate Z^k
Integer maximal_minor_gcd(const WeightSystem& s) {
    const std::size_t n = s.num_classes(), k = s.k();
    Integer g = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        oracle::Rows rows;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1u)) continue;
            std::vector<long long> r;
            for (const auto& x : s.weights()[i].vector) r.push_back(static_cast<long long>(x));
            rows.push_back(r);
        }
        g = gcd(g, abs(oracle::cofactor_det(rows)));
    }
    return g;
}

std::size_t oracle_rank(const WeightSystem& s) {
    std::vector<std::size_t> all(s.num_classes());
    std::iota(all.begin(), all.end(), 0);
    return oracle::ws_rank(s, all);
}

}  // namespace

TEST_CASE("canonicalize merges opposite weights") {
    const auto a = ws(1, 0, {{1}, {-1}});
    REQUIRE(a.num_classes() == 1);
    CHECK(a.weights()[0].vector == int_vector({1}));
    CHECK(a.weights()[0].multiplicity == 2);

    const auto b = ws(2, 0, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(b.num_classes() == 3);
    for (const auto& w : b.weights()) CHECK(w.multiplicity == 1);

    const auto c = ws(2, 0, {{-1, -2}, {1, 2}});
    REQUIRE(c.num_classes() == 1);
    CHECK(c.weights()[0].vector == int_vector({1, 2}));
    CHECK(c.weights()[0].multiplicity == 2);
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK_THROWS_AS(ws(2, 0, {{0, 0}}), InputError);
    CHECK_THROWS_AS(ws(2, 0, {{1, 0, 0}}), InputError);
    CHECK_THROWS_AS(ws(0, 0, {}), InputError);
    CHECK_THROWS_AS(ws(1, 0, {{1}}, {0}), InputError);
}

TEST_CASE("total_dim") {
    CHECK(total_dim(ws(1, 0, {{1}, {2}})) == 4);
    CHECK(total_dim(ws(2, 0, {{1, 0}, {0, 1}, {1, 1}})) == 6);
    CHECK(total_dim(ws(1, 3, {{1}})) == 5);
}

TEST_CASE("discrete kernel and faithfulness") {
    CHECK(has_discrete_kernel(ws(2, 0, {{1, 0}, {0, 1}})));
    CHECK_FALSE(has_discrete_kernel(ws(2, 0, {{1, 0}, {2, 0}})));
    CHECK(has_discrete_kernel(ws(1, 0, {{2}})));

    CHECK_FALSE(is_faithful(ws(1, 0, {{2}})));
    CHECK(is_faithful(ws(1, 0, {{1}, {2}})));
    CHECK(is_faithful(ws(2, 0, {{1, 0}, {0, 1}, {1, 1}})));
    CHECK_FALSE(is_faithful(ws(2, 0, {{1, 1}, {1, -1}})));
}

TEST_CASE("cohomogeneity") {
    CHECK(cohomogeneity(ws(1, 0, {{1}, {2}})) == 3);
    CHECK(cohomogeneity(ws(2, 0, {{1, 0}, {0, 1}, {1, 1}})) == 4);
    CHECK(cohomogeneity(ws(1, 0, {{1}})) == 1);
}

TEST_CASE("components tile the non-fixed coordinates") {
    const auto s = ws(2, 3, {{1, 0}, {0, 1}}, {2, 1});
    const auto comps = s.components();
    std::size_t offset = 3;
    for (const auto& c : comps) {
        CHECK(c.coordinate_offset == offset);
        CHECK(c.real_dim == 2 * c.multiplicity);
        offset += c.real_dim;
    }
    CHECK(offset == total_dim(s));
}

TEST_CASE("random systems: canonical form and invariants") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> kd(1, 3), nd(1, 5), md(1, 3), fd(0, 2);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = kd(rng), n = nd(rng);
        std::vector<RawWeight> raw;
        while (raw.size() < n) {
            auto v = oracle::random_vector(rng, k, 3);
            if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
            raw.push_back({int_vector(v), md(rng)});
        }
        const std::size_t fixed = fd(rng);
        const WeightSystem s = canonicalize(k, fixed, raw);
        CAPTURE(trial);

        // order and sign independence
        auto shuffled = raw;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& w : shuffled)
            if (rng() % 2)
                for (auto& x : w.vector) x = -x;
        REQUIRE(canonicalize(k, fixed, shuffled) == s);

        // idempotence
        std::vector<RawWeight> again;
        for (const auto& w : s.weights()) again.push_back({w.vector, w.multiplicity});
        REQUIRE(canonicalize(k, fixed, again) == s);

        std::size_t mult = 0;
        for (const auto& w : raw) mult += w.multiplicity;
        REQUIRE(total_dim(s) == fixed + 2 * mult);
        if (fixed == 0) REQUIRE(total_dim(s) % 2 == 0);

        const std::size_t rk = oracle_rank(s);
        REQUIRE(has_discrete_kernel(s) == (rk == k));
        REQUIRE(is_faithful(s) == (rk == k && maximal_minor_gcd(s) == 1));
        if (is_faithful(s)) REQUIRE(has_discrete_kernel(s));
        REQUIRE(cohomogeneity(s) == total_dim(s) - rk);
        REQUIRE(cohomogeneity(s) + k >= total_dim(s));
        REQUIRE((cohomogeneity(s) + k == total_dim(s)) == has_discrete_kernel(s));
    }
}
