#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torusrep/split.hpp"
#include "torusrep/strata.hpp"

#include <algorithm>
#include <map>

using namespace torusrep;
using oracle::ws;

namespace {

// gcd of the r x r minors of the chosen rows, r their rank
std::pair<std::size_t, Integer> rank_and_minor_gcd(const WeightSystem& s, const std::vector<std::size_t>& classes) {
    oracle::Rows rows;
    for (const auto c : classes) {
        std::vector<long long> r;
        for (const auto& x : s.weights()[c].vector) r.push_back(static_cast<long long>(x));
        rows.push_back(r);
    }
    if (rows.empty()) return {0, 0};
    const std::size_t r = oracle::minor_rank(rows);
    const std::size_t k = s.k();
    Integer g = 0;
    for (std::uint32_t rm = 0; rm < (1u << rows.size()); ++rm) {
        if (static_cast<std::size_t>(__builtin_popcount(rm)) != r) continue;
        for (std::uint32_t cm = 0; cm < (1u << k); ++cm) {
            if (static_cast<std::size_t>(__builtin_popcount(cm)) != r) continue;
            oracle::Rows sub;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!(rm >> i & 1u)) continue;
                std::vector<long long> row;
                for (std::size_t j = 0; j < k; ++j)
                    if (cm >> j & 1u) row.push_back(rows[i][j]);
                sub.push_back(row);
            }
            g = gcd(g, abs(oracle::cofactor_det(sub)));
        }
    }
    return {r, g};
}

// theta in L(S) iff adding theta changes neither the rank nor the minor gcd
bool oracle_member(const WeightSystem& s, std::vector<std::size_t> support, std::size_t theta) {
    if (support.empty()) return false;
    const auto before = rank_and_minor_gcd(s, support);
    support.push_back(theta);
    return rank_and_minor_gcd(s, support) == before;
}

struct OracleRecord {
    std::size_t fixed = 0;
    std::size_t quotient_dim = 0;
    std::size_t codim = 0;
};

// closure of each support -> record
std::map<std::vector<std::size_t>, OracleRecord> oracle_strata(const WeightSystem& s) {
    std::map<std::vector<std::size_t>, OracleRecord> out;
    const std::size_t n = s.num_classes();
    const std::size_t chm = total_dim(s) - oracle::ws_rank(s, [&] {
                                std::vector<std::size_t> all(n);
                                for (std::size_t i = 0; i < n; ++i) all[i] = i;
                                return all;
                            }());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) support.push_back(i);
        std::vector<std::size_t> closure;
        std::size_t fixed = s.fixed_dim();
        for (std::size_t i = 0; i < n; ++i)
            if (oracle_member(s, support, i)) {
                closure.push_back(i);
                fixed += 2 * s.weights()[i].multiplicity;
            }
        const std::size_t q = fixed - oracle::ws_rank(s, support);
        out[closure] = {fixed, q, chm - q};
    }
    return out;
}

bool oracle_boundary_empty(const WeightSystem& s) {
    for (const auto& [support, r] : oracle_strata(s))
        if (r.codim == 1) return false;
    return true;
}

const StratumRecord* find_support(const std::vector<StratumRecord>& recs, const std::vector<std::size_t>& support) {
    for (const auto& r : recs)
        if (r.support == support) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("strata of a rotation plane") {
    const auto recs = enumerate_strata(ws(1, 0, {{1}}));
    REQUIRE(recs.size() == 2);
    const auto* origin = find_support(recs, {});
    const auto* principal = find_support(recs, {0});
    REQUIRE(origin);
    REQUIRE(principal);
    CHECK(origin->isotropy_dim == 1);
    CHECK(origin->quotient_dim == 0);
    CHECK(origin->quotient_codim == 1);
    CHECK(principal->isotropy_dim == 0);
    CHECK(principal->quotient_codim == 0);
    CHECK(principal->principal());
}

TEST_CASE("strata of weights 1 and 2") {
    const auto recs = enumerate_strata(ws(1, 0, {{1}, {2}}));
    const auto* origin = find_support(recs, {});
    const auto* z2 = find_support(recs, {1});
    REQUIRE(origin);
    REQUIRE(z2);
    CHECK(origin->quotient_codim == 3);
    CHECK(z2->isotropy_invariants == std::vector<Integer>{2});
    CHECK(z2->fixed_dim_of_isotropy == 2);
    CHECK(z2->quotient_codim == 2);
    for (const auto& r : recs) CHECK(r.quotient_codim != 1);
}

TEST_CASE("strata of two coordinate planes") {
    const auto recs = enumerate_strata(ws(2, 0, {{1, 0}, {0, 1}}));
    // classes sort as (0,1), (1,0)
    const auto* r = find_support(recs, {1});
    REQUIRE(r);
    CHECK(r->isotropy_dim == 1);
    CHECK(r->fixed_dim_of_isotropy == 2);
    CHECK(r->quotient_dim == 1);
    CHECK(r->quotient_codim == 1);
}

TEST_CASE("boundary and copolarity examples") {
    CHECK_FALSE(boundary_empty(ws(1, 0, {{1}})));
    CHECK(boundary_empty(ws(1, 0, {{1}}, {2})));
    CHECK(boundary_empty(ws(2, 0, {{1, 0}, {0, 1}, {1, 1}})));
    CHECK(has_trivial_copolarity(ws(1, 0, {{1}, {2}})));
    CHECK_FALSE(has_trivial_copolarity(ws(1, 0, {{1}})));
    CHECK_FALSE(has_trivial_copolarity(ws(2, 0, {{1, 0}, {0, 1}})));
}

TEST_CASE("curated boundary table matches the stratum oracle") {
    const std::vector<WeightSystem> table{
        ws(1, 0, {{1}}),
        ws(1, 0, {{1}, {1}}),
        ws(1, 0, {{1}, {2}}),
        ws(1, 0, {{2}}),
        ws(2, 0, {{1, 0}, {0, 1}}),
        ws(2, 0, {{1, 0}, {0, 1}, {1, 1}}),
        ws(2, 0, {{1, 0}, {2, 0}}),
        ws(2, 0, {{1, 1}, {1, 0}, {0, 1}}, {2, 1, 1}),
    };
    // hand check: a circle acting on one plane with weight 2 still has the
    // origin as a boundary point; {(1,0),(2,0)} is the weight-(1,2) circle
    // action with a trivial second factor and no codim-1 stratum
    const std::vector<bool> expected{false, true, true, false, false, true, true, true};
    for (std::size_t i = 0; i < table.size(); ++i) {
        CAPTURE(i);
        CHECK(oracle_boundary_empty(table[i]) == expected[i]);
        CHECK(boundary_empty(table[i]) == expected[i]);
    }
}

TEST_CASE("minimal reduction candidates") {
    CHECK(minimal_reduction_candidate(ws(2, 0, {{1, 0}, {0, 1}, {1, 1}})).candidate);
    const auto split = minimal_reduction_candidate(ws(2, 0, {{1, 0}, {0, 1}}));
    CHECK_FALSE(split.candidate);
    CHECK(split.failed == std::vector<std::string>{"decomposable", "boundary nonempty"});
    const auto z2 = minimal_reduction_candidate(ws(1, 0, {{2}}));
    CHECK_FALSE(z2.candidate);
    CHECK(std::find(z2.failed.begin(), z2.failed.end(), "not faithful") != z2.failed.end());
    CHECK_FALSE(minimal_reduction_candidate(ws(1, 1, {{1}, {2}})).candidate);
}

TEST_CASE("random systems agree with the stratum oracle") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> nd(1, 4), md(1, 2), fd(0, 1);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t k = 1 + trial % 3;
        std::vector<RawWeight> raw;
        const std::size_t n = nd(rng);
        while (raw.size() < n) {
            auto v = oracle::random_vector(rng, k, 2);
            if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
            raw.push_back({oracle::int_vector(v), md(rng)});
        }
        const auto s = canonicalize(k, fd(rng), raw);
        CAPTURE(trial);
        const auto expected = oracle_strata(s);
        const auto recs = enumerate_strata(s);
        REQUIRE(recs.size() == expected.size());

        std::size_t principal = 0;
        for (const auto& r : recs) {
            const auto it = expected.find(r.support);
            REQUIRE(it != expected.end());
            CHECK(r.fixed_dim_of_isotropy == it->second.fixed);
            CHECK(r.stratum_dim == it->second.fixed);
            CHECK(r.quotient_dim == it->second.quotient_dim);
            CHECK(r.quotient_codim == it->second.codim);
            CHECK(r.isotropy_invariants.size() == k);
            CHECK(r.quotient_dim <= cohomogeneity(s));
            if (r.quotient_codim == 0) {
                ++principal;
                const bool ones = std::all_of(r.isotropy_invariants.begin(), r.isotropy_invariants.end(),
                                              [&](const Integer& d) { return d == 1; });
                CHECK(ones == is_faithful(s));
            }
            // a finite nontrivial isotropy group never fixes a hyperplane
            const bool finite_nontrivial =
                r.isotropy_dim == 0 && std::any_of(r.isotropy_invariants.begin(), r.isotropy_invariants.end(),
                                                   [](const Integer& d) { return d > 1; });
            if (finite_nontrivial) CHECK(r.fixed_dim_of_isotropy + 1 != total_dim(s));
        }
        CHECK(principal == 1);
        CHECK(boundary_empty(s) == oracle_boundary_empty(s));
        CHECK(has_trivial_copolarity(s) == boundary_empty(s));

        // a codim-1 stratum of a faithful system without fixed points splits off a single plane
        if (!boundary_empty(s) && is_faithful(s) && s.fixed_dim() == 0) {
            bool plane = false;
            for (const auto& r : recs)
                if (r.quotient_codim == 1) plane = plane || total_dim(s) - r.fixed_dim_of_isotropy == 2;
            CHECK(plane);
        }
    }
}
