#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// library's linear algebra.

#include "torusrep/weight_system.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<long long>>;

inline torusrep::IntMatrix int_matrix(const Rows& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    torusrep::IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

inline Rows to_rows(const torusrep::IntMatrix& m) {
    Rows out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j));
    return out;
}

inline torusrep::IntVector int_vector(const std::vector<long long>& v) {
    return torusrep::IntVector(v.begin(), v.end());
}

inline torusrep::WeightSystem ws(std::size_t k, std::size_t fixed, const Rows& weights,
                                 std::vector<std::size_t> mult = {}) {
    if (mult.empty()) mult.assign(weights.size(), 1);
    std::vector<torusrep::RawWeight> raw;
    for (std::size_t i = 0; i < weights.size(); ++i) raw.push_back({int_vector(weights[i]), mult[i]});
    return torusrep::canonicalize(k, fixed, raw);
}

// Laplace expansion along the first row.
inline torusrep::Integer cofactor_det(const Rows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    torusrep::Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Rows minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        const torusrep::Integer term = torusrep::Integer(m[0][c]) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : torusrep::Integer(-term);
    }
    return det;
}

// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const Rows& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t best = 0;
    for (std::uint32_t rmask = 1; rmask < (1u << rows); ++rmask)
        for (std::uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
            const auto r = static_cast<std::size_t>(__builtin_popcount(rmask));
            if (r != static_cast<std::size_t>(__builtin_popcount(cmask)) || r <= best) continue;
            Rows sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(rmask >> i & 1u)) continue;
                std::vector<long long> row;
                for (std::size_t j = 0; j < cols; ++j)
                    if (cmask >> j & 1u) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            if (cofactor_det(sub) != 0) best = r;
        }
    return best;
}

inline std::size_t ws_rank(const torusrep::WeightSystem& s, const std::vector<std::size_t>& classes) {
    Rows rows;
    for (const auto c : classes) {
        std::vector<long long> r;
        for (const auto& x : s.weights()[c].vector) r.push_back(static_cast<long long>(x));
        rows.push_back(r);
    }
    return rows.empty() ? 0 : minor_rank(rows);
}

// Every bipartition (theta1 containing class 0) with additive ranks, in mask order.
inline std::vector<std::uint64_t> additive_bipartitions(const torusrep::WeightSystem& s) {
    const std::size_t n = s.num_classes();
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    const std::size_t total = ws_rank(s, all);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); mask += 2) {
        std::vector<std::size_t> a, b;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? a : b).push_back(i);
        if (ws_rank(s, a) + ws_rank(s, b) == total) out.push_back(mask);
    }
    return out;
}

inline std::vector<long long> random_vector(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<long long> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline Rows random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    Rows m(rows);
    for (auto& r : m) r = random_vector(rng, cols, bound);
    return m;
}

inline bool is_row_hnf(const torusrep::IntMatrix& h) {
    std::size_t last_pivot = 0;
    bool zero_seen = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = 0;
        while (p < h.cols() && h(i, p) == 0) ++p;
        if (p == h.cols()) {
            zero_seen = true;
            continue;
        }
        if (zero_seen || (i > 0 && p <= last_pivot) || h(i, p) <= 0) return false;
        for (std::size_t r = 0; r < i; ++r)
            if (h(r, p) < 0 || h(r, p) >= h(i, p)) return false;
        last_pivot = p;
    }
    return true;
}

inline std::size_t nonzero_rows(const torusrep::IntMatrix& h) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.cols(); ++j) nz = nz || h(i, j) != 0;
        n += nz ? 1 : 0;
    }
    return n;
}

using Blocks = std::set<std::vector<std::size_t>>;

inline torusrep::WeightSystem restrict(const torusrep::WeightSystem& s, const std::vector<std::size_t>& classes) {
    std::vector<torusrep::RawWeight> raw;
    for (const auto c : classes) raw.push_back({s.weights()[c].vector, s.weights()[c].multiplicity});
    return torusrep::canonicalize(s.k(), 0, raw);
}

// split by the first additive bipartition until nothing splits
inline void iterated_split(const torusrep::WeightSystem& s, const std::vector<std::size_t>& classes, Blocks& out) {
    const torusrep::WeightSystem sub = restrict(s, classes);
    const auto parts = additive_bipartitions(sub);
    if (parts.empty()) {
        out.insert(classes);
        return;
    }
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < classes.size(); ++i) (parts.front() >> i & 1u ? a : b).push_back(classes[i]);
    iterated_split(s, a, out);
    iterated_split(s, b, out);
}

inline Blocks iterated_blocks(const torusrep::WeightSystem& s) {
    Blocks out;
    std::vector<std::size_t> all(s.num_classes());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!all.empty()) iterated_split(s, all, out);
    return out;
}

inline Blocks as_set(const std::vector<std::vector<std::size_t>>& blocks) {
    Blocks out;
    for (auto b : blocks) {
        std::sort(b.begin(), b.end());
        out.insert(b);
    }
    return out;
}

}  // namespace oracle
