#include "torusrep/split.hpp"

#include "torusrep/errors.hpp"

#include <algorithm>
#include <numeric>

namespace torusrep {

namespace {

std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) out.push_back(i);
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::string to_string(SplitReason reason) {
    switch (reason) {
        case SplitReason::FlatFactor: return "flat-factor";
        case SplitReason::TrivialSplit: return "trivial-split";
        case SplitReason::Witness: return "witness";
        case SplitReason::None: return "indecomposable";
    }
    return "unknown";
}

InducedLines induced_lines(const WeightSystem& ws) {
    std::vector<IntVector> lines;
    std::vector<IntVector> per_class;
    for (const auto& w : ws.weights()) {
        per_class.push_back(sign_canonical(primitive(w.vector)));
        lines.push_back(per_class.back());
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    InducedLines out;
    out.representatives = lines;
    for (const auto& l : per_class)
        out.line_of_class.push_back(
            static_cast<std::size_t>(std::lower_bound(lines.begin(), lines.end(), l) - lines.begin()));
    return out;
}

std::vector<std::vector<std::size_t>> matroid_components(const IntMatrix& rows) {
    const std::size_t n = rows.rows();
    UnionFind uf(n);

    std::vector<std::size_t> basis;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> trial = basis;
        trial.push_back(i);
        IntMatrix sub(trial.size(), rows.cols());
        for (std::size_t r = 0; r < trial.size(); ++r)
            for (std::size_t j = 0; j < rows.cols(); ++j) sub(r, j) = rows(trial[r], j);
        if (rank(sub) == trial.size())
            basis.push_back(i);
        else
            others.push_back(i);
    }

    // fundamental circuit of e: e together with the basis elements that
    // appear with nonzero coefficient when e is written in the basis
    for (const std::size_t e : others) {
        RationalMatrix cols(rows.cols(), basis.size() + 1);
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            for (std::size_t b = 0; b < basis.size(); ++b) cols(j, b) = Rational(rows(basis[b], j));
            cols(j, basis.size()) = Rational(rows(e, j));
        }
        const auto kernel = kernel_basis(cols);
        // basis independent, e dependent: the kernel is a single line
        for (const auto& relation : kernel)
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (relation[b] != 0) uf.unite(e, basis[b]);
    }

    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (slot[root] == n) {
            slot[root] = components.size();
            components.emplace_back();
        }
        components[slot[root]].push_back(i);
    }
    return components;
}

std::optional<SplitWitness> find_split_witness(const WeightSystem& ws) {
    const std::size_t m = ws.num_classes();
    if (m < 2) return std::nullopt;

    if (m > kExhaustiveSplitLimit) {
        // theta1 = component of class 0 is also the first bipartition in mask order
        const auto comps = matroid_components(ws.weight_matrix());
        if (comps.size() < 2) return std::nullopt;
        SplitWitness w;
        w.theta1 = comps.front();
        for (std::size_t c = 1; c < comps.size(); ++c) w.theta2.insert(w.theta2.end(), comps[c].begin(), comps[c].end());
        std::sort(w.theta2.begin(), w.theta2.end());
        return w;
    }

    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    const std::size_t total = rank(ws.weight_matrix());
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        const std::size_t r1 = rank(ws.support_matrix(mask));
        const std::size_t r2 = rank(ws.support_matrix(full & ~mask));
        if (r1 + r2 == total) return SplitWitness{mask_to_indices(mask, m), mask_to_indices(full & ~mask, m)};
    }
    return std::nullopt;
}

Decomposability is_decomposable(const WeightSystem& ws) {
    const std::size_t dim = total_dim(ws);
    if (ws.fixed_dim() > 0 && dim > ws.fixed_dim()) return {true, SplitReason::FlatFactor, std::nullopt};
    if (ws.fixed_dim() == dim && dim >= 2) return {true, SplitReason::TrivialSplit, std::nullopt};
    if (auto w = find_split_witness(ws)) return {true, SplitReason::Witness, std::move(w)};
    return {false, SplitReason::None, std::nullopt};
}

BlockDecomposition indecomposable_blocks(const WeightSystem& ws) {
    BlockDecomposition out;
    out.flat_dim = ws.fixed_dim();
    if (ws.num_classes() > 0) out.blocks = matroid_components(ws.weight_matrix());
    return out;
}

bool check_line_bound(const WeightSystem& ws) {
    if (ws.k() < 2) throw PreconditionError("line bound needs k >= 2");
    if (!has_discrete_kernel(ws)) throw PreconditionError("line bound needs a faithful system; weights do not span (kernel not discrete)");
    if (!is_faithful(ws)) throw PreconditionError("line bound needs a faithful system; weights generate a proper sublattice");
    if (is_decomposable(ws).decomposable) throw PreconditionError("line bound needs an indecomposable system");
    return induced_lines(ws).count() >= ws.k() + 1;
}

}  // namespace torusrep
