#include "torusrep/weight_system.hpp"

#include "torusrep/errors.hpp"

#include <algorithm>
#include <map>

namespace torusrep {

IntVector sign_canonical(IntVector v) {
    const auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (first != v.end() && *first < 0)
        for (auto& x : v) x = -x;
    return v;
}

WeightSystem canonicalize(std::size_t k, std::size_t fixed_dim, const std::vector<RawWeight>& raw) {
    if (k == 0) throw InputError("torus rank k must be at least 1");
    std::map<IntVector, std::size_t> merged;
    for (const auto& w : raw) {
        if (w.vector.size() != k)
            throw InputError("weight of length " + std::to_string(w.vector.size()) + " for k = " + std::to_string(k));
        if (std::all_of(w.vector.begin(), w.vector.end(), [](const Integer& x) { return x == 0; }))
            throw InputError("zero weight; carry trivial summands in fixed_dim");
        if (w.multiplicity == 0) throw InputError("weight multiplicity must be at least 1");
        merged[sign_canonical(w.vector)] += w.multiplicity;
    }
    WeightSystem ws;
    ws.k_ = k;
    ws.fixed_dim_ = fixed_dim;
    for (auto& [vec, mult] : merged) ws.weights_.push_back({vec, mult});
    return ws;
}

IntMatrix WeightSystem::weight_matrix() const {
    IntMatrix m(weights_.size(), k_);
    for (std::size_t i = 0; i < weights_.size(); ++i)
        for (std::size_t j = 0; j < k_; ++j) m(i, j) = weights_[i].vector[j];
    return m;
}

IntMatrix WeightSystem::support_matrix(std::uint64_t mask) const {
    std::vector<std::size_t> classes;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (mask >> i & 1U) classes.push_back(i);
    return support_matrix(classes);
}

IntMatrix WeightSystem::support_matrix(const std::vector<std::size_t>& classes) const {
    IntMatrix m(classes.size(), k_);
    for (std::size_t r = 0; r < classes.size(); ++r)
        for (std::size_t j = 0; j < k_; ++j) m(r, j) = weights_.at(classes[r]).vector[j];
    return m;
}

std::vector<IsotypicalComponent> WeightSystem::components() const {
    std::vector<IsotypicalComponent> out;
    std::size_t offset = fixed_dim_;
    for (const auto& w : weights_) {
        out.push_back({w.vector, w.multiplicity, 2 * w.multiplicity, offset});
        offset += 2 * w.multiplicity;
    }
    return out;
}

std::size_t total_dim(const WeightSystem& ws) {
    std::size_t d = ws.fixed_dim();
    for (const auto& w : ws.weights()) d += 2 * w.multiplicity;
    return d;
}

bool has_discrete_kernel(const WeightSystem& ws) {
    return ws.num_classes() > 0 && rank(ws.weight_matrix()) == ws.k();
}

bool is_faithful(const WeightSystem& ws) {
    if (ws.num_classes() < ws.k()) return false;
    const auto factors = snf(ws.weight_matrix());
    return factors.size() == ws.k() && std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

std::size_t cohomogeneity(const WeightSystem& ws) {
    const std::size_t r = ws.num_classes() == 0 ? 0 : rank(ws.weight_matrix());
    return total_dim(ws) - r;
}

}  // namespace torusrep
