#include "torusrep/strata.hpp"

#include "torusrep/errors.hpp"
#include "torusrep/split.hpp"

#include <algorithm>
#include <map>

namespace torusrep {

namespace {

IntVector flatten(const IntMatrix& m) {
    IntVector out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& x : m.row(i)) out.push_back(x);
    return out;
}

}  // namespace

std::vector<StratumRecord> enumerate_strata(const WeightSystem& ws) {
    const std::size_t m = ws.num_classes();
    if (m > kMaxStrataClasses)
        throw PreconditionError("stratum enumeration is capped at " + std::to_string(kMaxStrataClasses) +
                                " weight classes, got " + std::to_string(m));
    const std::size_t k = ws.k();
    const std::size_t chm = cohomogeneity(ws);

    std::map<IntVector, StratumRecord> by_lattice;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const IntMatrix gens = ws.support_matrix(mask);
        IntMatrix basis = lattice_basis(gens);
        auto [it, inserted] = by_lattice.try_emplace(flatten(basis));
        StratumRecord& rec = it->second;
        if (inserted) {
            rec.lattice = std::move(basis);
            const std::size_t r = rec.lattice.rows();
            rec.isotropy_dim = k - r;
            rec.isotropy_invariants = gens.rows() == 0 ? std::vector<Integer>{} : snf(gens);
            rec.isotropy_invariants.resize(k, Integer(0));

            std::size_t fixed = ws.fixed_dim();
            for (const auto& w : ws.weights())
                if (in_hnf_lattice(w.vector, rec.lattice)) fixed += 2 * w.multiplicity;
            rec.fixed_dim_of_isotropy = fixed;
            rec.stratum_dim = fixed;
            rec.quotient_dim = fixed - r;
            rec.quotient_codim = chm - rec.quotient_dim;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1U) rec.support.push_back(i);
    }

    std::vector<StratumRecord> out;
    out.reserve(by_lattice.size());
    for (auto& [key, rec] : by_lattice) {
        std::sort(rec.support.begin(), rec.support.end());
        rec.support.erase(std::unique(rec.support.begin(), rec.support.end()), rec.support.end());
        out.push_back(std::move(rec));
    }
    return out;
}

bool boundary_empty(const WeightSystem& ws) {
    const auto strata = enumerate_strata(ws);
    return std::none_of(strata.begin(), strata.end(), [](const StratumRecord& r) { return r.quotient_codim == 1; });
}

bool has_trivial_copolarity(const WeightSystem& ws) { return boundary_empty(ws); }

CandidateReport minimal_reduction_candidate(const WeightSystem& ws) {
    CandidateReport report;
    if (ws.fixed_dim() != 0) report.failed.emplace_back("nontrivial fixed space");
    if (!is_faithful(ws)) report.failed.emplace_back("not faithful");
    if (is_decomposable(ws).decomposable) report.failed.emplace_back("decomposable");
    if (!boundary_empty(ws)) report.failed.emplace_back("boundary nonempty");
    report.candidate = report.failed.empty();
    return report;
}

}  // namespace torusrep
