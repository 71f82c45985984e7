#include "torusrep/sweep.hpp"

#include "torusrep/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace torusrep {

namespace {

struct Outcome {
    bool passing = false;
    std::size_t extensions = 0;
    std::map<std::string, std::size_t> tallies;
    std::vector<Json> counterexamples;
};

Json counterexample(const std::string& lemma, const std::string& detail, const WeightSystem& ws,
                    const InvolutiveExtension* ext = nullptr) {
    Json j;
    j["lemma"] = lemma;
    j["detail"] = detail;
    j["weight_system"] = to_json(ws);
    if (ext != nullptr) j["extension"] = to_json(*ext);
    return j;
}

Outcome check_cor27(const WeightSystem& ws) {
    Outcome o;
    if (!is_faithful(ws) || is_decomposable(ws).decomposable) return o;
    o.passing = true;
    if (!check_line_bound(ws)) {
        const std::size_t lines = induced_lines(ws).count();
        o.counterexamples.push_back(counterexample("line-bound", "induces " + std::to_string(lines) + " lines, expected at least " +
                                                                     std::to_string(ws.k() + 1),
                                                   ws));
    }
    return o;
}

Outcome check_lem33(const WeightSystem& ws) {
    Outcome o;
    if (!minimal_reduction_candidate(ws).candidate) return o;
    o.passing = true;
    const std::size_t n = total_dim(ws);
    if (n % 2 != 0 || n < 2 * ws.k() + 2)
        o.counterexamples.push_back(counterexample("candidate-dimension", "dim V = " + std::to_string(n), ws));
    return o;
}

// Shared loop over (A, omega) for the involution sweeps; `body` sees every
// valid nice extension.
template <typename Body>
void for_each_nice(const WeightSystem& ws, Outcome& o, Body&& body) {
    for (const IntMatrix& a : order_two_matrices(ws.k())) {
        if (!class_permutation(ws, a)) continue;
        for (const InvolutiveExtension& ext : candidate_involutions(ws, a)) {
            ++o.extensions;
            if (const auto v = validate(ext); !v) {
                o.counterexamples.push_back(counterexample("enumeration", "generated extension is invalid: " + v.violation, ws, &ext));
                continue;
            }
            if (!is_nice_involution(ext)) continue;
            body(ext);
        }
    }
}

Outcome check_lem34(const WeightSystem& ws) {
    Outcome o;
    for_each_nice(ws, o, [&](const InvolutiveExtension& ext) {
        o.passing = true;
        ++o.tallies["nice"];
        const std::size_t codim = total_dim(ws) - fixed_space_dim(ext);
        if (codim == 1) {
            ++o.tallies["codim-1"];
            o.counterexamples.push_back(counterexample(kNoCodimOne, "nice involution with codim 1", ws, &ext));
            return;
        }
        try {
            codim_bounds_check(ext);
        } catch (const LemmaViolation& e) {
            o.counterexamples.push_back(counterexample(e.lemma(), e.what(), ws, &ext));
        }
    });
    return o;
}

Outcome check_conclusion(const WeightSystem& ws, bool require_k1) {
    Outcome o;
    if (!minimal_reduction_candidate(ws).candidate) return o;
    for_each_nice(ws, o, [&](const InvolutiveExtension& ext) {
        o.passing = true;
        try {
            const CohomogeneityVerdict v = conclude_cohomogeneity(ext);
            ++o.tallies[to_string(v.kind) + "(" + std::to_string(v.chm) + ")"];
            const std::size_t k = ws.k();
            const bool max_codim = total_dim(ws) - fixed_space_dim(ext) == k + 1;
            std::string wrong;
            if (require_k1 && (v.kind != VerdictKind::MaximalCodim || v.chm != 3))
                wrong = "k = 1 input concluded " + to_string(v.kind) + " with chm " + std::to_string(v.chm);
            if (max_codim && (v.kind != VerdictKind::MaximalCodim || v.chm != k + 2))
                wrong = "codim k+1 input concluded chm " + std::to_string(v.chm);
            if (v.kind == VerdictKind::MaximalCodim) {
                std::size_t planes = 0;
                for (const auto& w : ws.weights()) planes += w.multiplicity;
                if (total_dim(ws) != 2 * k + 2 || planes != k + 1)
                    wrong = "maximal-codim verdict on " + std::to_string(planes) + " planes, dim V = " +
                            std::to_string(total_dim(ws));
            }
            if (v.chm != cohomogeneity(ws)) wrong = "chm differs from the weight-model cohomogeneity";
            if (!wrong.empty()) o.counterexamples.push_back(counterexample(kMaximalCodimStructure, wrong, ws, &ext));
        } catch (const LemmaViolation& e) {
            o.counterexamples.push_back(counterexample(e.lemma(), e.what(), ws, &ext));
        }
    });
    return o;
}

Outcome check_one(const std::string& theorem, const WeightSystem& ws) {
    if (theorem == "cor2.7") return check_cor27(ws);
    if (theorem == "lem3.3") return check_lem33(ws);
    if (theorem == "lem3.4") return check_lem34(ws);
    if (theorem == "thm4.1") return check_conclusion(ws, true);
    return check_conclusion(ws, false);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"cor2.7", "lem3.3", "lem3.4", "thm4.1", "prop3.8"};
    return ids;
}

SweepRanges default_ranges(const std::string& theorem) {
    if (theorem == "cor2.7") return {{2}, 2, 4, 2};
    if (theorem == "thm4.1") return {{1}, 3, 4, 2};
    if (theorem == "lem3.3" || theorem == "lem3.4" || theorem == "prop3.8") return {{1, 2}, 2, 4, 2};
    throw InputError("unknown theorem id '" + theorem + "'");
}

void check_ranges(const std::string& theorem, const SweepRanges& r) {
    default_ranges(theorem);
    if (r.ks.empty()) throw InputError("--k must name at least one torus rank");
    for (const std::size_t k : r.ks) {
        if (k < 1 || k > kMaxSweepK) throw InputError("--k must lie in [1, " + std::to_string(kMaxSweepK) + "]");
        if (theorem == "cor2.7" && k < 2) throw InputError("cor2.7 is stated for k >= 2");
        if (theorem == "thm4.1" && k != 1) throw InputError("thm4.1 is stated for k = 1");
    }
    if (r.max_entry < 1 || r.max_entry > kMaxSweepEntry)
        throw InputError("--max-entry must lie in [1, " + std::to_string(kMaxSweepEntry) + "]");
    if (r.max_classes < 1 || r.max_classes > kMaxSweepClasses)
        throw InputError("--max-classes must lie in [1, " + std::to_string(kMaxSweepClasses) + "]");
    if (r.max_mult < 1 || r.max_mult > kMaxSweepMult)
        throw InputError("--max-mult must lie in [1, " + std::to_string(kMaxSweepMult) + "]");
}

std::vector<IntVector> canonical_vectors(std::size_t k, int max_entry) {
    std::vector<IntVector> out;
    std::vector<int> v(k, -max_entry);
    while (true) {
        const auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (nz != v.end() && *nz > 0) {
            IntVector w;
            for (const int x : v) w.emplace_back(x);
            out.push_back(std::move(w));
        }
        std::size_t i = k;
        while (i > 0 && v[i - 1] == max_entry) v[--i] = -max_entry;
        if (i == 0) break;
        ++v[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightSystem> enumerate_weight_systems(std::size_t k, int max_entry, std::size_t max_classes,
                                                   std::size_t max_mult) {
    const std::vector<IntVector> vectors = canonical_vectors(k, max_entry);
    std::vector<WeightSystem> out;
    std::vector<std::size_t> pick;
    std::vector<std::size_t> mult;

    const std::function<void(std::size_t)> multiplicities = [&](std::size_t i) {
        if (i == pick.size()) {
            std::vector<RawWeight> raw;
            for (std::size_t c = 0; c < pick.size(); ++c) raw.push_back({vectors[pick[c]], mult[c]});
            out.push_back(canonicalize(k, 0, raw));
            return;
        }
        for (std::size_t m = 1; m <= max_mult; ++m) {
            mult[i] = m;
            multiplicities(i + 1);
        }
    };
    const std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (!pick.empty()) {
            mult.assign(pick.size(), 1);
            multiplicities(0);
        }
        if (pick.size() == max_classes) return;
        for (std::size_t i = start; i < vectors.size(); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return out;
}

SweepResult run_sweep(const std::string& theorem, const SweepRanges& ranges, unsigned threads) {
    check_ranges(theorem, ranges);
    std::vector<WeightSystem> systems;
    for (const std::size_t k : ranges.ks) {
        auto part = enumerate_weight_systems(k, ranges.max_entry, ranges.max_classes, ranges.max_mult);
        systems.insert(systems.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }

    std::vector<Outcome> outcomes(systems.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < systems.size(); i = next++) outcomes[i] = check_one(theorem, systems[i]);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    SweepResult r;
    r.theorem = theorem;
    r.ranges = ranges;
    r.enumerated = systems.size();
    for (auto& o : outcomes) {
        r.passing += o.passing ? 1 : 0;
        r.extensions += o.extensions;
        for (const auto& [key, n] : o.tallies) r.tallies[key] += n;
        for (auto& c : o.counterexamples) r.counterexamples.push_back(std::move(c));
    }
    std::stable_sort(r.counterexamples.begin(), r.counterexamples.end(),
                     [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
    return r;
}

Json to_json(const SweepResult& r) {
    Json j;
    j["theorem"] = r.theorem;
    Json ranges;
    ranges["k"] = r.ranges.ks;
    ranges["max_entry"] = r.ranges.max_entry;
    ranges["max_classes"] = r.ranges.max_classes;
    ranges["max_mult"] = r.ranges.max_mult;
    ranges["fixed_dim"] = 0;
    j["ranges"] = std::move(ranges);
    j["enumerated"] = r.enumerated;
    if (r.theorem == "lem3.4" || r.theorem == "thm4.1" || r.theorem == "prop3.8") j["extensions"] = r.extensions;
    j["passing_preconditions"] = r.passing;
    Json tallies = Json::object();
    for (const auto& [key, n] : r.tallies) tallies[key] = n;
    j["tallies"] = std::move(tallies);
    j["counterexamples"] = r.counterexamples;
    return j;
}

}  // namespace torusrep
