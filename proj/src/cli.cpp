#include "torusrep/cli.hpp"

#include "torusrep/errors.hpp"
#include "torusrep/json_io.hpp"
#include "torusrep/sweep.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace torusrep::cli {

namespace {

Json analysis_json(const WeightSystem& ws) {
    Json inv;
    inv["total_dim"] = total_dim(ws);
    inv["faithful"] = is_faithful(ws);
    inv["discrete_kernel"] = has_discrete_kernel(ws);
    inv["cohomogeneity"] = cohomogeneity(ws);
    inv["lines"] = to_json(induced_lines(ws));
    const Decomposability d = is_decomposable(ws);
    inv["decomposable"] = d.decomposable;
    inv["decomposability_reason"] = to_string(d.reason);
    inv["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
    inv["blocks"] = to_json(indecomposable_blocks(ws));
    inv["boundary_empty"] = boundary_empty(ws);
    inv["trivial_copolarity"] = has_trivial_copolarity(ws);
    const CandidateReport cand = minimal_reduction_candidate(ws);
    inv["minimal_reduction_candidate"] = cand.candidate;
    inv["candidate_failures"] = cand.failed;
    Json strata = Json::array();
    for (const auto& r : enumerate_strata(ws)) strata.push_back(to_json(r));
    inv["strata"] = std::move(strata);
    return inv;
}

struct InvolutionOutcome {
    Json report;
    int code = kOk;
    std::string summary;
};

// validate -> nice -> codim bounds -> split -> conclusion
InvolutionOutcome involution_json(const InvolutiveExtension& ext) {
    InvolutionOutcome o;
    Json& j = o.report;
    if (const auto v = validate(ext); !v) throw InputError("invalid extension: " + v.violation);

    const std::size_t n = total_dim(ext.ws);
    const std::size_t fixed = fixed_space_dim(ext);
    j["valid"] = true;
    j["fixed_space_dim"] = fixed;
    j["codim"] = n - fixed;
    j["centralizer_dim"] = centralizer_dim(ext);
    if (fixed == n) {
        j["nice"] = false;
        j["note"] = "omega is the identity";
        o.summary = "omega is the identity; nothing to conclude";
        return o;
    }
    const bool nice = is_nice_involution(ext);
    j["nice"] = nice;
    if (!nice) {
        o.summary = "not a nice involution";
        return o;
    }
    try {
        j["codim_bounds"] = to_json(codim_bounds_check(ext));
        const std::size_t k = ext.ws.k();
        const bool candidate = minimal_reduction_candidate(ext.ws).candidate;
        if (k == 2 && n - fixed == 2 && !candidate) j["split"] = to_json(partition_by_involution(ext));
        if ((k == 1 || k == 2) && candidate) {
            const CohomogeneityVerdict v = conclude_cohomogeneity(ext);
            if (v.split) j["split"] = to_json(*v.split);
            j["verdict"] = to_json(v);
            o.summary = "verdict " + to_string(v.kind) + ", chm " + std::to_string(v.chm);
        } else {
            j["verdict"] = nullptr;
            o.summary = "nice involution; no cohomogeneity conclusion outside candidates with k in {1, 2}";
        }
    } catch (const LemmaViolation& e) {
        Json viol;
        viol["lemma"] = e.lemma();
        viol["detail"] = e.what();
        j["violation"] = std::move(viol);
        o.code = kViolation;
        o.summary = std::string("VIOLATION of ") + e.lemma() + ": " + e.what();
    }
    return o;
}

int cmd_analyze(const std::string& path, const std::string& ext_path, std::ostream& out, std::ostream& err) {
    const WeightSystem ws = weight_system_from_json(read_json_file(path));
    Json report;
    report["input"] = to_json(ws);
    report["invariants"] = analysis_json(ws);
    int code = kOk;
    if (!ext_path.empty()) {
        const InvolutiveExtension ext = extension_from_json(read_json_file(ext_path), &ws);
        InvolutionOutcome inv = involution_json(ext);
        report["involution"] = std::move(inv.report);
        code = inv.code;
    }
    out << report.dump(2) << '\n';
    const Json& i = report["invariants"];
    err << "dim V = " << i["total_dim"].get<std::size_t>() << ", cohomogeneity " << i["cohomogeneity"].get<std::size_t>()
        << ", " << i["lines"]["count"].get<std::size_t>() << " lines, "
        << (i["decomposable"].get<bool>() ? "decomposable" : "indecomposable") << ", boundary "
        << (i["boundary_empty"].get<bool>() ? "empty" : "nonempty") << '\n';
    return code;
}

int cmd_involution(const std::string& ws_path, const std::string& ext_path, std::ostream& out, std::ostream& err) {
    const WeightSystem ws = weight_system_from_json(read_json_file(ws_path));
    const InvolutiveExtension ext = extension_from_json(read_json_file(ext_path), &ws);
    InvolutionOutcome o = involution_json(ext);
    Json report;
    report["input"] = to_json(ext);
    for (auto& [key, value] : o.report.items()) report[key] = value;
    out << report.dump(2) << '\n';
    err << o.summary << '\n';
    return o.code;
}

int cmd_verify(const std::string& theorem, const SweepRanges& ranges, std::ostream& out, std::ostream& err) {
    const SweepResult r = run_sweep(theorem, ranges);
    out << to_json(r).dump(2) << '\n';
    err << theorem << ": " << r.enumerated << " systems, " << r.passing << " meeting hypotheses, "
        << r.counterexamples.size() << " counterexamples\n";
    return r.clean() ? kOk : kViolation;
}

int cmd_family(const numlab::FamilySpec& spec, std::ostream& out, std::ostream& err) {
    numlab::check_spec(spec);
    if (spec.circle_weights.size() < 2) throw InputError("the family needs at least two circle weights");
    const numlab::FamilyReport rep = numlab::family_report(spec);
    const numlab::NumericResult sphere = numlab::cohomogeneity_via_sphere(spec);

    Json checks;
    const std::size_t chm = numlab::expected_cohomogeneity(spec);
    const std::size_t iso = numlab::expected_isotropy_dim(spec.n);
    checks["chm_closed_form"] = rep.chm == chm;
    checks["chm_sphere"] = sphere.value == rep.chm;
    checks["isotropy_closed_form"] = rep.isotropy_dim == iso;
    checks["chm_not_4"] = rep.chm != 4;
    if (rep.lrs_dim) checks["lrs_dim_2"] = *rep.lrs_dim == 2;
    checks["tol_stable"] = rep.tol_stable && sphere.tol_stable;
    bool ok = true;
    for (const auto& [key, v] : checks.items()) ok = ok && v.get<bool>();

    Json report = to_json(rep);
    report["samples"] = spec.samples;
    report["seed"] = spec.seed;
    report["tol"] = spec.svd_tol;
    report["circle_part_polar"] = numlab::circle_rep_is_polar(spec.circle_weights);
    if (!rep.lrs_dim) report["lrs_note"] = "refused for n = 3";
    report["checks"] = std::move(checks);
    out << report.dump(2) << '\n';
    err << "n = " << spec.n << ": chm " << rep.chm << " (expected " << chm << "), isotropy dim " << rep.isotropy_dim
        << " (expected " << iso << ")" << (ok ? "" : "  FAILED") << '\n';
    return ok ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Torus representation analysis and verification sweeps", "torusrep"};
    app.require_subcommand(1);

    std::string ws_path, ext_path, theorem;
    auto* analyze = app.add_subcommand("analyze", "Invariant battery for one weight system");
    analyze->add_option("path", ws_path, "Weight-system JSON")->required();
    analyze->add_option("--involution", ext_path, "Extension JSON to analyze along with the system");

    auto* involution = app.add_subcommand("involution", "Identity checks and verdict for an involutive extension");
    involution->add_option("ws_path", ws_path, "Weight-system JSON")->required();
    involution->add_option("ext_path", ext_path, "Extension JSON")->required();

    std::vector<std::size_t> ks;
    int max_entry = -1;
    std::size_t max_classes = 0, max_mult = 0;
    auto* verify = app.add_subcommand("verify", "Exhaustive bounded sweep for one theorem");
    verify->add_option("theorem", theorem, "cor2.7 | lem3.3 | lem3.4 | thm4.1 | prop3.8")->required();
    verify->add_option("--k", ks, "Torus ranks, comma separated")->delimiter(',');
    verify->add_option("--max-entry", max_entry, "Bound on |weight entries|");
    verify->add_option("--max-classes", max_classes, "Bound on the number of weight classes");
    verify->add_option("--max-mult", max_mult, "Bound on multiplicities");

    numlab::FamilySpec spec;
    auto* family = app.add_subcommand("family", "Numerical battery for the SO(2) x SO(n) family");
    family->add_option("--n", spec.n, "Size of SO(n)")->required();
    family->add_option("--weights", spec.circle_weights, "Circle weights, comma separated")->delimiter(',')->required();
    family->add_option("--seed", spec.seed, "Sampling seed");
    family->add_option("--samples", spec.samples, "Number of sample points");
    family->add_option("--tol", spec.svd_tol, "Relative singular-value cutoff");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(ws_path, ext_path, out, err);
        if (*involution) return cmd_involution(ws_path, ext_path, out, err);
        if (*verify) {
            SweepRanges r = default_ranges(theorem);
            if (!ks.empty()) r.ks = ks;
            if (max_entry >= 0) r.max_entry = max_entry;
            if (max_classes > 0) r.max_classes = max_classes;
            if (max_mult > 0) r.max_mult = max_mult;
            return cmd_verify(theorem, r, out, err);
        }
        return cmd_family(spec, out, err);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const LemmaViolation& e) {
        err << "VIOLATION of " << e.lemma() << ": " << e.what() << '\n';
        return kViolation;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace torusrep::cli
