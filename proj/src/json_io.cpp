#include "torusrep/json_io.hpp"

#include "torusrep/errors.hpp"

#include <fstream>
#include <sstream>

namespace torusrep {

namespace {

std::size_t as_count(const nlohmann::json& j, const char* field) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(std::string("field '") + field + "' must be a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

const nlohmann::json& require(const nlohmann::json& j, const char* field) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    const auto it = j.find(field);
    if (it == j.end()) throw InputError(std::string("missing field '") + field + "'");
    return *it;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j, const char* field) {
    if (!j.is_array()) throw InputError(std::string("field '") + field + "' must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError(std::string("field '") + field + "' is ragged");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer()) throw InputError(std::string("field '") + field + "' must hold integers");
            m(i, c) = Integer(j[i][c].get<long long>());
        }
    }
    return m;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw InputError("omega entries must be rational strings \"p/q\" or integers");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

}  // namespace

WeightSystem weight_system_from_json(const nlohmann::json& j) {
    const std::size_t k = as_count(require(j, "k"), "k");
    const std::size_t fixed = as_count(require(j, "fixed_dim"), "fixed_dim");
    const auto& weights = require(j, "weights");
    if (!weights.is_array()) throw InputError("field 'weights' must be an array");

    std::vector<std::size_t> mult(weights.size(), 1);
    if (const auto it = j.find("multiplicities"); it != j.end()) {
        if (!it->is_array() || it->size() != weights.size())
            throw InputError("'weights' and 'multiplicities' must have equal length");
        for (std::size_t i = 0; i < weights.size(); ++i) mult[i] = as_count((*it)[i], "multiplicities");
    }

    std::vector<RawWeight> raw;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto& w = weights[i];
        if (!w.is_array()) throw InputError("each weight must be an array of integers");
        IntVector v;
        for (const auto& x : w) {
            if (!x.is_number_integer()) throw InputError("weight entries must be integers");
            v.emplace_back(x.get<long long>());
        }
        raw.push_back({std::move(v), mult[i]});
    }
    return canonicalize(k, fixed, raw);
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
            a.push_back(x.str());
        else
            a.push_back(static_cast<long long>(x));
    }
    return a;
}

Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        a.push_back(to_json(IntVector(r.begin(), r.end())));
    }
    return a;
}

Json to_json(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        a.push_back(std::move(row));
    }
    return a;
}

Json to_json(const WeightSystem& ws) {
    Json j;
    j["k"] = ws.k();
    j["fixed_dim"] = ws.fixed_dim();
    Json weights = Json::array();
    Json mult = Json::array();
    for (const auto& w : ws.weights()) {
        weights.push_back(to_json(w.vector));
        mult.push_back(w.multiplicity);
    }
    j["weights"] = std::move(weights);
    j["multiplicities"] = std::move(mult);
    return j;
}

InvolutiveExtension extension_from_json(const nlohmann::json& j, const WeightSystem* ws) {
    InvolutiveExtension ext;
    if (!j.is_object()) throw InputError("extension must be a JSON object");
    if (const auto it = j.find("weight_system"); it != j.end()) {
        ext.ws = weight_system_from_json(*it);
        if (ws != nullptr && !(ext.ws == *ws))
            throw InputError("embedded weight_system differs from the given weight system");
    } else if (ws != nullptr) {
        ext.ws = *ws;
    } else {
        throw InputError("missing field 'weight_system'");
    }
    if (ws != nullptr) ext.ws = *ws;

    ext.a = int_matrix_from_json(require(j, "A"), "A");
    const auto& omega = require(j, "omega");
    if (!omega.is_array()) throw InputError("field 'omega' must be an array of rows");
    const std::size_t n = omega.size();
    ext.omega = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!omega[i].is_array() || omega[i].size() != n) throw InputError("omega must be square");
        for (std::size_t c = 0; c < n; ++c) ext.omega(i, c) = rational_from_json(omega[i][c]);
    }
    return ext;
}

Json to_json(const InvolutiveExtension& ext) {
    Json j;
    j["weight_system"] = to_json(ext.ws);
    j["A"] = to_json(ext.a);
    j["omega"] = to_json(ext.omega);
    return j;
}

Json to_json(const StratumRecord& r) {
    Json j;
    j["support"] = r.support;
    j["lattice_hnf"] = to_json(r.lattice);
    j["isotropy_dim"] = r.isotropy_dim;
    j["isotropy_invariants"] = to_json(IntVector(r.isotropy_invariants.begin(), r.isotropy_invariants.end()));
    j["fixed_dim_of_isotropy"] = r.fixed_dim_of_isotropy;
    j["stratum_dim"] = r.stratum_dim;
    j["quotient_dim"] = r.quotient_dim;
    j["quotient_codim"] = r.quotient_codim;
    return j;
}

Json to_json(const SplitWitness& w) {
    Json j;
    j["theta1"] = w.theta1;
    j["theta2"] = w.theta2;
    return j;
}

Json to_json(const BlockDecomposition& b) {
    Json j;
    j["flat_dim"] = b.flat_dim;
    j["blocks"] = b.blocks;
    return j;
}

Json to_json(const InducedLines& lines) {
    Json j;
    j["count"] = lines.count();
    Json reps = Json::array();
    for (const auto& l : lines.representatives) reps.push_back(to_json(l));
    j["representatives"] = std::move(reps);
    return j;
}

Json to_json(const InvolutionSplit& s) {
    Json j;
    j["v_plus"] = s.v_plus;
    j["v_minus"] = s.v_minus;
    j["v_bar"] = s.v_bar;
    j["dim_plus"] = s.dim_plus;
    j["dim_minus"] = s.dim_minus;
    j["dim_bar"] = s.dim_bar;
    j["line_plus"] = to_json(s.line_plus);
    j["line_minus"] = to_json(s.line_minus);
    return j;
}

Json to_json(const CodimReport& r) {
    Json j;
    j["codim"] = r.codim;
    j["centralizer_dim"] = r.centralizer_dim;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    return j;
}

Json to_json(const CohomogeneityVerdict& v) {
    Json j;
    j["verdict"] = to_string(v.kind);
    j["chm"] = v.chm;
    if (v.kind != VerdictKind::MaximalCodim) j["dim_v_minus"] = v.dim_v_minus;
    return j;
}

Json to_json(const numlab::FamilyReport& r) {
    Json j;
    j["n"] = r.n;
    j["weights"] = r.weights;
    j["chm"] = r.chm;
    j["isotropy_dim"] = r.isotropy_dim;
    j["lrs_dim"] = r.lrs_dim ? Json(*r.lrs_dim) : Json(nullptr);
    j["tol_stable"] = r.tol_stable;
    return j;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace torusrep
