#pragma once

// JSON encodings of the library types. Input parsers throw InputError on any
// schema violation.
//
//   weight system: {"k": int, "fixed_dim": int, "weights": [[int,...],...],
//                   "multiplicities": [int,...]}   (multiplicities optional, default 1)
//   extension:     {"weight_system": {...}, "A": [[int,...],...],
//                   "omega": [["p/q",...],...]}    (weight_system optional)

#include "torusrep/grassmann.hpp"
#include "torusrep/involution.hpp"
#include "torusrep/split.hpp"
#include "torusrep/strata.hpp"

#include <json.hpp>

namespace torusrep {

using Json = nlohmann::ordered_json;

WeightSystem weight_system_from_json(const nlohmann::json& j);
Json to_json(const WeightSystem& ws);

/// Parses an extension. When `ws` is given it is used as the weight system; an
/// embedded "weight_system" must then describe the same canonical system.
InvolutiveExtension extension_from_json(const nlohmann::json& j, const WeightSystem* ws = nullptr);
Json to_json(const InvolutiveExtension& ext);

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RationalMatrix& m);
Json to_json(const StratumRecord& r);
Json to_json(const SplitWitness& w);
Json to_json(const BlockDecomposition& b);
Json to_json(const InducedLines& lines);
Json to_json(const InvolutionSplit& s);
Json to_json(const CodimReport& r);
Json to_json(const CohomogeneityVerdict& v);
Json to_json(const numlab::FamilyReport& r);

/// Reads and parses a JSON file; InputError if unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

}  // namespace torusrep
