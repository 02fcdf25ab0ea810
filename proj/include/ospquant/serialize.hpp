#pragma once

#include "ospquant/quantizer.hpp"

#include <json.hpp>

#include <string>

namespace ospq {

using Json = nlohmann::json;

Json to_json(const SpaceSignature& sig);
SpaceSignature signature_from_json(const Json& j);

Json to_json(const Weights& w);
Weights weights_from_json(const Json& j);

// terms: [{"fiberEven": [...], "fiberOdd": [1-based indices], "coeff": text}]
Json to_json(const SymbolField& s);
SymbolField symbol_from_json(const Json& j);

// mirrors the symbol schema with derivEven/derivOdd keys
Json to_json(const DiffOperator& d);
DiffOperator diffop_from_json(const Json& j);

Json to_json(const SymbolSum& s);

// sparse triples [rowLabel, colLabel, "num/den"]
Json to_json(const GradedMatrix& m);

Json to_json(const QuantizationResult& r);

// human-readable one-line form: "(coeff) fiber + ..."
std::string symbol_text(const SymbolField& s);
std::string symbol_sum_text(const SymbolSum& s);
std::string diffop_text(const DiffOperator& d);

}  // namespace ospq
