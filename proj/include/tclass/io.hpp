#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tclass/classt.hpp"
#include "tclass/geometry.hpp"
#include "tclass/oracle.hpp"
#include "tclass/series.hpp"
#include "tclass/weights.hpp"

namespace tclass::io {

using Json = nlohmann::ordered_json;

// Rounds to 10 significant digits so serialized output is identical
// across platforms.
double round_sig(double x);

/// Number node holding round_sig(x); null for non-finite x.
Json number(double x);

// Parsers reject unknown fields and wrongly typed values with InvalidInput;
// domain violations keep their library error code.
NegCoeffSeries series_from_json(const Json& doc);
Json series_to_json(const NegCoeffSeries& f);

ClassParams params_from_json(const Json& doc);
Json params_to_json(const ClassParams& p);

std::string_view to_string(OperatorMode mode);
OperatorMode mode_from_string(std::string_view s);
std::string_view to_string(RadiusKind kind);
RadiusKind radius_kind_from_string(std::string_view s);
std::string_view to_string(ProductKind kind);
ProductKind product_kind_from_string(std::string_view s);
std::string_view to_string(TailVerdict verdict);

Json to_json(const Deficiency& d);
Json to_json(const Decomposition& d);
Json to_json(const ProductParamResult& r);
Json to_json(RadiusKind kind, const RadiusResult& r);
Json to_json(const DistortionEnvelope& e);
Json to_json(const MarginReport& m);
Json to_json(const ValidityReport& v);

/// Reads and parses a JSON file; I/O and syntax failures are InvalidInput.
Json read_json_file(const std::string& path);

/// Compact serialization used for every CLI output line.
std::string dump(const Json& doc);

}  // namespace tclass::io
