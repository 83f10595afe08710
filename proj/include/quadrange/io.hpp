#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quadrange/attainment.hpp"
#include "quadrange/model.hpp"
#include "quadrange/norm_formulas.hpp"
#include "quadrange/oracle.hpp"
#include "quadrange/range_geometry.hpp"
#include "quadrange/structure.hpp"

namespace quadrange {

using Json = nlohmann::ordered_json;

/// A model file: the scalars a, b, c and the operator A.
struct ModelDocument {
  GQOParams params;
  OperatorModel model;
};

/// Tolerances plus the oracle defaults a config file may set.
struct RunConfig {
  ToleranceConfig tol;
  std::uint64_t seed = 20240601;
  std::size_t angles = 720;
  std::size_t samples = 10000;
};

/// Parses the model format. Errors are Error(InvalidInput) whose message
/// names the offending field path ("model.entries[3]") or the byte offset
/// of a syntax error.
ModelDocument parse_model_document(std::string_view text);
Json to_json(const ModelDocument& doc);

/// Overlays the fields present in a config document onto `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

Json to_json(Complex z);
Json to_json(const DenseMatrix& m);
DenseMatrix parse_matrix(const Json& j, const std::string& path = "matrix");
Complex parse_complex(const Json& j, const std::string& path);

Json to_json(const NormReport& n);
Json to_json(const RegionDescriptor& r);
Json to_json(const MembershipVerdict& v);
Json to_json(const DecompositionResult& d);
Json to_json(const VerifyReport& v);

/// Deterministic text form: keys in insertion order, two-space indent,
/// doubles as %.17g with -0 written as 0, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace quadrange
