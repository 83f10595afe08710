#include "quadrange/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace quadrange {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, path + ": " + what);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput,
                "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

double parse_real(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "number is not finite");
  return x;
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

std::size_t parse_count(const Json& j, const std::string& path, std::size_t min) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < static_cast<long long>(min)) fail(path, "must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

double clean(double x) { return x == 0.0 ? 0.0 : x; }

void dump_string(std::string& out, const std::string& s) {
  out += Json(s).dump();
}

void dump(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner_pad(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner_pad;
        dump_string(out, it.key());
        out += ": ";
        dump(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line so complex pairs read as [re, im].
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(out, j[i], indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner_pad;
        dump(out, j[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", clean(x));
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Complex parse_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {parse_real(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im] or a number");
  return {parse_real(j[0], path + "[0]"), parse_real(j[1], path + "[1]")};
}

Json to_json(const DenseMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(to_json(z));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

DenseMatrix parse_matrix(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto rows = parse_count(field(j, "rows", path), join(path, "rows"), 1);
  const auto cols = parse_count(field(j, "cols", path), join(path, "cols"), 1);
  const auto& entries = field(j, "entries", path);
  const auto epath = join(path, "entries");
  if (!entries.is_array()) fail(epath, "expected an array");
  if (entries.size() != rows * cols) {
    fail(epath, "has " + std::to_string(entries.size()) + " entries, expected " +
                    std::to_string(rows * cols));
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    values.push_back(parse_complex(entries[k], epath + "[" + std::to_string(k) + "]"));
  }
  return DenseMatrix(rows, cols, std::move(values));
}

ModelDocument parse_model_document(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) fail("document", "expected an object");
  const GQOParams params(parse_complex(field(j, "a", ""), "a"), parse_complex(field(j, "b", ""), "b"),
                         parse_complex(field(j, "c", ""), "c"));
  const auto& model = field(j, "model", "");
  if (!model.is_object()) fail("model", "expected an object");
  const auto& type = field(model, "type", "model");
  if (!type.is_string()) fail("model.type", "expected a string");
  const auto kind = type.get<std::string>();
  if (kind == "matrix") {
    return {params, ConcreteMatrix{parse_matrix(model, "model")}};
  }
  if (kind == "diagonal") {
    const auto& values = field(model, "values", "model");
    if (!values.is_array()) fail("model.values", "expected an array");
    std::vector<double> vals;
    for (std::size_t k = 0; k < values.size(); ++k) {
      vals.push_back(parse_real(values[k], "model.values[" + std::to_string(k) + "]"));
    }
    const double sup = parse_real(field(model, "sup", "model"), "model.sup");
    const auto& attained = field(model, "sup_attained", "model");
    if (!attained.is_boolean()) fail("model.sup_attained", "expected a boolean");
    try {
      return {params, DiagonalSpectrum(std::move(vals), sup, attained.get<bool>())};
    } catch (const Error& e) {
      fail("model", e.what());
    }
  }
  fail("model.type", "unknown model type \"" + kind + "\"");
}

Json to_json(const ModelDocument& doc) {
  Json out;
  out["a"] = to_json(doc.params.a);
  out["b"] = to_json(doc.params.b);
  out["c"] = to_json(doc.params.c);
  Json model;
  if (const auto* cm = std::get_if<ConcreteMatrix>(&doc.model)) {
    model["type"] = "matrix";
    const Json matrix = to_json(cm->matrix);
    for (const auto& [k, v] : matrix.items()) model[k] = v;
  } else {
    const auto& ds = std::get<DiagonalSpectrum>(doc.model);
    model["type"] = "diagonal";
    Json values = Json::array();
    for (double x : ds.values()) values.push_back(x);
    model["values"] = std::move(values);
    model["sup"] = ds.sup();
    model["sup_attained"] = ds.sup_attained();
  }
  out["model"] = std::move(model);
  return out;
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  const Json j = parse_text(text);
  if (!j.is_object()) fail("config", "expected an object");
  auto positive = [&](const char* key, double& slot) {
    if (const auto it = j.find(key); it != j.end()) {
      slot = parse_real(*it, key);
      if (!(slot > 0.0)) fail(key, "must be > 0");
    }
  };
  positive("eq_tol", base.tol.eq_tol);
  positive("geom_tol", base.tol.geom_tol);
  positive("eig_tol", base.tol.eig_tol);
  if (const auto it = j.find("max_sweeps"); it != j.end()) {
    base.tol.max_sweeps = static_cast<int>(parse_count(*it, "max_sweeps", 1));
  }
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer() && !it->is_number_unsigned()) fail("seed", "expected an integer");
    if (it->is_number_unsigned()) {
      base.seed = it->get<std::uint64_t>();
    } else {
      const auto v = it->get<long long>();
      if (v < 0) fail("seed", "must be >= 0");
      base.seed = static_cast<std::uint64_t>(v);
    }
  }
  if (const auto it = j.find("angles"); it != j.end()) base.angles = parse_count(*it, "angles", 3);
  if (const auto it = j.find("samples"); it != j.end()) base.samples = parse_count(*it, "samples", 1);
  return base;
}

Json to_json(const NormReport& n) {
  Json out;
  out["r"] = n.r;
  out["s"] = n.s;
  out["norm"] = n.norm;
  out["norm_squared"] = n.norm_squared;
  out["r2_minus_s2"] = n.r2_minus_s2;
  return out;
}

Json to_json(const RegionDescriptor& r) {
  Json out;
  if (r.is_disk()) {
    const auto& e = r.ellipse();
    out["shape"] = "disk";
    out["closure"] = std::string(to_string(r.closure));
    out["focus1"] = to_json(e.focus1);
    out["focus2"] = to_json(e.focus2);
    out["semi_major"] = e.semi_major;
    out["semi_minor"] = e.semi_minor;
    out["center"] = to_json(e.center);
    if (r.extra_points) {
      out["included_points"] = Json::array({to_json(r.extra_points->first), to_json(r.extra_points->second)});
    }
  } else {
    const auto& s = r.segment();
    out["shape"] = "segment";
    out["closure"] = std::string(to_string(r.closure));
    out["end1"] = to_json(s.end1);
    out["end2"] = to_json(s.end2);
  }
  return out;
}

Json to_json(const MembershipVerdict& v) {
  Json out;
  out["verdict"] = std::string(to_string(v.value));
  out["boundary_distance"] = v.boundary_distance;
  return out;
}

Json to_json(const DecompositionResult& d) {
  Json out;
  if (const auto* dec = std::get_if<Decomposition>(&d)) {
    out["decomposable"] = true;
    out["case"] = std::string(to_string(dec->case_tag));
    out["a1"] = to_json(dec->a1);
    out["b1"] = to_json(dec->b1);
    out["k"] = to_json(dec->k);
  } else {
    out["decomposable"] = false;
    out["reason"] = std::get<Impossible>(d).reason;
  }
  return out;
}

Json to_json(const VerifyReport& v) {
  Json out;
  out["max_outward_violation"] = v.max_outward_violation;
  out["hausdorff_closed"] = v.hausdorff_closed;
  out["scale"] = v.scale;
  out["region"] = to_json(v.region);
  return out;
}

std::string canonical_dump(const Json& j) {
  std::string out;
  dump(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace quadrange
