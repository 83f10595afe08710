#include "quadrange/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "quadrange/svg.hpp"

namespace quadrange {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelDocument load_model(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_model_document(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

double parse_double(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, "cannot parse \"" + whole + "\" as re,im");
  }
  return v;
}

// Threshold checks whose outcome could flip within a few tolerances.
Json warnings_for(const GQOParams& p, const ToleranceConfig& cfg) {
  Json out = Json::array();
  const auto dist = threshold_distances(p.a, p.b, p.c);
  const double band = 10.0 * cfg.eq_tol;
  auto check = [&](const char* name, double d) {
    if (d > 0.0 && d < band) {
      std::ostringstream msg;
      msg << name << " is within 10*eq_tol of its threshold (distance "
          << std::setprecision(3) << d << "); classification depends on the tolerance";
      out.push_back(msg.str());
    }
  };
  check("|c| = 1", dist.unit_c);
  check("a = b", dist.equal_diag);
  if (dist.aligned) check("c = (a-b)^2/|a-b|^2", *dist.aligned);
  return out;
}

const char* union_case(Degeneracy deg, bool unit_c) {
  switch (deg) {
    case Degeneracy::SegTypeAligned: return "ii";
    case Degeneracy::SegTypeEqualDiag: return "iii";
    case Degeneracy::NonDegenerate: break;
  }
  return unit_c ? "iv" : "i";
}

Json witness_json(const Witness& w) {
  Json u = Json::array();
  for (const auto& z : w.u) u.push_back(to_json(z));
  Json v = Json::array();
  for (const auto& z : w.v) v.push_back(to_json(z));
  Json out;
  out["u"] = std::move(u);
  out["v"] = std::move(v);
  return out;
}

struct VerifyOutcome {
  VerifyReport report;
  double containment_tol;
  double hausdorff_tol;
  bool passed;
};

VerifyOutcome run_verify(const GQOParams& params, const DenseMatrix& a_block,
                         const RunConfig& rc) {
  VerifyOutcome v{verify_region(params, a_block, rc.tol, rc.samples, rc.angles, rc.seed), 0, 0,
                  false};
  v.containment_tol = rc.tol.geom_tol * (1.0 + v.report.scale);
  const double coarse = 720.0 / static_cast<double>(rc.angles);
  v.hausdorff_tol = 1e-5 * v.report.scale * std::max(1.0, coarse * coarse);
  v.passed = v.report.max_outward_violation <= v.containment_tol &&
             v.report.hausdorff_closed <= v.hausdorff_tol;
  return v;
}

Json verify_json(const VerifyOutcome& v, const RunConfig& rc) {
  Json out = to_json(v.report);
  out["samples"] = rc.samples;
  out["angles"] = rc.angles;
  out["seed"] = rc.seed;
  out["containment_tolerance"] = v.containment_tol;
  out["hausdorff_tolerance"] = v.hausdorff_tol;
  out["passed"] = v.passed;
  return out;
}

const DenseMatrix& require_matrix(const ModelDocument& doc, const char* command) {
  if (const auto* cm = std::get_if<ConcreteMatrix>(&doc.model)) return cm->matrix;
  throw Error(ErrorKind::UnsupportedModel,
              std::string(command) + " needs a concrete matrix model (model.type = \"matrix\")");
}

// Small fixed-seed invariant sweep for `selftest`.
int selftest(const RunConfig& rc, std::ostream& out) {
  const CounterRng rng(rc.seed);
  std::uint64_t counter = 0;
  auto gauss = [&] { return rng.gaussian(counter++); };
  auto random_matrix = [&](std::size_t r, std::size_t c) {
    std::vector<Complex> e(r * c);
    for (auto& z : e) z = gauss();
    return DenseMatrix(r, c, std::move(e));
  };
  auto dim = [&] { return 1 + static_cast<std::size_t>(rng.uniform(counter++) * 4.0); };

  int failures = 0;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
    if (!ok) ++failures;
  };

  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const GQOParams p(gauss(), gauss(), gauss());
      const auto a = random_matrix(dim(), dim());
      const double direct = operator_norm(assemble(p, a).block, rc.tol);
      const double closed = gqo_norm(p.a, p.b, p.c, 1.0, operator_norm(a, rc.tol)).norm;
      worst = std::max(worst, std::abs(direct - closed) / (1.0 + direct));
    }
    std::ostringstream d;
    d << "max relative error " << worst;
    report("norm-formula", worst <= 1e-8, d.str());
  }
  {
    int mismatches = 0;
    const Complex units[] = {1.0, -1.0, {0.0, 1.0}, {0.6, 0.8}, 2.0, 0.5, 0.0};
    const Complex diag[] = {0.0, 1.0, 2.0, {0.0, 1.0}, {1.0, 1.0}};
    for (auto a : diag)
      for (auto b : diag)
        for (auto c : units) {
          const bool degenerate = classify_degeneracy(a, b, c, rc.tol) != Degeneracy::NonDegenerate;
          if (degenerate != is_normal_sd(a, b, c, rc.tol)) ++mismatches;
        }
    report("degeneracy-normality", mismatches == 0, std::to_string(mismatches) + " mismatches");
  }
  {
    double worst = 0.0;
    int impossible = 0;
    for (int i = 0; i < 50; ++i) {
      const GQOParams p(gauss(), gauss(), i % 2 ? gauss() : std::polar(1.0, std::arg(gauss())));
      const auto a = random_matrix(dim(), dim());
      const auto dec = decompose_gqo(p, rc.tol);
      if (const auto* d = std::get_if<Decomposition>(&dec)) {
        worst = std::max(worst, max_abs_diff(reconstruct(*d, p.c, a).block, assemble(p, a).block));
      } else {
        ++impossible;
      }
    }
    std::ostringstream d;
    d << "max entry error " << worst << ", " << impossible << " impossible";
    report("decomposition", worst <= 1e-12 * 100, d.str());
  }
  {
    const GQOParams p(0.0, 2.0, -1.0);
    const auto region = gqo_numerical_range(
        p, DiagonalSpectrum({0.0, 0.5, 2.0 / 3.0, 0.75}, 1.0, false), rc.tol);
    const bool ok = region.closure == Closure::InteriorPlusAB &&
                    membership(region, 2.0, rc.tol).value == Verdict::OnBoundaryIncluded &&
                    membership(region, {1.0, 1.0}, rc.tol).value == Verdict::OnBoundaryExcluded;
    report("dichotomy", ok, std::string(to_string(region.closure)));
  }
  {
    RunConfig quick = rc;
    quick.samples = std::min<std::size_t>(rc.samples, 2000);
    const GQOParams cases[] = {{0.0, 0.0, 0.0}, {1.0, -1.0, 0.0}, {0.0, 2.0, 1.0}, {0.0, 2.0, -1.0}};
    int failed = 0;
    for (const auto& p : cases) failed += run_verify(p, DenseMatrix{{1.0}}, quick).passed ? 0 : 1;
    report("verify-regression", failed == 0, std::to_string(failed) + " of 4 failed");
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

Complex parse_complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, text), 0.0};
  const std::string_view s(text);
  return {parse_double(s.substr(0, comma), text), parse_double(s.substr(comma + 1), text)};
}

Json analyze_report(const ModelDocument& doc, const ToleranceConfig& cfg) {
  const auto& p = doc.params;
  const auto mn = model_norm(doc.model, cfg);
  const auto nr = gqo_norm(p.a, p.b, p.c, 1.0, mn.value);
  const auto region = gqo_numerical_range(p, doc.model, cfg);
  const bool zero = mn.value == 0.0;
  const bool attains = zero || mn.attained;

  Json norm = to_json(nr);
  norm["norm_a"] = mn.value;

  Json att;
  att["attains"] = attains;
  if (const auto* cm = std::get_if<ConcreteMatrix>(&doc.model)) {
    const auto w = gram_witness(p, cm->matrix, cfg);
    att["case"] = std::string(to_string(w.case_tag));
    att["residual"] = w.residual;
    if (w.witness) att["witness"] = witness_json(*w.witness);
  } else {
    att["case"] = std::string(zero ? to_string(CaseTag::ZeroA) : to_string(classify_case(p, mn.value, cfg)));
  }

  const auto deg = classify_degeneracy(p.a, p.b, p.c, cfg);
  const bool unit_c = approx_equal(std::abs(p.c), 1.0, cfg.eq_tol);
  Json prov;
  if (zero) {
    prov["range"] = "A = 0: closed segment [a, b]";
  } else if (attains) {
    prov["range"] = "norm of A attained: W(T) = W(S_d), d = ||A||";
  } else {
    prov["range"] = "norm of A not attained: W(T) = E_d, d = ||A||";
  }
  prov["degeneracy"] = std::string(to_string(deg));
  prov["union_case"] = union_case(deg, unit_c);
  if (!zero) {
    const auto other = attains ? open_union_region(p.a, p.b, p.c, mn.value, cfg)
                               : closed_region(p.a, p.b, p.c, mn.value, cfg);
    prov[attains ? "non_attained_closure" : "attained_closure"] = std::string(to_string(other.closure));
  }

  Json out;
  out["input"] = to_json(doc);
  out["norm"] = std::move(norm);
  out["attainment"] = std::move(att);
  out["region"] = to_json(region);
  out["provenance"] = std::move(prov);
  out["warnings"] = warnings_for(p, cfg);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms and numerical ranges of generalized quadratic operators", "quadrange"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config (tolerances, seed, angles, samples)");
  std::optional<double> eq_tol, geom_tol;
  app.add_option("--eq-tol", eq_tol, "relative tolerance for equality predicates");
  app.add_option("--geom-tol", geom_tol, "boundary band for membership");

  std::string model_path;
  std::string z_text;
  std::size_t n_points = 256;
  std::optional<std::size_t> samples, angles;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::size_t overlay = 0;

  auto* analyze = app.add_subcommand("analyze", "norm, attainment and numerical range report");
  analyze->add_option("model", model_path)->required();
  auto* member = app.add_subcommand("member", "membership of a point in W(T)");
  member->add_option("model", model_path)->required();
  member->add_option("--z", z_text, "point as re,im")->required();
  auto* boundary = app.add_subcommand("boundary", "CSV of boundary points of W(T)");
  boundary->add_option("model", model_path)->required();
  boundary->add_option("--n", n_points, "number of points")->check(CLI::Range(2, 10000000));
  auto* verify = app.add_subcommand("verify", "check the predicted range against the oracle");
  verify->add_option("model", model_path)->required();
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--angles", angles)->check(CLI::Range(3, 10000000));
  verify->add_option("--seed", seed);
  auto* decompose = app.add_subcommand("decompose", "write T as Q + cQ* + kI if possible");
  decompose->add_option("model", model_path)->required();
  auto* plot = app.add_subcommand("plot", "SVG of W(T)");
  plot->add_option("model", model_path)->required();
  plot->add_option("--out", out_path, "output file")->required();
  plot->add_option("--samples", overlay, "overlay this many Rayleigh samples");
  plot->add_option("--seed", seed);
  auto* self = app.add_subcommand("selftest", "run the built-in invariant checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    RunConfig rc;
    if (config_path.empty()) {
      if (const char* env = std::getenv("QUADRANGE_CONFIG"); env && *env) config_path = env;
    }
    if (!config_path.empty()) {
      try {
        rc = parse_config(read_file(config_path), rc);
      } catch (const Error& e) {
        const std::string msg = e.what();
        throw Error(ErrorKind::InvalidInput,
                    msg.rfind(config_path, 0) == 0 ? msg : config_path + ": " + msg);
      }
    }
    if (eq_tol) rc.tol.eq_tol = *eq_tol;
    if (geom_tol) rc.tol.geom_tol = *geom_tol;
    if (samples) rc.samples = *samples;
    if (angles) rc.angles = *angles;
    if (seed) rc.seed = *seed;
    rc.tol.validate();

    if (*self) return selftest(rc, out);

    const auto doc = load_model(model_path);
    if (*analyze) {
      out << canonical_dump(analyze_report(doc, rc.tol));
    } else if (*member) {
      const Complex z = parse_complex_arg(z_text);
      const auto region = gqo_numerical_range(doc.params, doc.model, rc.tol);
      Json j;
      j["z"] = to_json(z);
      const Json verdict = to_json(membership(region, z, rc.tol));
      for (const auto& [k, v] : verdict.items()) j[k] = v;
      j["region"] = to_json(region);
      out << canonical_dump(j);
    } else if (*boundary) {
      const auto region = gqo_numerical_range(doc.params, doc.model, rc.tol);
      write_csv(out, boundary_points(region, n_points));
    } else if (*verify) {
      const auto outcome = run_verify(doc.params, require_matrix(doc, "verify"), rc);
      out << canonical_dump(verify_json(outcome, rc));
      if (!outcome.passed) {
        err << "verification failed\n";
        return kExitVerifyFailed;
      }
    } else if (*decompose) {
      out << canonical_dump(to_json(decompose_gqo(doc.params, rc.tol)));
    } else if (*plot) {
      const auto region = gqo_numerical_range(doc.params, doc.model, rc.tol);
      std::vector<Complex> cloud;
      if (overlay > 0) {
        cloud = sample_range(assemble(doc.params, doc.model).block, overlay, rc.seed).points;
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidInput, out_path + ": cannot write file");
      file << render_svg(region, doc.params, cloud);
      if (!file) throw Error(ErrorKind::InvalidInput, out_path + ": write failed");
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidInput:
      case ErrorKind::UnsupportedModel:
      case ErrorKind::NotHermitian:
        return kExitBadInput;
      default:
        return kExitVerifyFailed;
    }
  }
}

}  // namespace quadrange
