#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g1k/alexform.hpp"
#include "g1k/invariants.hpp"
#include "g1k/verify.hpp"
#include "surface_input.hpp"

namespace {

using nlohmann::ordered_json;
using namespace g1k;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;

std::string error_name(const error& e) {
  if (dynamic_cast<const not_alexander_form*>(&e)) return "NotAlexanderForm";
  if (dynamic_cast<const not_divisible*>(&e)) return "NotDivisible";
  if (dynamic_cast<const wrong_constant_term*>(&e)) return "WrongConstantTerm";
  if (dynamic_cast<const parity_error*>(&e)) return "ParityError";
  if (dynamic_cast<const bad_symplectic*>(&e)) return "BadSymplectic";
  if (dynamic_cast<const zero_constant_term*>(&e)) return "ZeroConstantTerm";
  if (dynamic_cast<const degenerate_lambda*>(&e)) return "DegenerateLambda";
  if (dynamic_cast<const lattice_mismatch*>(&e)) return "LatticeMismatch";
  return "Error";
}

std::vector<Rational> parse_rational_csv(const std::string& text, std::size_t expected,
                                         const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected) {
    throw error(what + " needs " + std::to_string(expected) + " comma-separated rationals");
  }
  return out;
}

ordered_json series_to_json(const TruncSeries& s, int max_degree) {
  ordered_json parts = ordered_json::array();
  const int top = std::min(max_degree, s.valid_to());
  for (int d = 0; d <= top; ++d) {
    ordered_json monomials = ordered_json::array();
    for (int i = d; i >= 0; --i) {
      const Rational& c = s.coeff(i, d - i);
      if (c == 0) continue;
      monomials.push_back(ordered_json::array({i, d - i, to_string(c)}));
    }
    if (!monomials.empty()) parts.push_back(ordered_json::array({d, monomials}));
  }
  return parts;
}

ordered_json alexander_to_json(const AlexanderPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [half, c] : p.terms()) {
    out.push_back(ordered_json::array({to_string(Rational(half, 2)), to_string(c)}));
  }
  return out;
}

ordered_json seifert_to_json(const SeifertMatrix& v) {
  return ordered_json::array(
      {ordered_json::array({to_string(v.v11), to_string(v.v12)}),
       ordered_json::array({to_string(v.v21), to_string(v.v22)})});
}

std::string seifert_to_text(const SeifertMatrix& v) {
  return "[[" + to_string(v.v11) + ", " + to_string(v.v12) + "], [" + to_string(v.v21) + ", " +
         to_string(v.v22) + "]]";
}

std::string triple_to_text(const SurfaceTriple& t) {
  return "(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.c) + ")";
}

// ---- pretzel ---------------------------------------------------------------

struct PretzelArgs {
  std::string a, b, c;
  std::string lambda_a = "0", lambda_b = "0", lambda_c = "0", lambda_ab = "0";
  bool no_strict = false;
  bool json = false;
};

int run_pretzel(const PretzelArgs& args) {
  SurfaceTriple t(parse_rational(args.a), parse_rational(args.b), parse_rational(args.c),
                  !args.no_strict);
  const CurveLambdas l{parse_rational(args.lambda_a), parse_rational(args.lambda_b),
                       parse_rational(args.lambda_c), parse_rational(args.lambda_ab),
                       Rational(0)};
  const Rational lp = lambda_prime_triple(t);
  const Rational wd = w_del_triple(t);
  const Rational wds = w_del_surface(t, l);
  const Rational wsl_value = w_sl(t, l);
  const Rational w3_value = w3(t, l);
  const SeifertMatrix v = seifert_from_triple(t);
  const AlexanderPoly delta =
      alexander_from_seifert({{v.v11, v.v12}, {v.v21, v.v22}}, 1);

  if (args.json) {
    ordered_json out;
    out["command"] = "pretzel";
    out["abc"] = {to_string(t.a), to_string(t.b), to_string(t.c)};
    out["lambda"] = {{"A", to_string(l.lA)},
                     {"B", to_string(l.lB)},
                     {"C", to_string(l.lC)},
                     {"AB", to_string(l.lAB)}};
    out["lambda_prime"] = to_string(lp);
    out["w_delta_abc"] = to_string(wd);
    out["w_delta_surface"] = to_string(wds);
    out["w_sl"] = to_string(wsl_value);
    out["w3"] = to_string(w3_value);
    out["alexander"] = alexander_to_json(delta);
    out["seifert_matrix"] = seifert_to_json(v);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pretzel knot K" << triple_to_text(t) << "\n"
              << "  lambda'          = " << to_string(lp) << "\n"
              << "  w_delta(a,b,c)   = " << to_string(wd) << "\n"
              << "  w_delta(Sigma)   = " << to_string(wds) << "\n"
              << "  w_SL             = " << to_string(wsl_value) << "\n"
              << "  w_3              = " << to_string(w3_value) << "\n"
              << "  Delta(t)         = " << delta.to_string() << "\n"
              << "  Seifert matrix   = " << seifert_to_text(v) << "\n";
  }
  return kExitOk;
}

// ---- seifert ---------------------------------------------------------------

struct SeifertArgs {
  std::string matrix;
  long long h1 = 1;
  bool json = false;
};

int run_seifert(const SeifertArgs& args) {
  const std::vector<Rational> entries = parse_rational_csv(args.matrix, 4, "--matrix");
  const SeifertMatrix v{entries[0], entries[1], entries[2], entries[3]};
  const SurfaceTriple t = triple_from_seifert(v);
  const Rational lp = lambda_prime_triple(t);
  const AlexanderPoly delta =
      alexander_from_seifert({{v.v11, v.v12}, {v.v21, v.v22}}, args.h1);

  if (args.json) {
    ordered_json out;
    out["command"] = "seifert";
    out["seifert_matrix"] = seifert_to_json(v);
    out["h1"] = args.h1;
    out["abc"] = {to_string(t.a), to_string(t.b), to_string(t.c)};
    out["lambda_prime"] = to_string(lp);
    out["alexander"] = alexander_to_json(delta);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Seifert matrix " << seifert_to_text(v) << "\n"
              << "  triple (a,b,c) = " << triple_to_text(t) << "\n"
              << "  lambda'        = " << to_string(lp) << "\n"
              << "  Delta(t)       = " << delta.to_string() << "\n";
  }
  return kExitOk;
}

// ---- series ----------------------------------------------------------------

struct SeriesArgs {
  std::string abc;
  int degree = 8;
  bool no_strict = false;
  bool json = false;
};

int run_series(const SeriesArgs& args) {
  const std::vector<Rational> entries = parse_rational_csv(args.abc, 3, "--abc");
  const SurfaceTriple t(entries[0], entries[1], entries[2], !args.no_strict);
  const TruncSeries d = d_abc(t, args.degree);
  if (args.json) {
    ordered_json out;
    out["command"] = "series";
    out["abc"] = {to_string(t.a), to_string(t.b), to_string(t.c)};
    out["degree"] = args.degree;
    out["series"] = series_to_json(d, args.degree);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << d.to_string() << "\n";
  }
  return kExitOk;
}

// ---- surface ---------------------------------------------------------------

struct SurfaceArgs {
  std::string input;
  int degree = -1;  // -1: full validity
  bool json = false;
};

int run_surface(const SurfaceArgs& args) {
  std::ifstream file(args.input);
  if (!file) throw error("cannot open input file '" + args.input + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const tools::SurfaceInput input = tools::parse_surface_input(buffer.str());
  const AlexFormData& d = input.data;
  const SurfaceTriple& t = input.triple;

  const AlexSeries a = build_alexander_series(d);
  const TruncSeries gamma = gamma_from_series(a);
  const TruncSeries delta = delta_ab(a);
  const TruncSeries ds = d_sigma(a, t);
  const QuadForm ds2 = quadform_from_series(ds);
  const Rational ws_d2 = w_s_eval(ds2, t);
  const CurveLambdas l{d.lA, d.lB, d.lC, d.lE, d.ell};
  const Rational wsl_value = w_sl(t, l);
  const Rational wds = w_del_surface(t, l);
  const Rational w3_value = w3(t, l);

  std::vector<std::pair<int, Rational>> pairings;  // (2k, W_{s,2k})
  for (int k = 1; 2 * k <= std::min(4, ds.valid_to()); ++k) {
    pairings.emplace_back(2 * k, w_s_2k(degree_part(ds, 2 * k), t, k));
  }

  const int shown = args.degree >= 0 ? args.degree : a.series.valid_to();
  auto clamp = [&](const TruncSeries& s) { return std::min(shown, s.valid_to()); };

  if (args.json) {
    ordered_json out;
    out["command"] = "surface";
    out["h1"] = d.h1;
    out["abc"] = {to_string(t.a), to_string(t.b), to_string(t.c)};
    out["ell"] = to_string(d.ell);
    out["lambda"] = {{"A", to_string(d.lA)},
                     {"B", to_string(d.lB)},
                     {"C", to_string(d.lC)},
                     {"E", to_string(d.lE)}};
    out["alex_series"] = series_to_json(a.series, clamp(a.series));
    out["gamma"] = series_to_json(gamma, clamp(gamma));
    out["delta_ab"] = series_to_json(delta, clamp(delta));
    out["d_sigma"] = series_to_json(ds, clamp(ds));
    out["d_sigma_degree2"] = series_to_json(quadform_to_series(ds2, 2), 2);
    out["ws_d2"] = to_string(ws_d2);
    ordered_json pj;
    for (const auto& [two_k, value] : pairings) pj[std::to_string(two_k)] = to_string(value);
    out["ws_2k"] = pj;
    out["w_sl"] = to_string(wsl_value);
    out["w_delta_surface"] = to_string(wds);
    out["w3"] = to_string(w3_value);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "surface report: h1 = " << d.h1 << ", (a,b,c) = " << triple_to_text(t)
              << ", ell = " << to_string(d.ell) << "\n"
              << "  A(ua,ub)        = " << a.series.truncated(clamp(a.series)).to_string() << "\n"
              << "  Gamma           = " << gamma.truncated(clamp(gamma)).to_string() << "\n"
              << "  Delta(A,B)      = " << delta.truncated(clamp(delta)).to_string() << "\n"
              << "  D(Sigma)        = " << ds.truncated(clamp(ds)).to_string() << "\n"
              << "  D_2(Sigma)      = " << ds2.to_string() << "\n"
              << "  W_s(D_2)        = " << to_string(ws_d2) << "\n";
    for (const auto& [two_k, value] : pairings) {
      std::cout << "  W_{s," << two_k << "}         = " << to_string(value) << "\n";
    }
    std::cout << "  w_SL            = " << to_string(wsl_value) << "\n"
              << "  w_delta(Sigma)  = " << to_string(wds) << "\n"
              << "  w_3             = " << to_string(w3_value) << "\n";
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 0;
  int trials = 50;
  int degree = 8;
  int range = 5;
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.trials < 1 || args.degree < 6 || args.range < 1) {
    std::cerr << "error: verify needs --trials >= 1, --degree >= 6 and --range >= 1\n";
    return kExitUsage;
  }
  const VerifyOptions options{args.seed, args.trials, args.degree, args.range, args.inject_fault};
  const std::vector<CheckResult> results = run_all_checks(options);
  long long total_cases = 0;
  bool all_passed = true;
  for (const CheckResult& r : results) {
    total_cases += r.cases;
    if (r.passed) {
      std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
      all_passed = false;
      std::cout << "FAIL " << r.name << ": first counterexample: " << r.failure << "\n";
    }
  }
  if (all_passed) {
    std::cout << "all " << results.size() << " identity suites passed (" << total_cases
              << " cases)\n";
    return kExitOk;
  }
  return kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of genus one knots and Seifert surfaces"};
  app.require_subcommand(1);

  PretzelArgs pretzel_args;
  CLI::App* pretzel = app.add_subcommand(
      "pretzel", "invariant report for the pretzel knot K(a,b,c)");
  pretzel->add_option("a", pretzel_args.a, "first framing")->required();
  pretzel->add_option("b", pretzel_args.b, "second framing")->required();
  pretzel->add_option("c", pretzel_args.c, "third framing")->required();
  pretzel->add_option("--lambda-a", pretzel_args.lambda_a, "lambda' of the curve alpha");
  pretzel->add_option("--lambda-b", pretzel_args.lambda_b, "lambda' of the curve beta");
  pretzel->add_option("--lambda-c", pretzel_args.lambda_c, "lambda' of the curve gamma");
  pretzel->add_option("--lambda-ab", pretzel_args.lambda_ab, "Sato-Levine pairing lambda'(A,B)");
  pretzel->add_flag("--no-strict", pretzel_args.no_strict, "allow rational framings");
  pretzel->add_flag("--json", pretzel_args.json, "machine-readable output");

  SeifertArgs seifert_args;
  CLI::App* seifert = app.add_subcommand("seifert", "invariants of a genus one Seifert matrix");
  seifert->add_option("--matrix", seifert_args.matrix, "entries v11,v12,v21,v22")->required();
  seifert->add_option("--h1", seifert_args.h1, "|H1| of the ambient manifold")
      ->check(CLI::PositiveNumber);
  seifert->add_flag("--json", seifert_args.json, "machine-readable output");

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand("series", "the Alexander series D(a,b,c)");
  series->add_option("--abc", series_args.abc, "framings a,b,c")->required();
  series->add_option("--degree", series_args.degree, "truncation degree")
      ->check(CLI::NonNegativeNumber);
  series->add_flag("--no-strict", series_args.no_strict, "allow rational framings");
  series->add_flag("--json", series_args.json, "machine-readable output");

  SurfaceArgs surface_args;
  CLI::App* surface = app.add_subcommand("surface", "full report from a JSON surface document");
  surface->add_option("--input", surface_args.input, "path to the JSON document")->required();
  surface->add_option("--degree", surface_args.degree, "maximum printed degree");
  surface->add_flag("--json", surface_args.json, "machine-readable output");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--trials", verify_args.trials, "number of random data records");
  verify->add_option("--degree", verify_args.degree, "series truncation degree");
  verify->add_option("--range", verify_args.range, "odd triples range [-R, R]");
  verify->add_flag("--inject-fault", verify_args.inject_fault, "")->group("");  // hidden hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(pretzel)) return run_pretzel(pretzel_args);
    if (app.got_subcommand(seifert)) return run_seifert(seifert_args);
    if (app.got_subcommand(series)) return run_series(series_args);
    if (app.got_subcommand(surface)) return run_surface(surface_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
  } catch (const error& e) {
    std::cerr << "error: " << error_name(e) << ": " << e.what() << "\n";
    // structurally broken documents fail the contract with exit 3; anything
    // an argument list can get wrong (parse, parity, symplectic) is usage
    const bool invalid_input =
        dynamic_cast<const not_alexander_form*>(&e) != nullptr ||
        dynamic_cast<const not_divisible*>(&e) != nullptr ||
        dynamic_cast<const wrong_constant_term*>(&e) != nullptr ||
        dynamic_cast<const zero_constant_term*>(&e) != nullptr ||
        (app.got_subcommand(surface) && dynamic_cast<const parity_error*>(&e) != nullptr);
    return invalid_input ? kExitInvalidInput : kExitUsage;
  }
  return kExitUsage;
}
