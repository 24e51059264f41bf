// Command-line front end: evaluate the special functions, run the
// transformation-formula checkers, and stream parameter sweeps as CSV.
//
// Exit codes: 0 success (and, for `check`, residual within tolerance),
// 1 argument/usage errors, 2 evaluator failures (a partial result is
// printed when one exists), 3 residual above tolerance.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzw/bessel.hpp"
#include "kzw/erf.hpp"
#include "kzw/errors.hpp"
#include "kzw/humbert.hpp"
#include "kzw/hypergeometric.hpp"
#include "kzw/identities.hpp"
#include "kzw/voigt.hpp"
#include "kzw/zeta.hpp"

namespace {

using kzw::Complex;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& name) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
    throw UsageError("--" + name + ": expected a real number, got '" + text +
                     "'");
  return v;
}

long parse_nonneg_int(const std::string& text, const std::string& name) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || v < 0)
    throw UsageError("--" + name + ": expected a nonnegative integer, got '" +
                     text + "'");
  return v;
}

// Complex literals come as a single token: "0.5", "0.5+0.25i", "-1.5i", "i".
Complex parse_complex(const std::string& text, const std::string& name) {
  if (text.empty())
    throw UsageError("--" + name + ": empty complex literal");
  if (text.back() != 'i') return {parse_real(text, name), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last +/- that is neither leading nor an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E')
      split = i;
  }
  auto imag_token = [&](const std::string& tok) -> double {
    if (tok.empty() || tok == "+") return 1.0;
    if (tok == "-") return -1.0;
    return parse_real(tok, name);
  };
  if (split == std::string::npos) return {0.0, imag_token(body)};
  return {parse_real(body.substr(0, split), name),
          imag_token(body.substr(split))};
}

struct Grid {
  double start, stop, step;

  // Endpoints inclusive within 1e-12, values recomputed (not accumulated)
  // so row grids are reproducible.
  std::vector<double> points() const {
    std::vector<double> out;
    const double slack =
        1e-12 * std::max(1.0, std::abs(stop)) + 1e-12 * std::abs(step);
    for (long i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (step > 0 ? v > stop + slack : v < stop - slack) break;
      out.push_back(v);
      if (out.size() > 1000000) throw UsageError("sweep grid too large");
    }
    return out;
  }
};

std::optional<Grid> try_parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw UsageError("grid must be start:stop:step, got '" + text + "'");
  Grid g;
  g.start = parse_real(text.substr(0, c1), "sweep");
  g.stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "sweep");
  g.step = parse_real(text.substr(c2 + 1), "sweep");
  if (g.step == 0.0) throw UsageError("grid step must be nonzero");
  if ((g.stop - g.start) * g.step < 0.0)
    throw UsageError("grid step points away from stop");
  return g;
}

// Raw string-valued parameters collected from the command line.
struct Params {
  std::map<std::string, std::string> values;

  bool has(const std::string& k) const { return values.count(k) != 0; }
  const std::string& raw(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw UsageError("missing required option --" + k);
    return it->second;
  }
  Complex cplx(const std::string& k) const { return parse_complex(raw(k), k); }
  double real(const std::string& k) const { return parse_real(raw(k), k); }
  long nonneg(const std::string& k) const { return parse_nonneg_int(raw(k), k); }
};

kzw::EvalResult wrap_closed_form(const Complex& v) {
  kzw::EvalResult r;
  r.value = v;
  r.abs_err = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
  r.terms_used = 1;
  r.converged = true;
  return r;
}

kzw::ContourSpec contour_spec_from(const Params& p, const Complex& z,
                                   const kzw::ToleranceConfig& tol) {
  kzw::ContourSpec spec = kzw::ContourSpec::for_order(z, tol);
  if (p.has("abscissa")) spec.abscissa_c = p.real("abscissa");
  if (p.has("tmax")) spec.t_max = p.real("tmax");
  return spec;
}

const std::vector<std::string> kEvalTargets = {
    "kzw_contour", "khalf_series", "kzw_asymptotic", "phi3", "hyp1f1",
    "hyp2f2", "voigt_profile", "voigt_cdf", "faddeeva", "zeta", "erf",
    "erfi", "laguerre"};

kzw::EvalResult run_one_eval(const std::string& target, const Params& p,
                             const kzw::ToleranceConfig& tol) {
  if (target == "kzw_contour") {
    const Complex z = p.cplx("z");
    return kzw::kzw_contour({z, p.cplx("w"), p.cplx("x")},
                            contour_spec_from(p, z, tol), tol);
  }
  if (target == "khalf_series")
    return kzw::khalf_series(p.cplx("w"), p.cplx("x"), tol);
  if (target == "kzw_asymptotic")
    return wrap_closed_form(
        kzw::kzw_asymptotic({p.cplx("z"), p.cplx("w"), p.cplx("x")}));
  if (target == "phi3")
    return kzw::phi3(p.cplx("a"), p.cplx("c"), p.cplx("x"), p.cplx("y"), tol);
  if (target == "hyp1f1")
    return kzw::hyp1f1(p.cplx("a"), p.cplx("c"), p.cplx("z"), tol);
  if (target == "hyp2f2")
    return kzw::hyp2f2(p.cplx("a1"), p.cplx("a2"), p.cplx("c1"), p.cplx("c2"),
                       p.cplx("z"), tol);
  if (target == "voigt_profile")
    return wrap_closed_form(Complex(
        kzw::voigt_profile(p.real("x"),
                           kzw::VoigtParams(p.real("sigma"), p.real("beta"))),
        0.0));
  if (target == "voigt_cdf") {
    const kzw::VoigtParams vp(p.real("sigma"), p.real("beta"));
    const double x0 = p.real("x0");
    kzw::EvalResult r = kzw::voigt_cdf_eval(x0, vp, tol);
    r.value = Complex(kzw::voigt_cdf(x0, vp, tol), 0.0); // clamped value
    return r;
  }
  if (target == "faddeeva") return wrap_closed_form(kzw::faddeeva(p.cplx("y")));
  if (target == "zeta") return wrap_closed_form(kzw::zeta(p.cplx("s")));
  if (target == "erf") return wrap_closed_form(kzw::erf(p.cplx("w")));
  if (target == "erfi") return wrap_closed_form(kzw::erfi(p.cplx("w")));
  if (target == "laguerre")
    return wrap_closed_form(
        kzw::laguerre(p.nonneg("n"), p.cplx("alpha"), p.cplx("x")));
  throw UsageError("unknown eval target '" + target + "'");
}

void print_eval(const kzw::EvalResult& r, const std::string& output) {
  if (output == "json") {
    nlohmann::json j;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["abs_err"] = r.abs_err;
    j["terms_used"] = r.terms_used;
    j["converged"] = r.converged;
    std::printf("%s\n", j.dump().c_str());
  } else if (output == "csv") {
    std::printf("value_re,value_im,abs_err,terms\n");
    std::printf("%.17g,%.17g,%.17g,%ld\n", r.value.real(), r.value.imag(),
                r.abs_err, r.terms_used);
  } else {
    std::printf("value_re  = %.17g\n", r.value.real());
    std::printf("value_im  = %.17g\n", r.value.imag());
    std::printf("abs_err   = %.17g\n", r.abs_err);
    std::printf("terms     = %ld\n", r.terms_used);
    std::printf("converged = %s\n", r.converged ? "yes" : "no");
  }
}

void print_report(const kzw::IdentityReport& rep, const std::string& output) {
  if (output == "json") {
    std::printf("%s\n", kzw::to_json(rep).c_str());
  } else {
    std::printf("lhs_re       = %.17g\n", rep.lhs.real());
    std::printf("lhs_im       = %.17g\n", rep.lhs.imag());
    std::printf("rhs_re       = %.17g\n", rep.rhs.real());
    std::printf("rhs_im       = %.17g\n", rep.rhs.imag());
    std::printf("abs_residual = %.17g\n", rep.abs_residual);
    std::printf("rel_residual = %.17g\n", rep.rel_residual);
    std::printf("n_terms_lhs  = %ld\n", rep.n_terms_lhs);
    std::printf("pass         = %s\n", rep.pass ? "yes" : "no");
  }
}

// (a, b) with a b = pi^2: either may be derived from the other. Inputs
// within 1e-6 of the constraint are snapped onto it (covers truncated
// decimal literals); anything farther off is a genuine error.
kzw::ModularPair modular_pair_from(const Params& p) {
  const double pi2 = kzw::pi * kzw::pi;
  const bool has_a = p.has("a"), has_b = p.has("b");
  if (!has_a && !has_b) throw UsageError("need --a and/or --b");
  const double a = has_a ? p.real("a") : pi2 / p.real("b");
  double b = has_b ? p.real("b") : pi2 / a;
  if (has_a && has_b && a > 0.0 && std::abs(a * b - pi2) <= 1e-6 * pi2)
    b = pi2 / a;
  return kzw::ModularPair(a, b);
}

double require_real_w(const Params& p) {
  const Complex w = p.cplx("w");
  if (w.imag() != 0.0)
    throw kzw::DomainError("generalized_eta: w must be real");
  return w.real();
}

const std::vector<std::string> kCheckTargets = {
    "ramanujan_guinand", "generalized_ramanujan_guinand", "eta",
    "generalized_eta", "lemma21", "theorem12"};

kzw::IdentityReport run_one_check(const std::string& target, const Params& p,
                                  const kzw::ToleranceConfig& tol) {
  if (target == "ramanujan_guinand")
    return kzw::check_ramanujan_guinand(p.cplx("z"), modular_pair_from(p), tol);
  if (target == "generalized_ramanujan_guinand")
    return kzw::check_generalized_ramanujan_guinand(
        p.cplx("z"), p.cplx("w"), modular_pair_from(p), tol);
  if (target == "eta")
    return kzw::check_eta_transformation(modular_pair_from(p), tol);
  if (target == "generalized_eta")
    return kzw::check_generalized_eta(require_real_w(p), modular_pair_from(p),
                                      tol);
  if (target == "lemma21") {
    kzw::ToleranceConfig inner = tol;
    inner.rel_tol = std::min(tol.rel_tol, 1e-10);
    kzw::ContourSpec spec;
    spec.abscissa_c = p.has("abscissa") ? p.real("abscissa") : 0.75;
    spec.t_max = tol.max_contour_height;
    spec.quad_rel_tol = inner.rel_tol;
    kzw::IdentityReport rep =
        kzw::inverse_mellin_lemma(p.nonneg("n"), p.cplx("x"), spec, inner);
    rep.pass = rep.rel_residual <= tol.rel_tol;
    return rep;
  }
  if (target == "theorem12") {
    const Complex w = p.cplx("w"), x = p.cplx("x");
    kzw::ToleranceConfig inner = tol;
    inner.rel_tol = std::min(tol.rel_tol, 1e-10);
    const kzw::EvalResult lhs = kzw::kzw_contour(
        {Complex(0.5, 0.0), w, x},
        kzw::ContourSpec::for_order(Complex(0.5, 0.0), inner), inner);
    const kzw::EvalResult rhs = kzw::khalf_series(w, x, inner);
    return kzw::make_report(lhs.value, rhs.value, lhs.terms_used, tol.rel_tol);
  }
  throw UsageError("unknown check target '" + target + "'");
}

int run_sweep(const std::string& target, Params p,
              const kzw::ToleranceConfig& tol) {
  // Exactly one parameter carries a start:stop:step grid.
  std::string grid_key;
  std::optional<Grid> grid;
  for (const auto& [k, v] : p.values) {
    if (k == "abscissa" || k == "tmax") continue;
    auto g = try_parse_grid(v);
    if (!g) continue;
    if (grid) throw UsageError("only one swept parameter is allowed");
    grid_key = k;
    grid = g;
  }
  if (!grid) throw UsageError("sweep needs one parameter as start:stop:step");

  std::printf("param,value_re,value_im,abs_err,terms\n");
  bool any_failed = false;
  char buf[64];
  for (const double v : grid->points()) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    p.values[grid_key] = buf;
    try {
      const kzw::EvalResult r = run_one_eval(target, p, tol);
      std::printf("%.17g,%.17g,%.17g,%.17g,%ld\n", v, r.value.real(),
                  r.value.imag(), r.abs_err, r.terms_used);
    } catch (const UsageError&) {
      throw; // malformed invocation, not a per-row failure
    } catch (const kzw::Error&) {
      any_failed = true;
      std::printf("%.17g,NaN,NaN,NaN,NaN\n", v);
    }
  }
  return any_failed ? 2 : 0;
}

void apply_env_max_terms(kzw::ToleranceConfig& tol) {
  const char* env = std::getenv("KZW_MAX_TERMS");
  if (env == nullptr) return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    std::fprintf(stderr, "warning: ignoring invalid KZW_MAX_TERMS='%s'\n", env);
    return;
  }
  tol.max_terms = v;
}

void add_param_options(CLI::App* cmd, Params& params,
                       const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    cmd->add_option_function<std::string>(
        "--" + name,
        [&params, name](const std::string& v) { params.values[name] = v; });
  }
}

const std::vector<std::string> kEvalParamNames = {
    "z", "w", "x", "y", "a", "c", "a1", "a2", "c1", "c2",
    "s", "n", "alpha", "sigma", "beta", "x0", "abscissa", "tmax"};
const std::vector<std::string> kCheckParamNames = {"z", "w", "x", "a",
                                                   "b", "n", "abscissa"};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized modified Bessel function K_{z,w}(x): evaluators, "
               "transformation-formula checks, parameter sweeps"};
  app.require_subcommand(1);

  std::string target, output = "plain";
  double tol_opt = -1.0;
  Params params;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("target", target,
                   "one of: " + CLI::detail::join(kEvalTargets))
      ->required();
  add_param_options(eval, params, kEvalParamNames);
  eval->add_option("--tol", tol_opt, "relative tolerance (default 1e-10)");
  eval->add_option("--output", output, "plain|json|csv");

  CLI::App* check = app.add_subcommand("check", "verify an identity");
  check->add_option("target", target,
                    "one of: " + CLI::detail::join(kCheckTargets))
      ->required();
  add_param_options(check, params, kCheckParamNames);
  check->add_option("--tol", tol_opt, "pass threshold (default 1e-8)");
  check->add_option("--output", output, "plain|json");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV over a parameter grid");
  sweep->add_option("target", target,
                    "eval target; one parameter as start:stop:step")
      ->required();
  add_param_options(sweep, params, kEvalParamNames);
  sweep->add_option("--tol", tol_opt, "relative tolerance (default 1e-10)");

  CLI::App* lemma = app.add_subcommand(
      "lemma", "inverse-Mellin identity check (same as `check lemma21`)");
  add_param_options(lemma, params, kCheckParamNames);
  lemma->add_option("--tol", tol_opt, "pass threshold (default 1e-8)");
  lemma->add_option("--output", output, "plain|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    std::fprintf(stderr, "usage: kzw {eval|check|sweep|lemma} <target> "
                         "[--param value ...]\n");
    return 1;
  }

  try {
    if (output != "plain" && output != "json" && output != "csv")
      throw UsageError("--output must be plain, json or csv");

    kzw::ToleranceConfig tol;
    apply_env_max_terms(tol);

    if (eval->parsed()) {
      tol.rel_tol = tol_opt > 0 ? tol_opt : 1e-10;
      const kzw::EvalResult r = run_one_eval(target, params, tol);
      print_eval(r, output);
      return r.converged ? 0 : 2;
    }
    if (check->parsed() || lemma->parsed()) {
      tol.rel_tol = tol_opt > 0 ? tol_opt : 1e-8;
      const std::string t = lemma->parsed() ? "lemma21" : target;
      const kzw::IdentityReport rep = run_one_check(t, params, tol);
      print_report(rep, output);
      return rep.pass ? 0 : 3;
    }
    if (sweep->parsed()) {
      tol.rel_tol = tol_opt > 0 ? tol_opt : 1e-10;
      return run_sweep(target, params, tol);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const kzw::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    std::fprintf(stderr, "partial result:\n");
    print_eval(e.partial(), output == "csv" ? "plain" : output);
    return 2;
  } catch (const kzw::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
