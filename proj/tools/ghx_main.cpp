#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ghx/errors.hpp"
#include "ghx/garding.hpp"
#include "ghx/herm.hpp"
#include "ghx/hodge.hpp"
#include "ghx/io.hpp"
#include "ghx/parallel.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"
#include "ghx/selftest.hpp"
#include "ghx/sympoly.hpp"
#include "ghx/torus.hpp"

namespace {

using ghx::CounterRng;
using ghx::FormField;
using ghx::HermitianForm;
using ghx::Json;
using ghx::MetricPencil;
using ghx::MixedContext;
using ghx::ScalarField;
using ghx::TorusContext;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

/// Writes the report to --json-out when given, otherwise to stdout.
int finish(const Json& report, const std::string& json_out, int code) {
  const std::string text = ghx::dump_json17(report) + "\n";
  if (json_out.empty())
    std::cout << text;
  else
    ghx::write_text_file(json_out, text);
  return code;
}

Json header(const char* command, const char* mode) {
  Json j;
  j["schema"] = "ghx/1";
  j["command"] = command;
  j["mode"] = mode;
  return j;
}

MetricPencil load_metric(const std::string& path, int n) {
  if (path.empty()) return MetricPencil::standard(n);
  return MetricPencil(ghx::parse_matrix_file(path));
}

std::vector<HermitianForm> load_all(const std::vector<std::string>& paths) {
  std::vector<HermitianForm> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(ghx::parse_matrix_file(p));
  return out;
}

Json texts_of(const std::vector<HermitianForm>& forms) {
  Json arr = Json::array();
  for (const auto& f : forms) arr.push_back(ghx::format_matrix(f));
  return arr;
}

int default_grid(int n) { return n <= 2 ? 32 : 8; }

// ---------------------------------------------------------------------------

int run_cone(const std::string& file, const std::string& metric, int m, double tol,
             const std::string& json_out) {
  const HermitianForm A = ghx::parse_matrix_file(file);
  const MetricPencil G = load_metric(metric, A.dim());
  if (G.dim() != A.dim()) throw ghx::ContractViolation("metric dimension mismatch");
  if (m < 1 || m > A.dim()) throw ghx::ContractViolation("need 1 <= m <= n");

  const auto gamma = ghx::in_gamma_m(A, G, m, tol);
  const auto cone = ghx::in_cone(MixedContext(m, G), G.form(), A, tol);

  Json rep = header("cone", "single");
  rep["n"] = A.dim();
  rep["m"] = m;
  rep["tol"] = tol;
  rep["input"] = ghx::format_matrix(A);
  rep["sigmas"] = gamma.sigmas;
  rep["margins"] = gamma.margins;
  rep["member"] = gamma.member;
  rep["roots"] = cone.roots;
  rep["root_margin"] = cone.margin;
  return finish(rep, json_out, gamma.member ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------

int run_garding_single(const std::vector<std::string>& files, const std::string& metric,
                       double tol, const std::string& json_out) {
  const std::vector<HermitianForm> args = load_all(files);
  const MetricPencil G = load_metric(metric, args.at(0).dim());
  const auto r = ghx::garding_gap(args, G, tol);
  const bool violation = r.gap < -1e-9 * r.rhs;

  Json rep = header("garding", "single");
  rep["n"] = args[0].dim();
  rep["m"] = int(args.size());
  rep["tol"] = tol;
  rep["inputs"] = texts_of(args);
  rep["lhs"] = r.lhs;
  rep["rhs"] = r.rhs;
  rep["gap"] = r.gap;
  rep["equality"] = r.equality;
  Json pw = Json::array();
  for (const auto& c : r.pairwise) {
    if (c.has_value())
      pw.push_back(*c);
    else
      pw.push_back(nullptr);
  }
  rep["pairwise"] = pw;
  rep["violation"] = violation;
  return finish(rep, json_out, violation ? kExitViolation : kExitOk);
}

int run_garding_campaign(int n, int m, int samples, std::uint64_t seed, double tol,
                         const std::string& json_out) {
  const MetricPencil G = MetricPencil::standard(n);
  std::vector<double> gaps(std::size_t(samples), 0.0), rhss(std::size_t(samples), 0.0);
  ghx::parallel_for(std::size_t(samples), [&](std::size_t i) {
    CounterRng rng = CounterRng::stream(seed, i);
    std::vector<HermitianForm> args;
    for (int j = 0; j < m; ++j) args.push_back(ghx::sample_gamma_m(G, m, rng));
    const auto r = ghx::garding_gap(args, G, tol);
    gaps[i] = r.gap;
    rhss[i] = r.rhs;
  });

  double worst = std::numeric_limits<double>::infinity();
  Json violations = Json::array();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const double rel = gaps[i] / rhss[i];
    worst = std::min(worst, rel);
    if (gaps[i] < -1e-9 * rhss[i]) {
      CounterRng rng = CounterRng::stream(seed, i);
      std::vector<HermitianForm> args;
      for (int j = 0; j < m; ++j) args.push_back(ghx::sample_gamma_m(G, m, rng));
      Json v;
      v["sample"] = std::uint64_t(i);
      v["gap"] = gaps[i];
      v["rhs"] = rhss[i];
      v["inputs"] = texts_of(args);
      v["reproduce"] = "write each entry of `inputs` to a file and run: ghx garding FILES";
      violations.push_back(v);
    }
  }

  Json rep = header("garding", "campaign");
  rep["n"] = n;
  rep["m"] = m;
  rep["samples"] = samples;
  rep["seed"] = seed;
  rep["tol"] = tol;
  rep["violation_count"] = violations.size();
  rep["worst_relative_gap"] = worst;
  rep["violations"] = violations;
  return finish(rep, json_out, violations.empty() ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------

Json theorem_a_json(const ghx::TheoremAReport& r) {
  Json j;
  j["signature"] = {r.quadratic.signature.n_plus, r.quadratic.signature.n_zero,
                    r.quadratic.signature.n_minus};
  j["indeterminate"] = r.quadratic.signature.indeterminate;
  j["restricted_spectrum"] = r.restricted_spectrum;
  j["q_alpha"] = r.q_alpha;
  j["decomposition_constant"] = r.decomposition_constant;
  j["decomposition_residual"] = r.decomposition_residual;
  j["min_abs_eig"] = r.min_abs_eig;
  j["spectral_scale"] = r.spectral_scale;
  Json v;
  v["hyperbolic"] = r.hyperbolic;
  v["primitive_negative"] = r.primitive_negative;
  v["decomposition_ok"] = r.decomposition_ok;
  v["nonsingular"] = r.nonsingular;
  j["verdicts"] = v;
  return j;
}

bool theorem_a_ok(const ghx::TheoremAReport& r) {
  return r.hyperbolic && r.primitive_negative && r.decomposition_ok && r.nonsingular;
}

int run_hodge_single(const std::vector<std::string>& files, const std::string& metric,
                     double tol, const std::string& json_out) {
  const std::vector<HermitianForm> alphas = load_all(files);
  const MetricPencil G = load_metric(metric, alphas.at(0).dim());
  const auto r = ghx::verify_theorem_a(alphas, G, std::nullopt, tol);

  Json rep = header("hodge", "single");
  rep["n"] = r.n;
  rep["m"] = r.m;
  rep["tol"] = tol;
  rep["inputs"] = texts_of(alphas);
  rep.update(theorem_a_json(r));
  const bool ok = theorem_a_ok(r);
  rep["violation"] = !ok;
  return finish(rep, json_out, ok ? kExitOk : kExitViolation);
}

int run_hodge_campaign(int n, int m, int samples, std::uint64_t seed, double tol,
                       const std::string& json_out) {
  if (m < 2) throw ghx::ContractViolation("hodge campaign needs m >= 2");
  const MetricPencil G = MetricPencil::standard(n);
  struct Slot {
    double max_restricted = 0.0;
    double min_abs = 0.0;
    double resid = 0.0;
    bool ok = false;
  };
  auto slots = std::vector<Slot>(std::size_t(samples));
  ghx::parallel_for(std::size_t(samples), [&](std::size_t i) {
    CounterRng rng = CounterRng::stream(seed, i);
    std::vector<HermitianForm> alphas;
    for (int j = 0; j < m - 1; ++j) alphas.push_back(ghx::sample_gamma_m(G, m, rng));
    const auto r = ghx::verify_theorem_a(alphas, G, std::nullopt, tol);
    slots[i] = Slot{r.restricted_spectrum.back() / r.spectral_scale,
                    r.min_abs_eig / r.spectral_scale, r.decomposition_residual,
                    theorem_a_ok(r)};
  });

  double worst_restricted = -std::numeric_limits<double>::infinity();
  double worst_min_abs = std::numeric_limits<double>::infinity();
  double worst_resid = 0.0;
  Json violations = Json::array();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    worst_restricted = std::max(worst_restricted, slots[i].max_restricted);
    worst_min_abs = std::min(worst_min_abs, slots[i].min_abs);
    worst_resid = std::max(worst_resid, slots[i].resid);
    if (!slots[i].ok) {
      CounterRng rng = CounterRng::stream(seed, i);
      std::vector<HermitianForm> alphas;
      for (int j = 0; j < m - 1; ++j) alphas.push_back(ghx::sample_gamma_m(G, m, rng));
      Json v;
      v["sample"] = std::uint64_t(i);
      v["inputs"] = texts_of(alphas);
      v["reproduce"] = "write each entry of `inputs` to a file and run: ghx hodge FILES";
      violations.push_back(v);
    }
  }

  Json rep = header("hodge", "campaign");
  rep["n"] = n;
  rep["m"] = m;
  rep["samples"] = samples;
  rep["seed"] = seed;
  rep["tol"] = tol;
  rep["violation_count"] = violations.size();
  rep["worst_restricted_eig_rel"] = worst_restricted;
  rep["worst_min_abs_eig_rel"] = worst_min_abs;
  rep["worst_decomposition_residual"] = worst_resid;
  rep["violations"] = violations;
  return finish(rep, json_out, violations.empty() ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------

int run_logconcavity_single(const std::string& alpha_file, const std::string& beta_file,
                            int m, const std::string& metric, double tol,
                            const std::string& json_out) {
  const HermitianForm alpha = ghx::parse_matrix_file(alpha_file);
  const HermitianForm beta = ghx::parse_matrix_file(beta_file);
  const MetricPencil G = load_metric(metric, alpha.dim());
  const auto r = ghx::log_concavity(alpha, beta, G, m, tol);

  bool all_ok = true;
  for (bool ok : r.ok) all_ok = all_ok && ok;
  Json rep = header("logconcavity", "single");
  rep["n"] = alpha.dim();
  rep["m"] = m;
  rep["tol"] = tol;
  rep["alpha"] = ghx::format_matrix(alpha);
  rep["beta"] = ghx::format_matrix(beta);
  rep["a"] = r.a;
  rep["ok"] = r.ok;
  rep["equality"] = r.equality;
  if (r.proportional_c.has_value())
    rep["proportional_c"] = *r.proportional_c;
  else
    rep["proportional_c"] = nullptr;
  rep["violation"] = !all_ok;
  return finish(rep, json_out, all_ok ? kExitOk : kExitViolation);
}

int run_logconcavity_campaign(int n, int m, int samples, std::uint64_t seed, double tol,
                              const std::string& json_out) {
  const MetricPencil G = MetricPencil::standard(n);
  std::vector<double> slack(std::size_t(samples), 0.0);
  std::vector<char> oks(std::size_t(samples), 0);
  ghx::parallel_for(std::size_t(samples), [&](std::size_t i) {
    CounterRng rng = CounterRng::stream(seed, i);
    const HermitianForm alpha = ghx::sample_gamma_m(G, m, rng);
    const HermitianForm beta = ghx::sample_gamma_m(G, m, rng);
    const auto r = ghx::log_concavity(alpha, beta, G, m, tol);
    double s = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int k = 1; k < m; ++k) {
      const double ak = r.a[std::size_t(k)];
      s = std::min(s, (ak * ak - r.a[std::size_t(k + 1)] * r.a[std::size_t(k - 1)]) /
                          (ak * ak));
      ok = ok && r.ok[std::size_t(k - 1)];
    }
    slack[i] = s;
    oks[i] = ok ? 1 : 0;
  });

  double worst = std::numeric_limits<double>::infinity();
  Json violations = Json::array();
  for (std::size_t i = 0; i < slack.size(); ++i) {
    worst = std::min(worst, slack[i]);
    if (!oks[i]) {
      CounterRng rng = CounterRng::stream(seed, i);
      const HermitianForm alpha = ghx::sample_gamma_m(G, m, rng);
      const HermitianForm beta = ghx::sample_gamma_m(G, m, rng);
      Json v;
      v["sample"] = std::uint64_t(i);
      v["alpha"] = ghx::format_matrix(alpha);
      v["beta"] = ghx::format_matrix(beta);
      v["reproduce"] =
          "write alpha and beta to files and run: ghx logconcavity --alpha A --beta B --m M";
      violations.push_back(v);
    }
  }

  Json rep = header("logconcavity", "campaign");
  rep["n"] = n;
  rep["m"] = m;
  rep["samples"] = samples;
  rep["seed"] = seed;
  rep["tol"] = tol;
  rep["violation_count"] = violations.size();
  rep["worst_normalized_slack"] = worst;
  rep["violations"] = violations;
  return finish(rep, json_out, violations.empty() ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------

Json torus_json(const ghx::TorusTheoremAReport& r) {
  Json j;
  j["representer"] = ghx::format_matrix(r.representer);
  j["representer_min_eig"] = r.representer_min_eig;
  j["beta0"] = ghx::format_matrix(r.beta0);
  j["solver_residual"] = r.solver_residual;
  j["primitivity_residual"] = r.primitivity_residual;
  j["pointwise_max"] = r.pointwise_max;
  j["pointwise_scale"] = r.pointwise_scale;
  j["integrated"] = r.integrated;
  j["constant_model"] = r.constant_model;
  Json v;
  v["pointwise_ok"] = r.pointwise_ok;
  v["match_ok"] = r.match_ok;
  j["verdicts"] = v;
  return j;
}

bool torus_ok(const ghx::TorusTheoremAReport& r) {
  return r.pointwise_ok && r.match_ok && r.solver_residual <= 1e-8 &&
         r.primitivity_residual <= 1e-8;
}

int run_torus_single(const std::vector<std::string>& alpha_files, const std::string& beta_file,
                     const std::string& metric, int grid, std::uint64_t psi_seed, bool has_psi,
                     double tol, const std::string& export_phi, const std::string& json_out) {
  const std::vector<HermitianForm> alphas = load_all(alpha_files);
  const int n = alphas.at(0).dim();
  const MetricPencil G = load_metric(metric, n);
  const HermitianForm beta =
      beta_file.empty() ? HermitianForm(n) : ghx::parse_matrix_file(beta_file);
  const TorusContext ctx(n, grid > 0 ? grid : default_grid(n));
  ScalarField psi(std::vector<double>(ctx.points(), 0.0));
  if (has_psi) {
    CounterRng rng(psi_seed);
    psi = ghx::random_band_limited(ctx, rng, 6, 0.5);
  }
  const auto r = ghx::verify_theorem_a_torus(alphas, G, beta, psi, ctx, tol);
  if (!export_phi.empty()) ghx::export_field(r.phi, ctx, export_phi);

  Json rep = header("torus", "single");
  rep["n"] = n;
  rep["m"] = int(alphas.size()) + 1;
  rep["grid"] = ctx.grid();
  rep["tol"] = tol;
  rep["alphas"] = texts_of(alphas);
  rep["beta"] = ghx::format_matrix(beta);
  if (has_psi)
    rep["psi_seed"] = psi_seed;
  else
    rep["psi_seed"] = nullptr;
  rep.update(torus_json(r));
  const bool ok = torus_ok(r);
  rep["violation"] = !ok;
  return finish(rep, json_out, ok ? kExitOk : kExitViolation);
}

int run_torus_campaign(int n, int m, int grid, int samples, std::uint64_t seed, double tol,
                       const std::string& json_out) {
  if (m < 2) throw ghx::ContractViolation("torus campaign needs m >= 2");
  const MetricPencil G = MetricPencil::standard(n);
  const TorusContext ctx(n, grid > 0 ? grid : default_grid(n));
  struct Slot {
    double solver = 0.0;
    double prim = 0.0;
    double mismatch = 0.0;
    bool ok = false;
  };
  auto slots = std::vector<Slot>(std::size_t(samples));
  std::vector<std::uint64_t> psi_seeds(std::size_t(samples), 0);
  ghx::parallel_for(std::size_t(samples), [&](std::size_t i) {
    CounterRng rng = CounterRng::stream(seed, i);
    std::vector<HermitianForm> alphas;
    for (int j = 0; j < m - 1; ++j) alphas.push_back(ghx::sample_gamma_m(G, m, rng));
    const HermitianForm beta = ghx::random_hermitian(n, rng);
    psi_seeds[i] = rng.next_u64();
    CounterRng prng(psi_seeds[i]);
    const ScalarField psi = ghx::random_band_limited(ctx, prng, 6, 0.5);
    const auto r = ghx::verify_theorem_a_torus(alphas, G, beta, psi, ctx, tol);
    const double denom = std::abs(r.constant_model) + 1e-300;
    slots[i] = Slot{r.solver_residual, r.primitivity_residual,
                    std::abs(r.integrated - r.constant_model) / denom, torus_ok(r)};
  });

  double worst_solver = 0.0, worst_prim = 0.0, worst_mismatch = 0.0;
  Json violations = Json::array();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    worst_solver = std::max(worst_solver, slots[i].solver);
    worst_prim = std::max(worst_prim, slots[i].prim);
    worst_mismatch = std::max(worst_mismatch, slots[i].mismatch);
    if (!slots[i].ok) {
      CounterRng rng = CounterRng::stream(seed, i);
      std::vector<HermitianForm> alphas;
      for (int j = 0; j < m - 1; ++j) alphas.push_back(ghx::sample_gamma_m(G, m, rng));
      const HermitianForm beta = ghx::random_hermitian(n, rng);
      Json v;
      v["sample"] = std::uint64_t(i);
      v["alphas"] = texts_of(alphas);
      v["beta"] = ghx::format_matrix(beta);
      v["psi_seed"] = psi_seeds[i];
      v["grid"] = ctx.grid();
      v["reproduce"] =
          "write matrices to files and run: ghx torus --beta BETA --psi-seed S ALPHAS";
      violations.push_back(v);
    }
  }

  Json rep = header("torus", "campaign");
  rep["n"] = n;
  rep["m"] = m;
  rep["grid"] = ctx.grid();
  rep["samples"] = samples;
  rep["seed"] = seed;
  rep["tol"] = tol;
  rep["violation_count"] = violations.size();
  rep["worst_solver_residual"] = worst_solver;
  rep["worst_primitivity_residual"] = worst_prim;
  rep["worst_relative_mismatch"] = worst_mismatch;
  rep["violations"] = violations;
  return finish(rep, json_out, violations.empty() ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------

/// Pre-scan for --config so its values can seed the flag defaults before the
/// real parse; command-line values then win by overwriting.
Json load_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (a.rfind("--config=", 0) == 0)
      path = a.substr(9);
  }
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw ghx::Error("cannot open config file: " + path);
  Json j = Json::parse(in, nullptr, true, true);
  if (!j.is_object()) throw ghx::Error("config file must hold a JSON object");
  return j;
}

template <typename T>
void from_config(const Json& cfg, const char* key, T& var) {
  if (cfg.contains(key)) var = cfg.at(key).get<T>();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const Json cfg = load_config(argc, argv);

    int n = 3, m = 2, samples = 0, grid = 0;
    std::uint64_t seed = 1;
    double tol = ghx::kDefaultTol;
    std::string metric, json_out, config_path;
    from_config(cfg, "n", n);
    from_config(cfg, "m", m);
    from_config(cfg, "samples", samples);
    from_config(cfg, "grid", grid);
    from_config(cfg, "seed", seed);
    from_config(cfg, "tol", tol);
    from_config(cfg, "metric", metric);

    CLI::App app{"verification toolkit for sigma_m cones, Garding inequalities and the "
                 "mixed Hodge-index theorem on flat tori"};
    app.require_subcommand(1);
    app.add_option("--config", config_path, "JSON object with default flag values");

    std::vector<std::string> files;
    std::string beta_file, alpha_file, export_phi;
    bool random_mode = false, list_only = false;
    std::uint64_t psi_seed = 0;
    bool has_psi = false;

    auto add_common = [&](CLI::App* cmd, bool campaign_capable) {
      cmd->add_option("--metric", metric, "metric matrix file (default: identity)");
      cmd->add_option("--tol", tol, "relative tolerance");
      cmd->add_option("--json-out", json_out, "write the JSON report to this file");
      if (campaign_capable) {
        cmd->add_flag("--random", random_mode, "run a seeded random campaign");
        cmd->add_option("--n", n, "dimension for --random");
        cmd->add_option("--m", m, "degree m");
        cmd->add_option("--samples", samples, "campaign sample count");
        cmd->add_option("--seed", seed, "campaign seed");
      }
    };

    CLI::App* cone = app.add_subcommand("cone", "Gamma_m membership of a Hermitian form");
    cone->add_option("file", files, "matrix file")->expected(1);
    cone->add_option("--m", m, "cone degree m");
    cone->add_option("--metric", metric, "metric matrix file (default: identity)");
    cone->add_option("--tol", tol, "relative tolerance");
    cone->add_option("--json-out", json_out, "write the JSON report to this file");

    CLI::App* garding =
        app.add_subcommand("garding", "Garding inequality check (files or --random)");
    garding->add_option("files", files, "m matrix files");
    add_common(garding, true);

    CLI::App* hodge =
        app.add_subcommand("hodge", "mixed Hodge-index verification (files or --random)");
    hodge->add_option("files", files, "alpha_1..alpha_{m-1} matrix files");
    add_common(hodge, true);

    CLI::App* logc = app.add_subcommand("logconcavity",
                                        "log-concavity of mixed powers (files or --random)");
    logc->add_option("--alpha", alpha_file, "alpha matrix file");
    logc->add_option("--beta", beta_file, "beta matrix file");
    add_common(logc, true);

    CLI::App* torus =
        app.add_subcommand("torus", "spectral Theorem A pipeline (files or --random)");
    torus->add_option("alphas", files, "alpha_1..alpha_{m-1} matrix files");
    torus->add_option("--beta", beta_file, "class matrix file (default: zero)");
    torus->add_option("--grid", grid, "per-axis resolution N (default 32, 8 for n=3)");
    torus->add_option("--psi-seed", psi_seed, "seed for the random potential")
        ->trigger_on_parse();
    torus->add_option("--export-phi", export_phi, "export the solved potential to this path");
    add_common(torus, true);

    CLI::App* selftest = app.add_subcommand("selftest", "run every pinned regression case");
    selftest->add_flag("--list", list_only, "list case names without running");

    // --config lives on the parent but is usually written after the
    // subcommand name; let it fall through.
    for (CLI::App* sub : {cone, garding, hodge, logc, torus, selftest}) sub->fallthrough();

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? kExitOk : kExitError;
    }
    has_psi = torus->count("--psi-seed") > 0;

    if (selftest->parsed())
      return ghx::run_selftests(std::cout, list_only) == 0 ? kExitOk : kExitViolation;

    if (cone->parsed()) return run_cone(files.at(0), metric, m, tol, json_out);

    if (garding->parsed()) {
      if (random_mode) {
        if (files.size() > 0) throw ghx::Error("--random takes no input files");
        return run_garding_campaign(n, m, samples > 0 ? samples : 200, seed, tol, json_out);
      }
      if (files.size() < 2) throw ghx::Error("need at least two matrix files or --random");
      return run_garding_single(files, metric, tol, json_out);
    }

    if (hodge->parsed()) {
      if (random_mode)
        return run_hodge_campaign(n, m, samples > 0 ? samples : 100, seed, tol, json_out);
      if (files.empty()) throw ghx::Error("need alpha matrix files or --random");
      return run_hodge_single(files, metric, tol, json_out);
    }

    if (logc->parsed()) {
      if (random_mode)
        return run_logconcavity_campaign(n, m, samples > 0 ? samples : 200, seed, tol,
                                         json_out);
      if (alpha_file.empty() || beta_file.empty())
        throw ghx::Error("need --alpha and --beta files or --random");
      return run_logconcavity_single(alpha_file, beta_file, m, metric, tol, json_out);
    }

    if (torus->parsed()) {
      if (random_mode)
        return run_torus_campaign(n, m, grid, samples > 0 ? samples : 3, seed, tol, json_out);
      if (files.empty()) throw ghx::Error("need alpha matrix files or --random");
      return run_torus_single(files, beta_file, metric, grid, psi_seed, has_psi, tol,
                              export_phi, json_out);
    }

    throw ghx::Error("no subcommand selected");
  } catch (const ghx::ParseError& e) {
    std::cerr << "parse error (line " << e.line << ", column " << e.column
              << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
