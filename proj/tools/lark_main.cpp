#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lark/bench.hpp"
#include "lark/elicit.hpp"
#include "lark/io.hpp"
#include "lark/norms.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitData = 2;
constexpr int kExitInfeasible = 3;

void require_keys(const json& obj, const std::string& section,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw std::runtime_error("config section '" + section + "' must be an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k))
      throw std::runtime_error("unknown key '" + k + "' in config section '" + section + "'");
}

lark::KernelSpec parse_kernel(const json& j) {
  require_keys(j, "kernel", {"kind", "convention", "xlo", "xhi", "support_radius", "rho"});
  lark::KernelSpec spec;
  const std::string kind = j.value("kind", "gaussian");
  if (kind == "gaussian") spec.kind = lark::KernelKind::Gaussian;
  else if (kind == "laplace") spec.kind = lark::KernelKind::Laplace;
  else if (kind == "one_sided_exp") spec.kind = lark::KernelKind::OneSidedExp;
  else if (kind == "haar") spec.kind = lark::KernelKind::Haar;
  else if (kind == "power_exp") spec.kind = lark::KernelKind::PowerExp;
  else throw std::runtime_error("kernel.kind: unknown value '" + kind + "'");
  const std::string conv = j.value("convention", "linear");
  if (conv == "linear") spec.convention = lark::LambdaConvention::Linear;
  else if (conv == "squared") spec.convention = lark::LambdaConvention::Squared;
  else throw std::runtime_error("kernel.convention: unknown value '" + conv + "'");
  spec.xlo = j.value("xlo", 0.0);
  spec.xhi = j.value("xhi", 10.0);
  if (j.contains("support_radius")) spec.support_radius = j["support_radius"].get<double>();
  spec.rho = j.value("rho", 2.0);
  if (!(spec.xhi > spec.xlo)) throw std::runtime_error("kernel: requires xhi > xlo");
  return spec;
}

std::pair<lark::LevyKind, double> parse_family(const json& j) {
  require_keys(j, "family", {"kind", "alpha"});
  const std::string kind = j.value("kind", "symgamma");
  double alpha = j.value("alpha", 1.0);
  if (kind == "gamma") return {lark::LevyKind::Gamma, alpha};
  if (kind == "symgamma") return {lark::LevyKind::SymGamma, alpha};
  if (kind == "cauchy") return {lark::LevyKind::SaS, 1.0};
  if (kind == "sas") return {lark::LevyKind::SaS, alpha};
  throw std::runtime_error("family.kind: unknown value '" + kind + "'");
}

lark::Hyperparams parse_hyper(const json& j) {
  require_keys(j, "hyper", {"epsilon", "a_gamma", "b_gamma", "a_eta", "b_eta", "a_lambda",
                            "b_lambda", "omega_volume"});
  lark::Hyperparams h;
  h.epsilon = j.at("epsilon").get<double>();
  h.a_gamma = j.at("a_gamma").get<double>();
  h.b_gamma = j.at("b_gamma").get<double>();
  h.a_eta = j.at("a_eta").get<double>();
  h.b_eta = j.at("b_eta").get<double>();
  h.a_lambda = j.at("a_lambda").get<double>();
  h.b_lambda = j.at("b_lambda").get<double>();
  h.omega_volume = j.value("omega_volume", 10.0);
  return h;
}

lark::McmcConfig parse_mcmc(const json& j, double alpha) {
  require_keys(j, "mcmc",
               {"iterations", "burn_in", "thin", "target_accept", "p_birth",
                "p_death_explicit", "p_update", "step_beta", "step_chi", "step_loglambda",
                "step_logeta", "step_logrho", "a_sigma", "b_sigma", "sigma2_init",
                "infer_rho", "rho_init", "rho_prior_shape", "rho_prior_rate",
                "flat_likelihood", "band", "grid_n"});
  lark::McmcConfig c;
  c.iterations = j.value("iterations", 20000L);
  c.burn_in = j.value("burn_in", 5000L);
  c.thin = j.value("thin", 10L);
  c.target_accept = j.value("target_accept", 0.30);
  c.p_birth = j.value("p_birth", 0.20);
  c.p_death_explicit = j.value("p_death_explicit", 0.05);
  c.p_update = j.value("p_update", 0.75);
  c.step_beta = j.value("step_beta", 1.0);
  c.step_chi = j.value("step_chi", 0.5);
  c.step_loglambda = j.value("step_loglambda", 0.5);
  c.step_logeta = j.value("step_logeta", 0.4);
  c.step_logrho = j.value("step_logrho", 0.25);
  c.a_sigma = j.value("a_sigma", 0.1);
  c.b_sigma = j.value("b_sigma", 0.1);
  c.sigma2_init = j.value("sigma2_init", 1.0);
  c.infer_rho = j.value("infer_rho", false);
  c.rho_init = j.value("rho_init", 2.0);
  c.rho_prior_shape = j.value("rho_prior_shape", 2.0);
  c.rho_prior_rate = j.value("rho_prior_rate", 0.75);
  c.flat_likelihood = j.value("flat_likelihood", false);
  c.alpha = alpha;
  if (j.contains("band")) {
    c.band_lo = j["band"].at(0).get<double>();
    c.band_hi = j["band"].at(1).get<double>();
  }
  return c;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json j;
  in >> j;
  require_keys(j, "<top>", {"seed", "data", "kernel", "family", "hyper", "mcmc", "output",
                            "prior", "elicit", "bench", "besov"});
  return j;
}

struct OutputPaths {
  fs::path dir;
  std::string draws = "draws.jsonl";
  std::string summary = "summary.csv";
  std::string diagnostics = "diagnostics.json";
  std::string prefix = "prior";
};

OutputPaths parse_output(const json& cfg, const std::string& out_override) {
  OutputPaths p;
  if (cfg.contains("output")) {
    const json& j = cfg["output"];
    require_keys(j, "output", {"dir", "draws", "summary", "diagnostics", "prefix"});
    p.dir = j.value("dir", ".");
    p.draws = j.value("draws", p.draws);
    p.summary = j.value("summary", p.summary);
    p.diagnostics = j.value("diagnostics", p.diagnostics);
    p.prefix = j.value("prefix", p.prefix);
  } else {
    p.dir = ".";
  }
  if (!out_override.empty()) p.dir = out_override;
  if (const char* env = std::getenv("LARK_OUT_DIR"); env && out_override.empty()) p.dir = env;
  fs::create_directories(p.dir);
  return p;
}

json acceptance_json(const lark::AcceptanceTable& a) {
  auto one = [](const lark::MoveStats& m) {
    return json{{"proposed", m.proposed}, {"accepted", m.accepted}, {"rate", m.rate()}};
  };
  return json{{"birth", one(a.birth)},
              {"death_explicit", one(a.death_explicit)},
              {"update_beta", one(a.update_beta)},
              {"update_chi", one(a.update_chi)},
              {"update_lambda", one(a.update_lambda)},
              {"update_death", one(a.update_death)},
              {"eta", one(a.eta)},
              {"rho", one(a.rho)}};
}

int cmd_fit(const json& cfg, std::uint64_t seed, const std::string& out_override) {
  const json& dj = cfg.at("data");
  require_keys(dj, "data", {"path", "x_col", "y_col"});
  lark::Dataset data;
  try {
    data = lark::read_xy_csv(dj.at("path").get<std::string>(), dj.value("x_col", "x"),
                             dj.value("y_col", "y"));
  } catch (const lark::CsvError& e) {
    std::fprintf(stderr, "error: %s (line %d)\n", e.what(), e.line);
    return kExitData;
  }
  const auto spec = parse_kernel(cfg.at("kernel"));
  const auto [kind, alpha] = parse_family(cfg.at("family"));
  const auto hyper = parse_hyper(cfg.at("hyper"));
  auto mcfg = parse_mcmc(cfg.value("mcmc", json::object()), alpha);
  mcfg.seed = seed;
  if (cfg.contains("mcmc") && cfg["mcmc"].value("grid_n", 0) > 1) {
    const int gn = cfg["mcmc"]["grid_n"].get<int>();
    for (int i = 0; i < gn; ++i)
      mcfg.summary_grid.push_back(spec.xlo + (spec.xhi - spec.xlo) * i / (gn - 1.0));
  }
  const auto paths = parse_output(cfg, out_override);
  const lark::FitResult fit = lark::run(data, hyper, kind, spec, mcfg);
  lark::write_draws_jsonl((paths.dir / paths.draws).string(), fit.draws);
  lark::write_summary_csv((paths.dir / paths.summary).string(), fit.grid, fit.mean_curve,
                          fit.band_lower, fit.band_upper, mcfg.band_lo, mcfg.band_hi);
  json diag;
  diag["acceptance"] = acceptance_json(fit.accept);
  diag["cache_drift_max"] = fit.cache_drift_max;
  std::map<int, int> jhist;
  for (int v : fit.j_trace) ++jhist[v];
  json hist = json::object();
  for (const auto& [k, v] : jhist) hist[std::to_string(k)] = v;
  diag["j_histogram"] = hist;
  diag["kept_draws"] = fit.draws.size();
  std::ofstream(paths.dir / paths.diagnostics) << diag.dump(2) << "\n";
  std::printf("fit: %zu draws kept, J in [%d, %d]\n", fit.draws.size(),
              fit.j_trace.empty() ? 0 : *std::min_element(fit.j_trace.begin(), fit.j_trace.end()),
              fit.j_trace.empty() ? 0 : *std::max_element(fit.j_trace.begin(), fit.j_trace.end()));
  return 0;
}

int cmd_prior(const json& cfg, std::uint64_t seed, const std::string& out_override) {
  const json pj = cfg.value("prior", json::object());
  require_keys(pj, "prior", {"realizations", "grid_n", "fixed_j"});
  const int nreal = pj.value("realizations", 4);
  const int grid_n = pj.value("grid_n", 512);
  const long fixed_j = pj.value("fixed_j", -1L);
  const auto spec = parse_kernel(cfg.at("kernel"));
  const auto [kind, alpha] = parse_family(cfg.at("family"));
  const auto hyper = parse_hyper(cfg.at("hyper"));
  const auto paths = parse_output(cfg, out_override);
  lark::Rng rng(seed);
  std::vector<double> grid(grid_n);
  for (int i = 0; i < grid_n; ++i)
    grid[i] = spec.xlo + (spec.xhi - spec.xlo) * i / (grid_n - 1.0);
  std::ofstream pts_out(paths.dir / (paths.prefix + "_points.jsonl"));
  for (int r = 0; r < nreal; ++r) {
    const auto state = lark::sample_prior(
        hyper, kind, spec, rng, alpha,
        fixed_j >= 0 ? std::optional<long>(fixed_j) : std::nullopt);
    const auto f = lark::eval_realization(state, spec, grid);
    std::FILE* fp = std::fopen(
        (paths.dir / (paths.prefix + "_" + std::to_string(r) + ".csv")).string().c_str(), "w");
    std::fprintf(fp, "x,f\n");
    for (int i = 0; i < grid_n; ++i) std::fprintf(fp, "%.17g,%.17g\n", grid[i], f[i]);
    std::fclose(fp);
    json j;
    j["gamma"] = state.gamma;
    j["eta"] = state.eta;
    j["j"] = state.j();
    auto& arr = j["points"] = json::array();
    for (const auto& p : state.points) arr.push_back({p.beta, p.omega.chi, p.omega.lambda});
    pts_out << j.dump() << "\n";
  }
  std::printf("prior: wrote %d realizations\n", nreal);
  return 0;
}

int cmd_elicit(const json& cfg, const std::string& out_override) {
  const json& ej = cfg.at("elicit");
  require_keys(ej, "elicit",
               {"j_interval", "j_coverage", "beta_interval", "beta_coverage", "trunc_budget",
                "lambda_interval", "lambda_coverage", "omega_volume"});
  lark::ElicitationTargets t;
  t.j_lo = ej.at("j_interval").at(0).get<long>();
  t.j_hi = ej.at("j_interval").at(1).get<long>();
  t.j_coverage = ej.value("j_coverage", 0.95);
  t.beta_lo = ej.at("beta_interval").at(0).get<double>();
  t.beta_hi = ej.at("beta_interval").at(1).get<double>();
  t.beta_coverage = ej.value("beta_coverage", 0.95);
  t.trunc_budget = ej.value("trunc_budget", 0.05);
  t.lambda_lo = ej.at("lambda_interval").at(0).get<double>();
  t.lambda_hi = ej.at("lambda_interval").at(1).get<double>();
  t.lambda_coverage = ej.value("lambda_coverage", 0.95);
  const auto [kind, alpha] = parse_family(cfg.at("family"));
  const double omv = ej.value("omega_volume", 10.0);
  const auto sol = lark::solve_hyper(t, kind, alpha, omv);
  json frag;
  frag["family"] = cfg.at("family");
  frag["hyper"] = {{"epsilon", sol.hyper.epsilon},     {"a_gamma", sol.hyper.a_gamma},
                   {"b_gamma", sol.hyper.b_gamma},     {"a_eta", sol.hyper.a_eta},
                   {"b_eta", sol.hyper.b_eta},         {"a_lambda", sol.hyper.a_lambda},
                   {"b_lambda", sol.hyper.b_lambda},   {"omega_volume", sol.hyper.omega_volume}};
  json rep;
  rep["residuals"] = sol.residuals;
  rep["feasible"] = sol.feasible;
  if (!sol.feasible) rep["binding_constraint"] = sol.binding;
  const auto paths = parse_output(cfg, out_override);
  std::ofstream(paths.dir / "hyper_fragment.json") << frag.dump(2) << "\n";
  std::ofstream(paths.dir / "elicit_report.json") << rep.dump(2) << "\n";
  std::cout << rep.dump(2) << "\n";
  if (!sol.feasible) {
    std::fprintf(stderr, "elicit: infeasible targets: %s\n", sol.binding.c_str());
    return kExitInfeasible;
  }
  std::printf("elicit: wrote hyper fragment (epsilon=%g)\n", sol.hyper.epsilon);
  return 0;
}

int cmd_bench(const json& cfg, std::uint64_t seed, const std::string& out_override,
              bool full_scale) {
  const json bj = cfg.value("bench", json::object());
  require_keys(bj, "bench", {"function", "replicates"});
  const std::string fn = bj.value("function", "blocks");
  lark::TestFunctionKind kind;
  if (fn == "blocks") kind = lark::TestFunctionKind::Blocks;
  else if (fn == "bumps") kind = lark::TestFunctionKind::Bumps;
  else if (fn == "doppler") kind = lark::TestFunctionKind::Doppler;
  else if (fn == "heavysine") kind = lark::TestFunctionKind::Heavysine;
  else throw std::runtime_error("bench.function: unknown value '" + fn + "'");
  int replicates = bj.value("replicates", 10);
  const auto spec = parse_kernel(cfg.at("kernel"));
  const auto [fam, alpha] = parse_family(cfg.at("family"));
  const auto hyper = parse_hyper(cfg.at("hyper"));
  auto mcfg = parse_mcmc(cfg.value("mcmc", json::object()), alpha);
  if (full_scale) {
    replicates = 100;
    mcfg.iterations = std::max(mcfg.iterations, 50000L);
    mcfg.burn_in = std::max(mcfg.burn_in, 10000L);
  }
  const auto paths = parse_output(cfg, out_override);
  const auto rep = lark::run_benchmark(kind, fam, spec, hyper, mcfg, replicates, seed);
  json j;
  j["function"] = rep.label;
  j["replicates"] = rep.replicates;
  j["amse"] = rep.amse;
  j["std_error"] = rep.std_error;
  j["mses"] = rep.mses;
  j["wall_seconds"] = rep.wall_seconds;
  j["master_seed"] = rep.master_seed;
  std::ofstream(paths.dir / ("bench_" + rep.label + ".json")) << j.dump(2) << "\n";
  std::FILE* f = std::fopen((paths.dir / ("bench_" + rep.label + ".csv")).string().c_str(), "w");
  std::fprintf(f, "function,replicates,amse,std_error\n%s,%d,%.17g,%.17g\n", rep.label.c_str(),
               rep.replicates, rep.amse, rep.std_error);
  std::fclose(f);
  std::printf("bench %s: AMSE=%.4f (SE %.4f) over %d replicates, %.1fs\n", rep.label.c_str(),
              rep.amse, rep.std_error, rep.replicates, rep.wall_seconds);
  return 0;
}

int cmd_besov(const json& cfg, const std::string& out_override) {
  const json& bj = cfg.at("besov");
  require_keys(bj, "besov",
               {"source", "s", "p", "q", "m", "grid_n", "interval", "sobolev_s"});
  const json& src = bj.at("source");
  require_keys(src, "besov.source", {"kernel", "chi", "lambda", "csv", "x_col", "y_col",
                                     "draws", "draw_index"});
  const double s = bj.value("s", 1.0);
  const double p = bj.value("p", 2.0);
  const double q = bj.value("q", 2.0);
  const int m = bj.value("m", -1);
  const int grid_n = bj.value("grid_n", 4096);
  lark::GridFunction g;
  if (src.contains("csv")) {
    const auto d = lark::read_xy_csv(src.at("csv").get<std::string>(),
                                     src.value("x_col", "x"), src.value("y_col", "f"));
    g.x0 = d.xs.front();
    g.h0 = (d.xs.back() - d.xs.front()) / (d.n() - 1);
    g.v = d.ys;
  } else {
    double lo = 0.0, hi = 1.0;
    if (bj.contains("interval")) {
      lo = bj["interval"].at(0).get<double>();
      hi = bj["interval"].at(1).get<double>();
    }
    g.x0 = lo;
    g.h0 = (hi - lo) / (grid_n - 1);
    g.v.resize(grid_n);
    if (src.contains("draws")) {
      const auto draws = lark::read_draws_jsonl(src.at("draws").get<std::string>());
      const int idx = src.value("draw_index", 0);
      const auto spec = parse_kernel(cfg.at("kernel"));
      std::vector<double> grid(grid_n);
      for (int i = 0; i < grid_n; ++i) grid[i] = lo + i * g.h0;
      g.v = lark::eval_realization(draws.at(idx), spec, grid);
    } else {
      const auto spec = parse_kernel(src.at("kernel"));
      lark::OmegaPoint om{src.value("chi", 0.0), src.value("lambda", 1.0)};
      for (int i = 0; i < grid_n; ++i) g.v[i] = lark::eval(spec, lo + i * g.h0, om);
    }
  }
  const auto est = lark::besov_seminorm(g, s, p, q, m);
  json out;
  out["besov_seminorm"] = est.value;
  out["besov_seminorm_coarse"] = est.value_coarse;
  out["refinement_ratio"] = est.value / est.value_coarse;
  if (bj.contains("sobolev_s"))
    out["sobolev_norm"] = lark::sobolev_norm(g, bj["sobolev_s"].get<double>());
  const auto paths = parse_output(cfg, out_override);
  std::ofstream(paths.dir / "besov.json") << out.dump(2) << "\n";
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levy adaptive regression kernels"};
  app.require_subcommand(1);
  std::string config_path, out_dir;
  std::uint64_t seed = 0;
  bool have_seed = false, full_scale = false;
  app.add_option("--config", config_path, "JSON config path")->required();
  app.add_option("--seed", seed, "seed override")->each([&](const std::string&) { have_seed = true; });
  app.add_option("--out", out_dir, "output directory override");
  auto* fit = app.add_subcommand("fit", "posterior inference on a dataset");
  auto* prior = app.add_subcommand("prior", "prior realizations");
  auto* elicit = app.add_subcommand("elicit", "solve hyperparameters from targets");
  auto* bench = app.add_subcommand("bench", "replicated benchmark");
  auto* besov = app.add_subcommand("besov", "norm estimates for a function source");
  bench->add_flag("--full-scale", full_scale, "100 replicates, long chains");
  CLI11_PARSE(app, argc, argv);
  try {
    const json cfg = load_config(config_path);
    const std::uint64_t s = have_seed ? seed : cfg.value("seed", 1ull);
    if (fit->parsed()) return cmd_fit(cfg, s, out_dir);
    if (prior->parsed()) return cmd_prior(cfg, s, out_dir);
    if (elicit->parsed()) return cmd_elicit(cfg, out_dir);
    if (bench->parsed()) return cmd_bench(cfg, s, out_dir, full_scale);
    if (besov->parsed()) return cmd_besov(cfg, out_dir);
  } catch (const lark::CsvError& e) {
    std::fprintf(stderr, "error: %s (line %d)\n", e.what(), e.line);
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
