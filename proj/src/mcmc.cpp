#include "lark/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lark/kernels.hpp"
#include "lark/special.hpp"

namespace lark {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += t;
  return acc;
}

// log density of eta when eta^{-1} ~ Ga(a, b)
double log_prior_eta(double eta, const Hyperparams& h) {
  if (!(eta > 0.0)) return kNegInf;
  return gamma_log_pdf(1.0 / eta, h.a_eta, h.b_eta) - 2.0 * std::log(eta);
}

double log_inv_gamma_pdf(double x, double shape, double scale) {
  if (!(x > 0.0)) return kNegInf;
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) -
         scale / x;
}

// Birth proposal: double-exponential with rate eta/eps conditioned on
// |beta| eta > eps (one-sided for the positive family). Memorylessness gives
// the exact sampler |beta| = eps/eta + Exp(eta/eps).
double sample_birth_beta(const LevyFamily& fam, Rng& rng) {
  const double r = fam.eta / fam.epsilon;
  const double mag = fam.epsilon / fam.eta + rng.exponential(r);
  if (fam.kind == LevyKind::Gamma) return mag;
  return rng.bernoulli(0.5) ? mag : -mag;
}

double log_birth_beta_density(const LevyFamily& fam, double beta) {
  const double r = fam.eta / fam.epsilon;
  const double w = fam.epsilon / fam.eta;
  if (fam.kind == LevyKind::Gamma) {
    if (!(beta > w)) return kNegInf;
    return std::log(r) - r * (beta - w);
  }
  if (!(std::abs(beta) > w)) return kNegInf;
  return std::log(0.5 * r) - r * (std::abs(beta) - w);
}

}  // namespace

double log_posterior(const LarkState& s, const Dataset& data, const Hyperparams& h,
                     LevyKind kind, const KernelSpec& spec, const McmcConfig& cfg) {
  const LevyFamily fam = make_family(kind, h, s.gamma, s.eta, cfg.alpha);
  const long j = s.j();
  double lp = gamma_log_pdf(s.gamma, h.a_gamma, h.b_gamma) + log_prior_eta(s.eta, h);
  lp += -nu_plus(fam) - std::lgamma(static_cast<double>(j) + 1.0);
  const double log_om = std::log(h.omega_volume / spec.width());
  std::vector<double> terms;
  terms.reserve(j);
  for (const auto& p : s.points) {
    const double t = levy_log_intensity_beta(fam, p.beta) + log_om +
                     gamma_log_pdf(p.omega.lambda, h.a_lambda, h.b_lambda);
    if (t == kNegInf || p.omega.chi < spec.xlo || p.omega.chi > spec.xhi) return kNegInf;
    terms.push_back(t);
  }
  lp += sorted_sum(terms);
  if (!cfg.flat_likelihood) {
    const int n = data.n();
    double ssr = 0.0;
    std::vector<double> cols;
    cols.reserve(j);
    for (int i = 0; i < n; ++i) {
      cols.clear();
      for (const auto& p : s.points) cols.push_back(p.beta * eval(spec, data.xs[i], p.omega, s.rho));
      const double fi = sorted_sum(cols);
      const double r = data.ys[i] - fi;
      ssr += r * r;
    }
    lp += -0.5 * n * std::log(2.0 * M_PI * s.sigma2) - 0.5 * ssr / s.sigma2;
  }
  lp += log_inv_gamma_pdf(s.sigma2, cfg.a_sigma, cfg.b_sigma);
  if (cfg.infer_rho) lp += gamma_log_pdf(s.rho, cfg.rho_prior_shape, cfg.rho_prior_rate);
  return lp;
}

namespace {

class Sampler {
 public:
  Sampler(const Dataset& data, const Hyperparams& h, LevyKind kind, const KernelSpec& spec,
          const McmcConfig& cfg)
      : data_(data), h_(h), kind_(kind), spec_(spec), cfg_(cfg), rng_(cfg.seed) {
    if (std::abs(cfg.p_birth + cfg.p_death_explicit + cfg.p_update - 1.0) > 1e-9)
      throw std::invalid_argument("McmcConfig: move probabilities must sum to 1");
    if (cfg.iterations <= cfg.burn_in)
      throw std::invalid_argument("McmcConfig: iterations must exceed burn_in");
    state_.gamma = rng_.gamma(h.a_gamma, h.b_gamma);
    state_.eta = 1.0 / rng_.gamma(h.a_eta, h.b_eta);
    state_.sigma2 = cfg.sigma2_init;
    state_.rho = cfg.rho_init;
    fitted_.assign(data_.n(), 0.0);
    ssr_ = 0.0;
    for (int i = 0; i < data_.n(); ++i) ssr_ += data_.ys[i] * data_.ys[i];
    s_beta_ = cfg.step_beta;
    s_chi_ = cfg.step_chi;
    s_lam_ = cfg.step_loglambda;
    s_eta_ = cfg.step_logeta;
    s_rho_ = cfg.step_logrho;
  }

  FitResult run() {
    FitResult out;
    const long n_keep = (cfg_.iterations - cfg_.burn_in + cfg_.thin - 1) / cfg_.thin;
    out.draws.reserve(n_keep);
    for (long it = 0; it < cfg_.iterations; ++it) {
      iter_ = it;
      const double u = rng_.uniform();
      if (u < cfg_.p_birth) {
        birth(/*explicit_pair=*/false);
      } else if (u < cfg_.p_birth + cfg_.p_death_explicit) {
        if (rng_.bernoulli(0.5))
          birth(/*explicit_pair=*/true);
        else
          death_explicit();
      } else {
        update_move();
      }
      hyper_moves();
      if (cfg_.cache_check_every > 0 && (it + 1) % cfg_.cache_check_every == 0) refresh_cache(out);
      if (it >= cfg_.burn_in && (it - cfg_.burn_in) % cfg_.thin == 0) {
        out.draws.push_back(state_);
        out.j_trace.push_back(state_.j());
        out.logpost_trace.push_back(cached_log_posterior());
      }
    }
    out.accept = stats_;
    summarize(out);
    return out;
  }

 private:
  bool in_burnin() const { return iter_ < cfg_.burn_in; }

  LevyFamily family() const { return make_family(kind_, h_, state_.gamma, state_.eta, cfg_.alpha); }

  double loglik_delta(double d_ssr, double /*sigma2*/) const {
    return cfg_.flat_likelihood ? 0.0 : -0.5 * d_ssr / state_.sigma2;
  }

  // ssr change if column `col` scaled by delta_beta is added to the fit
  double ssr_delta_add(const std::vector<double>& col, double delta_beta) const {
    double d = 0.0;
    for (int i = 0; i < data_.n(); ++i) {
      const double r = data_.ys[i] - fitted_[i];
      const double rn = r - delta_beta * col[i];
      d += rn * rn - r * r;
    }
    return d;
  }

  // ssr change when point j's contribution beta*col_old is replaced by
  // beta_new * col_new
  double ssr_delta_swap(const std::vector<double>& col_old, double beta_old,
                        const std::vector<double>& col_new, double beta_new) const {
    double d = 0.0;
    for (int i = 0; i < data_.n(); ++i) {
      const double r = data_.ys[i] - fitted_[i];
      const double rn = r + beta_old * col_old[i] - beta_new * col_new[i];
      d += rn * rn - r * r;
    }
    return d;
  }

  void apply_add(const std::vector<double>& col, double delta_beta, double d_ssr) {
    for (int i = 0; i < data_.n(); ++i) fitted_[i] += delta_beta * col[i];
    ssr_ += d_ssr;
  }

  void apply_swap(const std::vector<double>& col_old, double beta_old,
                  const std::vector<double>& col_new, double beta_new, double d_ssr) {
    for (int i = 0; i < data_.n(); ++i)
      fitted_[i] += beta_new * col_new[i] - beta_old * col_old[i];
    ssr_ += d_ssr;
  }

  std::vector<double> column(const OmegaPoint& om) const {
    std::vector<double> col(data_.n());
    eval_column_serial(spec_, state_.rho, om, data_.xs, col);
    return col;
  }

  // P(proposed beta lands in the truncation region | current beta)
  double trunc_entry_prob(double beta, double step) const {
    const double w = state_.eta > 0 ? h_.epsilon / state_.eta : 0.0;
    return norm_cdf((w - beta) / step) - norm_cdf((-w - beta) / step);
  }

  void adapt(double& s, bool accepted, long& count) {
    if (!in_burnin()) return;
    ++count;
    const double kappa = std::pow(static_cast<double>(count), -0.6);
    s *= std::exp(kappa * ((accepted ? 1.0 : 0.0) - cfg_.target_accept));
    s = std::clamp(s, 1e-6, 1e6);
  }

  // ---- trans-dimensional moves -------------------------------------------
  //
  // Acceptance ratios (log scale), with q_b the birth beta-proposal density,
  // pi_om the omega prior density and Phi the truncation-entry probability
  // of the beta random walk:
  //
  //  birth (reverse = update-death):
  //    dlik + log nu(beta*) + log(|Omega| pi_om(om*)) - log(J+1)      [posterior]
  //    + log p_u - log(J+1) + log Phi(beta*)                          [reverse]
  //    - log p_b - log q_b(beta*) - log pi_om(om*)                    [forward]
  //  update-death of point j (reverse = birth):
  //    the exact negatives, with J the pre-move point count.
  //  explicit pair: same with p_u Phi replaced by the uniform choice 1/(J+1)
  //    and the move-choice probabilities cancelling.
  void birth(bool explicit_pair) {
    const LevyFamily fam = family();
    SupportPoint p;
    p.beta = sample_birth_beta(fam, rng_);
    p.omega.chi = rng_.uniform(spec_.xlo, spec_.xhi);
    p.omega.lambda = rng_.gamma(h_.a_lambda, h_.b_lambda);
    const long j = state_.j();
    const auto col = column(p.omega);
    const double d_ssr = ssr_delta_add(col, p.beta);
    double la = loglik_delta(d_ssr, state_.sigma2) + levy_log_intensity_beta(fam, p.beta) +
                std::log(h_.omega_volume) - std::log(j + 1.0) -
                log_birth_beta_density(fam, p.beta);
    if (explicit_pair) {
      la += -std::log(j + 1.0);
    } else {
      la += std::log(cfg_.p_update) +
            std::log(std::max(trunc_entry_prob(p.beta, s_beta_), 1e-300)) -
            std::log(j + 1.0) - std::log(cfg_.p_birth);
    }
    MoveStats& st = stats_.birth;
    if (!in_burnin()) ++st.proposed;
    if (std::log(rng_.uniform()) < la) {
      state_.points.push_back(p);
      cols_.push_back(col);
      apply_add(col, p.beta, d_ssr);
      sum_abs_beta_ += std::abs(p.beta);
      if (!in_burnin()) ++st.accepted;
    }
  }

  void death_explicit() {
    const long j = state_.j();
    if (!in_burnin()) ++stats_.death_explicit.proposed;
    if (j == 0) return;
    const LevyFamily fam = family();
    const long k = static_cast<long>(rng_.uniform() * j);
    const SupportPoint p = state_.points[k];
    const double d_ssr = ssr_delta_add(cols_[k], -p.beta);
    const double la = loglik_delta(d_ssr, state_.sigma2) -
                      levy_log_intensity_beta(fam, p.beta) - std::log(h_.omega_volume) +
                      std::log(double(j)) + log_birth_beta_density(fam, p.beta) +
                      std::log(double(j));
    if (std::log(rng_.uniform()) < la) {
      apply_add(cols_[k], -p.beta, d_ssr);
      remove_point(k);
      if (!in_burnin()) ++stats_.death_explicit.accepted;
    }
  }

  void update_move() {
    const long j = state_.j();
    if (j == 0) return;
    const long k = static_cast<long>(rng_.uniform() * j);
    update_beta(k);
    if (state_.j() < j) return;  // the beta step deleted the point
    update_chi(k);
    update_lambda(k);
  }

  void update_beta(long k) {
    const LevyFamily fam = family();
    SupportPoint& p = state_.points[k];
    const double beta_new = p.beta + s_beta_ * rng_.normal();
    const long j = state_.j();
    if (std::abs(beta_new) * state_.eta <= h_.epsilon) {
      // proposal entered the truncation region: treat as a death of point k
      const double d_ssr = ssr_delta_add(cols_[k], -p.beta);
      const double la = loglik_delta(d_ssr, state_.sigma2) -
                        levy_log_intensity_beta(fam, p.beta) - std::log(h_.omega_volume) +
                        std::log(double(j)) + std::log(cfg_.p_birth) +
                        log_birth_beta_density(fam, p.beta) - std::log(cfg_.p_update) -
                        std::log(std::max(trunc_entry_prob(p.beta, s_beta_), 1e-300)) +
                        std::log(double(j));
      if (!in_burnin()) ++stats_.update_death.proposed;
      if (std::log(rng_.uniform()) < la) {
        apply_add(cols_[k], -p.beta, d_ssr);
        remove_point(k);
        if (!in_burnin()) ++stats_.update_death.accepted;
      }
      return;
    }
    if (!in_burnin()) ++stats_.update_beta.proposed;
    bool acc = false;
    const double li_new = levy_log_intensity_beta(fam, beta_new);
    if (li_new != kNegInf) {  // negative proposals for the positive family land here
      const double d_ssr = ssr_delta_add(cols_[k], beta_new - p.beta);
      const double la = loglik_delta(d_ssr, state_.sigma2) + li_new -
                        levy_log_intensity_beta(fam, p.beta);
      if (std::log(rng_.uniform()) < la) {
        apply_add(cols_[k], beta_new - p.beta, d_ssr);
        sum_abs_beta_ += std::abs(beta_new) - std::abs(p.beta);
        p.beta = beta_new;
        acc = true;
      }
    }
    if (!in_burnin()) stats_.update_beta.accepted += acc;
    adapt(s_beta_, acc, n_beta_);
  }

  void update_chi(long k) {
    SupportPoint& p = state_.points[k];
    const double chi_new = p.omega.chi + s_chi_ * rng_.normal();
    if (!in_burnin()) ++stats_.update_chi.proposed;
    bool acc = false;
    if (chi_new >= spec_.xlo && chi_new <= spec_.xhi) {
      OmegaPoint om_new{chi_new, p.omega.lambda};
      const auto col_new = column(om_new);
      const double d_ssr = ssr_delta_swap(cols_[k], p.beta, col_new, p.beta);
      const double la = loglik_delta(d_ssr, state_.sigma2);
      if (std::log(rng_.uniform()) < la) {
        apply_swap(cols_[k], p.beta, col_new, p.beta, d_ssr);
        cols_[k] = col_new;
        p.omega = om_new;
        acc = true;
      }
    }
    if (!in_burnin()) stats_.update_chi.accepted += acc;
    adapt(s_chi_, acc, n_chi_);
  }

  void update_lambda(long k) {
    SupportPoint& p = state_.points[k];
    const double lam_new = p.omega.lambda * std::exp(s_lam_ * rng_.normal());
    if (!in_burnin()) ++stats_.update_lambda.proposed;
    OmegaPoint om_new{p.omega.chi, lam_new};
    const auto col_new = column(om_new);
    const double d_ssr = ssr_delta_swap(cols_[k], p.beta, col_new, p.beta);
    const double la = loglik_delta(d_ssr, state_.sigma2) +
                      gamma_log_pdf(lam_new, h_.a_lambda, h_.b_lambda) -
                      gamma_log_pdf(p.omega.lambda, h_.a_lambda, h_.b_lambda) +
                      std::log(lam_new) - std::log(p.omega.lambda);
    bool acc = false;
    if (std::log(rng_.uniform()) < la) {
      apply_swap(cols_[k], p.beta, col_new, p.beta, d_ssr);
      cols_[k] = col_new;
      p.omega = om_new;
      acc = true;
    }
    if (!in_burnin()) stats_.update_lambda.accepted += acc;
    adapt(s_lam_, acc, n_lam_);
  }

  // ---- fixed-dimension moves ---------------------------------------------
  void hyper_moves() {
    // gamma: conjugate given J (Poisson count with rate gamma * c_eps)
    const double c_eps = nu_plus_per_gamma(family());
    state_.gamma = rng_.gamma(h_.a_gamma + state_.j(), h_.b_gamma + c_eps);
    update_eta();
    // sigma2: conjugate inverse gamma
    if (cfg_.flat_likelihood) {
      state_.sigma2 = 1.0 / rng_.gamma(cfg_.a_sigma, cfg_.b_sigma);
    } else {
      state_.sigma2 =
          1.0 / rng_.gamma(cfg_.a_sigma + 0.5 * data_.n(), cfg_.b_sigma + 0.5 * ssr_);
    }
    if (cfg_.infer_rho && spec_.kind == KernelKind::PowerExp) update_rho();
  }

  void update_eta() {
    const double eta_new = state_.eta * std::exp(s_eta_ * rng_.normal());
    if (!in_burnin()) ++stats_.eta.proposed;
    bool acc = false;
    // moving eta moves the support boundary; proposals stranding an existing
    // coefficient inside the truncation region have zero prior density
    double min_abs = std::numeric_limits<double>::infinity();
    for (const auto& p : state_.points) min_abs = std::min(min_abs, std::abs(p.beta));
    if (state_.j() == 0 || min_abs * eta_new > h_.epsilon) {
      const long j = state_.j();
      double dl = log_prior_eta(eta_new, h_) - log_prior_eta(state_.eta, h_) +
                  std::log(eta_new) - std::log(state_.eta);  // log-scale walk Jacobian
      if (kind_ == LevyKind::SaS) {
        dl += -cfg_.alpha * j * (std::log(eta_new) - std::log(state_.eta));
      } else {
        dl += -(eta_new - state_.eta) * sum_abs_beta_;
      }
      // nu_plus does not depend on eta under the product-scale truncation
      if (std::log(rng_.uniform()) < dl) {
        state_.eta = eta_new;
        acc = true;
      }
    }
    if (!in_burnin()) stats_.eta.accepted += acc;
    adapt(s_eta_, acc, n_eta_);
  }

  void update_rho() {
    const double rho_new = state_.rho * std::exp(s_rho_ * rng_.normal());
    if (!in_burnin()) ++stats_.rho.proposed;
    // all kernel columns change: full refit at the proposed exponent
    std::vector<double> fitted_new(data_.n(), 0.0);
    accumulate_curve(spec_, rho_new, state_.points, data_.xs, fitted_new);
    double ssr_new = 0.0;
    for (int i = 0; i < data_.n(); ++i) {
      const double r = data_.ys[i] - fitted_new[i];
      ssr_new += r * r;
    }
    const double la = loglik_delta(ssr_new - ssr_, state_.sigma2) +
                      gamma_log_pdf(rho_new, cfg_.rho_prior_shape, cfg_.rho_prior_rate) -
                      gamma_log_pdf(state_.rho, cfg_.rho_prior_shape, cfg_.rho_prior_rate) +
                      std::log(rho_new) - std::log(state_.rho);
    bool acc = false;
    if (std::log(rng_.uniform()) < la) {
      state_.rho = rho_new;
      fitted_ = std::move(fitted_new);
      ssr_ = ssr_new;
      rebuild_columns();
      acc = true;
    }
    if (!in_burnin()) stats_.rho.accepted += acc;
    adapt(s_rho_, acc, n_rho_);
  }

  // ---- bookkeeping ---------------------------------------------------------
  void remove_point(long k) {
    sum_abs_beta_ -= std::abs(state_.points[k].beta);
    state_.points.erase(state_.points.begin() + k);
    cols_.erase(cols_.begin() + k);
  }

  void rebuild_columns() {
    cols_.clear();
    for (const auto& p : state_.points) cols_.push_back(column(p.omega));
  }

  void refresh_cache(FitResult& out) {
    std::vector<double> full(data_.n(), 0.0);
    accumulate_curve_serial(spec_, state_.rho, state_.points, data_.xs, full);
    double scale = 1.0, drift = 0.0;
    for (int i = 0; i < data_.n(); ++i) scale = std::max(scale, std::abs(full[i]));
    for (int i = 0; i < data_.n(); ++i)
      drift = std::max(drift, std::abs(fitted_[i] - full[i]) / scale);
    out.cache_drift_max = std::max(out.cache_drift_max, drift);
    fitted_ = std::move(full);
    double ssr = 0.0;
    for (int i = 0; i < data_.n(); ++i) {
      const double r = data_.ys[i] - fitted_[i];
      ssr += r * r;
    }
    ssr_ = ssr;
    double sab = 0.0;
    for (const auto& p : state_.points) sab += std::abs(p.beta);
    sum_abs_beta_ = sab;
  }

  double cached_log_posterior() const {
    const LevyFamily fam = make_family(kind_, h_, state_.gamma, state_.eta, cfg_.alpha);
    double lp = gamma_log_pdf(state_.gamma, h_.a_gamma, h_.b_gamma) +
                log_prior_eta(state_.eta, h_) - nu_plus(fam) -
                std::lgamma(static_cast<double>(state_.j()) + 1.0);
    const double log_om = std::log(h_.omega_volume / spec_.width());
    for (const auto& p : state_.points)
      lp += levy_log_intensity_beta(fam, p.beta) + log_om +
            gamma_log_pdf(p.omega.lambda, h_.a_lambda, h_.b_lambda);
    if (!cfg_.flat_likelihood)
      lp += -0.5 * data_.n() * std::log(2.0 * M_PI * state_.sigma2) -
            0.5 * ssr_ / state_.sigma2;
    lp += log_inv_gamma_pdf(state_.sigma2, cfg_.a_sigma, cfg_.b_sigma);
    if (cfg_.infer_rho)
      lp += gamma_log_pdf(state_.rho, cfg_.rho_prior_shape, cfg_.rho_prior_rate);
    return lp;
  }

  void summarize(FitResult& out) {
    out.grid = cfg_.summary_grid.empty() ? data_.xs : cfg_.summary_grid;
    const int ng = static_cast<int>(out.grid.size());
    const int nd = static_cast<int>(out.draws.size());
    if (nd == 0 || ng == 0) return;
    std::vector<double> mat(static_cast<std::size_t>(nd) * ng);
    std::vector<double> row(ng);
    for (int d = 0; d < nd; ++d) {
      accumulate_curve(spec_, out.draws[d].rho, out.draws[d].points, out.grid,
                       std::span<double>(row));
      std::copy(row.begin(), row.end(), mat.begin() + static_cast<std::size_t>(d) * ng);
    }
    out.mean_curve.assign(ng, 0.0);
    for (int d = 0; d < nd; ++d)
      for (int i = 0; i < ng; ++i) out.mean_curve[i] += mat[static_cast<std::size_t>(d) * ng + i];
    for (double& v : out.mean_curve) v /= nd;
    out.band_lower.resize(ng);
    out.band_upper.resize(ng);
#ifdef _OPENMP
    column_quantiles_omp(mat, nd, ng, cfg_.band_lo, cfg_.band_hi, out.band_lower,
                         out.band_upper);
#else
    column_quantiles_serial(mat, nd, ng, cfg_.band_lo, cfg_.band_hi, out.band_lower,
                            out.band_upper);
#endif
  }

  const Dataset& data_;
  const Hyperparams& h_;
  LevyKind kind_;
  const KernelSpec& spec_;
  const McmcConfig& cfg_;
  Rng rng_;
  LarkState state_;
  std::vector<double> fitted_;
  std::vector<std::vector<double>> cols_;
  double ssr_ = 0.0;
  double sum_abs_beta_ = 0.0;
  double s_beta_, s_chi_, s_lam_, s_eta_, s_rho_;
  long n_beta_ = 0, n_chi_ = 0, n_lam_ = 0, n_eta_ = 0, n_rho_ = 0;
  long iter_ = 0;
  AcceptanceTable stats_;
};

}  // namespace

FitResult run(const Dataset& data, const Hyperparams& h, LevyKind kind,
              const KernelSpec& spec, const McmcConfig& cfg) {
  Sampler s(data, h, kind, spec, cfg);
  return s.run();
}

std::pair<double, double> birth_death_log_ratio_pair(const LevyFamily& fam,
                                                     const Hyperparams& h,
                                                     const KernelSpec& spec,
                                                     const McmcConfig& cfg, int j_before,
                                                     double beta, const OmegaPoint& om,
                                                     double step_beta) {
  // flat likelihood: the posterior parts reduce to the point-process factors;
  // the omega prior density cancels between target and proposal on both sides
  (void)spec;
  const double li = levy_log_intensity_beta(fam, beta);
  const double w = h.epsilon / fam.eta;
  const double phi = norm_cdf((w - beta) / step_beta) - norm_cdf((-w - beta) / step_beta);
  (void)om;
  const double la_birth = li + std::log(h.omega_volume) - 2.0 * std::log(j_before + 1.0) +
                          std::log(cfg.p_update) + std::log(phi) - std::log(cfg.p_birth) -
                          log_birth_beta_density(fam, beta);
  // matched update-death from the (j_before+1)-point state
  const double la_death = -li - std::log(h.omega_volume) +
                          2.0 * std::log(j_before + 1.0) + std::log(cfg.p_birth) +
                          log_birth_beta_density(fam, beta) - std::log(cfg.p_update) -
                          std::log(phi);
  return {la_birth, la_death};
}

}  // namespace lark
