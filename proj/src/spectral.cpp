#include "qspec/spectral.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

Weight growth_direction(int rank) { return Weight::fundamental(rank, 1) + Weight::fundamental(rank, rank); }

// Fixed-order pairwise summation so tower totals do not depend on evaluation order.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 0.0;
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

class RatioWindow {
 public:
  void push(double r) {
    window_.push_back(r);
    if (window_.size() > 4) window_.pop_front();
  }
  bool stable() const {
    if (window_.size() < 4) return false;
    for (std::size_t i = 1; i < window_.size(); ++i)
      if (std::abs(window_[i] - window_[i - 1]) > kRatioStabilization * std::abs(window_[i])) return false;
    return true;
  }
  double last() const { return window_.empty() ? std::numeric_limits<double>::quiet_NaN() : window_.back(); }

 private:
  std::deque<double> window_;
};

void check_s(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("s must be a finite positive number");
}

}  // namespace

std::string to_string(EigenvalueModel m) { return m == EigenvalueModel::QNumber ? "qnumber" : "pure"; }

std::string to_string(WeightKind w) {
  switch (w) {
    case WeightKind::QDim: return "qdim";
    case WeightKind::QDimInverse: return "qdim-inverse";
    case WeightKind::Classical: return "classical";
    case WeightKind::Count: return "count";
    case WeightKind::LeadingTerm: return "leading-term";
  }
  return "?";
}

std::string to_string(Kernel k) { return k == Kernel::Shifted ? "shifted" : "pure"; }

EigenvalueModel parse_eigenvalue_model(const std::string& s) {
  if (s == "qnumber") return EigenvalueModel::QNumber;
  if (s == "pure") return EigenvalueModel::PureExponential;
  throw DomainError("unknown eigenvalue model '" + s + "' (expected qnumber|pure)");
}

WeightKind parse_weight_kind(const std::string& s) {
  for (auto w : {WeightKind::QDim, WeightKind::QDimInverse, WeightKind::Classical, WeightKind::Count,
                 WeightKind::LeadingTerm})
    if (to_string(w) == s) return w;
  throw DomainError("unknown weight '" + s + "' (expected qdim|qdim-inverse|classical|count|leading-term)");
}

Kernel parse_kernel(const std::string& s) {
  if (s == "shifted") return Kernel::Shifted;
  if (s == "pure") return Kernel::Pure;
  throw DomainError("unknown kernel '" + s + "' (expected shifted|pure)");
}

double TowerSpec::log_eigenvalue(std::int64_t m, QPoint q) const {
  const std::int64_t x = m + eig_offset;
  if (x < 1) throw DomainError("eigenvalue index m + offset must be >= 1");
  const double lq = q.log();
  if (eig_model == EigenvalueModel::PureExponential) return -static_cast<double>(x) * lq;
  // [x] = q^{-(x-1)} (1 - q^{2x}) / (1 - q^2)
  const double qq = q.value() * q.value();
  return -static_cast<double>(x - 1) * lq + std::log1p(-std::pow(q.value(), 2.0 * static_cast<double>(x))) -
         std::log1p(-qq);
}

double TowerSpec::eigenvalue(std::int64_t m, QPoint q) const { return std::exp(log_eigenvalue(m, q)); }

void SpectrumModel::validate() const {
  if (rank < 1) throw DomainError("model rank must be >= 1");
  if (towers.empty()) throw DomainError("model has no towers");
  const Weight dir = growth_direction(rank);
  for (const auto& t : towers) {
    if (t.family.rank() != rank) throw DomainError("tower rank does not match the model rank");
    if (t.k < 0 || t.k > rank) throw DomainError("tower degree k outside 0..l");
    if (t.family.direction() != dir)
      throw DomainError("tower direction " + t.family.direction().to_string() + " is not omega_1 + omega_l");
    if (t.m_start < 0) throw DomainError("tower m_start must be >= 0");
    if (t.m_start + t.eig_offset < 1) throw DomainError("tower eigenvalues must start at index >= 1");
  }
}

SpectrumModel default_model(int rank, std::int64_t twist, QPoint q, const ModelOptions& options) {
  if (rank < 1) throw DomainError("invalid rank " + std::to_string(rank) + " (need rank >= 1)");
  const Weight dir = growth_direction(rank);
  auto make = [&](int k, Weight base) {
    return TowerSpec{k, HighestWeightFamily(std::move(base), dir), options.eig_model, options.eig_offset,
                     options.m_start};
  };
  SpectrumModel model{rank, twist, q, {}};
  model.towers.push_back(make(0, Weight::zero(rank)));
  for (int k = 1; k < rank; ++k) {
    model.towers.push_back(make(k, Weight::fundamental(rank, k)));
    model.towers.push_back(make(k, Weight::fundamental(rank, k + 1)));
  }
  model.towers.push_back(make(rank, Weight::zero(rank)));
  model.validate();
  return model;
}

SpectrumModel toy_model(int rank, QPoint q) {
  if (rank < 1) throw DomainError("invalid rank " + std::to_string(rank) + " (need rank >= 1)");
  SpectrumModel model{rank, 0, q, {}};
  model.towers.push_back(TowerSpec{0, HighestWeightFamily(Weight::zero(rank), growth_direction(rank)),
                                   EigenvalueModel::PureExponential, 0, 1});
  model.validate();
  return model;
}

double log_term(const SpectrumModel& model, const TowerSpec& tower, std::int64_t m, double s, WeightKind weight,
                Kernel kernel) {
  const Weight lambda = tower.family.at(m);
  double log_w = 0.0;
  switch (weight) {
    case WeightKind::QDim: log_w = log_quantum_dim_at(model.rank, lambda, model.q.value()); break;
    case WeightKind::QDimInverse: log_w = log_quantum_dim_at(model.rank, lambda, 1.0 / model.q.value()); break;
    case WeightKind::Classical: log_w = log_classical_dim(model.rank, lambda); break;
    case WeightKind::Count: log_w = 0.0; break;
    case WeightKind::LeadingTerm:
      log_w = -static_cast<double>(two_rho_pairing(lambda)) * model.q.log();
      break;
  }
  const double log_lambda = tower.log_eigenvalue(m, model.q);
  double log_kernel = 0.0;
  if (kernel == Kernel::Pure) {
    log_kernel = -s * log_lambda;
  } else {
    // log(lambda^2 + 1) = 2 log lambda + log1p(lambda^{-2}), lambda >= 1
    log_kernel = -0.5 * s * (2.0 * log_lambda + std::log1p(std::exp(-2.0 * log_lambda)));
  }
  return log_w + log_kernel;
}

ZetaResult zeta(const SpectrumModel& model, double s, WeightKind weight, Kernel kernel,
                const ZetaOptions& options) {
  check_s(s);
  if (!(options.tol > 0.0)) throw DomainError("zeta tolerance must be positive");
  if (options.max_terms < 1) throw DomainError("max_terms must be >= 1");
  model.validate();

  const double tower_tol = options.tol / static_cast<double>(model.towers.size());
  ZetaResult result;
  result.converged = true;
  std::vector<double> tower_values;
  std::vector<double> tower_tails;

  for (const auto& tower : model.towers) {
    RatioWindow ratios;
    double sum = 0.0, comp = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    bool converged = false;
    double prev = 0.0;
    std::int64_t used = 0;
    for (std::int64_t n = 0; n < options.max_terms; ++n) {
      const std::int64_t m = tower.m_start + n;
      const double lt = log_term(model, tower, m, s, weight, kernel);
      const double t = std::exp(lt);
      // Kahan
      const double y = t - comp;
      const double acc = sum + y;
      comp = (acc - sum) - y;
      sum = acc;
      ++used;
      if (n > 0) ratios.push(std::exp(lt - prev));
      prev = lt;
      if (!ratios.stable()) continue;
      const double r = ratios.last();
      if (r >= 1.0 - 1e-9) break;
      tail = t * r / (1.0 - r);
      if (tail < tower_tol) {
        converged = true;
        break;
      }
    }
    result.terms_used += used;
    result.per_tower_ratio.push_back(ratios.last());
    if (converged) {
      tower_values.push_back(sum + tail);
      tower_tails.push_back(tail);
    } else {
      result.converged = false;
      tower_values.push_back(sum);
      tower_tails.push_back(tail);
    }
  }
  result.value = pairwise_sum(tower_values);
  result.tail_estimate = pairwise_sum(tower_tails);
  return result;
}

double partial_sum(const SpectrumModel& model, double s, WeightKind weight, Kernel kernel, std::int64_t n) {
  check_s(s);
  model.validate();
  std::vector<double> tower_values;
  for (const auto& tower : model.towers) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    for (std::int64_t i = 0; i < n; ++i)
      terms.push_back(std::exp(log_term(model, tower, tower.m_start + i, s, weight, kernel)));
    tower_values.push_back(pairwise_sum(terms));
  }
  return pairwise_sum(tower_values);
}

DimensionEstimate spectral_dimension_estimate(const SpectrumModel& model, WeightKind weight, Kernel kernel,
                                              const DimensionEstimateOptions& options) {
  check_s(options.probe);
  model.validate();
  DimensionEstimate est;
  est.probe = options.probe;
  for (std::size_t idx = 0; idx < model.towers.size(); ++idx) {
    const auto& tower = model.towers[idx];
    RatioWindow ratios;
    double prev = log_term(model, tower, tower.m_start, options.probe, weight, kernel);
    std::int64_t n = 1;
    for (; n < options.max_terms && !ratios.stable(); ++n) {
      const double lt = log_term(model, tower, tower.m_start + n, options.probe, weight, kernel);
      ratios.push(std::exp(lt - prev));
      prev = lt;
    }
    if (!ratios.stable()) {
      throw EstimationFailure("term ratios of tower " + std::to_string(idx) + " did not stabilize within " +
                              std::to_string(options.max_terms) + " terms (last ratio " +
                              std::to_string(ratios.last()) + ")");
    }
    est.per_tower_ratio.push_back(ratios.last());
    est.per_tower_terms.push_back(n);
  }
  est.mean_ratio = std::accumulate(est.per_tower_ratio.begin(), est.per_tower_ratio.end(), 0.0) /
                   static_cast<double>(est.per_tower_ratio.size());
  est.value = options.probe - std::log(est.mean_ratio) / model.q.log();
  return est;
}

std::vector<double> richardson_halving(const std::vector<double>& samples) {
  std::vector<std::vector<double>> table(samples.size());
  std::vector<double> diagonal;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    table[i].push_back(samples[i]);
    double factor = 1.0;
    for (std::size_t j = 1; j <= i; ++j) {
      factor *= 2.0;
      const double prev = table[i][j - 1];
      table[i].push_back(prev + (prev - table[i - 1][j - 1]) / (factor - 1.0));
    }
    diagonal.push_back(table[i][i]);
  }
  return diagonal;
}

ResidueResult residue_limit(const SpectrumModel& model, WeightKind weight, Kernel kernel, double p,
                            const ZetaOptions& options) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("residue abscissa must be finite and >= 0");
  ResidueResult res;
  res.epsilons = {0.2, 0.1, 0.05, 0.025};
  for (double eps : res.epsilons) {
    const auto z = zeta(model, p + eps, weight, kernel, options);
    if (!z.converged)
      throw EstimationFailure("zeta did not converge at s = " + std::to_string(p + eps) +
                              " while extrapolating the residue");
    res.scaled_values.push_back(eps * z.value);
  }
  res.extrapolated = richardson_halving(res.scaled_values);
  res.value = res.extrapolated.back();
  const double prev = res.extrapolated[res.extrapolated.size() - 2];
  res.relative_change = std::abs(res.value - prev) / std::abs(res.value);
  return res;
}

}  // namespace qspec
