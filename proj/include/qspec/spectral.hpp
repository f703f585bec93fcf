#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qspec/laurent.hpp"
#include "qspec/repcore.hpp"

namespace qspec {

/// Eigenvalue of |D| on the m-th irreducible of a tower.
enum class EigenvalueModel {
  QNumber,          ///< lambda_m = [m + t]
  PureExponential,  ///< lambda_m = q^{-(m + t)}
};

/// Per-irreducible weight applied to the kernel.
enum class WeightKind {
  QDim,         ///< Tr(K_{2rho}) = dim_q at q
  QDimInverse,  ///< Tr(K_{2rho}^{-1}) = dim_q at 1/q
  Classical,    ///< plain dimension (ordinary trace)
  Count,        ///< 1 per irreducible
  LeadingTerm,  ///< q^{-(2rho, Lambda(m))}, the lowest monomial of dim_q
};

enum class Kernel {
  Shifted,  ///< (lambda^2 + 1)^{-s/2}
  Pure,     ///< lambda^{-s}
};

std::string to_string(EigenvalueModel m);
std::string to_string(WeightKind w);
std::string to_string(Kernel k);
EigenvalueModel parse_eigenvalue_model(const std::string& s);
WeightKind parse_weight_kind(const std::string& s);
Kernel parse_kernel(const std::string& s);

/// One family V_{Lambda(m)} inside the form module of degree k, with its eigenvalue.
struct TowerSpec {
  int k = 0;
  HighestWeightFamily family;
  EigenvalueModel eig_model = EigenvalueModel::QNumber;
  std::int64_t eig_offset = 1;
  std::int64_t m_start = 1;

  /// log lambda_m; requires m + eig_offset >= 1 so the eigenvalue is >= 1.
  double log_eigenvalue(std::int64_t m, QPoint q) const;
  double eigenvalue(std::int64_t m, QPoint q) const;
};

struct SpectrumModel {
  int rank = 1;
  std::int64_t twist = 0;  ///< N, carried as a label only
  QPoint q{0.5};
  std::vector<TowerSpec> towers;

  /// Checks tower ranks, family direction omega_1 + omega_l, positive
  /// increasing eigenvalues. Does not check the tower count.
  void validate() const;
};

struct ModelOptions {
  EigenvalueModel eig_model = EigenvalueModel::QNumber;
  std::int64_t eig_offset = 1;
  std::int64_t m_start = 1;
};

/// 2l towers: degree 0 with base 0; degrees 1..l-1 with bases e_k and e_{k+1};
/// degree l with base 0. All towers grow along omega_1 + omega_l.
SpectrumModel default_model(int rank, std::int64_t twist, QPoint q, const ModelOptions& options = {});

/// A single tower Lambda(m) = m (omega_1 + omega_l) with lambda_m = q^{-m}, m >= 1.
/// With WeightKind::LeadingTerm and Kernel::Pure its zeta is q^{s-2l} / (1 - q^{s-2l}).
SpectrumModel toy_model(int rank, QPoint q);

/// log of the m-th term w_m * kappa(lambda_m) of a tower.
double log_term(const SpectrumModel& model, const TowerSpec& tower, std::int64_t m, double s, WeightKind weight,
                Kernel kernel);

struct ZetaOptions {
  double tol = 1e-12;
  std::int64_t max_terms = 1'000'000;  ///< per tower
};

struct ZetaResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
  std::vector<double> per_tower_ratio;  ///< last consecutive-term ratio of each tower
};

/// Consecutive ratios count as stabilized when four in a row agree within this relative spread.
inline constexpr double kRatioStabilization = 1e-9;

/// sum over towers and m of w_m kappa(lambda_m), truncated once the term
/// ratio r has stabilized below 1 and the geometric tail t r / (1 - r) is
/// below tol (split evenly over towers). The tail is added to the value.
/// A tower whose ratio stabilizes at r >= 1 - 1e-9, or that runs out of
/// max_terms, leaves converged = false.
ZetaResult zeta(const SpectrumModel& model, double s, WeightKind weight, Kernel kernel,
                const ZetaOptions& options = {});

/// Plain truncated sum over the first n terms of every tower.
double partial_sum(const SpectrumModel& model, double s, WeightKind weight, Kernel kernel, std::int64_t n);

struct DimensionEstimateOptions {
  double probe = 1.0;
  std::int64_t max_terms = 1'000'000;
};

struct DimensionEstimate {
  double value = 0.0;
  double probe = 0.0;
  double mean_ratio = 0.0;
  std::vector<double> per_tower_ratio;
  std::vector<std::int64_t> per_tower_terms;
};

/// p = s0 - ln(r) / ln(q), with r the stabilized term ratio at the probe s0
/// averaged over towers. Throws EstimationFailure when a tower never stabilizes.
DimensionEstimate spectral_dimension_estimate(const SpectrumModel& model, WeightKind weight, Kernel kernel,
                                              const DimensionEstimateOptions& options = {});

struct ResidueResult {
  double value = 0.0;
  std::vector<double> epsilons;       ///< 0.2, 0.1, 0.05, 0.025
  std::vector<double> scaled_values;  ///< eps * zeta(p + eps)
  std::vector<double> extrapolated;   ///< Richardson diagonal, last entry == value
  double relative_change = 0.0;       ///< between the last two diagonal entries
};

/// lim_{eps -> 0+} eps * zeta(p + eps), Richardson-extrapolated from eps in
/// {0.2, 0.1, 0.05, 0.025}. Throws EstimationFailure if a zeta call does not converge.
ResidueResult residue_limit(const SpectrumModel& model, WeightKind weight, Kernel kernel, double p,
                            const ZetaOptions& options = {1e-14, 1'000'000});

/// Richardson table for samples at step sizes h, h/2, h/4, ... assuming an
/// expansion in integer powers of h. Returns the diagonal.
std::vector<double> richardson_halving(const std::vector<double>& samples);

}  // namespace qspec
