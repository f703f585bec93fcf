#include "qspec/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "qspec/errors.hpp"
#include "qspec/repcore.hpp"
#include "qspec/spectral.hpp"
#include "qspec/twisted_trace.hpp"
#include "qspec/weight_oracle.hpp"

namespace qspec {

namespace {

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

struct Lattice {
  std::vector<int> ranks;
  int max_coord;
};

Lattice lattice_for(VerifyProfile profile) {
  return profile == VerifyProfile::Full ? Lattice{{1, 2, 3, 4}, 2} : Lattice{{1, 2}, 2};
}

// Runs body, turning exceptions into failures; body returns "" on success or a failure description.
template <typename Body>
CheckResult run_check(const std::string& name, const std::string& ok_detail, Body&& body) {
  try {
    std::string failure = body();
    if (failure.empty()) return {name, true, ok_detail};
    return {name, false, failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

CheckResult check_oracle_equivalence(const Lattice& lat, const VerifyHooks& hooks) {
  std::size_t count = 0;
  auto result = run_check("oracle-equivalence", "", [&]() -> std::string {
    for (int l : lat.ranks) {
      for (const auto& w : dominant_lattice(l, lat.max_coord)) {
        const LaurentPoly exact = hooks.quantum_dim_exact(l, w);
        const auto gt = multiplicities_gt(l, w);
        if (exact != character_at_k2rho(gt, 1)) return "q-Weyl formula != character at K_2rho for l=" +
                                                        std::to_string(l) + " " + w.to_string();
        const auto fr = multiplicities_freudenthal(l, w);
        const auto diff = diff_tables(gt, fr);
        if (!diff.empty())
          return "GT and Freudenthal disagree for l=" + std::to_string(l) + " " + w.to_string() + ": " + diff[0];
        ++count;
      }
    }
    return "";
  });
  if (result.passed) result.detail = std::to_string(count) + " weights";
  return result;
}

CheckResult check_bar_invariance(const Lattice& lat) {
  std::size_t count = 0;
  auto result = run_check("bar-invariance", "", [&]() -> std::string {
    for (int l : lat.ranks) {
      for (const auto& w : dominant_lattice(l, lat.max_coord)) {
        const auto table = multiplicities_gt(l, w);
        const auto plus = character_at_k2rho(table, 1);
        if (character_at_k2rho(table, -1) != plus) return "Tr(K^-1) != Tr(K) at " + w.to_string();
        const auto qd = quantum_dim(l, w).exact;
        if (!is_palindromic(qd)) return "dim_q not palindromic at " + w.to_string();
        if (quantum_dim(l, dual_weight(w)).exact != qd) return "dim_q differs on the dual of " + w.to_string();
        ++count;
      }
    }
    return "";
  });
  if (result.passed) result.detail = std::to_string(count) + " weights";
  return result;
}

CheckResult check_classical_limit(const Lattice& lat) {
  std::size_t count = 0;
  auto result = run_check("classical-limit", "", [&]() -> std::string {
    for (int l : lat.ranks) {
      for (const auto& w : dominant_lattice(l, lat.max_coord)) {
        const auto qd = quantum_dim(l, w);
        const auto patterns = multiplicities_gt(l, w).total();
        if (qd.exact.coefficient_sum() != qd.classical_value || qd.classical_value != patterns)
          return "dimension mismatch at " + w.to_string();
        ++count;
      }
    }
    return "";
  });
  if (result.passed) result.detail = std::to_string(count) + " weights";
  return result;
}

CheckResult check_prop41_slopes() {
  std::size_t count = 0;
  auto result = run_check("growth-slopes", "", [&]() -> std::string {
    for (int l = 2; l <= 4; ++l) {
      const Weight dir = Weight::fundamental(l, 1) + Weight::fundamental(l, l);
      std::vector<std::pair<int, int>> interior = {{0, 0}};
      for (int a = 2; a <= l - 1; ++a) interior.push_back({a, 1});
      for (auto [a, na] : interior) {
        for (int c1 = 0; c1 <= 2; ++c1) {
          for (int c2 = 0; c2 <= 2; ++c2) {
            Weight base = Weight::zero(l);
            base(1) += c1;
            base(l) += c2;
            if (a > 0) base(a) = na;
            const HighestWeightFamily fam(base, dir);
            const auto slope = family_slope(l, fam);
            if (slope != -2 * l) return "family slope " + std::to_string(slope) + " for l=" + std::to_string(l);
            std::int64_t total = 0;
            for (int i = 1; i <= l; ++i) {
              const auto si = si_slope(l, fam, i);
              if (si != (i == 1 ? -(l + 1) : -1)) return "row slope mismatch at i=" + std::to_string(i);
              total += si;
            }
            if (total != slope) return "row slopes do not sum to the family slope";
            for (int m = 0; m <= 6; ++m) {
              const auto lam = fam.at(m);
              if (quantum_dim(l, lam).exact.trailing_exponent() != trailing_exponent_formula(l, lam))
                return "trailing exponent mismatch at " + lam.to_string();
            }
            ++count;
          }
        }
      }
    }
    return "";
  });
  if (result.passed) result.detail = std::to_string(count) + " families";
  return result;
}

CheckResult check_prop41_numeric() {
  double worst = 0.0;
  auto result = run_check("growth-ratio", "", [&]() -> std::string {
    const QPoint q(0.5);
    for (int l = 2; l <= 4; ++l) {
      const Weight dir = Weight::fundamental(l, 1) + Weight::fundamental(l, l);
      Weight base = Weight::zero(l);
      if (l >= 3) base(2) = 1;
      const HighestWeightFamily fam(base, dir);
      for (int m = 30; m <= 34; ++m) {
        const double ratio =
            quantum_dim_numeric(l, fam.at(m + 1), q) / quantum_dim_numeric(l, fam.at(m), q);
        const double slope = std::log(ratio) / q.log();
        worst = std::max(worst, std::abs(slope + 2.0 * l));
      }
    }
    return worst < 1e-6 ? "" : "log_q ratio off by " + fmt("%.3e", worst);
  });
  if (result.passed) result.detail = "max deviation " + fmt("%.1e", worst);
  return result;
}

CheckResult check_spectral_dimension(VerifyProfile profile) {
  double worst = 0.0, worst_inv = 0.0;
  auto result = run_check("spectral-dimension", "", [&]() -> std::string {
    const std::vector<double> qs = profile == VerifyProfile::Full ? std::vector<double>{0.3, 0.5, 0.8}
                                                                  : std::vector<double>{0.5};
    for (int l : {2, 3}) {
      for (double qv : qs) {
        const auto model = default_model(l, 0, QPoint(qv));
        for (auto kernel : {Kernel::Shifted, Kernel::Pure}) {
          const double p = spectral_dimension_estimate(model, WeightKind::QDim, kernel).value;
          const double pinv = spectral_dimension_estimate(model, WeightKind::QDimInverse, kernel).value;
          worst = std::max(worst, std::abs(p - 2.0 * l));
          worst_inv = std::max(worst_inv, rel_diff(p, pinv));
        }
      }
    }
    if (worst >= 1e-3) return "estimate off by " + fmt("%.3e", worst);
    if (worst_inv >= 1e-10) return "K and K^-1 estimates differ by " + fmt("%.3e", worst_inv);
    return "";
  });
  if (result.passed) result.detail = "max |p - 2l| " + fmt("%.1e", worst);
  return result;
}

CheckResult check_residue(VerifyProfile profile) {
  double reference_change = 0.0;
  double worst = 0.0;
  auto result = run_check("residue-limit", "", [&]() -> std::string {
    const std::vector<double> qs = profile == VerifyProfile::Full ? std::vector<double>{0.3, 0.5, 0.8}
                                                                  : std::vector<double>{0.5};
    for (int l : {2, 3}) {
      for (double qv : qs) {
        const auto model = default_model(l, 0, QPoint(qv));
        for (auto kernel : {Kernel::Shifted, Kernel::Pure}) {
          const auto res = residue_limit(model, WeightKind::QDim, kernel, 2.0 * l);
          if (!(res.value > 0.0) || !std::isfinite(res.value)) return "residue not finite positive";
          worst = std::max(worst, res.relative_change);
          if (l == 2 && qv == 0.5 && kernel == Kernel::Pure) reference_change = res.relative_change;
        }
      }
    }
    // stability is gated on l=2, q=0.5, pure; the rest is reported
    return reference_change < 1e-4 ? "" : "residue unstable, relative change " + fmt("%.3e", reference_change);
  });
  if (result.passed)
    result.detail = "relative change " + fmt("%.1e", reference_change) + " (grid max " + fmt("%.1e", worst) + ")";
  return result;
}

CheckResult check_toy_closed_form() {
  return run_check("toy-closed-form", "geometric sum and residue match", [&]() -> std::string {
    for (double qv : {0.3, 0.5, 0.8}) {
      const QPoint q(qv);
      for (int l : {1, 2, 3}) {
        const auto toy = toy_model(l, q);
        for (double d : {0.05, 0.5, 1.0, 3.0}) {
          const double s = 2.0 * l + d;
          const double x = std::pow(qv, d);
          const auto z = zeta(toy, s, WeightKind::LeadingTerm, Kernel::Pure, {1e-15, 2'000'000});
          if (!z.converged || rel_diff(z.value, x / (1.0 - x)) >= 1e-12)
            return "toy zeta mismatch at q=" + fmt("%g", qv) + " s=" + fmt("%g", s);
        }
        if (qv != 0.5) continue;
        const auto res = residue_limit(toy, WeightKind::LeadingTerm, Kernel::Pure, 2.0 * l);
        if (rel_diff(res.value, 1.0 / std::log(1.0 / qv)) >= 1e-8)
          return "toy residue " + fmt("%.12g", res.value) + " at q=" + fmt("%g", qv);
      }
    }
    return "";
  });
}

CheckResult check_zero_dimension() {
  double est = 0.0;
  auto result = run_check("zero-dimension", "", [&]() -> std::string {
    const auto model = default_model(2, 0, QPoint(0.5));
    const auto z = zeta(model, 0.1, WeightKind::Classical, Kernel::Shifted);
    if (!z.converged) return "classical zeta did not converge at s = 0.1";
    est = spectral_dimension_estimate(model, WeightKind::Classical, Kernel::Shifted).value;
    return est < 0.05 ? "" : "classical spectral dimension estimate " + fmt("%.4g", est);
  });
  if (result.passed) result.detail = "estimate " + fmt("%.2e", est);
  return result;
}

CheckResult check_splitting_identity(VerifyProfile profile) {
  double worst = 0.0;
  auto result = run_check("splitting-identity", "", [&]() -> std::string {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> size_dist(50, 200), k_dist(2, 4);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), frac(0.05, 0.95);
    const int instances = profile == VerifyProfile::Full ? 20 : 5;
    for (int n = 0; n < instances; ++n) {
      const int size = size_dist(rng);
      const int k = k_dist(rng);
      const double s = k * frac(rng);
      Eigen::MatrixXd b(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) b(i, j) = unit(rng);
      Eigen::VectorXd d(size);
      for (int i = 0; i < size; ++i) d(i) = std::pow(0.5, -(i + 1.0));
      const DiagonalOperator dirac(d);
      const DenseOperator bop(b);
      const double scale = max_abs(resolvent_commutator(dirac, bop, s));
      worst = std::max(worst, commutator_split_defect(dirac, bop, s, k) / scale);
    }
    return worst < 1e-12 ? "" : "relative defect " + fmt("%.3e", worst);
  });
  if (result.passed) result.detail = "max relative defect " + fmt("%.1e", worst);
  return result;
}

CheckResult check_holder() {
  return run_check("holder-exponents", "1/p_j + 1/q_j = 1 for k <= 6", [&]() -> std::string {
    for (double s : {0.5, 3.0, 4.0, 7.25})
      for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= k; ++j) {
          const auto [pj, qj] = holder_exponents(s, k, j);
          if (std::abs(1.0 / pj + 1.0 / qj - 1.0) > 1e-14) return "conjugacy fails at k=" + std::to_string(k);
        }
    return "";
  });
}

CheckResult check_twisted_defect() {
  double first = 0.0, last = 0.0;
  auto result = run_check("twisted-defect", "", [&]() -> std::string {
    const auto model = shift_model(120, QPoint(0.5), 4.0);
    std::vector<double> s_values;
    for (int i = 0; i <= 3; ++i) s_values.push_back(4.0 + 0.5 * std::pow(2.0, -i));
    const auto scan = twisted_defect_scan(model, s_values);
    for (std::size_t i = 1; i < scan.size(); ++i)
      if (!(scan[i].defect < scan[i - 1].defect)) return "defect not strictly decreasing";
    const auto hi = twisted_trace_check(model, s_values.front());
    const auto lo = twisted_trace_check(model, s_values.back());
    first = std::abs(hi.lhs - hi.rhs);
    last = std::abs(lo.lhs - lo.rhs);
    if (!(last < first)) return "twisted trace discrepancy does not shrink";
    return "";
  });
  if (result.passed) result.detail = "discrepancy " + fmt("%.3e", first) + " -> " + fmt("%.3e", last);
  return result;
}

}  // namespace

VerifyProfile parse_profile(const std::string& s) {
  if (s == "quick") return VerifyProfile::Quick;
  if (s == "full") return VerifyProfile::Full;
  throw DomainError("unknown profile '" + s + "' (expected quick|full)");
}

std::string to_string(VerifyProfile p) { return p == VerifyProfile::Full ? "full" : "quick"; }

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json rows = Json::array();
  for (const auto& c : checks)
    rows.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return Json{{"profile", to_string(profile)}, {"checks", rows}, {"passed", all_passed()}};
}

std::vector<Weight> dominant_lattice(int rank, int max_coord) {
  if (rank < 1) throw DomainError("invalid rank");
  std::vector<Weight> out;
  std::vector<Weight::value_type> c(rank, 0);
  while (true) {
    out.emplace_back(c);
    int i = rank - 1;
    while (i >= 0 && c[i] == max_coord) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

VerifyReport run_verification(VerifyProfile profile, const VerifyHooks& hooks) {
  VerifyHooks h = hooks;
  if (!h.quantum_dim_exact) h.quantum_dim_exact = [](int l, const Weight& w) { return quantum_dim(l, w).exact; };
  const Lattice lat = lattice_for(profile);

  VerifyReport report;
  report.profile = profile;
  report.checks.push_back(check_oracle_equivalence(lat, h));
  report.checks.push_back(check_bar_invariance(lat));
  report.checks.push_back(check_classical_limit(lat));
  report.checks.push_back(check_prop41_slopes());
  report.checks.push_back(check_prop41_numeric());
  report.checks.push_back(check_toy_closed_form());
  report.checks.push_back(check_spectral_dimension(profile));
  report.checks.push_back(check_residue(profile));
  report.checks.push_back(check_zero_dimension());
  report.checks.push_back(check_splitting_identity(profile));
  report.checks.push_back(check_holder());
  report.checks.push_back(check_twisted_defect());
  return report;
}

}  // namespace qspec
