#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qspec/laurent.hpp"

namespace qspec {

/// Positive diagonal operator on the truncated Hilbert space.
class DiagonalOperator {
 public:
  explicit DiagonalOperator(Eigen::VectorXd eigenvalues);

  Eigen::Index size() const { return eigenvalues_.size(); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Entrywise power.
  DiagonalOperator pow(double exponent) const;
  /// (D^2 + 1)^{exponent / 2}
  DiagonalOperator resolvent_power(double exponent) const;
  Eigen::MatrixXd dense() const;

 private:
  Eigen::VectorXd eigenvalues_;
};

/// Bounded operator represented as a square matrix with finite entries.
class DenseOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd entries);
  static DenseOperator identity(Eigen::Index size);

  Eigen::Index size() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

enum class ShiftWeights {
  Bounded,  ///< weights q^m: [D, b] stays bounded
  Unit,     ///< weights 1: [D, b] unbounded, outside the twisted-trace hypotheses
};

/// D_m = q^{-m}, Delta_m = q^{-p m} for m = 1..M, plus the pair a = b^T.
struct ModularModel {
  Eigen::Index size;
  QPoint q;
  double p;
  DiagonalOperator dirac;
  DiagonalOperator modular;
  DenseOperator a;
  DenseOperator b;
};

/// b = 1 + S with S e_m = w_m e_{m+1}, a = b^T. With ShiftWeights::Bounded
/// (w_m = q^m) the model satisfies the bounded-commutator and modular
/// invariance assumptions; the identity part keeps psi(ab) nonzero in the limit.
ModularModel shift_model(Eigen::Index size, QPoint q, double p, ShiftWeights weights = ShiftWeights::Bounded,
                         bool include_identity = true);

/// Model with caller-chosen a and b on the standard D and Delta.
ModularModel make_modular_model(Eigen::Index size, QPoint q, double p, DenseOperator a, DenseOperator b);

/// max |x_ij|
double max_abs(const Eigen::MatrixXd& x);

/// Max-entry norm of
///   [(D^2+1)^{-s/2}, b] + sum_{j=1}^k (D^2+1)^{-jr/2} [(D^2+1)^{r/2}, b] (D^2+1)^{-(k-j+1)r/2},
/// r = s / k, which vanishes identically. Requires 0 < r < 1.
double commutator_split_defect(const DiagonalOperator& dirac, const DenseOperator& b, double s, int k);

/// The left-hand side [(D^2+1)^{-s/2}, b] of the splitting, for scaling the defect.
Eigen::MatrixXd resolvent_commutator(const DiagonalOperator& dirac, const DenseOperator& b, double s);

/// Conjugate Holder exponents s / (r (j - 1/2)) and s / (r (k - j + 1/2)) with r = s / k.
std::pair<double, double> holder_exponents(double s, int k, int j);

struct DefectSample {
  double s;
  double defect;
};

/// |(s - p) Tr(Delta a [(D^2+1)^{-s/2}, b])| for each s; every s must exceed p.
std::vector<DefectSample> twisted_defect_scan(const ModularModel& model, const std::vector<double>& s_values);

struct TwistedTraceSides {
  double lhs;  ///< (s - p) Tr(Delta a b K_s)
  double rhs;  ///< (s - p) Tr(Delta Delta^{-1} b Delta a K_s)
};

TwistedTraceSides twisted_trace_check(const ModularModel& model, double s);

/// Tr(Delta (D^2+1)^{-s/2}) on the truncation.
double weighted_resolvent_trace(const DiagonalOperator& modular, const DiagonalOperator& dirac, double s);

}  // namespace qspec
