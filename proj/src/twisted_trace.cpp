#include "qspec/twisted_trace.hpp"

#include <cmath>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

void check_same_size(Eigen::Index a, Eigen::Index b) {
  if (a != b) throw DomainError("operator dimensions do not match");
}

Eigen::MatrixXd commutator(const DiagonalOperator& d, const Eigen::MatrixXd& x) {
  const auto diag = d.eigenvalues().asDiagonal();
  return diag * x - x * diag;
}

Eigen::VectorXd geometric(Eigen::Index size, double q, double exponent) {
  Eigen::VectorXd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = std::pow(q, exponent * static_cast<double>(i + 1));
  return v;
}

}  // namespace

DiagonalOperator::DiagonalOperator(Eigen::VectorXd eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
    if (!(eigenvalues_(i) > 0.0) || !std::isfinite(eigenvalues_(i)))
      throw DomainError("diagonal operator eigenvalues must be finite and strictly positive");
}

DiagonalOperator DiagonalOperator::pow(double exponent) const {
  return DiagonalOperator(eigenvalues_.array().pow(exponent).matrix());
}

DiagonalOperator DiagonalOperator::resolvent_power(double exponent) const {
  return DiagonalOperator((eigenvalues_.array().square() + 1.0).pow(0.5 * exponent).matrix());
}

Eigen::MatrixXd DiagonalOperator::dense() const { return eigenvalues_.asDiagonal(); }

DenseOperator::DenseOperator(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("operator matrix must be square");
  if (!entries_.allFinite()) throw DomainError("operator matrix has non-finite entries");
}

DenseOperator DenseOperator::identity(Eigen::Index size) {
  return DenseOperator(Eigen::MatrixXd::Identity(size, size));
}

ModularModel make_modular_model(Eigen::Index size, QPoint q, double p, DenseOperator a, DenseOperator b) {
  if (size < 2) throw DomainError("truncation size must be >= 2");
  if (!(p >= 0.0)) throw DomainError("target dimension p must be >= 0");
  check_same_size(a.size(), size);
  check_same_size(b.size(), size);
  return ModularModel{size,
                      q,
                      p,
                      DiagonalOperator(geometric(size, q.value(), -1.0)),
                      DiagonalOperator(geometric(size, q.value(), -p)),
                      std::move(a),
                      std::move(b)};
}

ModularModel shift_model(Eigen::Index size, QPoint q, double p, ShiftWeights weights, bool include_identity) {
  if (size < 2) throw DomainError("truncation size must be >= 2");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i + 1 < size; ++i)
    b(i + 1, i) = weights == ShiftWeights::Bounded ? std::pow(q.value(), static_cast<double>(i + 1)) : 1.0;
  if (include_identity) b += Eigen::MatrixXd::Identity(size, size);
  Eigen::MatrixXd a = b.transpose();
  return make_modular_model(size, q, p, DenseOperator(std::move(a)), DenseOperator(std::move(b)));
}

double max_abs(const Eigen::MatrixXd& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd resolvent_commutator(const DiagonalOperator& dirac, const DenseOperator& b, double s) {
  check_same_size(dirac.size(), b.size());
  return commutator(dirac.resolvent_power(-s), b.entries());
}

double commutator_split_defect(const DiagonalOperator& dirac, const DenseOperator& b, double s, int k) {
  check_same_size(dirac.size(), b.size());
  if (k < 1) throw DomainError("splitting order k must be >= 1");
  const double r = s / static_cast<double>(k);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("splitting needs r = s/k in (0, 1)");

  const Eigen::MatrixXd lhs = resolvent_commutator(dirac, b, s);
  const Eigen::MatrixXd inner = commutator(dirac.resolvent_power(r), b.entries());
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(b.size(), b.size());
  for (int j = 1; j <= k; ++j) {
    const Eigen::VectorXd left = dirac.resolvent_power(-j * r).eigenvalues();
    const Eigen::VectorXd right = dirac.resolvent_power(-(k - j + 1) * r).eigenvalues();
    rhs -= left.asDiagonal() * inner * right.asDiagonal();
  }
  return max_abs(lhs - rhs);
}

std::pair<double, double> holder_exponents(double s, int k, int j) {
  if (k < 1 || j < 1 || j > k) throw DomainError("Holder index j must lie in 1..k");
  if (!(s > 0.0)) throw DomainError("s must be positive");
  const double r = s / static_cast<double>(k);
  return {s / (r * (j - 0.5)), s / (r * (k - j + 0.5))};
}

std::vector<DefectSample> twisted_defect_scan(const ModularModel& model, const std::vector<double>& s_values) {
  std::vector<DefectSample> out;
  out.reserve(s_values.size());
  const auto delta = model.modular.eigenvalues().asDiagonal();
  for (double s : s_values) {
    if (!(s > model.p)) throw DomainError("defect scan needs every s > p");
    const Eigen::MatrixXd c = resolvent_commutator(model.dirac, model.b, s);
    const double trace = (delta * model.a.entries() * c).trace();
    out.push_back({s, std::abs((s - model.p) * trace)});
  }
  return out;
}

TwistedTraceSides twisted_trace_check(const ModularModel& model, double s) {
  if (!(s > model.p)) throw DomainError("twisted trace check needs s > p");
  const Eigen::VectorXd& delta = model.modular.eigenvalues();
  const Eigen::VectorXd delta_inv = model.modular.pow(-1.0).eigenvalues();
  const Eigen::VectorXd ks = model.dirac.resolvent_power(-s).eigenvalues();
  const Eigen::MatrixXd& a = model.a.entries();
  const Eigen::MatrixXd& b = model.b.entries();
  const double eps = s - model.p;
  const Eigen::MatrixXd conjugated = delta_inv.asDiagonal() * b * delta.asDiagonal();
  const double lhs = eps * (delta.asDiagonal() * a * b * ks.asDiagonal()).trace();
  const double rhs = eps * (delta.asDiagonal() * conjugated * a * ks.asDiagonal()).trace();
  return {lhs, rhs};
}

double weighted_resolvent_trace(const DiagonalOperator& modular, const DiagonalOperator& dirac, double s) {
  check_same_size(modular.size(), dirac.size());
  return modular.eigenvalues().cwiseProduct(dirac.resolvent_power(-s).eigenvalues()).sum();
}

}  // namespace qspec
