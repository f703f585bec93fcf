#include "qspec/repcore.hpp"

#include <cmath>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

void require_dominant(int rank, const Weight& lambda) {
  RootSystem(rank).check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
}

}  // namespace

HighestWeightFamily::HighestWeightFamily(Weight base, Weight direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  if (base_.rank() != direction_.rank() || base_.rank() < 1)
    throw DomainError("family base and direction must share a rank >= 1");
  if (!base_.is_dominant()) throw DomainError("family base " + base_.to_string() + " is not dominant");
  if (!direction_.is_dominant() || direction_.is_zero())
    throw DomainError("family direction " + direction_.to_string() + " must be dominant and nonzero");
}

QuantumDimension quantum_dim(int rank, const Weight& lambda) {
  require_dominant(rank, lambda);
  const Weight shifted = lambda + Weight::rho(rank);
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (const auto& r : positive_roots(rank)) {
    num *= qnum(pair_weight_root(shifted, r));
    den *= qnum(rho_pairing(r));
  }
  return {exact_div(num, den), classical_dim(rank, lambda)};
}

BigInt classical_dim(int rank, const Weight& lambda) {
  require_dominant(rank, lambda);
  const Weight shifted = lambda + Weight::rho(rank);
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& r : positive_roots(rank)) {
    num *= pair_weight_root(shifted, r);
    den *= rho_pairing(r);
  }
  if (num % den != 0) throw NonExactDivision("classical Weyl quotient is not an integer");
  return num / den;
}

double log_classical_dim(int rank, const Weight& lambda) {
  require_dominant(rank, lambda);
  const Weight shifted = lambda + Weight::rho(rank);
  double acc = 0.0;
  for (const auto& r : positive_roots(rank))
    acc += std::log(static_cast<double>(pair_weight_root(shifted, r))) -
           std::log(static_cast<double>(rho_pairing(r)));
  return acc;
}

double log_quantum_dim_at(int rank, const Weight& lambda, double base) {
  require_dominant(rank, lambda);
  if (!(base > 0.0) || base == 1.0) throw DomainError("quantum dimension base must be positive and != 1");
  const bool below_one = base < 1.0;
  const double r = below_one ? base : 1.0 / base;
  const double log_base = std::log(base);
  const Weight shifted = lambda + Weight::rho(rank);

  // Accumulate the bounded factors as a product, the exponent separately.
  double bounded = 1.0;
  std::int64_t exponent = 0;
  for (const auto& root : positive_roots(rank)) {
    const auto x = pair_weight_root(shifted, root);
    const auto y = rho_pairing(root);
    const double rx = std::pow(r, 2.0 * static_cast<double>(x));
    const double ry = std::pow(r, 2.0 * static_cast<double>(y));
    bounded *= (1.0 - rx) / (1.0 - ry);
    exponent += below_one ? (y - x) : (x - y);
  }
  return std::log(bounded) + static_cast<double>(exponent) * log_base;
}

double quantum_dim_numeric(int rank, const Weight& lambda, QPoint p) {
  require_dominant(rank, lambda);
  const Weight shifted = lambda + Weight::rho(rank);
  const double q = p.value();
  double value = 1.0;
  for (const auto& root : positive_roots(rank)) {
    const auto x = pair_weight_root(shifted, root);
    const auto y = rho_pairing(root);
    value *= std::pow(q, static_cast<double>(y - x)) * (1.0 - std::pow(q, 2.0 * static_cast<double>(x))) /
             (1.0 - std::pow(q, 2.0 * static_cast<double>(y)));
  }
  return value;
}

std::int64_t trailing_exponent_formula(int rank, const Weight& lambda) {
  require_dominant(rank, lambda);
  return -two_rho_pairing(lambda);
}

std::int64_t family_slope(int rank, const HighestWeightFamily& family) {
  RootSystem(rank).check_weight(family.direction());
  return -two_rho_pairing(family.direction());
}

std::int64_t si_slope(int rank, const HighestWeightFamily& family, int row) {
  if (rank < 2) throw DomainError("row-product slopes need rank >= 2");
  RootSystem(rank).check_weight(family.base());
  if (row < 1 || row > rank)
    throw DomainError("row index " + std::to_string(row) + " out of range 1.." + std::to_string(rank));

  const Weight& dir = family.direction();
  if (dir != Weight::fundamental(rank, 1) + Weight::fundamental(rank, rank))
    throw DomainError("row-product slopes need direction omega_1 + omega_l");
  int interior = 0;
  for (int k = 2; k < rank; ++k) {
    const auto n = family.base()(k);
    if (n == 0) continue;
    if (n != 1 || ++interior > 1)
      throw DomainError("family base " + family.base().to_string() + " is not of the n_a in {0,1} shape");
  }

  std::int64_t slope = 0;
  for (int j = row + 1; j <= rank + 1; ++j) slope -= pair_weight_root(dir, {row, j});
  return slope;
}

}  // namespace qspec
