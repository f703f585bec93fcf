#pragma once

#include <cstdint>

#include "qspec/laurent.hpp"
#include "qspec/root_system.hpp"

namespace qspec {

/// Lambda(m) = base + m * direction.
class HighestWeightFamily {
 public:
  /// Both weights must be dominant and direction nonzero.
  HighestWeightFamily(Weight base, Weight direction);

  const Weight& base() const { return base_; }
  const Weight& direction() const { return direction_; }
  int rank() const { return base_.rank(); }
  Weight at(std::int64_t m) const { return base_ + direction_.scaled(m); }

 private:
  Weight base_;
  Weight direction_;
};

struct QuantumDimension {
  LaurentPoly exact;
  BigInt classical_value;
};

/// prod_{alpha>0} [(Lambda+rho, alpha)] / [(rho, alpha)] as an exact Laurent
/// polynomial, together with the classical Weyl dimension.
QuantumDimension quantum_dim(int rank, const Weight& lambda);

/// prod_{alpha>0} (Lambda+rho, alpha) / (rho, alpha), both products formed
/// exactly and divided once.
BigInt classical_dim(int rank, const Weight& lambda);

/// Natural log of the classical dimension, accumulated in double precision.
/// Used where only magnitudes matter (zeta weights).
double log_classical_dim(int rank, const Weight& lambda);

/// dim_q evaluated in floating point from paired factor ratios
/// q^{y-x} (1 - q^{2x}) / (1 - q^{2y}), x = (Lambda+rho, alpha), y = (rho, alpha).
double quantum_dim_numeric(int rank, const Weight& lambda, QPoint p);

/// log(dim_q) at an arbitrary positive base != 1. The prefactor
/// base^{-(2 rho, Lambda)} is kept symbolic, so this never overflows.
/// For base > 1 the factors are paired as base^{x-y} (1 - base^{-2x}) / (1 - base^{-2y}).
double log_quantum_dim_at(int rank, const Weight& lambda, double base);

/// -(2 rho, Lambda): the lowest exponent occurring in dim_q V_Lambda.
std::int64_t trailing_exponent_formula(int rank, const Weight& lambda);

/// Per-step growth exponent of dim_q(Lambda(m)): -(2 rho, direction).
std::int64_t family_slope(int rank, const HighestWeightFamily& family);

/// Per-step exponent of the row product
///   S_i = prod_{j>i} [(Lambda+rho, alpha_{ij})] / [(rho, alpha_{ij})]
/// for the family shape (m + c1) omega_1 + n_a omega_a + (m + c2) omega_l.
/// Requires rank >= 2, direction omega_1 + omega_l, and a base supported on
/// nodes 1, l and at most one interior node a with n_a in {0, 1}.
std::int64_t si_slope(int rank, const HighestWeightFamily& family, int row);

}  // namespace qspec
