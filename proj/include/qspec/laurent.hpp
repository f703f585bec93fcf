#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qspec {

using BigInt = boost::multiprecision::cpp_int;

/// Deformation parameter, strictly inside (0, 1).
class QPoint {
 public:
  explicit QPoint(double q);
  double value() const { return q_; }
  double log() const;

 private:
  double q_;
};

/// Integer Laurent polynomial in q with arbitrary-precision coefficients.
///
/// Kept in canonical form: zero coefficients are never stored, so the zero
/// polynomial has no terms and equality is structural.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(const BigInt& constant);
  static LaurentPoly monomial(Exponent e, const BigInt& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(Exponent e) const;

  /// Throws DomainError on the zero polynomial.
  Exponent leading_exponent() const;
  Exponent trailing_exponent() const;

  /// Value at q = 1.
  BigInt coefficient_sum() const;

  void add_term(Exponent e, const BigInt& coeff);

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  bool operator==(const LaurentPoly&) const = default;

  /// Human-readable form, e.g. "q^-2 + 1 + q^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// [x] = q^{-(x-1)} + q^{-(x-3)} + ... + q^{x-1}; [0] = 0. Negative x is rejected.
LaurentPoly qnum(std::int64_t x);

/// Returns c with c * den == num, or throws NonExactDivision / DivisionByZero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// q -> q^{-1}.
LaurentPoly bar_involution(const LaurentPoly& a);

bool is_palindromic(const LaurentPoly& a);

/// Sum of c_e q^e in double precision. Terms are added largest first with
/// compensated summation. Large |e| at small q overflows to +inf.
double eval(const LaurentPoly& a, QPoint p);

/// Numeric evaluation at any positive base (the character at q^{-1} uses base > 1).
double eval_at(const LaurentPoly& a, double base);

}  // namespace qspec
