#include "qspec/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qspec/errors.hpp"

namespace qspec {

QPoint::QPoint(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    std::ostringstream os;
    os << "q must satisfy 0 < q < 1, got " << q;
    throw DomainError(os.str());
  }
}

double QPoint::log() const { return std::log(q_); }

LaurentPoly::LaurentPoly(const BigInt& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Exponent e, const BigInt& coeff) {
  LaurentPoly p;
  p.add_term(e, coeff);
  return p;
}

BigInt LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::leading_exponent() const {
  if (is_zero()) throw DomainError("leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly::Exponent LaurentPoly::trailing_exponent() const {
  if (is_zero()) throw DomainError("trailing exponent of the zero polynomial");
  return terms_.begin()->first;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void LaurentPoly::add_term(Exponent e, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out += other;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly qnum(std::int64_t x) {
  if (x < 0) throw DomainError("q-number of a negative integer: " + std::to_string(x));
  LaurentPoly p;
  for (std::int64_t e = -(x - 1); e <= x - 1; e += 2) p.add_term(e, 1);
  return p;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (num.is_zero()) return {};

  const auto den_lo = den.trailing_exponent();
  const auto den_hi = den.leading_exponent();
  const BigInt& den_lead = den.terms().begin()->second;
  const auto max_exp = num.leading_exponent() - den_hi;

  LaurentPoly quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto e = rem.trailing_exponent() - den_lo;
    const BigInt& c = rem.terms().begin()->second;
    if (e > max_exp || c % den_lead != 0) {
      throw NonExactDivision("(" + num.to_string() + ") / (" + den.to_string() + ") leaves a remainder");
    }
    const BigInt factor = c / den_lead;
    quotient.add_term(e, factor);
    for (const auto& [de, dc] : den.terms()) rem.add_term(de + e, -factor * dc);
  }
  return quotient;
}

LaurentPoly bar_involution(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms()) out.add_term(-e, c);
  return out;
}

bool is_palindromic(const LaurentPoly& a) { return bar_involution(a) == a; }

double eval_at(const LaurentPoly& a, double base) {
  std::vector<double> values;
  values.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms())
    values.push_back(c.convert_to<double>() * std::pow(base, static_cast<double>(e)));
  std::sort(values.begin(), values.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });

  // Neumaier summation.
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  if (!std::isfinite(sum)) return sum;
  return sum + comp;
}

double eval(const LaurentPoly& a, QPoint p) { return eval_at(a, p.value()); }

}  // namespace qspec
