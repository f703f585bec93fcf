#include <doctest.h>

#include <cmath>
#include <random>

#include "qspec/errors.hpp"
#include "qspec/laurent.hpp"

using namespace qspec;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), exp(-5, 5), coeff(-6, 6);
  LaurentPoly p;
  for (int n = count(rng); n > 0; --n) p.add_term(exp(rng), coeff(rng));
  return p;
}

double closed_qnum(int x, double q) { return (std::pow(q, -x) - std::pow(q, x)) / (1.0 / q - q); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("q-numbers") {
    CHECK(qnum(0).is_zero());
    CHECK(qnum(1) == LaurentPoly(1));
    CHECK(qnum(3) == poly({{-2, 1}, {0, 1}, {2, 1}}));
    CHECK(qnum(5).trailing_exponent() == -4);
    CHECK(qnum(5).leading_exponent() == 4);
    CHECK_THROWS_AS(qnum(-1), DomainError);
  }

  TEST_CASE("multiplication examples") {
    CHECK(qnum(2) * qnum(1) == qnum(2));
    CHECK(qnum(2) * qnum(2) == poly({{-2, 1}, {0, 2}, {2, 1}}));
    CHECK((qnum(4) * LaurentPoly()).is_zero());
  }

  TEST_CASE("canonical form drops zero coefficients") {
    LaurentPoly p = poly({{1, 3}, {1, -3}, {2, 1}});
    CHECK(p.terms().size() == 1);
    CHECK((qnum(3) - qnum(3)).is_zero());
    CHECK((qnum(3) + (-qnum(3))).terms().empty());
  }

  TEST_CASE("exact division examples") {
    CHECK(exact_div(qnum(2) * qnum(4), qnum(2)) == qnum(4));
    CHECK(exact_div(qnum(3), qnum(1)) == qnum(3));
    CHECK(exact_div(qnum(4), qnum(2)) == poly({{-2, 1}, {2, 1}}));
  }

  TEST_CASE("exact division errors") {
    CHECK_THROWS_AS(exact_div(qnum(3), LaurentPoly()), DivisionByZero);
    CHECK_THROWS_AS(exact_div(qnum(3), qnum(2)), NonExactDivision);
    CHECK(exact_div(LaurentPoly(), qnum(2)).is_zero());
  }

  TEST_CASE("bar involution") {
    CHECK(bar_involution(qnum(3)) == qnum(3));
    CHECK(bar_involution(LaurentPoly::monomial(2)) == LaurentPoly::monomial(-2));
    const auto a = poly({{-3, 2}, {1, -5}, {4, 7}});
    CHECK(bar_involution(bar_involution(a)) == a);
    CHECK(is_palindromic(qnum(2) * qnum(4)));
    CHECK(qnum(2) * qnum(4) == poly({{-4, 1}, {-2, 2}, {0, 2}, {2, 2}, {4, 1}}));
    CHECK_FALSE(is_palindromic(a));
  }

  TEST_CASE("numeric evaluation") {
    CHECK(eval(qnum(2), QPoint(0.5)) == doctest::Approx(2.5).epsilon(1e-15));
    // q^-4 + 2q^-2 + 2 + 2q^2 + q^4 at q = 1/2
    CHECK(eval(qnum(2) * qnum(4), QPoint(0.5)) == doctest::Approx(26.5625).epsilon(1e-15));
    CHECK(eval(LaurentPoly(), QPoint(0.3)) == 0.0);
    CHECK(std::isinf(eval(LaurentPoly::monomial(-20000), QPoint(0.1))));
    CHECK(eval_at(qnum(3), 2.0) == doctest::Approx(5.25));
  }

  TEST_CASE("q-number evaluation matches the closed quotient") {
    for (double q : {0.1, 0.25, 0.5, 0.75, 0.9, 0.95}) {
      for (int x = 1; x <= 200; x += (x < 20 ? 1 : 13)) {
        const double got = eval(qnum(x), QPoint(q));
        const double want = closed_qnum(x, q);
        if (!std::isfinite(want)) continue;
        CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
      }
      const double want = closed_qnum(200, q);
      if (std::isfinite(want)) CHECK(std::abs(eval(qnum(200), QPoint(q)) - want) <= 1e-12 * want);
    }
  }

  TEST_CASE("exponent queries on zero throw") {
    CHECK_THROWS_AS(LaurentPoly().leading_exponent(), DomainError);
    CHECK_THROWS_AS(LaurentPoly().trailing_exponent(), DomainError);
  }

  TEST_CASE("QPoint bounds are strict") {
    CHECK_THROWS_AS(QPoint(0.0), DomainError);
    CHECK_THROWS_AS(QPoint(1.0), DomainError);
    CHECK_THROWS_AS(QPoint(-0.5), DomainError);
    CHECK_THROWS_AS(QPoint(std::nan("")), DomainError);
    CHECK(QPoint(0.5).log() == doctest::Approx(std::log(0.5)));
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      CHECK(bar_involution(a * b) == bar_involution(a) * bar_involution(b));
      if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
      if (!a.is_zero()) CHECK(a.trailing_exponent() <= a.leading_exponent());
    }
  }

  TEST_CASE("big coefficients stay exact") {
    LaurentPoly p(1);
    for (int i = 0; i < 12; ++i) p *= qnum(40);
    CHECK(p.coefficient_sum() == boost::multiprecision::pow(BigInt(40), 12));
    LaurentPoly d = p;
    for (int i = 0; i < 12; ++i) d = exact_div(d, qnum(40));
    CHECK(d == LaurentPoly(1));
  }

  TEST_CASE("to_string") {
    CHECK(qnum(3).to_string() == "q^-2 + 1 + q^2");
    CHECK(LaurentPoly().to_string() == "0");
  }
}
