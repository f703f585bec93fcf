#include <doctest.h>

#include <cmath>

#include "qspec/errors.hpp"
#include "qspec/repcore.hpp"
#include "qspec/verify.hpp"
#include "qspec/weight_oracle.hpp"

using namespace qspec;

namespace {

HighestWeightFamily family(int l, Weight base) {
  return HighestWeightFamily(std::move(base), Weight::fundamental(l, 1) + Weight::fundamental(l, l));
}

}  // namespace

TEST_SUITE("repcore") {
  TEST_CASE("quantum dimension examples") {
    CHECK(quantum_dim(1, Weight{2}).exact == qnum(3));
    for (int n = 0; n <= 6; ++n) CHECK(quantum_dim(1, Weight{n}).exact == qnum(n + 1));
    const auto adj = quantum_dim(2, Weight{1, 1});
    CHECK(adj.exact == qnum(2) * qnum(4));
    CHECK(adj.classical_value == 8);
    for (int l = 1; l <= 4; ++l) {
      const auto triv = quantum_dim(l, Weight::zero(l));
      CHECK(triv.exact == LaurentPoly(1));
      CHECK(triv.classical_value == 1);
    }
  }

  TEST_CASE("classical dimension examples") {
    CHECK(classical_dim(2, Weight{1, 0}) == 3);
    CHECK(classical_dim(2, Weight{1, 1}) == 8);
    CHECK(classical_dim(3, Weight{1, 0, 1}) == 15);
    CHECK(classical_dim(3, Weight::zero(3)) == 1);
    // su(5), Lambda = 2 rho: 3^10
    CHECK(classical_dim(4, Weight{2, 2, 2, 2}) == 59049);
  }

  TEST_CASE("non-dominant weights are rejected") {
    CHECK_THROWS_AS(quantum_dim(2, Weight{1, -1}), DomainError);
    CHECK_THROWS_AS(classical_dim(2, Weight{-1, 0}), DomainError);
    CHECK_THROWS_AS(quantum_dim(2, Weight{1, 1, 1}), DomainError);
  }

  TEST_CASE("numeric quantum dimension") {
    // q^-4 + 2q^-2 + 2 + 2q^2 + q^4 at q = 1/2 is 16 + 8 + 2 + 0.5 + 0.0625
    CHECK(quantum_dim_numeric(2, Weight{1, 1}, QPoint(0.5)) == doctest::Approx(26.5625).epsilon(1e-14));
    CHECK(quantum_dim_numeric(3, Weight::zero(3), QPoint(0.5)) == 1.0);
    for (int l = 1; l <= 3; ++l)
      for (const auto& w : dominant_lattice(l, 2))
        for (double q : {0.2, 0.5, 0.9}) {
          const double exact = eval(quantum_dim(l, w).exact, QPoint(q));
          CHECK(quantum_dim_numeric(l, w, QPoint(q)) == doctest::Approx(exact).epsilon(1e-13));
        }
  }

  TEST_CASE("large weight matches its leading monomial") {
    const Weight big{40, 40};
    const double q = 0.5;
    const double value = quantum_dim_numeric(2, big, QPoint(q));
    REQUIRE(std::isfinite(value));
    REQUIRE(value > 0.0);
    CHECK(value == doctest::Approx(eval(quantum_dim(2, big).exact, QPoint(q))).epsilon(1e-12));
    // dim_q ~ C q^{-(2rho, Lambda)} with C = prod 1 / (1 - q^{2 (rho, alpha)})
    double c = 1.0;
    for (const auto& r : positive_roots(2)) c /= 1.0 - std::pow(q, 2.0 * rho_pairing(r));
    const double leading = c * std::pow(q, -static_cast<double>(two_rho_pairing(big)));
    CHECK(std::abs(value / leading - 1.0) < 0.01);
    CHECK(log_quantum_dim_at(2, big, q) == doctest::Approx(std::log(value)).epsilon(1e-14));
  }

  TEST_CASE("log quantum dimension at inverse base equals that at the base") {
    for (const auto& w : dominant_lattice(3, 2))
      for (double q : {0.3, 0.7}) CHECK(log_quantum_dim_at(3, w, 1.0 / q) == doctest::Approx(log_quantum_dim_at(3, w, q)).epsilon(1e-12));
    const Weight far{500, 0, 500};
    CHECK(std::isfinite(log_quantum_dim_at(3, far, 0.1)));
  }

  TEST_CASE("log classical dimension") {
    CHECK(log_classical_dim(2, Weight{1, 1}) == doctest::Approx(std::log(8.0)));
    CHECK(log_classical_dim(4, Weight{2, 2, 2, 2}) == doctest::Approx(10.0 * std::log(3.0)));
  }

  TEST_CASE("trailing exponent formula") {
    CHECK(trailing_exponent_formula(2, Weight{1, 1}) == -4);
    CHECK(trailing_exponent_formula(3, Weight::zero(3)) == 0);
    for (int m = 0; m <= 6; ++m) CHECK(trailing_exponent_formula(3, Weight{m, 0, m}) == -6 * m);
  }

  TEST_CASE("exponent range is plus/minus two rho pairing") {
    for (int l = 1; l <= 3; ++l)
      for (const auto& w : dominant_lattice(l, 2)) {
        const auto qd = quantum_dim(l, w).exact;
        CHECK(qd.trailing_exponent() == -two_rho_pairing(w));
        CHECK(qd.leading_exponent() == two_rho_pairing(w));
        CHECK(qd.trailing_exponent() == trailing_exponent_formula(l, w));
      }
  }

  TEST_CASE("palindromic, dual-invariant and classical limit") {
    for (int l = 1; l <= 3; ++l)
      for (const auto& w : dominant_lattice(l, 2)) {
        const auto qd = quantum_dim(l, w);
        CHECK(is_palindromic(qd.exact));
        CHECK(quantum_dim(l, dual_weight(w)).exact == qd.exact);
        CHECK(qd.exact.coefficient_sum() == qd.classical_value);
        CHECK(qd.classical_value == classical_dim(l, w));
        CHECK(qd.classical_value >= 1);
      }
  }

  TEST_CASE("q-Weyl product equals the character at K_2rho") {
    for (int l = 1; l <= 3; ++l)
      for (const auto& w : dominant_lattice(l, 2)) CHECK(quantum_dim(l, w).exact == char_at_k2rho(l, w, +1));
  }

  TEST_CASE("family slopes") {
    CHECK(family_slope(2, family(2, Weight::zero(2))) == -4);
    CHECK(family_slope(5, family(5, Weight::zero(5))) == -10);
    CHECK(family_slope(1, HighestWeightFamily(Weight{0}, Weight{2})) == -2);
    CHECK_THROWS_AS(HighestWeightFamily(Weight{0, 0}, Weight{0, 0}), DomainError);
    CHECK_THROWS_AS(HighestWeightFamily(Weight{-1, 0}, Weight{1, 1}), DomainError);
  }

  TEST_CASE("row slopes") {
    const auto f = family(4, Weight{0, 1, 0, 0});
    CHECK(si_slope(4, f, 1) == -5);
    CHECK(si_slope(4, f, 3) == -1);
    std::int64_t total = 0;
    for (int i = 1; i <= 4; ++i) total += si_slope(4, f, i);
    CHECK(total == -8);
    CHECK(total == family_slope(4, f));
  }

  TEST_CASE("row slopes over the family grid") {
    for (int l = 2; l <= 4; ++l) {
      std::vector<std::pair<int, int>> interior = {{0, 0}};
      for (int a = 2; a <= l - 1; ++a)
        for (int na : {0, 1}) interior.push_back({a, na});
      for (auto [a, na] : interior)
        for (int c1 = 0; c1 <= 2; ++c1)
          for (int c2 = 0; c2 <= 2; ++c2) {
            Weight base = Weight::zero(l);
            base(1) += c1;
            base(l) += c2;
            if (a > 0) base(a) = na;
            const auto f = family(l, base);
            CHECK(family_slope(l, f) == -2 * l);
            CHECK(si_slope(l, f, 1) == -(l + 1));
            std::int64_t total = 0;
            for (int i = 1; i <= l; ++i) {
              if (i >= 2) CHECK(si_slope(l, f, i) == -1);
              total += si_slope(l, f, i);
            }
            CHECK(total == family_slope(l, f));
            // exact trailing exponent is linear with that slope
            for (int m = 0; m < 4; ++m)
              CHECK(trailing_exponent_formula(l, f.at(m + 1)) - trailing_exponent_formula(l, f.at(m)) == -2 * l);
          }
    }
  }

  TEST_CASE("row slopes reject unsupported shapes") {
    CHECK_THROWS_AS(si_slope(1, HighestWeightFamily(Weight{0}, Weight{2}), 1), DomainError);
    CHECK_THROWS_AS(si_slope(3, HighestWeightFamily(Weight{0, 0, 0}, Weight{1, 1, 1}), 1), DomainError);
    CHECK_THROWS_AS(si_slope(4, family(4, Weight{0, 2, 0, 0}), 1), DomainError);
    CHECK_THROWS_AS(si_slope(4, family(4, Weight::zero(4)), 5), DomainError);
  }

  TEST_CASE("numeric growth ratio") {
    const double q = 0.5;
    for (int l = 2; l <= 3; ++l) {
      const auto f = family(l, Weight::zero(l));
      for (int m = 30; m < 34; ++m) {
        const double r = log_quantum_dim_at(l, f.at(m + 1), q) - log_quantum_dim_at(l, f.at(m), q);
        CHECK(std::abs(r / std::log(q) - (-2.0 * l)) < 1e-6);
        const double direct = std::log(quantum_dim_numeric(l, f.at(m + 1), QPoint(q)) /
                                       quantum_dim_numeric(l, f.at(m), QPoint(q))) / std::log(q);
        CHECK(std::abs(direct + 2.0 * l) < 1e-6);
      }
    }
  }
}
