#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactlab/modular.hpp"
#include "oracles.hpp"

using namespace exactlab;

TEST_CASE("primes_in_range") {
  const auto small = primes_in_range(1, 12);
  REQUIRE(small.size() == 3);
  CHECK(small[0].value == 5);
  CHECK(small[1].value == 7);
  CHECK(small[2].value == 11);
  CHECK(small[2].residue_class_mod6 == 5);
  CHECK(small[1].residue_class_mod6 == 1);

  const auto single = primes_in_range(13, 13);
  REQUIRE(single.size() == 1);
  CHECK(single[0].value == 13);

  // sieve count minus {2, 3}: there are 25 primes below 100
  CHECK(primes_in_range(5, 100).size() == 23);
  CHECK(primes_in_range(8, 10).empty());
  CHECK_THROWS_AS(primes_in_range(10, 5), std::invalid_argument);
}

TEST_CASE("Prime::make validates") {
  CHECK_THROWS_AS(Prime::make(4), std::domain_error);
  CHECK_THROWS_AS(Prime::make(9), std::domain_error);
  CHECK_THROWS_AS(Prime::make(3), std::domain_error);
  CHECK(Prime::make(101).residue_class_mod6 == 5);
}

TEST_CASE("legendre_mod3") {
  CHECK(legendre_mod3(7) == LegendreValue::PlusOne);
  CHECK(legendre_mod3(5) == LegendreValue::MinusOne);
  CHECK(legendre_mod3(6) == LegendreValue::Zero);
  for (std::int64_t a = -30; a <= 30; ++a) {
    std::int64_t r = a % 3;
    if (r < 0) r += 3;
    CHECK(legendre_mod3(a) == legendre_mod3(r));
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Residue(2, 5)) == Residue(3, 5));
  CHECK(inverse(Residue(27, 5)) == Residue(3, 5));
  CHECK_THROWS_AS(inverse(Residue(5, 25)), NotInvertible);
}

TEST_CASE("inverse is two-sided for every prime up to 1000") {
  for (const auto& p : primes_in_range(5, 1000)) {
    const auto inv = inverse_table(p.value);
    for (std::uint64_t a = 1; a < p.value; ++a) {
      CHECK(mul_mod(a, inv[a], p.value) == 1);
      CHECK(mul_mod(inv[a], a, p.value) == 1);
    }
  }
}

TEST_CASE("reduce_rational examples") {
  CHECK(reduce_rational(BigRational(14, 27), 5) == Residue(2, 5));
  CHECK(reduce_rational(BigRational(0, 1), 7) == Residue(0, 7));
  CHECK_THROWS_AS(reduce_rational(BigRational(1, 5), 5), DenominatorNotInvertible);
}

TEST_CASE("reduce_rational is a ring homomorphism") {
  std::mt19937_64 gen(11);
  for (const auto& p : primes_in_range(5, 60)) {
    for (int i = 0; i < 100; ++i) {
      long da = static_cast<long>(gen() % 80) + 1;
      long db = static_cast<long>(gen() % 80) + 1;
      if (da % static_cast<long>(p.value) == 0) ++da;
      if (db % static_cast<long>(p.value) == 0) ++db;
      const BigRational a(static_cast<long>(gen() % 201) - 100, da);
      const BigRational b(static_cast<long>(gen() % 201) - 100, db);
      CHECK(reduce_rational(a + b, p.value) ==
            reduce_rational(a, p.value) + reduce_rational(b, p.value));
      CHECK(reduce_rational(a * b, p.value) ==
            reduce_rational(a, p.value) * reduce_rational(b, p.value));
    }
  }
}

TEST_CASE("residue arithmetic guards moduli") {
  CHECK_THROWS_AS(Residue(1, 5) + Residue(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(Residue(1, 1), std::invalid_argument);
  CHECK(Residue(2, 5).to_string() == "2 mod 5");
  CHECK(Residue::from_int(-1, 25) == Residue(24, 25));
  CHECK((-Residue(0, 7)) == Residue(0, 7));
  CHECK(Residue(3, 7).pow(6) == Residue(1, 7));
}

TEST_CASE("fermat_quotient3") {
  CHECK(fermat_quotient3(Prime::make(5)) == Residue(1, 5));
  CHECK(fermat_quotient3(Prime::make(7)) == Residue(6, 7));
  // direct big-integer evaluation: (3^10 - 1)/11 = 5368, reduced mod 11
  const BigInt q = (oracle::pow_int(3, 10) - 1) / 11;
  CHECK(fermat_quotient3(Prime::make(11)).value() == bigint_mod(q, 11));
  CHECK(fermat_quotient3(Prime::make(11)) == Residue(0, 11));
}

TEST_CASE("legendre_power_check spot values") {
  const auto r5 = legendre_power_check(Prime::make(5));
  CHECK(r5.legendre_ok);  // (-3)^2 = 9 = 4 = -1 and (5/3) = -1
  CHECK(r5.power == 4);
  const auto r7 = legendre_power_check(Prime::make(7));
  CHECK(r7.legendre_ok);  // (-3)^3 = -27 = 1 = (7/3)
  CHECK(r7.power == 1);

  // p=13, k=2: C(6,2) = 15 = 2 and C(4,2)/(-4)^2 = 6*inv(16) = 2
  const BigInt lhs = oracle::binomial(6, 2);
  const std::uint64_t rhs =
      mul_mod(bigint_mod(oracle::binomial(4, 2), 13), inv_mod(bigint_mod(oracle::pow_int(-4, 2), 13), 13), 13);
  CHECK(bigint_mod(lhs, 13) == 2);
  CHECK(rhs == 2);
}

TEST_CASE("legendre_power_check passes for primes up to 300") {
  for (const auto& p : primes_in_range(5, 300)) {
    const auto r = legendre_power_check(p);
    CHECK(r.legendre_ok);
    CHECK(r.binomials_ok);
  }
}
