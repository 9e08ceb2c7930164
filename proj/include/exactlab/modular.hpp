#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab {

struct NotInvertible : std::domain_error {
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// A rational whose denominator shares a factor with the modulus. Congruence
// checks must skip-and-log on this, never treat it as a pass or fail.
struct DenominatorNotInvertible : std::domain_error {
  explicit DenominatorNotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// Prime p >= 5, validated by deterministic trial division.
struct Prime {
  std::uint64_t value = 0;
  int residue_class_mod6 = 0;  // 1 or 5

  static Prime make(std::uint64_t p);  // throws std::domain_error
  std::uint64_t half() const { return (value - 1) / 2; }
};

enum class LegendreValue : int { MinusOne = -1, Zero = 0, PlusOne = 1 };

constexpr int to_int(LegendreValue v) { return static_cast<int>(v); }

/// The symbol (a/3): +1 for a = 1 (mod 3), -1 for a = 2 (mod 3), 0 for 3 | a.
LegendreValue legendre_mod3(std::int64_t a);

/// Value in Z/mZ. Arithmetic requires equal moduli.
class Residue {
public:
  Residue(std::uint64_t value, std::uint64_t modulus);
  static Residue from_int(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue pow(std::uint64_t e) const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  std::string to_string() const;  // "2 mod 5"

private:
  static void require_same_modulus(const Residue& a, const Residue& b);
  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// All primes p with max(5, lo) <= p <= hi, ascending. Plain bit sieve.
std::vector<Prime> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Two-sided inverse; throws NotInvertible when gcd(value, modulus) > 1.
Residue inverse(const Residue& r);

/// numerator * denominator^{-1} in Z/mZ; throws DenominatorNotInvertible.
Residue reduce_rational(const BigRational& q, std::uint64_t modulus);

/// Fermat quotient (3^{p-1} - 1)/p as a residue mod p, via 3^{p-1} mod p^2.
Residue fermat_quotient3(const Prime& p);

/// Proof-step congruences: (-3)^{(p-1)/2} = (p/3) (mod p), and
/// C((p-1)/2, k) = C(2k,k)/(-4)^k (mod p) for every 0 <= k <= (p-1)/2.
struct PowerCheckResult {
  bool legendre_ok = false;
  bool binomials_ok = false;
  std::uint64_t first_bad_k = 0;  // meaningful when !binomials_ok
  std::uint64_t power = 0;        // (-3)^{(p-1)/2} mod p
  std::uint64_t symbol = 0;       // (p/3) mod p
  std::uint64_t witness_k = 0;    // k the witness pair below belongs to
  std::uint64_t witness_lhs = 0;  // C((p-1)/2, k) mod p
  std::uint64_t witness_rhs = 0;  // C(2k,k) / (-4)^k mod p
};
PowerCheckResult legendre_power_check(const Prime& p);

// Low-level kernels shared by the residue code paths. Moduli must be < 2^63.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // throws NotInvertible
std::uint64_t bigint_mod(const BigInt& n, std::uint64_t m);
std::uint64_t rational_mod(const BigRational& q, std::uint64_t m);
/// inv[i] for 1 <= i <= p-1, computed in O(p); inv[0] is unused.
std::vector<std::uint64_t> inverse_table(std::uint64_t p);

}  // namespace exactlab
