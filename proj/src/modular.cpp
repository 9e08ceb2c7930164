#include "exactlab/modular.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace exactlab {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;  // a, b < m < 2^63, no overflow
  return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  a %= m;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1)
    throw NotInvertible("inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

std::uint64_t bigint_mod(const BigInt& n, std::uint64_t m) {
  // mpz_fdiv_ui uses floor division, so the result is non-negative
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m));
}

std::uint64_t rational_mod(const BigRational& q, std::uint64_t m) {
  std::uint64_t den = bigint_mod(q.den(), m);
  std::uint64_t g = std::gcd(den, m);
  if (g != 1)
    throw DenominatorNotInvertible("reduce_rational: denominator of " + q.to_string() +
                                   " shares factor " + std::to_string(g) + " with modulus " +
                                   std::to_string(m));
  return mul_mod(bigint_mod(q.num(), m), inv_mod(den, m), m);
}

std::vector<std::uint64_t> inverse_table(std::uint64_t p) {
  std::vector<std::uint64_t> inv(p);
  if (p > 1) inv[1] = 1;
  for (std::uint64_t i = 2; i < p; ++i) inv[i] = mul_mod(p - p / i, inv[p % i], p);
  return inv;
}

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Prime Prime::make(std::uint64_t p) {
  if (p < 5) throw std::domain_error("Prime: p must be >= 5");
  if (!is_prime_u64(p)) throw std::domain_error("Prime: " + std::to_string(p) + " is not prime");
  Prime result;
  result.value = p;
  result.residue_class_mod6 = static_cast<int>(p % 6);
  return result;
}

LegendreValue legendre_mod3(std::int64_t a) {
  std::int64_t m = a % 3;
  if (m < 0) m += 3;
  switch (m) {
    case 0: return LegendreValue::Zero;
    case 1: return LegendreValue::PlusOne;
    default: return LegendreValue::MinusOne;
  }
}

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
  value_ = value % modulus;
}

Residue Residue::from_int(std::int64_t value, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  return Residue(static_cast<std::uint64_t>(v), modulus);
}

void Residue::require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("Residue: modulus mismatch (" + std::to_string(a.modulus_) +
                                " vs " + std::to_string(b.modulus_) + ")");
}

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(*this, o);
  return Residue(add_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same_modulus(*this, o);
  return Residue(sub_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(*this, o);
  return Residue(mul_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-() const { return Residue(sub_mod(0, value_, modulus_), modulus_); }

Residue Residue::pow(std::uint64_t e) const { return Residue(pow_mod(value_, e, modulus_), modulus_); }

std::string Residue::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

std::vector<Prime> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in_range: lo > hi");
  std::vector<Prime> out;
  if (hi < 5) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p <= hi; ++p)
    if (!composite[p]) out.push_back(Prime::make(p));
  return out;
}

Residue inverse(const Residue& r) { return Residue(inv_mod(r.value(), r.modulus()), r.modulus()); }

Residue reduce_rational(const BigRational& q, std::uint64_t modulus) {
  return Residue(rational_mod(q, modulus), modulus);
}

Residue fermat_quotient3(const Prime& p) {
  std::uint64_t p2 = p.value * p.value;  // p <= 10^6 in practice; p^2 < 2^63 required
  std::uint64_t r = pow_mod(3, p.value - 1, p2);
  if (r % p.value != 1)
    throw std::logic_error("fermat_quotient3: 3^(p-1) != 1 mod p, broken primality input");
  return Residue(((r - 1) / p.value) % p.value, p.value);
}

PowerCheckResult legendre_power_check(const Prime& p) {
  const std::uint64_t m = p.value;
  const std::uint64_t half = p.half();
  PowerCheckResult result;
  result.power = pow_mod(m - 3, half, m);
  result.symbol = static_cast<std::uint64_t>((to_int(legendre_mod3(static_cast<std::int64_t>(m))) +
                                              static_cast<std::int64_t>(m)) %
                                             static_cast<std::int64_t>(m));
  result.legendre_ok = result.power == result.symbol;

  const auto inv = inverse_table(m);
  const std::uint64_t inv_minus4 = inv_mod(m - 4, m);
  result.binomials_ok = true;
  std::uint64_t half_binom = 1;  // C((p-1)/2, k)
  std::uint64_t central = 1;     // C(2k, k)
  std::uint64_t scale = 1;       // (-4)^{-k}
  for (std::uint64_t k = 0; k <= half; ++k) {
    result.witness_k = k;
    result.witness_lhs = half_binom;
    result.witness_rhs = mul_mod(central, scale, m);
    if (result.witness_lhs != result.witness_rhs) {
      result.binomials_ok = false;
      result.first_bad_k = k;
      break;
    }
    if (k == half) break;
    half_binom = mul_mod(mul_mod(half_binom, (half - k) % m, m), inv[k + 1], m);
    central = mul_mod(mul_mod(central, 2 * (2 * k + 1) % m, m), inv[k + 1], m);
    scale = mul_mod(scale, inv_minus4, m);
  }
  return result;
}

}  // namespace exactlab
