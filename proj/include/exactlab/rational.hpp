#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace exactlab {

using BigInt = mpz_class;

std::string to_string(const BigInt& n);
// Strict base-10 parse, throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);

/// Exact rational number. Always stored reduced, denominator >= 1,
/// zero represented as 0/1.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long value) : v_(value) {}  // NOLINT: implicit by design
  BigRational(const BigInt& value) : v_(value) {}
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  // Accepts "p/q" or a bare integer "p".
  static BigRational parse(const std::string& text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  // Always "p/q", including "0/1" and "5/1".
  std::string to_string() const;

  // Nearest double; display helper only, never part of a verdict.
  double to_double() const { return v_.get_d(); }

  BigRational& operator+=(const BigRational& o) {
    v_ += o.v_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    v_ -= o.v_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    v_ *= o.v_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) {
    a += b;
    return a;
  }
  friend BigRational operator-(BigRational a, const BigRational& b) {
    a -= b;
    return a;
  }
  friend BigRational operator*(BigRational a, const BigRational& b) {
    a *= b;
    return a;
  }
  friend BigRational operator/(BigRational a, const BigRational& b) {
    a /= b;
    return a;
  }
  BigRational operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const BigRational& a, const BigRational& b) {
    return a.v_ >= b.v_;
  }

  friend BigRational abs(const BigRational& q) {
    BigRational r;
    r.v_ = ::abs(q.v_);
    return r;
  }

private:
  mpq_class v_;  // canonical by construction
};

/// C(n, k). Zero for k outside [0, n]; n must be non-negative
/// (throws std::domain_error otherwise).
BigInt binomial(std::int64_t n, std::int64_t k);

/// Full row C(n, 0..n) from the shared row cache.
std::vector<BigInt> binomial_row(std::int64_t n);

/// Generalized harmonic number H_k^{(r)} = sum_{j=1..k} 1/j^r, H_0 = 0.
/// Memoized as prefix arrays per order, so H_1..H_N costs O(N) additions.
BigRational harmonic(std::int64_t k, int order = 1);

/// H_0^{(order)} .. H_{k_max}^{(order)} in one array.
std::vector<BigRational> harmonic_prefix(int order, std::int64_t k_max);

BigRational rational_sum(std::span<const BigRational> terms);

}  // namespace exactlab
