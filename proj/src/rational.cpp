#include "exactlab/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace exactlab {

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  try {
    return BigInt(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_bigint: not a decimal integer: '" + text + "'");
  }
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  return BigRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string BigRational::to_string() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.v_ == 0) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

std::mutex g_binomial_mutex;
std::vector<std::vector<BigInt>> g_binomial_rows;  // row n holds C(n, 0..n)

// Fills rows up to n. Caller holds the lock.
void extend_rows(std::size_t n) {
  if (g_binomial_rows.empty()) g_binomial_rows.push_back({BigInt(1)});
  while (g_binomial_rows.size() <= n) {
    const std::size_t m = g_binomial_rows.size();
    std::vector<BigInt> row(m + 1);
    row[0] = 1;
    // C(m, k) = C(m, k-1) * (m - k + 1) / k, division exact at each step
    for (std::size_t k = 1; k <= m; ++k) {
      BigInt t = row[k - 1] * static_cast<unsigned long>(m - k + 1);
      mpz_divexact_ui(row[k].get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    }
    g_binomial_rows.push_back(std::move(row));
  }
}

std::mutex g_harmonic_mutex;
std::map<int, std::vector<BigRational>> g_harmonic;  // order -> H_0..H_n

// Extends the prefix array for one order. Caller holds the lock.
const std::vector<BigRational>& extend_harmonic(int order, std::size_t k) {
  auto& prefix = g_harmonic[order];
  if (prefix.empty()) prefix.emplace_back(0);
  while (prefix.size() <= k) {
    const auto j = static_cast<unsigned long>(prefix.size());
    BigInt jr;
    mpz_ui_pow_ui(jr.get_mpz_t(), j, static_cast<unsigned long>(order));
    prefix.push_back(prefix.back() + BigRational(BigInt(1), jr));
  }
  return prefix;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  std::lock_guard lock(g_binomial_mutex);
  extend_rows(static_cast<std::size_t>(n));
  return g_binomial_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<BigInt> binomial_row(std::int64_t n) {
  if (n < 0) throw std::domain_error("binomial_row: negative n");
  std::lock_guard lock(g_binomial_mutex);
  extend_rows(static_cast<std::size_t>(n));
  return g_binomial_rows[static_cast<std::size_t>(n)];
}

BigRational harmonic(std::int64_t k, int order) {
  if (k < 0) throw std::domain_error("harmonic: negative k");
  if (order < 1) throw std::domain_error("harmonic: order must be >= 1");
  std::lock_guard lock(g_harmonic_mutex);
  return extend_harmonic(order, static_cast<std::size_t>(k))[static_cast<std::size_t>(k)];
}

std::vector<BigRational> harmonic_prefix(int order, std::int64_t k_max) {
  if (k_max < 0) throw std::domain_error("harmonic_prefix: negative k_max");
  if (order < 1) throw std::domain_error("harmonic_prefix: order must be >= 1");
  std::lock_guard lock(g_harmonic_mutex);
  const auto& prefix = extend_harmonic(order, static_cast<std::size_t>(k_max));
  return std::vector<BigRational>(prefix.begin(), prefix.begin() + k_max + 1);
}

BigRational rational_sum(std::span<const BigRational> terms) {
  BigRational total;
  for (const auto& t : terms) total += t;
  return total;
}

}  // namespace exactlab
