#include "exactlab/series.hpp"

#include <stdexcept>

namespace exactlab {

namespace {

constexpr int kGuardDigits = 15;
constexpr int kMaxDigits = 200;

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// arctan(1/x) scaled by `one`, truncated integer arithmetic. Every term is
// truncated toward zero, so the total error stays below term-count ulps,
// absorbed by the guard digits.
BigInt arctan_recip_scaled(const BigInt& one, unsigned long x) {
  BigInt power = one / x;
  const unsigned long x2 = x * x;
  BigInt acc = 0;
  for (unsigned long n = 1; power != 0; n += 2) {
    BigInt term = power / n;
    if ((n / 2) % 2 == 0) acc += term;
    else acc -= term;
    power /= x2;
  }
  return acc;
}

// pi scaled by `one`, via pi = 16 arctan(1/5) - 4 arctan(1/239).
BigInt pi_scaled(const BigInt& one) {
  return 16 * arctan_recip_scaled(one, 5) - 4 * arctan_recip_scaled(one, 239);
}

std::size_t ceil_log2(std::size_t m) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < m) ++bits;
  return bits;
}

}  // namespace

BigRational FixedPointDecimal::to_rational() const {
  return BigRational(scaled, pow10(static_cast<unsigned long>(digits)));
}

std::string FixedPointDecimal::to_string() const {
  const bool negative = scaled < 0;
  std::string body = (negative ? BigInt(-scaled) : scaled).get_str(10);
  const auto d = static_cast<std::size_t>(digits);
  if (body.size() <= d) body.insert(0, d - body.size() + 1, '0');
  body.insert(body.size() - d, ".");
  return (negative ? "-" : "") + body;
}

FixedPointDecimal pi_squared_over_18(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw std::domain_error("pi_squared_over_18: digits must be in [1, 200]");
  const auto work = static_cast<unsigned long>(digits + kGuardDigits);
  const BigInt one = pow10(work);
  const BigInt pi = pi_scaled(one);
  const BigInt value = pi * pi / one / 18;
  return {value / pow10(static_cast<unsigned long>(kGuardDigits)), digits};
}

std::string series_name(SeriesId id) { return id == SeriesId::A1 ? "a1" : "aa1"; }

BigRational a1_term(std::size_t k) {
  if (k < 1) throw std::domain_error("a1_term: k must be >= 1");
  BigInt pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 3, static_cast<unsigned long>(k));
  if (k % 2 == 1) pw = -pw;
  return (harmonic(static_cast<std::int64_t>(k)) -
          BigRational(2) * harmonic(2 * static_cast<std::int64_t>(k))) /
         BigRational(pw * static_cast<long>(k));
}

BigRational aa1_term(std::size_t k) {
  if (k < 1) throw std::domain_error("aa1_term: k must be >= 1");
  return BigRational(BigInt(1), BigInt(static_cast<long>(k * k)) *
                                    binomial(2 * static_cast<std::int64_t>(k),
                                             static_cast<std::int64_t>(k)));
}

BigRational series_partial_sum(SeriesId id, std::size_t terms) {
  BigRational acc;
  for (std::size_t k = 1; k <= terms; ++k)
    acc += id == SeriesId::A1 ? a1_term(k) : aa1_term(k);
  return acc;
}

BigRational tail_bound(SeriesId id, std::size_t terms) {
  if (id == SeriesId::Aa1) return BigRational(3, 2) * aa1_term(terms + 1);
  BigInt pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 3, static_cast<unsigned long>(terms));
  return BigRational(BigInt(static_cast<long>(1 + ceil_log2(2 * terms + 2))), pw);
}

std::size_t default_terms(SeriesId id, int digits) {
  const BigRational target(BigInt(1), pow10(static_cast<unsigned long>(digits) + 5));
  std::size_t k = 1;
  while (tail_bound(id, k) >= target) ++k;
  return k;
}

SeriesEvaluation eval_series(SeriesId id, std::size_t terms, int digits) {
  if (terms < 1) throw std::domain_error("eval_series: terms must be >= 1");
  SeriesEvaluation ev;
  ev.id = id;
  ev.terms = terms;
  ev.partial_sum = series_partial_sum(id, terms);
  ev.bound = tail_bound(id, terms);
  ev.reference = pi_squared_over_18(digits);
  ev.deviation = abs(ev.partial_sum - ev.reference.to_rational());
  ev.allowance = BigRational(BigInt(1), pow10(static_cast<unsigned long>(digits)));
  ev.within_bound = ev.deviation <= ev.bound + ev.allowance;

  // truncated decimal rendering of the exact partial sum
  const BigInt scale = pow10(static_cast<unsigned long>(digits));
  BigInt scaled = ev.partial_sum.num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), ev.partial_sum.den().get_mpz_t());
  ev.partial_decimal = {scaled, digits};
  return ev;
}

CrossAgreement cross_series_agreement(std::size_t terms) {
  CrossAgreement result;
  result.terms = terms;
  result.difference =
      abs(series_partial_sum(SeriesId::A1, terms) - series_partial_sum(SeriesId::Aa1, terms));
  result.combined_bound = tail_bound(SeriesId::A1, terms) + tail_bound(SeriesId::Aa1, terms);
  result.ok = result.difference < result.combined_bound;
  return result;
}

}  // namespace exactlab
