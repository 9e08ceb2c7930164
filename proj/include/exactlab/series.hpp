#pragma once

#include <cstdint>
#include <string>

#include "exactlab/rational.hpp"

namespace exactlab {

/// scaled * 10^{-digits}, exactly. Decimal values are truncations (toward
/// zero), so the digit string at a lower precision is always a prefix of the
/// digit string at a higher one.
struct FixedPointDecimal {
  BigInt scaled;
  int digits = 0;

  BigRational to_rational() const;
  std::string to_string() const;
};

/// pi^2/18 correct to `digits` decimal digits (1..200), from a Machin-formula
/// pi carried with guard digits.
FixedPointDecimal pi_squared_over_18(int digits);

enum class SeriesId { A1, Aa1 };

std::string series_name(SeriesId id);  // "a1" / "aa1"

/// Term k of each series: a1_k = (H_k - 2 H_{2k}) / ((-3)^k k),
/// aa1_k = 1 / (k^2 C(2k,k)). k >= 1.
BigRational a1_term(std::size_t k);
BigRational aa1_term(std::size_t k);
BigRational series_partial_sum(SeriesId id, std::size_t terms);

/// Rigorous tail bound after K terms, exactly computable:
///   aa1: (3/2) * term(K+1)                 (term ratio is at most 1/3)
///   a1:  (1 + ceil(log2(2K+2))) * 3^{-K}   (|H_k - 2H_{2k}| <= 2 H_{2k}
///                                           and H_m <= 1 + ceil(log2 m))
BigRational tail_bound(SeriesId id, std::size_t terms);

/// Least K with tail_bound(id, K) < 10^{-(digits+5)}.
std::size_t default_terms(SeriesId id, int digits);

struct SeriesEvaluation {
  SeriesId id = SeriesId::A1;
  std::size_t terms = 0;
  BigRational partial_sum;
  FixedPointDecimal partial_decimal;
  BigRational bound;           // tail bound after `terms`
  FixedPointDecimal reference; // pi^2/18 at `digits`
  BigRational deviation;       // |partial_sum - reference|
  BigRational allowance;       // 10^{-digits}, the reference truncation slack
  bool within_bound = false;   // deviation <= bound + allowance
};

SeriesEvaluation eval_series(SeriesId id, std::size_t terms, int digits);

struct CrossAgreement {
  std::size_t terms = 0;
  BigRational difference;      // |partial(a1,K) - partial(aa1,K)|
  BigRational combined_bound;  // tail_bound(a1,K) + tail_bound(aa1,K)
  bool ok = false;
};

/// The two series share their limit, so partial sums at equal K must agree
/// within the combined tail bounds.
CrossAgreement cross_series_agreement(std::size_t terms);

}  // namespace exactlab
