#include "exactlab/recurrence.hpp"

#include <stdexcept>

namespace exactlab {

BigRational recurrence_residual(const RecurrenceSpec& spec, std::span<const BigRational> terms,
                                std::size_t n) {
  BigRational acc;
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i)
    acc += BigRational(spec.coeffs[i].eval(static_cast<std::int64_t>(n))) * terms[n + i];
  return acc;
}

namespace {

std::vector<BigRational> materialize(const SequenceOracle& seq, std::size_t n_max) {
  std::vector<BigRational> terms;
  terms.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) terms.push_back(seq.term(n));
  return terms;
}

}  // namespace

RecurrenceCheck check_recurrence(const RecurrenceSpec& spec, const SequenceOracle& seq,
                                 std::size_t n_max) {
  const std::size_t r = spec.order();
  if (n_max < r) throw std::domain_error("check_recurrence: n_max must be >= order");
  const auto terms = materialize(seq, n_max);
  for (std::size_t n = 0; n + r <= n_max; ++n) {
    if (spec.coeffs[r].eval(static_cast<std::int64_t>(n)) == 0)
      return {false, n, seq.name + ": leading coefficient vanishes"};
    if (!recurrence_residual(spec, terms, n).is_zero())
      return {false, n, seq.name + ": nonzero residual"};
  }
  return {};
}

RecurrenceCheck certify_identity_via_recurrence(const RecurrenceSpec& spec,
                                                const SequenceOracle& lhs,
                                                const SequenceOracle& rhs, std::size_t n_max) {
  const std::size_t r = spec.order();
  if (n_max < r) throw std::domain_error("certify_identity_via_recurrence: n_max must be >= order");
  const auto a = materialize(lhs, n_max);
  const auto b = materialize(rhs, n_max);
  for (std::size_t n = 0; n < r; ++n)
    if (a[n] != b[n]) return {false, n, "initial values differ"};
  for (std::size_t n = 0; n <= n_max; ++n)
    if (a[n] != b[n]) return {false, n, "pointwise disagreement"};
  if (auto c = check_recurrence(spec, lhs, n_max); !c.ok) return c;
  if (auto c = check_recurrence(spec, rhs, n_max); !c.ok) return c;
  return {};
}

RecurrenceSpec b1_recurrence_spec() {
  RecurrenceSpec spec;
  spec.coeffs = {
      IntPolynomial{9, 15, 6},    // 3(n+1)(2n+3)
      IntPolynomial{-45, -43, -10},  // -(2n+5)(5n+9)
      IntPolynomial{29, 17, 2},   // 2n^2 + 17n + 29
      IntPolynomial{15, 11, 2},   // (n+3)(2n+5)
  };
  return spec;
}

RecurrenceSpec franel_recurrence_spec() {
  RecurrenceSpec spec;
  spec.coeffs = {
      IntPolynomial{8, 16, 8},    // 8(n+1)^2
      IntPolynomial{16, 21, 7},   // 7n^2 + 21n + 16
      IntPolynomial{-4, -4, -1},  // -(n+2)^2
  };
  return spec;
}

}  // namespace exactlab
