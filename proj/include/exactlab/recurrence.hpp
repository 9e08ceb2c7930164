#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab {

/// Integer-coefficient polynomial in one variable, ascending coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending) {
    for (long c : ascending) coeffs_.emplace_back(c);
  }
  explicit IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {}

  BigInt eval(std::int64_t n) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

private:
  std::vector<BigInt> coeffs_;
};

/// Linear recurrence sum_i coeffs[i](n) * S(n+i) = 0 of order coeffs.size()-1.
/// The leading coefficient must not vanish on the checked window, so the
/// recurrence determines S(n + order) from earlier terms.
struct RecurrenceSpec {
  std::vector<IntPolynomial> coeffs;  // c_0 .. c_r

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Deterministic term generator; total on 0..n_max for whatever window it is
/// asked to cover.
struct SequenceOracle {
  std::string name;
  std::function<BigRational(std::size_t)> term;
};

struct RecurrenceCheck {
  bool ok = true;
  std::size_t first_bad_n = 0;
  std::string detail;
};

/// sum_i c_i(n) terms[n+i], the quantity that must vanish.
BigRational recurrence_residual(const RecurrenceSpec& spec,
                                std::span<const BigRational> terms, std::size_t n);

/// Asserts the residual vanishes for 0 <= n <= n_max - order. Reports the
/// first failing n. Requires n_max >= order.
RecurrenceCheck check_recurrence(const RecurrenceSpec& spec, const SequenceOracle& seq,
                                 std::size_t n_max);

/// Passes iff both oracles satisfy the recurrence on the window, agree on the
/// first `order` initial values, and agree pointwise on the full window.
RecurrenceCheck certify_identity_via_recurrence(const RecurrenceSpec& spec,
                                                const SequenceOracle& lhs,
                                                const SequenceOracle& rhs, std::size_t n_max);

/// 3(n+1)(2n+3) S(n) - (2n+5)(5n+9) S(n+1) + (2n^2+17n+29) S(n+2)
///   + (n+3)(2n+5) S(n+3) = 0, the shared order-3 recurrence of both sides
/// of the b1 identity.
RecurrenceSpec b1_recurrence_spec();

/// 8(n+1)^2 f_n + (7n^2+21n+16) f_{n+1} - (n+2)^2 f_{n+2} = 0, the Franel
/// recurrence shifted to start at n = 0.
RecurrenceSpec franel_recurrence_spec();

}  // namespace exactlab
