#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactlab/modular.hpp"
#include "exactlab/rational.hpp"

namespace exactlab {

/// f_0 .. f_N, exact. f_n = sum_k C(n,k)^3; generated by the second-order
/// recurrence (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}.
struct FranelSeq {
  std::vector<BigInt> values;
};

/// Recurrence-generated and cross-checked against the definitional cube sum
/// for n <= min(n_max, 50). Throws std::logic_error on mismatch.
FranelSeq franel_exact(std::size_t n_max);

/// f_0 .. f_N mod m where m is p or p^2. Requires n_max <= p-1 so every
/// (n+1)^2 in the recurrence stays invertible.
std::vector<std::uint64_t> franel_mod(const Prime& p, std::uint64_t modulus, std::size_t n_max);

enum class LucasKind { U, V };

/// a_k = t a_{k-1} - a_{k-2} with seeds (0, 1) for U and (2, t) for V.
struct LucasSeq {
  LucasKind kind;
  BigRational t;
  std::vector<BigRational> values;  // index 0 .. n_max
};

LucasSeq lucas_seq(LucasKind kind, const BigRational& t, std::size_t n_max);

struct ClosedFormCheck {
  bool ok = true;
  std::size_t first_bad_k = 0;
  std::string detail;
};

/// v_k(-1) = -3 (k/3)^2 + 2 for k in [0, k_max], and
/// u_k(1) = ((-1)^floor(k/3) + (-1)^floor((k-1)/3)) / 2 for k in [1, k_max].
ClosedFormCheck verify_lucas_closed_forms(std::size_t k_max);

/// Prefix sums S_j = sum_{k=1..j} 1/(k^2 C(2k,k)) for j in [0, n_max].
std::vector<BigRational> inv_central_binom_prefix(std::size_t n_max);

}  // namespace exactlab
