#pragma once

#include <cstdint>
#include <vector>

#include "exactlab/modular.hpp"
#include "exactlab/rational.hpp"

namespace exactlab {

/// B_0 .. B_{p-2} mod p in the B_1 = -1/2 convention (the one forced by the
/// generating function x e^{tx} / (e^x - 1)).
struct BernoulliTable {
  Prime prime;
  std::vector<std::uint64_t> residues;  // index m holds B_m mod p

  Residue at(std::size_t m) const;
};

BernoulliTable bernoulli_table(const Prime& p);

/// E_0, E_2, ..., E_{p-3} mod p. Odd-index Euler numbers vanish and are not
/// stored.
struct EulerTable {
  Prime prime;
  std::vector<std::uint64_t> residues;  // index m holds E_{2m} mod p

  Residue at_even(std::size_t two_m) const;
};

EulerTable euler_table(const Prime& p);

/// B_n(t) = sum_{k=0..n} C(n,k) B_k t^{n-k} mod p. Requires n <= p-2 and a
/// p-coprime denominator in t (DenominatorNotInvertible otherwise).
Residue bernoulli_poly_at(const BernoulliTable& table, std::size_t n, const BigRational& t);
Residue bernoulli_poly_at(const Prime& p, std::size_t n, const BigRational& t);

/// O(p) route to B_{p-2}(1/3) mod p: 2 * (p/3) * H_{floor(p/3)}^{(2)},
/// computed from an inverse-square prefix sum. Shares no code with
/// bernoulli_table, which makes the two paths cross-validating.
Residue b_p2_third_fast(const Prime& p);

}  // namespace exactlab
