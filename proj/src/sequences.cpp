#include "exactlab/sequences.hpp"

#include <stdexcept>

namespace exactlab {

namespace {

BigInt franel_cube_sum(std::size_t n) {
  const auto row = binomial_row(static_cast<std::int64_t>(n));
  BigInt total = 0;
  for (const auto& c : row) total += c * c * c;
  return total;
}

}  // namespace

FranelSeq franel_exact(std::size_t n_max) {
  FranelSeq seq;
  seq.values.reserve(n_max + 1);
  seq.values.emplace_back(1);
  if (n_max >= 1) seq.values.emplace_back(2);
  for (std::size_t n = 1; n < n_max; ++n) {
    const auto ln = static_cast<long>(n);
    BigInt rhs = BigInt(7 * ln * ln + 7 * ln + 2) * seq.values[n] +
                 BigInt(8 * ln * ln) * seq.values[n - 1];
    BigInt q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(),
                   static_cast<unsigned long>((ln + 1) * (ln + 1)));
    if (r != 0) throw std::logic_error("franel_exact: recurrence step not divisible");
    seq.values.push_back(std::move(q));
  }
  const std::size_t check_to = std::min<std::size_t>(n_max, 50);
  for (std::size_t n = 0; n <= check_to && n < seq.values.size(); ++n)
    if (seq.values[n] != franel_cube_sum(n))
      throw std::logic_error("franel_exact: recurrence disagrees with cube sum at n=" +
                             std::to_string(n));
  return seq;
}

std::vector<std::uint64_t> franel_mod(const Prime& p, std::uint64_t modulus, std::size_t n_max) {
  if (modulus != p.value && modulus != p.value * p.value)
    throw std::invalid_argument("franel_mod: modulus must be p or p^2");
  if (n_max > p.value - 1) throw std::invalid_argument("franel_mod: n_max must be <= p-1");
  std::vector<std::uint64_t> f;
  f.reserve(n_max + 1);
  f.push_back(1 % modulus);
  if (n_max >= 1) f.push_back(2 % modulus);
  for (std::size_t n = 1; n < n_max; ++n) {
    const std::uint64_t un = n;
    std::uint64_t rhs = add_mod(mul_mod((7 * un * un + 7 * un + 2) % modulus, f[n], modulus),
                                mul_mod((8 * un * un) % modulus, f[n - 1], modulus), modulus);
    std::uint64_t step = (un + 1) * (un + 1) % modulus;
    f.push_back(mul_mod(rhs, inv_mod(step, modulus), modulus));
  }
  return f;
}

LucasSeq lucas_seq(LucasKind kind, const BigRational& t, std::size_t n_max) {
  LucasSeq seq{kind, t, {}};
  seq.values.reserve(n_max + 1);
  seq.values.push_back(kind == LucasKind::U ? BigRational(0) : BigRational(2));
  if (n_max >= 1) seq.values.push_back(kind == LucasKind::U ? BigRational(1) : t);
  for (std::size_t k = 2; k <= n_max; ++k)
    seq.values.push_back(t * seq.values[k - 1] - seq.values[k - 2]);
  return seq;
}

ClosedFormCheck verify_lucas_closed_forms(std::size_t k_max) {
  const auto v = lucas_seq(LucasKind::V, BigRational(-1), k_max);
  const auto u = lucas_seq(LucasKind::U, BigRational(1), k_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const int l = to_int(legendre_mod3(static_cast<std::int64_t>(k)));
    if (v.values[k] != BigRational(-3 * l * l + 2))
      return {false, k, "v_k(-1) closed form"};
    if (k >= 1) {
      const long a = (k / 3) % 2 == 0 ? 1 : -1;
      const long b = ((k - 1) / 3) % 2 == 0 ? 1 : -1;
      if (u.values[k] != BigRational(a + b, 2)) return {false, k, "u_k(1) closed form"};
    }
  }
  return {};
}

std::vector<BigRational> inv_central_binom_prefix(std::size_t n_max) {
  std::vector<BigRational> prefix;
  prefix.reserve(n_max + 1);
  prefix.emplace_back(0);
  BigInt central = 1;  // C(2k, k)
  for (std::size_t k = 1; k <= n_max; ++k) {
    central = central * (2 * (2 * static_cast<unsigned long>(k) - 1));
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k));
    prefix.push_back(prefix.back() +
                     BigRational(BigInt(1), BigInt(static_cast<long>(k * k)) * central));
  }
  return prefix;
}

}  // namespace exactlab
