#include "exactlab/special_values.hpp"

#include <stdexcept>

namespace exactlab {

Residue BernoulliTable::at(std::size_t m) const {
  if (m >= residues.size()) throw std::out_of_range("BernoulliTable: index past p-2");
  return Residue(residues[m], prime.value);
}

BernoulliTable bernoulli_table(const Prime& p) {
  const std::uint64_t m = p.value;
  const auto inv = inverse_table(m);
  BernoulliTable table{p, std::vector<std::uint64_t>(m - 1, 0)};
  table.residues[0] = 1;

  // sum_{j=0..n} C(n+1, j) B_j = 0, solved for B_n; C(n+1, n) = n+1 is
  // invertible for n <= p-2. Pascal row kept in place for C(n+1, .).
  std::vector<std::uint64_t> row(m, 0);  // row of n+1, only entries 0..n needed
  row[0] = 1;
  row[1] = 1;  // row for n+1 = 1
  for (std::uint64_t n = 1; n <= m - 2; ++n) {
    // advance row from n to n+1
    for (std::uint64_t j = n + 1; j > 0; --j) row[j] = add_mod(row[j], row[j - 1], m);
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < n; ++j) acc = add_mod(acc, mul_mod(row[j], table.residues[j], m), m);
    table.residues[n] = mul_mod(sub_mod(0, acc, m), inv[(n + 1) % m], m);
  }
  return table;
}

Residue EulerTable::at_even(std::size_t two_m) const {
  if (two_m % 2 != 0) throw std::invalid_argument("EulerTable: odd index");
  if (two_m / 2 >= residues.size()) throw std::out_of_range("EulerTable: index past p-3");
  return Residue(residues[two_m / 2], prime.value);
}

EulerTable euler_table(const Prime& p) {
  const std::uint64_t m = p.value;
  const std::size_t count = static_cast<std::size_t>((m - 3) / 2) + 1;  // E_0 .. E_{p-3}
  EulerTable table{p, std::vector<std::uint64_t>(count, 0)};
  table.residues[0] = 1;

  // sum_{k=0..mm} C(2mm, 2k) E_{2k} = 0, solved for E_{2mm}; the leading
  // coefficient C(2mm, 2mm) = 1 needs no inversion.
  std::vector<std::uint64_t> row(m, 0);  // Pascal row of 2mm
  row[0] = 1;
  for (std::size_t mm = 1; mm < count; ++mm) {
    for (int step = 0; step < 2; ++step)
      for (std::uint64_t j = 2 * mm - static_cast<std::uint64_t>(1 - step); j > 0; --j)
        row[j] = add_mod(row[j], row[j - 1], m);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < mm; ++k)
      acc = add_mod(acc, mul_mod(row[2 * k], table.residues[k], m), m);
    table.residues[mm] = sub_mod(0, acc, m);
  }
  return table;
}

Residue bernoulli_poly_at(const BernoulliTable& table, std::size_t n, const BigRational& t) {
  const std::uint64_t m = table.prime.value;
  if (n > static_cast<std::size_t>(m - 2))
    throw std::domain_error("bernoulli_poly_at: n must be <= p-2");
  const std::uint64_t t_res = rational_mod(t, m);
  const auto inv = inverse_table(m);

  std::uint64_t binom = 1;  // C(n, k), k descending from n
  std::uint64_t acc = 0;
  std::uint64_t t_pow = 1;  // t^{n-k}
  for (std::size_t k = n;; --k) {
    acc = add_mod(acc, mul_mod(mul_mod(binom, table.residues[k], m), t_pow, m), m);
    if (k == 0) break;
    // C(n, k-1) = C(n, k) * k / (n - k + 1)
    binom = mul_mod(mul_mod(binom, k % m, m), inv[(n - k + 1) % m], m);
    t_pow = mul_mod(t_pow, t_res, m);
  }
  return Residue(acc, m);
}

Residue bernoulli_poly_at(const Prime& p, std::size_t n, const BigRational& t) {
  return bernoulli_poly_at(bernoulli_table(p), n, t);
}

Residue b_p2_third_fast(const Prime& p) {
  const std::uint64_t m = p.value;
  const auto inv = inverse_table(m);
  std::uint64_t h2 = 0;  // H_{floor(p/3)}^{(2)} mod p
  for (std::uint64_t j = 1; j <= m / 3; ++j) h2 = add_mod(h2, mul_mod(inv[j], inv[j], m), m);
  const int sign = to_int(legendre_mod3(static_cast<std::int64_t>(m)));
  std::uint64_t r = mul_mod(2, h2, m);
  if (sign < 0) r = sub_mod(0, r, m);
  return Residue(r, m);
}

}  // namespace exactlab
