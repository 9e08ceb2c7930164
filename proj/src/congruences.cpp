#include "exactlab/congruences.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "exactlab/parallel.hpp"
#include "exactlab/sequences.hpp"

namespace exactlab {

PrimeContext PrimeContext::build(const Prime& p) {
  const std::uint64_t m = p.value;
  PrimeContext ctx{p, inverse_table(m), {}, {}, {}, {}, {}, {}, {}};
  ctx.h1.assign(m, 0);
  ctx.h2.assign(m, 0);
  ctx.central.assign(m, 0);
  ctx.central[0] = 1;
  for (std::uint64_t k = 1; k < m; ++k) {
    ctx.h1[k] = add_mod(ctx.h1[k - 1], ctx.inv[k], m);
    ctx.h2[k] = add_mod(ctx.h2[k - 1], mul_mod(ctx.inv[k], ctx.inv[k], m), m);
    ctx.central[k] = mul_mod(mul_mod(ctx.central[k - 1], (2 * (2 * k - 1)) % m, m), ctx.inv[k], m);
  }
  ctx.franel_p = franel_mod(p, m, m - 1);
  ctx.franel_p2 = franel_mod(p, m * m, m - 1);
  return ctx;
}

void PrimeContext::ensure_bernoulli() {
  if (!bernoulli) bernoulli = bernoulli_table(prime);
}

void PrimeContext::ensure_euler() {
  if (!euler) euler = euler_table(prime);
}

namespace {

struct CheckOutput {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::uint64_t modulus = 0;
  bool ok = false;
  std::string witness;  // extra params, e.g. first failing sub-case
  std::size_t subcases = 1;
};

std::uint64_t negate_mod(std::uint64_t a, std::uint64_t m) { return sub_mod(0, a, m); }

// (p/3) * a mod p for the sign-only Legendre factor of an odd prime p != 3.
std::uint64_t legendre_scaled(const Prime& p, std::uint64_t a) {
  return to_int(legendre_mod3(static_cast<std::int64_t>(p.value))) < 0 ? negate_mod(a, p.value)
                                                                       : a;
}

// B_{p-2}(1/3) mod p through the requested path; records which one was used.
std::uint64_t b13_value(PrimeContext& ctx, const ScanOptions& opt, bool force_table,
                        std::string* path_note) {
  const bool table = force_table || opt.bpath == BernoulliPath::Table;
  *path_note = table ? ";bpath=table" : ";bpath=fast";
  if (table) {
    ctx.ensure_bernoulli();
    return bernoulli_poly_at(*ctx.bernoulli, static_cast<std::size_t>(ctx.prime.value - 2),
                             BigRational(1, 3))
        .value();
  }
  return b_p2_third_fast(ctx.prime).value();
}

// Prefix sums of 1/(k^2 C(2k,k)) mod p up to k_max < p/2 (central binomials
// stay invertible there).
std::vector<std::uint64_t> inv_central_prefix_mod(const PrimeContext& ctx, std::uint64_t k_max) {
  const std::uint64_t m = ctx.prime.value;
  std::vector<std::uint64_t> prefix(k_max + 1, 0);
  std::uint64_t inv_central = 1;  // 1 / C(2k,k)
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    // C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k
    inv_central = mul_mod(mul_mod(inv_central, k, m),
                          mul_mod(ctx.inv[2], ctx.inv[2 * k - 1], m), m);
    prefix[k] = add_mod(prefix[k - 1],
                        mul_mod(mul_mod(ctx.inv[k], ctx.inv[k], m), inv_central, m), m);
  }
  return prefix;
}

CheckOutput check_sun2011_euler(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t half = ctx.prime.half();
  const auto prefix = inv_central_prefix_mod(ctx, half);
  ctx.ensure_euler();
  std::uint64_t rhs = mul_mod(mul_mod(4, ctx.inv[3], m),
                              ctx.euler->at_even(static_cast<std::size_t>(m - 3)).value(), m);
  if (half % 2 == 1) rhs = negate_mod(rhs, m);
  return {prefix[half], rhs, m, prefix[half] == rhs, "", 1};
}

CheckOutput check_thm12_main(PrimeContext& ctx, const ScanOptions& opt) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t im3 = inv_mod(m - 3, m);  // 1/(-3)
  std::uint64_t acc = 0, pw = 1;
  for (std::uint64_t k = 1; k <= ctx.prime.half(); ++k) {
    pw = mul_mod(pw, im3, m);
    const std::uint64_t diff = sub_mod(ctx.h1[k], mul_mod(2, ctx.h1[2 * k], m), m);
    acc = add_mod(acc, mul_mod(diff, mul_mod(pw, ctx.inv[k], m), m), m);
  }
  std::string note;
  const std::uint64_t b13 = b13_value(ctx, opt, false, &note);
  const std::uint64_t rhs = legendre_scaled(ctx.prime, mul_mod(inv_mod(6 % m, m), b13, m));
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_c18_key(PrimeContext& ctx, const ScanOptions& opt) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t half = ctx.prime.half();
  const auto prefix = inv_central_prefix_mod(ctx, half);
  std::uint64_t acc = 0;
  for (std::uint64_t k = 0; k <= half; ++k)
    acc = add_mod(acc, mul_mod(ctx.central[k], prefix[k], m), m);
  std::string note;
  const std::uint64_t rhs = mul_mod(inv_mod(6 % m, m), b13_value(ctx, opt, false, &note), m);
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_lemma_c4(PrimeContext& ctx, const ScanOptions& opt, bool full_range) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t k_max = full_range ? m - 1 : ctx.prime.half();
  std::uint64_t acc = 0;
  for (std::uint64_t k = full_range ? 1 : 0; k <= k_max; ++k)
    acc = add_mod(acc, mul_mod(ctx.central[k], ctx.h2[k], m), m);
  std::string note;
  const std::uint64_t rhs =
      negate_mod(mul_mod(inv_mod(6 % m, m), b13_value(ctx, opt, false, &note), m), m);
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_c5_poly(PrimeContext& ctx, const ScanOptions& opt) {
  const std::uint64_t m = ctx.prime.value;
  std::vector<std::uint64_t> ts;
  if (m <= opt.full_t_ceiling) {
    for (std::uint64_t t = 1; t < m; ++t) ts.push_back(t);
  } else {
    std::set<std::uint64_t> picked{1};
    std::mt19937_64 gen(opt.seed ^ (m * 0x9E3779B97F4A7C15ULL));
    while (picked.size() < std::min<std::uint64_t>(opt.sample_count, m - 1))
      picked.insert(gen() % (m - 1) + 1);
    ts.assign(picked.begin(), picked.end());
  }

  CheckOutput out;
  out.modulus = m;
  out.ok = true;
  out.subcases = ts.size();
  for (std::uint64_t t : ts) {
    const std::uint64_t inv_t = inv_mod(t, m);
    std::uint64_t lhs = 0, pw = pow_mod(t, m - 1, m);  // t^{p-k}, starting at k = 1
    for (std::uint64_t k = 1; k < m; ++k) {
      lhs = add_mod(lhs, mul_mod(pw, mul_mod(ctx.central[k], ctx.h2[k], m), m), m);
      pw = mul_mod(pw, inv_t, m);
    }
    const std::uint64_t c = sub_mod(2 % m, t, m);  // Lucas parameter 2 - t
    std::uint64_t u_prev = 0, u_cur = 1, sum_u = 0;
    for (std::uint64_t k = 1; k < m; ++k) {
      sum_u = add_mod(sum_u, mul_mod(u_cur, mul_mod(ctx.inv[k], ctx.inv[k], m), m), m);
      const std::uint64_t u_next = sub_mod(mul_mod(c, u_cur, m), u_prev, m);
      u_prev = std::exchange(u_cur, u_next);
    }
    const std::uint64_t rhs = negate_mod(mul_mod(mul_mod(2 % m, t, m), sum_u, m), m);
    if (t == 1 || lhs != rhs) {
      out.lhs = lhs;
      out.rhs = rhs;
      out.witness = ";t=" + std::to_string(t);
    }
    if (lhs != rhs) {
      out.ok = false;
      break;
    }
  }
  return out;
}

CheckOutput check_cc3_signed(PrimeContext& ctx, const ScanOptions& opt) {
  const std::uint64_t m = ctx.prime.value;
  std::uint64_t acc = 0;
  for (std::uint64_t k = 1; k < m; ++k) {
    const int c = ((k / 3) % 2 == 0 ? 1 : -1) + (((k - 1) / 3) % 2 == 0 ? 1 : -1);
    if (c == 0) continue;
    const std::uint64_t term = mul_mod(2, mul_mod(ctx.inv[k], ctx.inv[k], m), m);
    acc = c > 0 ? add_mod(acc, term, m) : sub_mod(acc, term, m);
  }
  std::string note;
  const std::uint64_t rhs = mul_mod(inv_mod(6 % m, m), b13_value(ctx, opt, false, &note), m);
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_wolstenholme_pair(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t full = ctx.h2[m - 1];
  const std::uint64_t half = ctx.h2[ctx.prime.half()];
  if (full != 0) return {full, 0, m, false, ";part=full", 2};
  if (half != 0) return {half, 0, m, false, ";part=half", 2};
  return {full, 0, m, true, ";part=full", 2};
}

CheckOutput check_lehmer(PrimeContext& ctx, const ScanOptions& opt, bool sixth) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t lhs = ctx.h2[sixth ? m / 6 : m / 3];
  std::string note;
  // the fast path IS this congruence, so the table path is forced
  std::uint64_t rhs = mul_mod(inv_mod(2, m), b13_value(ctx, opt, true, &note), m);
  if (sixth) rhs = mul_mod(5 % m, rhs, m);
  rhs = legendre_scaled(ctx.prime, rhs);
  return {lhs, rhs, m, lhs == rhs, note, 1};
}

CheckOutput check_lemma_c15(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t half = ctx.prime.half();
  std::vector<std::uint64_t> band(half + 1, 0);  // band[d] = sum_k C(2k, k+d)
  for (std::uint64_t k = 0; k <= half; ++k) {
    std::uint64_t entry = ctx.central[k];
    for (std::uint64_t d = 0; d <= k; ++d) {
      band[d] = add_mod(band[d], entry, m);
      // C(2k, k+d+1) = C(2k, k+d) * (k-d) / (k+d+1)
      entry = mul_mod(entry, mul_mod((k - d) % m, ctx.inv[k + d + 1], m), m);
    }
  }
  CheckOutput out;
  out.modulus = m;
  out.ok = true;
  out.subcases = 2 * (half + 1);
  const auto leg = [](std::int64_t a) { return to_int(legendre_mod3(a)); };
  for (std::uint64_t d = 0; d <= half; ++d) {
    const auto sd = static_cast<std::int64_t>(d);
    const auto sm = static_cast<std::int64_t>(m);
    const std::uint64_t rhs =
        Residue::from_int(leg(sm - sd) - leg(sd), m).value();
    const std::uint64_t companion =
        Residue::from_int(leg((sm + 1) / 2 - sd) + leg((sm + 1) / 2 - sd - 1), m).value();
    if (d == half || band[d] != rhs || companion != rhs) {
      out.lhs = band[d];
      out.rhs = rhs;
      out.witness = ";d=" + std::to_string(d);
    }
    if (band[d] != rhs) {
      out.ok = false;
      out.witness += ";form=main";
      break;
    }
    if (companion != rhs) {
      out.lhs = companion;
      out.ok = false;
      out.witness += ";form=companion";
      break;
    }
  }
  return out;
}

CheckOutput check_c19_weighted(PrimeContext& ctx, const ScanOptions& opt) {
  const std::uint64_t m = ctx.prime.value;
  std::uint64_t acc = 0;
  for (std::uint64_t j = 1; j <= ctx.prime.half(); ++j) {
    const int lj = to_int(legendre_mod3(static_cast<std::int64_t>(j)));
    const int w = (-3 * lj * lj + 2) *
                  (to_int(legendre_mod3(static_cast<std::int64_t>(m - j))) - lj);
    if (w == 0) continue;
    const std::uint64_t term =
        mul_mod(static_cast<std::uint64_t>(w > 0 ? w : -w),
                mul_mod(ctx.inv[j], ctx.inv[j], m), m);
    acc = w > 0 ? add_mod(acc, term, m) : sub_mod(acc, term, m);
  }
  std::string note;
  const std::uint64_t rhs = mul_mod(ctx.inv[3], b13_value(ctx, opt, false, &note), m);
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_legendre_power(PrimeContext& ctx, const ScanOptions&) {
  const auto r = legendre_power_check(ctx.prime);
  return {r.power, r.symbol, ctx.prime.value, r.legendre_ok, "", 1};
}

CheckOutput check_binom_halfp(PrimeContext& ctx, const ScanOptions&) {
  const auto r = legendre_power_check(ctx.prime);
  return {r.witness_lhs, r.witness_rhs, ctx.prime.value, r.binomials_ok,
          ";k=" + std::to_string(r.witness_k), static_cast<std::size_t>(ctx.prime.half()) + 1};
}

CheckOutput check_thm13(PrimeContext& ctx, const ScanOptions& opt, bool second_order) {
  const std::uint64_t m = ctx.prime.value;
  const auto& h = second_order ? ctx.h2 : ctx.h1;
  std::uint64_t acc = 0;
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t term = mul_mod(ctx.franel_p[k], h[k], m);
    acc = k % 2 == 0 ? add_mod(acc, term, m) : sub_mod(acc, term, m);
  }
  std::string note;
  std::uint64_t rhs;
  if (second_order) {
    rhs = mul_mod(inv_mod(2, m), b13_value(ctx, opt, false, &note), m);
  } else {
    rhs = negate_mod(legendre_scaled(ctx.prime, mul_mod(2, fermat_quotient3(ctx.prime).value(), m)),
                     m);
  }
  return {acc, rhs, m, acc == rhs, note, 1};
}

CheckOutput check_sun_franel_alt_p2(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m2 = ctx.prime.value * ctx.prime.value;
  std::uint64_t acc = 0;
  for (std::uint64_t k = 0; k < ctx.prime.value; ++k)
    acc = k % 2 == 0 ? add_mod(acc, ctx.franel_p2[k], m2) : sub_mod(acc, ctx.franel_p2[k], m2);
  const std::uint64_t rhs =
      Residue::from_int(to_int(legendre_mod3(static_cast<std::int64_t>(ctx.prime.value))), m2)
          .value();
  return {acc, rhs, m2, acc == rhs, "", 1};
}

CheckOutput check_ms_central_harmonic(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m = ctx.prime.value;
  std::uint64_t acc = 0;
  for (std::uint64_t j = 0; j <= ctx.prime.half(); ++j)
    acc = add_mod(acc, mul_mod(ctx.central[j], ctx.h1[j], m), m);
  const std::uint64_t rhs =
      negate_mod(legendre_scaled(ctx.prime, fermat_quotient3(ctx.prime).value()), m);
  return {acc, rhs, m, acc == rhs, "", 1};
}

CheckOutput check_d3_truncation(PrimeContext& ctx, const ScanOptions&) {
  const std::uint64_t m = ctx.prime.value;
  const std::uint64_t half = ctx.prime.half();
  std::uint64_t lhs = 0;
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t term = mul_mod(ctx.franel_p[k], ctx.h2[k], m);
    lhs = k % 2 == 0 ? add_mod(lhs, term, m) : sub_mod(lhs, term, m);
  }
  const auto prefix = inv_central_prefix_mod(ctx, half);
  std::uint64_t rhs = 0;
  for (std::uint64_t j = 0; j <= half; ++j)
    rhs = add_mod(rhs, mul_mod(ctx.central[j], mul_mod(3, prefix[j], m), m), m);
  CheckOutput out{lhs, rhs, m, lhs == rhs, "", 1 + (m - 1 - half)};
  // the pivot also needs C(2j,j) = 0 mod p on the upper half
  for (std::uint64_t j = half + 1; j < m && out.ok; ++j)
    if (ctx.central[j] != 0) {
      out.ok = false;
      out.lhs = ctx.central[j];
      out.rhs = 0;
      out.witness = ";part=vanishing;j=" + std::to_string(j);
    }
  return out;
}

const std::vector<CongruenceCheckInfo> kRegistry = {
    {"sun2011_euler",
     "half-range inverse central binomial sum vs (-1)^((p-1)/2) (4/3) E_{p-3}", "p",
     CostClass::Quadratic, false, false, true},
    {"thm12_main",
     "half-range signed harmonic-difference sum vs (1/6)(p/3) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"c18_key",
     "half-range central binomial times inverse-central prefix vs (1/6) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"lemma_c4_half",
     "central binomial H^(2) sum over k <= (p-1)/2 vs -(1/6) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"lemma_c4_full",
     "central binomial H^(2) sum over k <= p-1 vs -(1/6) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"c5_poly",
     "polynomial congruence: t^{p-k} central-H^(2) sum vs -2t Lucas-u sum", "p",
     CostClass::Quadratic, false, false, false},
    {"cc3_signed",
     "period-6 signed inverse-square sum vs (1/6) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"wolstenholme_pair",
     "H_{p-1}^(2) = 0 and H_{(p-1)/2}^(2) = 0", "p",
     CostClass::Linear, false, false, false},
    {"lehmer_third",
     "H_{floor(p/3)}^(2) vs (1/2)(p/3) B_{p-2}(1/3), table path", "p",
     CostClass::Quadratic, true, true, false},
    {"lehmer_sixth",
     "H_{floor(p/6)}^(2) vs (5/2)(p/3) B_{p-2}(1/3), table path", "p",
     CostClass::Quadratic, true, true, false},
    {"lemma_c15",
     "half-range shifted central binomial band sums for all d, plus companion form", "p",
     CostClass::Quadratic, false, false, false},
    {"c19_weighted",
     "Legendre-weighted inverse-square half sum vs (1/3) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"binom_halfp",
     "C((p-1)/2, k) = C(2k,k)/(-4)^k for all k <= (p-1)/2", "p",
     CostClass::Linear, false, false, false},
    {"legendre_power",
     "(-3)^((p-1)/2) = (p/3)", "p",
     CostClass::Linear, false, false, false},
    {"thm13_h2",
     "alternating Franel H^(2) sum vs (1/2) B_{p-2}(1/3)", "p",
     CostClass::Linear, true, false, false},
    {"thm13_h1",
     "alternating Franel harmonic sum vs -2(p/3) q_p(3)", "p",
     CostClass::Linear, false, false, false},
    {"sun_franel_alt_p2",
     "alternating Franel sum vs (p/3) mod p^2", "p^2",
     CostClass::Linear, false, false, false},
    {"ms_central_harmonic",
     "half-range central binomial harmonic sum vs -(p/3) q_p(3)", "p",
     CostClass::Linear, false, false, false},
    {"d3_truncation",
     "alternating Franel H^(2) sum vs half-range central binomial pivot sum", "p",
     CostClass::Linear, false, false, false},
};

CheckOutput dispatch(const std::string& id, PrimeContext& ctx, const ScanOptions& opt) {
  if (id == "sun2011_euler") return check_sun2011_euler(ctx, opt);
  if (id == "thm12_main") return check_thm12_main(ctx, opt);
  if (id == "c18_key") return check_c18_key(ctx, opt);
  if (id == "lemma_c4_half") return check_lemma_c4(ctx, opt, false);
  if (id == "lemma_c4_full") return check_lemma_c4(ctx, opt, true);
  if (id == "c5_poly") return check_c5_poly(ctx, opt);
  if (id == "cc3_signed") return check_cc3_signed(ctx, opt);
  if (id == "wolstenholme_pair") return check_wolstenholme_pair(ctx, opt);
  if (id == "lehmer_third") return check_lehmer(ctx, opt, false);
  if (id == "lehmer_sixth") return check_lehmer(ctx, opt, true);
  if (id == "lemma_c15") return check_lemma_c15(ctx, opt);
  if (id == "c19_weighted") return check_c19_weighted(ctx, opt);
  if (id == "binom_halfp") return check_binom_halfp(ctx, opt);
  if (id == "legendre_power") return check_legendre_power(ctx, opt);
  if (id == "thm13_h2") return check_thm13(ctx, opt, true);
  if (id == "thm13_h1") return check_thm13(ctx, opt, false);
  if (id == "sun_franel_alt_p2") return check_sun_franel_alt_p2(ctx, opt);
  if (id == "ms_central_harmonic") return check_ms_central_harmonic(ctx, opt);
  if (id == "d3_truncation") return check_d3_truncation(ctx, opt);
  throw UnknownCheckId("unknown congruence check id: " + id);
}

std::string valid_id_list() {
  std::string out;
  for (const auto& e : kRegistry) {
    if (!out.empty()) out += ", ";
    out += e.id;
  }
  return out;
}

const CongruenceCheckInfo& find_info(const std::string& id) {
  const auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                               [&](const CongruenceCheckInfo& e) { return e.id == id; });
  if (it == kRegistry.end())
    throw UnknownCheckId("unknown congruence check id '" + id + "'; valid ids: " + valid_id_list());
  return *it;
}

// A check whose RHS goes through the Bernoulli table costs O(p^2) no matter
// what its LHS costs.
CostClass effective_cost(const CongruenceCheckInfo& info, const ScanOptions& opt) {
  if (info.cost == CostClass::Quadratic || info.forces_table_path ||
      (info.uses_bernoulli_rhs && opt.bpath == BernoulliPath::Table))
    return CostClass::Quadratic;
  return CostClass::Linear;
}

}  // namespace

const std::vector<CongruenceCheckInfo>& congruence_registry() { return kRegistry; }

bool is_congruence_id(const std::string& id) {
  return std::any_of(kRegistry.begin(), kRegistry.end(),
                     [&](const CongruenceCheckInfo& e) { return e.id == id; });
}

CongruenceCase run_check(const std::string& id, const Prime& p, const ScanOptions& opt) {
  auto ctx = PrimeContext::build(p);
  return run_check(id, ctx, opt);
}

CongruenceCase run_check(const std::string& id, PrimeContext& ctx, const ScanOptions& opt) {
  find_info(id);  // validates the id
  CongruenceCase result;
  result.id = id;
  result.p = ctx.prime.value;
  try {
    const CheckOutput out = dispatch(id, ctx, opt);
    result.params = "p=" + std::to_string(ctx.prime.value) + out.witness;
    result.lhs = Residue(out.lhs, out.modulus);
    result.rhs = Residue(out.rhs, out.modulus);
    result.verdict = out.ok ? CongruenceCase::Verdict::Pass : CongruenceCase::Verdict::Fail;
    result.subcases = out.subcases;
  } catch (const DenominatorNotInvertible& e) {
    result.params = "p=" + std::to_string(ctx.prime.value);
    result.verdict = CongruenceCase::Verdict::Skipped;
    result.skip_reason = e.what();
  }
  return result;
}

ScanResult scan(const std::vector<std::string>& ids, std::uint64_t p_min, std::uint64_t p_max,
                const ScanOptions& opt, unsigned jobs) {
  for (const auto& id : ids) find_info(id);

  ScanResult result;
  const std::uint64_t lo = std::max<std::uint64_t>(p_min, 5);
  const auto primes = lo > p_max ? std::vector<Prime>{} : primes_in_range(lo, p_max);

  for (const auto& id : ids)
    if (effective_cost(find_info(id), opt) == CostClass::Quadratic &&
        !primes.empty() && primes.back().value > opt.o2_ceiling)
      result.capped_checks.push_back(id);
  std::sort(result.capped_checks.begin(), result.capped_checks.end());

  std::vector<std::vector<CongruenceCase>> per_prime(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    auto ctx = PrimeContext::build(primes[i]);
    if (opt.inject_fault) {
      const std::uint64_t at = std::min<std::uint64_t>(2, primes[i].value - 1);
      ctx.h2[at] = add_mod(ctx.h2[at], 1, primes[i].value);
    }
    for (const auto& id : ids) {
      if (effective_cost(find_info(id), opt) == CostClass::Quadratic &&
          primes[i].value > opt.o2_ceiling)
        continue;
      per_prime[i].push_back(run_check(id, ctx, opt));
    }
  });

  for (auto& chunk : per_prime)
    for (auto& c : chunk) result.cases.push_back(std::move(c));
  std::stable_sort(result.cases.begin(), result.cases.end(),
                   [](const CongruenceCase& a, const CongruenceCase& b) {
                     return a.id != b.id ? a.id < b.id : a.p < b.p;
                   });
  for (const auto& c : result.cases) {
    if (c.verdict == CongruenceCase::Verdict::Pass) ++result.pass;
    else if (c.verdict == CongruenceCase::Verdict::Fail) ++result.fail;
    else ++result.skipped;
  }
  return result;
}

}  // namespace exactlab
