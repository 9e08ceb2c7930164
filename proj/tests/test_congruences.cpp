#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "exactlab/congruences.hpp"
#include "oracles.hpp"

using namespace exactlab;
using oracle::BigRational;

namespace {

// Exact-rational left sides, straight from the definitions. These cross-check
// the residue kernels at desk scale.
BigRational lhs_thm12(std::uint64_t p) {
  BigRational acc;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>((p - 1) / 2); ++k)
    acc += (oracle::harmonic(k) - BigRational(2) * oracle::harmonic(2 * k)) /
           BigRational(oracle::pow_int(-3, k) * static_cast<long>(k));
  return acc;
}

BigRational lhs_thm13_h(std::uint64_t p, int order) {
  BigRational acc;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) {
    BigRational term = BigRational(oracle::franel(k)) * oracle::harmonic(k, order);
    acc += k % 2 == 0 ? term : -term;
  }
  return acc;
}

std::uint64_t oracle_lhs(const std::string& id, std::uint64_t p) {
  const auto half = static_cast<std::int64_t>((p - 1) / 2);
  const auto sp = static_cast<std::int64_t>(p);
  BigRational acc;
  if (id == "sun2011_euler") {
    acc = oracle::inv_central_sum(half);
  } else if (id == "thm12_main") {
    acc = lhs_thm12(p);
  } else if (id == "c18_key") {
    for (std::int64_t k = 0; k <= half; ++k)
      acc += BigRational(oracle::binomial(2 * k, k)) * oracle::inv_central_sum(k);
  } else if (id == "lemma_c4_half" || id == "lemma_c4_full") {
    const std::int64_t hi = id == "lemma_c4_full" ? sp - 1 : half;
    for (std::int64_t k = 0; k <= hi; ++k)
      acc += BigRational(oracle::binomial(2 * k, k)) * oracle::harmonic(k, 2);
  } else if (id == "c5_poly") {
    // witness sub-case is t = 1
    for (std::int64_t k = 1; k < sp; ++k)
      acc += BigRational(oracle::binomial(2 * k, k)) * oracle::harmonic(k, 2);
  } else if (id == "cc3_signed") {
    for (std::int64_t k = 1; k < sp; ++k) {
      const long c = ((k / 3) % 2 == 0 ? 1 : -1) + (((k - 1) / 3) % 2 == 0 ? 1 : -1);
      acc += BigRational(c, static_cast<long>(k * k));
    }
  } else if (id == "wolstenholme_pair") {
    acc = oracle::harmonic(sp - 1, 2);
  } else if (id == "lehmer_third") {
    acc = oracle::harmonic(sp / 3, 2);
  } else if (id == "lehmer_sixth") {
    acc = oracle::harmonic(sp / 6, 2);
  } else if (id == "lemma_c15") {
    // witness sub-case is d = (p-1)/2
    for (std::int64_t k = 0; k <= half; ++k)
      acc += BigRational(oracle::binomial(2 * k, k + half));
  } else if (id == "c19_weighted") {
    for (std::int64_t j = 1; j <= half; ++j) {
      const int lj = to_int(legendre_mod3(j));
      const int w = (-3 * lj * lj + 2) * (to_int(legendre_mod3(sp - j)) - lj);
      acc += BigRational(w, static_cast<long>(j * j));
    }
  } else if (id == "binom_halfp") {
    // witness sub-case is k = (p-1)/2
    return oracle::reduce(BigRational(oracle::binomial(half, half)), p);
  } else if (id == "legendre_power") {
    return oracle::reduce(BigRational(oracle::pow_int(-3, half)), p);
  } else if (id == "thm13_h2" || id == "d3_truncation") {
    acc = lhs_thm13_h(p, 2);
  } else if (id == "thm13_h1") {
    acc = lhs_thm13_h(p, 1);
  } else if (id == "ms_central_harmonic") {
    for (std::int64_t j = 0; j <= half; ++j)
      acc += BigRational(oracle::binomial(2 * j, j)) * oracle::harmonic(j);
  } else if (id == "sun_franel_alt_p2") {
    for (std::int64_t k = 0; k < sp; ++k) {
      const BigRational term(oracle::franel(k));
      acc += k % 2 == 0 ? term : -term;
    }
    return oracle::reduce(acc, p * p);
  }
  return oracle::reduce(acc, p);
}

}  // namespace

TEST_CASE("spot witnesses at p=5, frozen from the exact oracle") {
  // exact oracle values first, then residues, then the library
  CHECK(lhs_thm12(5) == BigRational(14, 27));
  CHECK(oracle::reduce(BigRational(14, 27), 5) == 2);
  CHECK(lhs_thm13_h(5, 1) == BigRational(3787, 6));
  CHECK(oracle::reduce(BigRational(3787, 6), 5) == 2);
  CHECK(lhs_thm13_h(5, 2) == BigRational(30733, 72));
  CHECK(oracle::reduce(BigRational(30733, 72), 5) == 4);

  const auto p5 = Prime::make(5);
  const auto thm12 = run_check("thm12_main", p5);
  CHECK(thm12.verdict == CongruenceCase::Verdict::Pass);
  CHECK(thm12.lhs == Residue(2, 5));
  CHECK(thm12.rhs == Residue(2, 5));

  const auto h1 = run_check("thm13_h1", p5);
  CHECK(h1.verdict == CongruenceCase::Verdict::Pass);
  CHECK(h1.lhs == Residue(2, 5));

  const auto h2 = run_check("thm13_h2", p5);
  CHECK(h2.verdict == CongruenceCase::Verdict::Pass);
  CHECK(h2.lhs == Residue(4, 5));

  // 1 - 2 + 10 - 56 + 346 = 299 = 24 mod 25, and (5/3) = -1 = 24
  const auto alt = run_check("sun_franel_alt_p2", p5);
  CHECK(alt.verdict == CongruenceCase::Verdict::Pass);
  CHECK(alt.lhs == Residue(24, 25));
  CHECK(alt.rhs == Residue(24, 25));
}

TEST_CASE("thm13_h2 at p=7 is 3 mod 7 on both sides") {
  const auto c = run_check("thm13_h2", Prime::make(7));
  CHECK(c.verdict == CongruenceCase::Verdict::Pass);
  CHECK(c.lhs == Residue(3, 7));
  CHECK(c.rhs == Residue(3, 7));
}

TEST_CASE("sun2011_euler at p=5") {
  const auto c = run_check("sun2011_euler", Prime::make(5));
  CHECK(c.verdict == CongruenceCase::Verdict::Pass);
  CHECK(c.lhs == Residue(2, 5));  // 13/24 mod 5
}

TEST_CASE("every check agrees with the exact-rational oracle for p <= 100") {
  ScanOptions opt;
  for (const auto& p : primes_in_range(5, 100)) {
    auto ctx = PrimeContext::build(p);
    for (const auto& info : congruence_registry()) {
      const auto c = run_check(info.id, ctx, opt);
      CHECK(c.verdict == CongruenceCase::Verdict::Pass);
      REQUIRE(c.lhs.has_value());
      const std::uint64_t expect = oracle_lhs(info.id, p.value);
      CHECK_MESSAGE(c.lhs->value() == expect, info.id, " p=", p.value);
    }
  }
}

TEST_CASE("unknown check ids are rejected with the valid list") {
  try {
    run_check("nosuch", Prime::make(7));
    FAIL("expected UnknownCheckId");
  } catch (const UnknownCheckId& e) {
    const std::string what = e.what();
    CHECK(what.find("thm12_main") != std::string::npos);
    CHECK(what.find("nosuch") != std::string::npos);
  }
}

TEST_CASE("scan basics") {
  std::vector<std::string> all;
  for (const auto& info : congruence_registry()) all.push_back(info.id);

  const auto report = scan(all, 5, 100);
  CHECK(report.fail == 0);
  CHECK(report.skipped == 0);
  CHECK(report.cases.size() == all.size() * primes_in_range(5, 100).size());
  CHECK(std::is_sorted(report.cases.begin(), report.cases.end(),
                       [](const CongruenceCase& a, const CongruenceCase& b) {
                         return a.id != b.id ? a.id < b.id : a.p < b.p;
                       }));

  const auto empty = scan({}, 5, 100);
  CHECK(empty.cases.empty());
  CHECK(empty.pass == 0);

  CHECK_THROWS_AS(scan({"nosuch"}, 5, 50), UnknownCheckId);
}

TEST_CASE("scan results do not depend on the worker count") {
  std::vector<std::string> ids{"thm12_main", "wolstenholme_pair", "lemma_c15", "thm13_h1"};
  const auto seq = scan(ids, 5, 120, {}, 1);
  const auto par = scan(ids, 5, 120, {}, 4);
  REQUIRE(seq.cases.size() == par.cases.size());
  for (std::size_t i = 0; i < seq.cases.size(); ++i) {
    CHECK(seq.cases[i].id == par.cases[i].id);
    CHECK(seq.cases[i].p == par.cases[i].p);
    CHECK(seq.cases[i].params == par.cases[i].params);
    CHECK(seq.cases[i].lhs->value() == par.cases[i].lhs->value());
    CHECK(seq.cases[i].rhs->value() == par.cases[i].rhs->value());
  }
}

TEST_CASE("quadratic checks respect the o2 ceiling") {
  ScanOptions opt;
  opt.o2_ceiling = 100;
  std::vector<std::string> ids{"lemma_c15", "thm12_main"};
  const auto report = scan(ids, 5, 150, opt);
  CHECK(std::find(report.capped_checks.begin(), report.capped_checks.end(), "lemma_c15") !=
        report.capped_checks.end());
  for (const auto& c : report.cases)
    if (c.id == "lemma_c15") CHECK(c.p <= 100);
  bool linear_beyond = false;
  for (const auto& c : report.cases)
    if (c.id == "thm12_main" && c.p > 100) linear_beyond = true;
  CHECK(linear_beyond);
}

TEST_CASE("bpath table agrees with the fast default") {
  ScanOptions fast, table;
  table.bpath = BernoulliPath::Table;
  for (const auto& p : primes_in_range(5, 120)) {
    const auto a = run_check("thm12_main", p, fast);
    const auto b = run_check("thm12_main", p, table);
    CHECK(a.rhs->value() == b.rhs->value());
    CHECK(a.params.find("bpath=fast") != std::string::npos);
    CHECK(b.params.find("bpath=table") != std::string::npos);
  }
}

TEST_CASE("fault injection: a poisoned Franel residue must fail") {
  const auto p = Prime::make(23);
  auto ctx = PrimeContext::build(p);
  ctx.franel_p[5] = add_mod(ctx.franel_p[5], 1, p.value);
  bool failed = false;
  for (const std::string id : {"thm13_h2", "thm13_h1", "d3_truncation"})
    if (run_check(id, ctx).verdict == CongruenceCase::Verdict::Fail) failed = true;
  CHECK(failed);
}

TEST_CASE("fault injection: a poisoned harmonic prefix must fail") {
  const auto p = Prime::make(23);
  auto ctx = PrimeContext::build(p);
  ctx.h2[4] = add_mod(ctx.h2[4], 1, p.value);
  bool failed = false;
  for (const auto& info : congruence_registry())
    if (run_check(info.id, ctx).verdict == CongruenceCase::Verdict::Fail) failed = true;
  CHECK(failed);
}

TEST_CASE("fault injection: a poisoned Bernoulli entry must fail") {
  const auto p = Prime::make(23);
  auto ctx = PrimeContext::build(p);
  ctx.ensure_bernoulli();
  ctx.bernoulli->residues[p.value - 2] =
      add_mod(ctx.bernoulli->residues[p.value - 2], 1, p.value);
  CHECK(run_check("lehmer_third", ctx).verdict == CongruenceCase::Verdict::Fail);
}

TEST_CASE("scan-level fault flag forces failures") {
  ScanOptions opt;
  opt.inject_fault = true;
  std::vector<std::string> all;
  for (const auto& info : congruence_registry()) all.push_back(info.id);
  const auto report = scan(all, 5, 30, opt);
  CHECK(report.fail > 0);
}

TEST_CASE("sub-case aggregates report their size") {
  const auto c15 = run_check("lemma_c15", Prime::make(13));
  CHECK(c15.subcases == 2 * 7);
  CHECK(c15.params.find("d=6") != std::string::npos);
  const auto pair = run_check("wolstenholme_pair", Prime::make(13));
  CHECK(pair.subcases == 2);
  const auto d3 = run_check("d3_truncation", Prime::make(13));
  CHECK(d3.subcases == 1 + 6);
}
