#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exactlab/rational.hpp"
#include "exactlab/recurrence.hpp"

namespace exactlab {

enum class CaseRelation { Equal, LessThan };

struct IdentityCase {
  std::string id;
  std::string params;  // "n=3", "n=3;t=4/1", "n=5;d=2", ...
  BigRational lhs;
  BigRational rhs;
  CaseRelation relation = CaseRelation::Equal;
  bool pass = false;
};

struct IdentityOutcome {
  std::string id;
  std::vector<IdentityCase> cases;

  bool all_pass() const;
  std::size_t fail_count() const;
};

struct IdentityInfo {
  std::string id;
  std::string description;
  std::size_t default_window;
  std::size_t min_window;  // requested windows are clamped up to this
};

/// Enumerable registry: stable IDs, one entry per identity family.
const std::vector<IdentityInfo>& identity_registry();
bool is_identity_id(const std::string& id);

/// Runs one identity family. window overrides the default when given
/// (clamped to the entry's minimum). When inject_fault is set, one case's
/// right-hand side is perturbed by +1 before comparison — the engine must
/// report the resulting failure.
IdentityOutcome run_identity(const std::string& id, std::optional<std::size_t> window = {},
                             bool inject_fault = false);

// Individual verifiers (also reachable through run_identity).
IdentityOutcome verify_b1(std::size_t n_max);
IdentityOutcome verify_b1_recurrence(std::size_t n_max);
IdentityOutcome verify_b2_transform(std::size_t n_max);
IdentityOutcome verify_c1(std::size_t n_max);
/// Both sides are degree <= n polynomials in t; equality at `points` distinct
/// rational values (t = 1, 2, ..., points) certifies the identity whenever
/// points >= n_max + 1. Throws std::domain_error otherwise.
IdentityOutcome verify_c2_polynomial(std::size_t n_max, std::size_t points);
/// The d1 (second-order harmonic) and d2 (harmonic) identities together.
std::vector<IdentityOutcome> verify_d1_d2(std::size_t n_max);
IdentityOutcome verify_tauraso_halfsum(std::size_t n_max);
IdentityOutcome verify_strehl(std::size_t n_max);
IdentityOutcome verify_franel_recurrence(std::size_t n_max);
IdentityOutcome verify_lucas_closed(std::size_t k_max);
/// Deflation terms at n = 60: |sum_{k<j} (-4)^k C(60,k) / (-3)^60| < 1e-6
/// for j = 1..5, compared in exact arithmetic.
IdentityOutcome verify_b3_limit();
/// |partial(a1, K) - partial(aa1, K)| < 1e-20 in exact arithmetic.
IdentityOutcome verify_b4_tail_agreement(std::size_t terms);

// Shared term oracles for the b1 identity (used by the recurrence
// certification and the series module tests).
BigRational b1_lhs_term(std::size_t n);
BigRational b1_rhs_term(std::size_t n);
/// Partial sums A(n) = sum_{k=1..n} (H_k - 2 H_{2k}) / ((-3)^k k).
std::vector<BigRational> a1_prefix(std::size_t n_max);

}  // namespace exactlab
