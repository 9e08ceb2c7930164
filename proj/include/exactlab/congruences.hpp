#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactlab/modular.hpp"
#include "exactlab/special_values.hpp"

namespace exactlab {

struct UnknownCheckId : std::invalid_argument {
  explicit UnknownCheckId(const std::string& what) : std::invalid_argument(what) {}
};

enum class CostClass { Linear, Quadratic };
enum class BernoulliPath { Fast, Table };

/// Per-prime residue tables shared by the check kernels. Built once per
/// prime, immutable during a scan; tests may perturb entries to prove the
/// suite can fail.
struct PrimeContext {
  Prime prime;
  std::vector<std::uint64_t> inv;        // inverses of 1..p-1 mod p
  std::vector<std::uint64_t> h1;         // H_k mod p, k = 0..p-1
  std::vector<std::uint64_t> h2;         // H_k^{(2)} mod p, k = 0..p-1
  std::vector<std::uint64_t> central;    // C(2k,k) mod p, k = 0..p-1
  std::vector<std::uint64_t> franel_p;   // f_k mod p, k = 0..p-1
  std::vector<std::uint64_t> franel_p2;  // f_k mod p^2, k = 0..p-1
  std::optional<BernoulliTable> bernoulli;
  std::optional<EulerTable> euler;

  static PrimeContext build(const Prime& p);
  void ensure_bernoulli();
  void ensure_euler();
};

struct CongruenceCheckInfo {
  std::string id;
  std::string description;
  std::string modulus_rule;  // "p" or "p^2"
  CostClass cost;
  bool uses_bernoulli_rhs;   // RHS is a multiple of B_{p-2}(1/3)
  bool forces_table_path;    // fast path would be circular, table only
  bool uses_euler_table;
};

/// Stable check IDs, one entry per congruence family.
const std::vector<CongruenceCheckInfo>& congruence_registry();
bool is_congruence_id(const std::string& id);

struct CongruenceCase {
  std::string id;
  std::uint64_t p = 0;
  std::string params;        // "p=7", plus sub-case witness and bpath notes
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  enum class Verdict { Pass, Fail, Skipped } verdict = Verdict::Fail;
  std::string skip_reason;   // nonempty iff skipped
  std::size_t subcases = 1;
};

struct ScanOptions {
  std::uint64_t o2_ceiling = 500;       // cap for Quadratic-class checks
  std::uint64_t full_t_ceiling = 200;   // c5_poly quantifies over all t up to here
  std::uint64_t sample_count = 16;      // t samples above the ceiling
  std::uint64_t seed = 0x5eedf00d;      // for the deterministic t samples
  BernoulliPath bpath = BernoulliPath::Fast;
  bool inject_fault = false;            // perturb one harmonic residue per prime
};

/// One check at one prime. Builds a private context; use the context
/// overload when scanning many checks per prime. The context overload builds
/// the Bernoulli/Euler tables lazily when the check needs them.
CongruenceCase run_check(const std::string& id, const Prime& p, const ScanOptions& opt = {});
CongruenceCase run_check(const std::string& id, PrimeContext& ctx, const ScanOptions& opt = {});

struct ScanResult {
  std::vector<CongruenceCase> cases;  // sorted by check ID, then prime
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::vector<std::string> capped_checks;  // Quadratic IDs limited by o2_ceiling
};

/// Runs the selected checks over every prime in [max(5, p_min), p_max].
/// Quadratic-class checks stop at opt.o2_ceiling. Per-prime work is
/// parallelized over `jobs` workers; the result ordering is deterministic.
ScanResult scan(const std::vector<std::string>& ids, std::uint64_t p_min, std::uint64_t p_max,
                const ScanOptions& opt = {}, unsigned jobs = 1);

}  // namespace exactlab
