#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exactlab/congruences.hpp"
#include "exactlab/identities.hpp"
#include "exactlab/series.hpp"

namespace exactlab {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { Pass, Fail, Skipped };

std::string verdict_name(Verdict v);

struct CaseRecord {
  std::string kind;    // "identity" | "congruence" | "series"
  std::string id;
  std::string params;  // ";"-separated key=value pairs
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::Fail;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct VerificationReport {
  std::string version = kToolVersion;
  std::vector<std::pair<std::string, std::string>> config;  // ordered echo
  std::vector<CaseRecord> cases;
  std::int64_t wall_ms = 0;

  Summary summary() const;
  void add(CaseRecord record) { cases.push_back(std::move(record)); }
};

CaseRecord to_record(const IdentityCase& c);
CaseRecord to_record(const CongruenceCase& c);
CaseRecord to_record(const SeriesEvaluation& ev);

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
/// Per-check one-line summaries plus the first five failures.
std::string to_text(const VerificationReport& report);

}  // namespace exactlab
