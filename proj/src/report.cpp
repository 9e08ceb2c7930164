#include "exactlab/report.hpp"

#include <array>
#include <map>
#include <sstream>

#include <json.hpp>

namespace exactlab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "skipped";
  }
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : cases) {
    if (c.verdict == Verdict::Pass) ++s.pass;
    else if (c.verdict == Verdict::Fail) ++s.fail;
    else ++s.skipped;
  }
  return s;
}

CaseRecord to_record(const IdentityCase& c) {
  CaseRecord r;
  r.kind = "identity";
  r.id = c.id;
  r.params = c.params;
  if (c.relation == CaseRelation::LessThan) r.params += ";relation=lt";
  r.lhs = c.lhs.to_string();
  r.rhs = c.rhs.to_string();
  r.verdict = c.pass ? Verdict::Pass : Verdict::Fail;
  return r;
}

CaseRecord to_record(const CongruenceCase& c) {
  CaseRecord r;
  r.kind = "congruence";
  r.id = c.id;
  r.params = c.params;
  if (c.subcases > 1) r.params += ";subcases=" + std::to_string(c.subcases);
  r.lhs = c.lhs ? c.lhs->to_string() : "-";
  r.rhs = c.rhs ? c.rhs->to_string() : "-";
  switch (c.verdict) {
    case CongruenceCase::Verdict::Pass: r.verdict = Verdict::Pass; break;
    case CongruenceCase::Verdict::Fail: r.verdict = Verdict::Fail; break;
    default:
      r.verdict = Verdict::Skipped;
      r.params += ";skip=" + c.skip_reason;
  }
  return r;
}

namespace {

std::string approx(const BigRational& q) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", q.to_double());
  return buf;
}

}  // namespace

CaseRecord to_record(const SeriesEvaluation& ev) {
  CaseRecord r;
  r.kind = "series";
  r.id = series_name(ev.id);
  r.params = "K=" + std::to_string(ev.terms) + ";D=" + std::to_string(ev.reference.digits) +
             ";deviation=" + approx(ev.deviation) + ";bound=" + approx(ev.bound) +
             ";allowance=" + approx(ev.allowance);
  r.lhs = ev.partial_decimal.to_string();
  r.rhs = ev.reference.to_string();
  r.verdict = ev.within_bound ? Verdict::Pass : Verdict::Fail;
  return r;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json e;
    e["kind"] = c.kind;
    e["id"] = c.id;
    e["params"] = c.params;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["verdict"] = verdict_name(c.verdict);
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  const Summary s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "kind,id,params,lhs,rhs,verdict\n";
  for (const auto& c : report.cases)
    out << c.kind << ',' << c.id << ',' << c.params << ',' << c.lhs << ',' << c.rhs << ','
        << verdict_name(c.verdict) << '\n';
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  // per-id tallies, in first-seen order
  std::vector<std::string> order;
  std::map<std::string, std::array<std::size_t, 3>> tally;
  for (const auto& c : report.cases) {
    const std::string key = c.kind + " " + c.id;
    if (!tally.count(key)) order.push_back(key);
    ++tally[key][static_cast<std::size_t>(c.verdict)];
  }
  for (const auto& key : order) {
    const auto& t = tally[key];
    out << key << ": " << t[0] + t[1] + t[2] << " cases, " << t[0] << " pass, " << t[1]
        << " fail";
    if (t[2]) out << ", " << t[2] << " SKIPPED";
    out << "\n";
  }
  std::size_t shown = 0;
  for (const auto& c : report.cases) {
    if (c.verdict == Verdict::Pass) continue;
    if (shown == 0) out << "first failures:\n";
    if (++shown > 5) break;
    out << "  " << verdict_name(c.verdict) << " " << c.id << " [" << c.params
        << "] lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
  }
  const Summary s = report.summary();
  out << "summary: pass=" << s.pass << " fail=" << s.fail << " skipped=" << s.skipped
      << " wall_ms=" << report.wall_ms << "\n";
  return out.str();
}

}  // namespace exactlab
