#include "primdyn/certificate.hpp"

#include <chrono>
#include <ctime>

#include "primdyn/errors.hpp"

namespace primdyn {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

Verdict verdict_from_str(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "inconclusive") return Verdict::Inconclusive;
  if (s == "budget-exceeded") return Verdict::BudgetExceeded;
  throw DomainError("unknown verdict: " + s);
}

std::string now_utc_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Certificate Certificate::start(std::string claim_id) {
  Certificate c;
  c.claim_id = std::move(claim_id);
  c.tool_version = kVersion;
  return c;
}

void Certificate::fail(Json witness) {
  verdict = Verdict::Fail;
  witnesses.push_back(std::move(witness));
}

void Certificate::finalize(std::chrono::steady_clock::time_point t0) {
  timestamp = now_utc_iso8601();
  elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  if (verdict == Verdict::Fail && witnesses.empty())
    throw InvariantViolation("fail verdict without witness in " + claim_id);
}

Json Certificate::to_json() const {
  Json j;
  j["claim_id"] = claim_id;
  j["parameters"] = parameters;
  j["verdict"] = verdict_str(verdict);
  j["witnesses"] = witnesses;
  j["tool_version"] = tool_version;
  j["timestamp"] = timestamp;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  Certificate c;
  c.claim_id = j.at("claim_id").get<std::string>();
  c.parameters = j.at("parameters");
  c.verdict = verdict_from_str(j.at("verdict").get<std::string>());
  c.witnesses = j.at("witnesses");
  c.tool_version = j.at("tool_version").get<std::string>();
  c.timestamp = j.at("timestamp").get<std::string>();
  c.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return c;
}

Json gentuple_json(const GenTuple& t) {
  Json j;
  Json entries = Json::array();
  for (const Word& w : t.entries()) entries.push_back(w.str());
  j["entries"] = entries;
  Json hist = Json::array();
  for (const Move& m : t.history()) {
    Json h;
    switch (m.kind) {
      case Move::Kind::Swap: h["kind"] = "swap"; break;
      case Move::Kind::Invert: h["kind"] = "invert"; break;
      case Move::Kind::MulRight: h["kind"] = "mul"; break;
      case Move::Kind::NielsenLeft: h["kind"] = "lmul"; break;
      case Move::Kind::NielsenRight: h["kind"] = "rmul"; break;
    }
    h["i"] = m.i;
    h["j"] = m.j;
    h["sign"] = m.sign;
    hist.push_back(h);
  }
  j["history"] = hist;
  return j;
}

Json girth_certificate_json(const GirthCertificate& c) {
  Json j;
  j["generators"] = gentuple_json(c.generators);
  j["bound"] = c.bound;
  if (c.cycle) {
    j["result"] = {{"cycle", c.cycle->str()}, {"length", c.cycle->size()}};
  } else {
    j["result"] = c.complete ? "no relation <= bound" : "search incomplete";
  }
  j["oracle"] = c.oracle_id;
  j["stats"] = {{"nodes_expanded", c.nodes_expanded}, {"elapsed_ms", c.elapsed_ms}};
  j["complete"] = c.complete;
  return j;
}

}  // namespace primdyn
