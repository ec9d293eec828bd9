#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "primdyn/girth.hpp"

namespace primdyn {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Inconclusive, BudgetExceeded };

std::string verdict_str(Verdict v);
Verdict verdict_from_str(const std::string& s);

// Machine-readable verdict record binding a claim to parameters, witnesses
// and pass/fail.  verdict == Fail implies at least one witness.
struct Certificate {
  std::string claim_id;
  Json parameters = Json::object();
  Verdict verdict = Verdict::Pass;
  Json witnesses = Json::array();
  std::string tool_version;
  std::string timestamp;       // ISO-8601 UTC, set at finalize()
  std::int64_t elapsed_ms = 0;

  static Certificate start(std::string claim_id);
  void fail(Json witness);
  void finalize(std::chrono::steady_clock::time_point t0);

  Json to_json() const;
  static Certificate from_json(const Json& j);
};

Json girth_certificate_json(const GirthCertificate& c);
Json gentuple_json(const GenTuple& t);

std::string now_utc_iso8601();

}  // namespace primdyn
