#include "weylcells/report.hpp"

#include <algorithm>
#include <sstream>

namespace weylcells {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kSkip: return "SKIP";
  }
  return "?";
}

void Report::add(std::string subject, std::string check, bool ok, std::string detail,
                 std::optional<std::string> witness, std::string kind) {
  records_.push_back(CheckRecord{std::move(subject), std::move(check), ok ? Verdict::kPass : Verdict::kFail,
                                 std::move(kind), std::move(detail), ok ? std::nullopt : std::move(witness)});
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const auto& r) { return r.verdict == Verdict::kFail; }));
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << to_string(r.verdict) << ' ' << r.subject << ' ';
    if (!r.kind.empty()) os << r.kind << ' ';
    os << r.check;
    if (!r.detail.empty()) os << ": " << r.detail;
    if (r.witness) os << " [witness: " << *r.witness << ']';
    os << '\n';
  }
  return os.str();
}

nlohmann::json Report::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json j{{"subject", r.subject}, {"check", r.check}, {"verdict", to_string(r.verdict)}};
    if (!r.kind.empty()) j["kind"] = r.kind;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.witness) j["witness"] = *r.witness;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"passed", passed()}, {"records", std::move(arr)}};
}

}  // namespace weylcells
