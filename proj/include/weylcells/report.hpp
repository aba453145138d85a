#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace weylcells {

enum class Verdict { kPass, kFail, kSkip };

std::string to_string(Verdict v);

/// One verification outcome. `kind` is empty for Weyl-group checks and
/// "SOUND" or "COMPLETE" for finite-field oracle checks.
struct CheckRecord {
  std::string subject;
  std::string check;
  Verdict verdict = Verdict::kPass;
  std::string kind;
  std::string detail;
  std::optional<std::string> witness;
};

class Report {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void add(std::string subject, std::string check, bool ok, std::string detail = {},
           std::optional<std::string> witness = std::nullopt, std::string kind = {});
  void append(const Report& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool passed() const;
  std::size_t failures() const;

  /// One line per record: "PASS A3 m-classification: ... [witness: ...]".
  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace weylcells
