#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mananet {

enum class LawStatus { Pass, Fail, Inconclusive };

inline const char* to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct LawResult {
  std::string law;
  LawStatus status = LawStatus::Pass;
  std::optional<std::string> counterexample;
};

/// Outcome of a batch of law checks. An inconclusive result counts as a
/// failure of the batch.
struct LawReport {
  std::string note;
  std::vector<LawResult> results;

  void add(std::string law, LawStatus status, std::optional<std::string> counterexample = {}) {
    results.push_back({std::move(law), status, std::move(counterexample)});
  }
  void append(const LawReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }
  bool passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const LawResult& r) { return r.status == LawStatus::Pass; });
  }
};

}  // namespace mananet
