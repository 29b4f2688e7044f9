#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mananet/equivalence.hpp"
#include "mananet/error.hpp"
#include "mananet/law_report.hpp"
#include "mananet/mana_external.hpp"
#include "mananet/mana_internal.hpp"
#include "mananet/net.hpp"
#include "mananet/reach.hpp"

namespace mananet {

/// Malformed input. `line`/`column` are 1-based and 0 when unknown; `path`
/// is a JSON pointer for structural errors in JSON documents.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0,
             std::string path = {});
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

/// A net file: the net plus optional mana policy and initial state.
struct NetDocument {
  Net net;
  std::optional<ManaPolicy> policy;
  std::optional<Marking> marking;
  std::optional<Multiset> pool;

  friend bool operator==(const NetDocument&, const NetDocument&) = default;
};

/// Net, policy and state cross-reference problems of a document.
std::vector<Violation> validate_document(const NetDocument& doc);

/// Parses the JSON net format. Unknown keys, non-positive multiplicities,
/// and marking/pool/mana entries naming undeclared symbols are rejected.
/// Net-level invariants are left to validate_net.
NetDocument parse_json(std::string_view text);
/// Canonical form: compact, keys sorted, no trailing whitespace.
std::string emit_json(const NetDocument& doc);

nlohmann::json to_json(const Multiset& m);
nlohmann::json to_json(const Net& net);
nlohmann::json to_json(const ManaPolicy& policy);
nlohmann::json to_json(const Trace& trace);
nlohmann::json to_json(const ManaState& s);
nlohmann::json to_json(const AffineSpan& s);
nlohmann::json to_json(const NetDocument& doc);
nlohmann::json to_json(const std::vector<Violation>& violations);
nlohmann::json to_json(const LawReport& report);
nlohmann::json to_json(const EquivalenceReport& report);
nlohmann::json to_json(const ReachGraph<Marking>& g);
nlohmann::json to_json(const ReachGraph<ManaState>& g);

Multiset multiset_from_json(const nlohmann::json& j, const std::string& path = "");
Trace trace_from_json(const nlohmann::json& j);
ManaState mana_state_from_json(const nlohmann::json& j);

std::string canonical_json(const Multiset& m);
std::string canonical_json(const ManaState& s);

}  // namespace mananet
