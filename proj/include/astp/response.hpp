#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "astp/history.hpp"
#include "astp/states.hpp"
#include "astp/variant.hpp"
#include "astp/world.hpp"

namespace astp {

enum class ContextType { CASUAL, TRADE, END };

std::string_view to_string(ContextType t);
std::optional<ContextType> context_type_from_string(std::string_view name);

/// A price slot holding either a non-negative integer or the placeholder
/// token the post-processor later resolves.
struct PriceField {
  enum class Kind { NUMBER, PLACEHOLDER };

  Kind kind = Kind::NUMBER;
  std::int64_t value = 0;   // meaningful when kind == NUMBER
  std::string token;        // meaningful when kind == PLACEHOLDER

  bool is_number() const { return kind == Kind::NUMBER; }
  bool is_placeholder() const { return kind == Kind::PLACEHOLDER; }

  static PriceField number(std::int64_t v) {
    return PriceField{Kind::NUMBER, v, {}};
  }
  static PriceField placeholder(std::string tok) {
    return PriceField{Kind::PLACEHOLDER, 0, std::move(tok)};
  }

  friend bool operator==(const PriceField&, const PriceField&) = default;
};

/// The structured NPC response contract. The two-level wire format
/// (context_type + context_details.context_subtype) is flattened here;
/// extract_state() recovers the single dialogue state.
struct NpcResponse {
  std::optional<std::string> last_trade_context;  // present on E4 variants
  std::string context_reason;
  ContextType context_type = ContextType::CASUAL;
  std::optional<DialogueState> context_subtype;  // trade states only
  std::optional<std::vector<CartLine>> items;
  std::optional<PriceField> original_price;
  std::optional<PriceField> sale_price;
  std::string npc_thoughts;
  std::string npc_action;
  std::string npc_dialogue;

  friend bool operator==(const NpcResponse&, const NpcResponse&) = default;
};

enum class Severity { WARNING, FATAL };

struct Issue {
  Severity severity = Severity::WARNING;
  std::string code;
  std::string message;
};

/// parse_response never throws: failures surface here. `response` is absent
/// iff at least one issue is fatal.
struct ParseOutcome {
  std::optional<NpcResponse> response;
  std::vector<Issue> issues;
  std::string raw_text;

  bool ok() const { return response.has_value(); }
  bool has_fatal() const;
  bool has_issue(std::string_view code) const;
};

struct ParserOptions {
  // Set for E4 variants: a missing last_trade_context is flagged.
  bool require_last_trade_context = false;
  std::string placeholder = "__PRICE__";
  // Accept edit-distance-1 corruptions of the placeholder in price fields,
  // normalizing them with a warning instead of failing the parse.
  bool fuzzy_placeholder_repair = false;
};

/// Extracts the first JSON object from raw model output (code fences and
/// surrounding prose stripped), validates it against the response contract,
/// and returns the typed response plus any issues.
ParseOutcome parse_response(std::string_view raw,
                            const ParserOptions& options = {});
ParseOutcome parse_response(std::string_view raw, const PromptVariant& variant,
                            std::string_view placeholder = "__PRICE__",
                            bool fuzzy_placeholder_repair = false);

/// CASUAL/END map to themselves; TRADE maps to its subtype.
DialogueState extract_state(const NpcResponse& resp);

/// True iff the reported last_trade_context agrees with the trade state
/// actually recorded in history (empty string when no trade turn exists).
bool check_inference_consistency(const NpcResponse& resp,
                                 const DialogueHistory& history);

/// Canonical serialized form: the wire field names and nesting, also used as
/// the transcript storage form.
nlohmann::ordered_json to_canonical_json(const NpcResponse& resp);
std::string to_canonical_string(const NpcResponse& resp);

}  // namespace astp
