#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "astp/response.hpp"
#include "astp/states.hpp"

namespace astp {

struct PppConfig {
  std::string placeholder = "__PRICE__";  // non-empty, no whitespace
  bool enabled = true;
  DialogueState applicable_state = DialogueState::OFFER_SELL;
  // Repair edit-distance-1 corruptions of the placeholder in dialogue text.
  bool fuzzy_repair = false;
  std::string currency_word = "gold";
};

struct SubstitutionCounts {
  int npc_dialogue = 0;
  int original_price = 0;
  int sale_price = 0;

  int total() const { return npc_dialogue + original_price + sale_price; }
};

struct PppResult {
  NpcResponse response;  // substituted; never contains the placeholder
  std::int64_t computed_total = 0;
  SubstitutionCounts substitutions;
  std::vector<Issue> issues;
};

/// Placeholder post-processing. Active only when `cfg.enabled` and the
/// response's state equals `cfg.applicable_state`: the cart total is computed
/// exactly and takes over every price channel the placeholder protocol
/// touches — all dialogue occurrences of the token, plus original_price and
/// sale_price whenever the response engaged the protocol at all. Responses in
/// other states pass through unchanged; a placeholder appearing there is
/// reported as a placeholder_in_wrong_state issue (the prompt forbids it).
PppResult apply_ppp(const NpcResponse& resp, const PppConfig& cfg);

struct TotalCheck {
  bool consistent = false;
  std::optional<std::int64_t> stated;
  std::int64_t expected = 0;
  // Consistent only through the sale_price < original_price carve-out.
  bool via_discount = false;
  bool no_stated_total = false;
};

/// Compares the total the NPC stated against the exact sum of its item
/// details. `stated` is sale_price when integral, otherwise the rightmost
/// integer immediately preceding the currency word in npc_dialogue. A granted
/// discount (sale_price < original_price, statement matches sale_price)
/// counts as consistent.
TotalCheck verify_stated_total(const NpcResponse& resp,
                               const PppConfig& cfg = {});

}  // namespace astp
