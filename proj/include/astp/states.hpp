#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace astp {

/// The seven dialogue states. Base states (CASUAL, END) cover everything
/// outside trading; the five trade states cover the browse-offer-review-confirm
/// flow. Enumerator order is the canonical matrix/report order
/// (C, SI, OS, N, FC, CS, E).
enum class DialogueState : int {
  CASUAL = 0,
  SHOW_ITEMS = 1,
  OFFER_SELL = 2,
  NEGOTIATE = 3,
  FINAL_CHECK = 4,
  COMMIT_SALE = 5,
  END = 6,
};

inline constexpr int kStateCount = 7;

constexpr bool is_base_state(DialogueState s) {
  return s == DialogueState::CASUAL || s == DialogueState::END;
}

constexpr bool is_trade_state(DialogueState s) { return !is_base_state(s); }

constexpr std::array<DialogueState, kStateCount> all_states() {
  return {DialogueState::CASUAL,      DialogueState::SHOW_ITEMS,
          DialogueState::OFFER_SELL,  DialogueState::NEGOTIATE,
          DialogueState::FINAL_CHECK, DialogueState::COMMIT_SALE,
          DialogueState::END};
}

std::string_view to_string(DialogueState s);

/// Short label used in matrix headers: C, SI, OS, N, FC, CS, E.
std::string_view to_abbrev(DialogueState s);

std::optional<DialogueState> state_from_string(std::string_view name);

}  // namespace astp
