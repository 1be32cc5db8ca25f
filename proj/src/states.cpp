#include "astp/states.hpp"

namespace astp {

std::string_view to_string(DialogueState s) {
  switch (s) {
    case DialogueState::CASUAL:
      return "CASUAL";
    case DialogueState::SHOW_ITEMS:
      return "SHOW_ITEMS";
    case DialogueState::OFFER_SELL:
      return "OFFER_SELL";
    case DialogueState::NEGOTIATE:
      return "NEGOTIATE";
    case DialogueState::FINAL_CHECK:
      return "FINAL_CHECK";
    case DialogueState::COMMIT_SALE:
      return "COMMIT_SALE";
    case DialogueState::END:
      return "END";
  }
  return "?";
}

std::string_view to_abbrev(DialogueState s) {
  switch (s) {
    case DialogueState::CASUAL:
      return "C";
    case DialogueState::SHOW_ITEMS:
      return "SI";
    case DialogueState::OFFER_SELL:
      return "OS";
    case DialogueState::NEGOTIATE:
      return "N";
    case DialogueState::FINAL_CHECK:
      return "FC";
    case DialogueState::COMMIT_SALE:
      return "CS";
    case DialogueState::END:
      return "E";
  }
  return "?";
}

std::optional<DialogueState> state_from_string(std::string_view name) {
  for (DialogueState s : all_states()) {
    if (name == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace astp
