#include "astp/history.hpp"

namespace astp {

std::optional<DialogueState> last_state(const DialogueHistory& history) {
  const auto& events = history.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (const auto* npc = std::get_if<NpcTurn>(&*it)) {
      return npc->state;
    }
  }
  return std::nullopt;
}

std::optional<DialogueState> last_trade_state(const DialogueHistory& history) {
  const auto& events = history.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (const auto* npc = std::get_if<NpcTurn>(&*it)) {
      if (is_trade_state(npc->state)) {
        return npc->state;
      }
    }
  }
  return std::nullopt;
}

}  // namespace astp
