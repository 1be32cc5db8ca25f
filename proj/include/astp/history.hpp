#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "astp/states.hpp"

namespace astp {

struct PlayerTurn {
  std::string utterance;
};

// NPC turns store the spoken dialogue after placeholder substitution, so the
// history seen by the model references corrected totals.
struct NpcTurn {
  std::string dialogue;
  DialogueState state;
};

using HistoryEvent = std::variant<PlayerTurn, NpcTurn>;

/// Alternating player/NPC event sequence. Append-only.
class DialogueHistory {
 public:
  void add_player(std::string utterance) {
    events_.push_back(PlayerTurn{std::move(utterance)});
  }
  void add_npc(std::string dialogue, DialogueState state) {
    events_.push_back(NpcTurn{std::move(dialogue), state});
  }

  const std::vector<HistoryEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }

 private:
  std::vector<HistoryEvent> events_;
};

/// State recorded in the most recent NPC response; absent when the history has
/// no NPC response yet.
std::optional<DialogueState> last_state(const DialogueHistory& history);

/// Most recent trade state among NPC responses, skipping intervening base-state
/// turns; absent when no trade turn has happened. This is what the model is
/// asked to identify as its "last trade subcontext".
std::optional<DialogueState> last_trade_state(const DialogueHistory& history);

}  // namespace astp
