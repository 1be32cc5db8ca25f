#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "astp/states.hpp"

namespace astp {

using StateEdge = std::pair<DialogueState, DialogueState>;

/// Valid-transition edge set plus the commit guard. Immutable after
/// construction; safe to share across threads.
class TransitionPolicy {
 public:
  TransitionPolicy(std::set<StateEdge> edges, bool commit_guard,
                   std::set<DialogueState> initial_states)
      : edges_(std::move(edges)),
        commit_guard_(commit_guard),
        initial_states_(std::move(initial_states)) {}

  bool contains_edge(DialogueState from, DialogueState to) const {
    return edges_.count({from, to}) > 0;
  }
  bool is_initial(DialogueState s) const { return initial_states_.count(s) > 0; }
  bool commit_guard() const { return commit_guard_; }
  const std::set<StateEdge>& edges() const { return edges_; }
  const std::set<DialogueState>& initial_states() const {
    return initial_states_;
  }

  /// Edges serialize as "FROM->TO" strings so tests and configs can declare
  /// custom policies.
  nlohmann::json to_json() const;
  static TransitionPolicy from_json(const nlohmann::json& j);
  static TransitionPolicy load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::set<StateEdge> edges_;
  bool commit_guard_ = true;
  std::set<DialogueState> initial_states_;
};

/// The canonical edge set: the explicit trade-flow graph, closed under
/// self-loops (except COMMIT_SALE), base-state entry/exit, and any-state ->
/// END. COMMIT_SALE may resume into CASUAL, SHOW_ITEMS, or END.
TransitionPolicy default_policy();

/// True iff (from, to) is an allowed edge, or `from` is absent and `to` is a
/// permitted initial state. With the commit guard set, COMMIT_SALE is reachable
/// from FINAL_CHECK only, regardless of the edge list.
bool is_valid_transition(const TransitionPolicy& policy,
                         std::optional<DialogueState> from, DialogueState to);

struct TransitionRecord {
  DialogueState from_state;
  DialogueState to_state;
  int turn_index = 0;  // exchange index of the `to` turn
};

}  // namespace astp
