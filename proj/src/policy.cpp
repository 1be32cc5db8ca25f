#include "astp/policy.hpp"

#include <fstream>
#include <sstream>

#include "astp/errors.hpp"

namespace astp {

namespace {

constexpr DialogueState C = DialogueState::CASUAL;
constexpr DialogueState SI = DialogueState::SHOW_ITEMS;
constexpr DialogueState OS = DialogueState::OFFER_SELL;
constexpr DialogueState N = DialogueState::NEGOTIATE;
constexpr DialogueState FC = DialogueState::FINAL_CHECK;
constexpr DialogueState CS = DialogueState::COMMIT_SALE;
constexpr DialogueState E = DialogueState::END;

std::string edge_string(const StateEdge& e) {
  std::string s(to_string(e.first));
  s += "->";
  s += to_string(e.second);
  return s;
}

StateEdge parse_edge(const std::string& text) {
  const auto arrow = text.find("->");
  if (arrow == std::string::npos) {
    throw FileFormatError("policy edge '" + text + "': expected FROM->TO");
  }
  const auto from = state_from_string(text.substr(0, arrow));
  const auto to = state_from_string(text.substr(arrow + 2));
  if (!from || !to) {
    throw FileFormatError("policy edge '" + text + "': unknown state name");
  }
  return {*from, *to};
}

}  // namespace

nlohmann::json TransitionPolicy::to_json() const {
  nlohmann::json j;
  j["commit_guard"] = commit_guard_;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) {
    edges.push_back(edge_string(e));
  }
  auto& initial = j["initial_states"] = nlohmann::json::array();
  for (DialogueState s : initial_states_) {
    initial.push_back(std::string(to_string(s)));
  }
  return j;
}

TransitionPolicy TransitionPolicy::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw FileFormatError("policy: expected object with an 'edges' array");
  }
  std::set<StateEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_string()) {
      throw FileFormatError("policy: edges must be FROM->TO strings");
    }
    edges.insert(parse_edge(e.get<std::string>()));
  }
  bool guard = j.value("commit_guard", true);
  std::set<DialogueState> initial;
  if (j.contains("initial_states")) {
    for (const auto& s : j["initial_states"]) {
      const auto state = state_from_string(s.get<std::string>());
      if (!state) {
        throw FileFormatError("policy: unknown initial state '" +
                              s.get<std::string>() + "'");
      }
      initial.insert(*state);
    }
  } else {
    initial = {C, SI, OS};
  }
  return TransitionPolicy(std::move(edges), guard, std::move(initial));
}

TransitionPolicy TransitionPolicy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("policy: cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError("policy " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

void TransitionPolicy::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw FileFormatError("policy: cannot write " + path.string());
  }
  out << to_json().dump(2) << "\n";
}

TransitionPolicy default_policy() {
  std::set<StateEdge> edges;

  // Trade-flow graph.
  edges.insert({SI, OS});
  edges.insert({OS, SI});
  edges.insert({OS, N});
  edges.insert({OS, FC});
  edges.insert({N, SI});
  edges.insert({N, OS});
  edges.insert({N, FC});
  edges.insert({FC, SI});
  edges.insert({FC, OS});
  edges.insert({FC, N});
  edges.insert({FC, CS});

  // Any state may close the conversation.
  for (DialogueState s : all_states()) {
    edges.insert({s, E});
  }
  // Casual talk enters and leaves trading through SHOW_ITEMS / OFFER_SELL.
  edges.insert({C, SI});
  edges.insert({C, OS});
  edges.insert({SI, C});
  edges.insert({OS, C});
  // Self-loops everywhere except COMMIT_SALE.
  for (DialogueState s : all_states()) {
    if (s != CS) {
      edges.insert({s, s});
    }
  }
  // After a completed sale the conversation may resume or wind down.
  edges.insert({CS, C});
  edges.insert({CS, SI});

  return TransitionPolicy(std::move(edges), /*commit_guard=*/true,
                          {C, SI, OS});
}

bool is_valid_transition(const TransitionPolicy& policy,
                         std::optional<DialogueState> from, DialogueState to) {
  if (policy.commit_guard() && to == DialogueState::COMMIT_SALE) {
    return from == DialogueState::FINAL_CHECK &&
           policy.contains_edge(*from, to);
  }
  if (!from) {
    return policy.is_initial(to);
  }
  return policy.contains_edge(*from, to);
}

}  // namespace astp
