#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "astp/history.hpp"
#include "astp/variant.hpp"
#include "astp/world.hpp"

namespace astp {

struct PromptContext {
  std::string character_name;
  std::string character_info;
  const GameWorld* world = nullptr;
  std::string current_location;
  std::string current_time;
  std::string current_situation;
  const DialogueHistory* history = nullptr;
  std::string player_utterance;
  // History is rendered in full up to this many utterances; the cap only
  // guards runaway sessions.
  int max_history_turns = 40;
};

/// Immutable store of prompt section templates, loaded from a template
/// directory: one text file per section variant plus a manifest mapping each
/// prompt variant to its element flags and ordered section list. Placeholders
/// use the literal {snake_case} syntax; load() rejects templates referencing
/// unknown placeholders, so rendering can never leave one unresolved.
class TemplateStore {
 public:
  static TemplateStore load(const std::filesystem::path& dir);

  std::string build_prompt(const PromptVariant& variant,
                           const PromptContext& ctx) const;

  const std::vector<std::string>& section_files(VariantId id) const;
  const std::string& section_text(const std::string& file) const;

 private:
  std::map<VariantId, std::vector<std::string>> file_lists_;
  std::map<std::string, std::string> sections_;  // file name -> raw template
};

/// Chronological turn list: player turns as plain utterances, NPC turns as
/// the (placeholder-substituted) spoken dialogue tagged with the recorded
/// state label, then the player's latest utterance.
std::string render_history(const DialogueHistory& history,
                           std::string_view latest_player_utterance,
                           int max_turns = 40);

}  // namespace astp
