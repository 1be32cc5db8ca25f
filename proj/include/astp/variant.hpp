#pragma once

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace astp {

/// The four prompt design elements: state definitions (E1), transition
/// conditions (E2), the identify-previous-state directive (E3), and the
/// respond-with-previous-state directive (E4).
enum class Element { E1, E2, E3, E4 };

enum class Framing { UNIFIED, SUBTASK, GRAPH };

enum class VariantId {
  BASELINE1,
  BASELINE2,
  BASELINE3,
  BASELINE4,
  ASTP,
  ASTP_NO_PPP,
  ZS_COT,
  AUTOTOD,
  AUTOTOD_PLUS,
  DFI,
  DFI_PLUS,
};

inline constexpr int kVariantCount = 11;

constexpr std::array<VariantId, kVariantCount> all_variants() {
  return {VariantId::BASELINE1, VariantId::BASELINE2,  VariantId::BASELINE3,
          VariantId::BASELINE4, VariantId::ASTP,       VariantId::ASTP_NO_PPP,
          VariantId::ZS_COT,    VariantId::AUTOTOD,    VariantId::AUTOTOD_PLUS,
          VariantId::DFI,       VariantId::DFI_PLUS};
}

struct PromptVariant {
  VariantId id = VariantId::ASTP;
  std::set<Element> elements;
  bool ppp_enabled = true;
  Framing framing = Framing::UNIFIED;
  bool cot_line = false;  // ZS-CoT's think-step-by-step instruction

  bool has(Element e) const { return elements.count(e) > 0; }

  static PromptVariant for_id(VariantId id);
};

/// Element combination for a variant, matching the ablation table.
std::set<Element> element_set(VariantId id);

std::string_view to_string(VariantId id);
std::optional<VariantId> variant_from_string(std::string_view name);
std::string_view to_string(Element e);

}  // namespace astp
