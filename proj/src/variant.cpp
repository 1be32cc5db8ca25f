#include "astp/variant.hpp"

namespace astp {

std::set<Element> element_set(VariantId id) {
  using enum Element;
  switch (id) {
    case VariantId::BASELINE1:
      return {E1};
    case VariantId::BASELINE2:
      return {E1, E2};
    case VariantId::BASELINE3:
      return {E1, E2, E3};
    case VariantId::BASELINE4:
      return {E1, E2, E4};
    case VariantId::ASTP:
    case VariantId::ASTP_NO_PPP:
      return {E1, E2, E3, E4};
    case VariantId::ZS_COT:
      // The CoT line stands in for elements 3+4; it is not one of them.
      return {E1, E2};
    case VariantId::AUTOTOD:
      return {E1};
    case VariantId::AUTOTOD_PLUS:
      return {E1, E2, E3, E4};
    case VariantId::DFI:
      // The transition graph is a separate section, not inline element 2.
      return {E1};
    case VariantId::DFI_PLUS:
      return {E1, E2, E3, E4};
  }
  return {};
}

PromptVariant PromptVariant::for_id(VariantId id) {
  PromptVariant v;
  v.id = id;
  v.elements = element_set(id);
  v.ppp_enabled = (id != VariantId::ASTP_NO_PPP);
  v.cot_line = (id == VariantId::ZS_COT);
  switch (id) {
    case VariantId::AUTOTOD:
    case VariantId::AUTOTOD_PLUS:
      v.framing = Framing::SUBTASK;
      break;
    case VariantId::DFI:
    case VariantId::DFI_PLUS:
      v.framing = Framing::GRAPH;
      break;
    default:
      v.framing = Framing::UNIFIED;
      break;
  }
  return v;
}

std::string_view to_string(VariantId id) {
  switch (id) {
    case VariantId::BASELINE1:
      return "BASELINE1";
    case VariantId::BASELINE2:
      return "BASELINE2";
    case VariantId::BASELINE3:
      return "BASELINE3";
    case VariantId::BASELINE4:
      return "BASELINE4";
    case VariantId::ASTP:
      return "ASTP";
    case VariantId::ASTP_NO_PPP:
      return "ASTP_NO_PPP";
    case VariantId::ZS_COT:
      return "ZS_COT";
    case VariantId::AUTOTOD:
      return "AUTOTOD";
    case VariantId::AUTOTOD_PLUS:
      return "AUTOTOD_PLUS";
    case VariantId::DFI:
      return "DFI";
    case VariantId::DFI_PLUS:
      return "DFI_PLUS";
  }
  return "?";
}

std::optional<VariantId> variant_from_string(std::string_view name) {
  for (VariantId id : all_variants()) {
    if (name == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

std::string_view to_string(Element e) {
  switch (e) {
    case Element::E1:
      return "E1";
    case Element::E2:
      return "E2";
    case Element::E3:
      return "E3";
    case Element::E4:
      return "E4";
  }
  return "?";
}

}  // namespace astp
