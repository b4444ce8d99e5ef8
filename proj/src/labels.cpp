#include "matdecomp/labels.hpp"

namespace matdecomp {

std::string_view to_string(StandardM m) noexcept {
  switch (m) {
    case StandardM::M6: return "M6";
    case StandardM::M5a: return "M5a";
    case StandardM::M5b: return "M5b";
  }
  return "?";
}

std::string_view to_string(CanonLabel l) noexcept {
  static constexpr std::array<std::string_view, 12> names = {"A1", "A2", "A3", "B1", "B2", "B3",
                                                             "B4", "B5", "B6", "B7", "B8", "B9"};
  return names[static_cast<std::size_t>(l)];
}

std::optional<StandardM> parse_standard_m(std::string_view s) noexcept {
  for (auto m : {StandardM::M6, StandardM::M5a, StandardM::M5b})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<CanonLabel> parse_label(std::string_view s) noexcept {
  for (auto l : kAllLabels)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

StandardM standard_m_of(CanonLabel l) noexcept {
  const auto i = static_cast<int>(l);
  if (i <= static_cast<int>(CanonLabel::A3)) return StandardM::M6;
  if (i <= static_cast<int>(CanonLabel::B5)) return StandardM::M5a;
  return StandardM::M5b;
}

bool label_belongs_to(CanonLabel l, StandardM m) noexcept { return standard_m_of(l) == m; }

}  // namespace matdecomp
