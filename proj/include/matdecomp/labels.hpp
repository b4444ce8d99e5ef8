#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace matdecomp {

/// The three fixed large halves: M6 = span{e12,e13,e22,e23,e32,e33},
/// M5a = span{e11,e12,e13,e22,e23}, M5b = span{e11,e12,e13,e23,e33}.
enum class StandardM { M6, M5a, M5b };

enum class CanonLabel { A1, A2, A3, B1, B2, B3, B4, B5, B6, B7, B8, B9 };

inline constexpr std::array<CanonLabel, 12> kAllLabels = {
    CanonLabel::A1, CanonLabel::A2, CanonLabel::A3, CanonLabel::B1, CanonLabel::B2, CanonLabel::B3,
    CanonLabel::B4, CanonLabel::B5, CanonLabel::B6, CanonLabel::B7, CanonLabel::B8, CanonLabel::B9};

std::string_view to_string(StandardM m) noexcept;
std::string_view to_string(CanonLabel l) noexcept;
std::optional<StandardM> parse_standard_m(std::string_view s) noexcept;
std::optional<CanonLabel> parse_label(std::string_view s) noexcept;

/// The fixed M each label is paired with.
StandardM standard_m_of(CanonLabel l) noexcept;
/// Labels that can occur with a given M.
bool label_belongs_to(CanonLabel l, StandardM m) noexcept;

}  // namespace matdecomp
