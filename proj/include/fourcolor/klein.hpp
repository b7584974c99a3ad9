#pragma once

#include <array>
#include <optional>
#include <string>

#include "fourcolor/multigraph.hpp"

namespace fourcolor {

/// The four colors with their numeric codes. W is the group identity and
/// never colors an edge in a proper coloring.
enum class KleinColor : int { W = 0, R = 1, B = 2, G = 3 };

inline constexpr KleinColor kWhite = KleinColor::W;
inline constexpr KleinColor kRed = KleinColor::R;
inline constexpr KleinColor kBlue = KleinColor::B;
inline constexpr KleinColor kGreen = KleinColor::G;

inline constexpr std::array<KleinColor, 3> kEdgeColors{kRed, kBlue, kGreen};
inline constexpr std::array<KleinColor, 4> kAllColors{kWhite, kRed, kBlue, kGreen};

inline constexpr int code(KleinColor c) { return static_cast<int>(c); }

/// Klein four-group addition; the two-bit exclusive-or realizes the whole
/// transformation table.
inline constexpr KleinColor klein_add(KleinColor a, KleinColor b) {
  return static_cast<KleinColor>(code(a) ^ code(b));
}

/// True iff the three edge ends at a cubic vertex carry {R,B,G}.
inline constexpr bool proper_vertex_triple(KleinColor a, KleinColor b, KleinColor c) {
  if (a == kWhite || b == kWhite || c == kWhite) return false;
  return a != b && b != c && a != c;
}

inline char color_letter(KleinColor c) {
  switch (c) {
    case KleinColor::W: return 'W';
    case KleinColor::R: return 'R';
    case KleinColor::B: return 'B';
    case KleinColor::G: return 'G';
  }
  return '?';
}

inline std::optional<KleinColor> parse_color(const std::string& token) {
  if (token.size() != 1) return std::nullopt;
  switch (token[0]) {
    case 'W': case 'w': case '0': return kWhite;
    case 'R': case 'r': case '1': return kRed;
    case 'B': case 'b': case '2': return kBlue;
    case 'G': case 'g': case '3': return kGreen;
    default: return std::nullopt;
  }
}

/// Cyclic successor within the three edge colors, R -> B -> G -> R.
inline constexpr KleinColor next_edge_color(KleinColor c) {
  switch (c) {
    case KleinColor::R: return kBlue;
    case KleinColor::B: return kGreen;
    case KleinColor::G: return kRed;
    default: return kWhite;
  }
}

/// The edge color that is neither a nor b (a, b distinct non-white).
inline constexpr KleinColor third_edge_color(KleinColor a, KleinColor b) {
  return klein_add(a, b);  // R+B=G and cyclic variants
}

}  // namespace fourcolor
