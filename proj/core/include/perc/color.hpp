#pragma once

// Colors and color sequences.  O / C live on the primal lattice, Os / Cs
// (printed O* / C*) on the dual.  star swaps lattices, bar swaps open/closed;
// both are involutions and they commute.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perc/lattice.hpp"

namespace perc {

enum class Color : std::uint8_t { O, C, Os, Cs };

inline bool is_dual(Color c) { return c == Color::Os || c == Color::Cs; }
inline bool is_open_class(Color c) { return c == Color::O || c == Color::Os; }
inline Lattice lattice_of(Color c) { return is_dual(c) ? Lattice::dual : Lattice::primal; }

inline Color star(Color c) {
  switch (c) {
    case Color::O: return Color::Os;
    case Color::C: return Color::Cs;
    case Color::Os: return Color::O;
    case Color::Cs: return Color::C;
  }
  throw std::logic_error("star: bad color");
}

inline Color bar(Color c) {
  switch (c) {
    case Color::O: return Color::C;
    case Color::C: return Color::O;
    case Color::Os: return Color::Cs;
    case Color::Cs: return Color::Os;
  }
  throw std::logic_error("bar: bad color");
}

using ColorSequence = std::vector<Color>;

inline ColorSequence star(const ColorSequence& s) {
  ColorSequence out;
  out.reserve(s.size());
  for (Color c : s) out.push_back(star(c));
  return out;
}

inline ColorSequence bar(const ColorSequence& s) {
  ColorSequence out;
  out.reserve(s.size());
  for (Color c : s) out.push_back(bar(c));
  return out;
}

inline ColorSequence rotate(const ColorSequence& s, std::size_t j) {
  ColorSequence out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[(i + j) % s.size()];
  return out;
}

// Both bar-classes (open-type and closed-type) occur.
inline bool polychromatic(const ColorSequence& s) {
  bool open_cls = false, closed_cls = false;
  for (Color c : s) (is_open_class(c) ? open_cls : closed_cls) = true;
  return open_cls && closed_cls;
}

// Lexicographically least rotation; sequences equal up to cyclic order denote
// the same arm event.
inline ColorSequence cyclic_canonical(const ColorSequence& s) {
  ColorSequence best = s;
  for (std::size_t j = 1; j < s.size(); ++j) best = std::min(best, rotate(s, j));
  return best;
}

inline std::string format_sigma(const ColorSequence& s) {
  std::string out;
  for (Color c : s) {
    switch (c) {
      case Color::O: out += "O"; break;
      case Color::C: out += "C"; break;
      case Color::Os: out += "O*"; break;
      case Color::Cs: out += "C*"; break;
    }
  }
  return out;
}

// Parses tokens O, C, O*, C* concatenated, e.g. "OC*C*".
inline std::optional<ColorSequence> parse_sigma(const std::string& text) {
  ColorSequence out;
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (ch != 'O' && ch != 'C') return std::nullopt;
    bool dual = (i + 1 < text.size() && text[i + 1] == '*');
    out.push_back(ch == 'O' ? (dual ? Color::Os : Color::O)
                            : (dual ? Color::Cs : Color::C));
    i += dual ? 2 : 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace perc
