#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gallai {

// A set of color ids stored as a bitmask. Palettes are capped at 32 colors,
// far beyond the desk-scale bounds used anywhere in this project.
class ColorSet {
 public:
  static constexpr int max_colors = 32;

  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ColorSet single(int color) {
    return ColorSet(std::uint32_t(1) << color);
  }
  static ColorSet of(std::initializer_list<int> colors) {
    ColorSet s;
    for (int c : colors) s.add(c);
    return s;
  }

  constexpr bool contains(int color) const { return (bits_ >> color) & 1u; }
  constexpr void add(int color) { bits_ |= std::uint32_t(1) << color; }
  constexpr void remove(int color) { bits_ &= ~(std::uint32_t(1) << color); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool subset_of(ColorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet minus(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
  ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }

  // Lowest color id in the set; -1 when empty.
  constexpr int min_color() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  std::vector<int> values() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// An ordered list of distinct color labels. Color ids are indices into it.
class Palette {
 public:
  Palette() = default;
  explicit Palette(std::vector<std::string> labels);

  // "A", "B", ... up to 26 colors; handy for tests and CLI defaults.
  static Palette letters(int count);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const { return labels_.at(id); }
  std::optional<int> index_of(std::string_view label) const;
  ColorSet full() const {
    return size() >= 32 ? ColorSet(~std::uint32_t(0))
                        : ColorSet((std::uint32_t(1) << size()) - 1);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  // Labels of a color set, in palette order.
  std::vector<std::string> names(ColorSet s) const;

  friend bool operator==(const Palette&, const Palette&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace gallai
