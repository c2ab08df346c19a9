#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "multishift/types.hpp"

namespace multishift {

/// A finite word over {0,...,m-1}. A word of length k doubles as the
/// identifier of the cylinder set of all sequences starting with it; the
/// empty word stands for the full space.
///
/// Positions are 1-based (position 1 is the first symbol), so they line up
/// with the multiplicative index chains without off-by-one adjustments.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}

  /// Parses a digit string such as "0110". Only alphabets up to size 10.
  static Word from_string(std::string_view digits);

  Index length() const noexcept { return static_cast<Index>(symbols_.size()); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Symbol at 1-based position, bounds-checked.
  std::uint8_t at(Index pos) const {
    if (pos < 1 || pos > length()) {
      throw IndexOutOfRangeError("word position " + std::to_string(pos) +
                                 " outside [1," + std::to_string(length()) + "]");
    }
    return symbols_[static_cast<std::size_t>(pos - 1)];
  }

  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }

  Word prefix(Index k) const;
  Index count_symbol(std::uint8_t s) const noexcept;
  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

}  // namespace multishift
