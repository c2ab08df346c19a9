#include "multishift/word.hpp"

#include <stdexcept>

namespace multishift {

Word Word::from_string(std::string_view digits) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("not a digit: '") + c + "'");
    }
    symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(symbols));
}

Word Word::prefix(Index k) const {
  if (k < 0 || k > length()) {
    throw IndexOutOfRangeError("prefix length " + std::to_string(k) + " outside [0," +
                               std::to_string(length()) + "]");
  }
  return Word(std::vector<std::uint8_t>(symbols_.begin(), symbols_.begin() + k));
}

Index Word::count_symbol(std::uint8_t s) const noexcept {
  Index count = 0;
  for (std::uint8_t x : symbols_) {
    if (x == s) ++count;
  }
  return count;
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (std::uint8_t x : symbols_) {
    out.push_back(static_cast<char>('0' + x));
  }
  return out;
}

}  // namespace multishift
