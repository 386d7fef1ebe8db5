#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbalance/errors.hpp"

namespace qbalance {

using Symbol = std::uint8_t;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 256;

void validate_alphabet_size(int q);

// Word over the alphabet {0, ..., q-1}. Symbols are validated on
// construction and the object is immutable afterwards.
class Sequence {
 public:
  Sequence(std::vector<Symbol> symbols, int q);

  // Text form: contiguous digits for q <= 10, comma-separated decimal
  // values for larger alphabets.
  static Sequence parse(std::string_view text, int q);
  static Sequence zeros(std::size_t length, int q);

  int q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // Algebraic sum of the symbol values.
  std::int64_t weight() const;

  std::string str() const;

  Sequence slice(std::size_t pos, std::size_t count) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  int q_;
};

// Symbol-wise sum and difference mod q. Both operands must share q and
// length; sub_mod(add_mod(x, b), b) == x.
Sequence add_mod(const Sequence& x, const Sequence& b);
Sequence sub_mod(const Sequence& y, const Sequence& b);

Sequence concat(const Sequence& a, const Sequence& b);

}  // namespace qbalance
