#include "qbalance/sequence.hpp"

#include <charconv>
#include <string>

namespace qbalance {

void validate_alphabet_size(int q) {
  if (q < kMinAlphabet || q > kMaxAlphabet) {
    throw ParameterError("alphabet size must be in [" +
                         std::to_string(kMinAlphabet) + ", " +
                         std::to_string(kMaxAlphabet) + "], got " +
                         std::to_string(q));
  }
}

Sequence::Sequence(std::vector<Symbol> symbols, int q)
    : symbols_(std::move(symbols)), q_(q) {
  validate_alphabet_size(q_);
  for (Symbol s : symbols_) {
    if (static_cast<int>(s) >= q_) {
      throw AlphabetMismatch("symbol " + std::to_string(static_cast<int>(s)) +
                             " outside alphabet of size " + std::to_string(q_));
    }
  }
}

Sequence Sequence::parse(std::string_view text, int q) {
  validate_alphabet_size(q);
  std::vector<Symbol> symbols;
  if (q <= 10) {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw AlphabetMismatch("expected a digit, got '" + std::string(1, c) +
                               "'");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      std::string_view token = text.substr(
          start, comma == std::string_view::npos ? comma : comma - start);
      int value = 0;
      auto [end, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw AlphabetMismatch("expected a decimal symbol value, got '" +
                               std::string(token) + "'");
      }
      if (value < 0 || value >= q) {
        throw AlphabetMismatch("symbol " + std::to_string(value) +
                               " outside alphabet of size " + std::to_string(q));
      }
      symbols.push_back(static_cast<Symbol>(value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Sequence(std::move(symbols), q);
}

Sequence Sequence::zeros(std::size_t length, int q) {
  return Sequence(std::vector<Symbol>(length, 0), q);
}

std::int64_t Sequence::weight() const {
  std::int64_t sum = 0;
  for (Symbol s : symbols_) sum += s;
  return sum;
}

std::string Sequence::str() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
  } else {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(static_cast<int>(symbols_[i]));
    }
  }
  return out;
}

Sequence Sequence::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > symbols_.size()) {
    throw IndexOutOfRange("slice [" + std::to_string(pos) + ", " +
                          std::to_string(pos + count) + ") exceeds length " +
                          std::to_string(symbols_.size()));
  }
  return Sequence(
      std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + count),
      q_);
}

namespace {

void require_same_shape(const Sequence& a, const Sequence& b) {
  if (a.q() != b.q()) {
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(a.q()) +
                           " vs " + std::to_string(b.q()));
  }
  if (a.size() != b.size()) {
    throw LengthMismatch("lengths differ: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Sequence add_mod(const Sequence& x, const Sequence& b) {
  require_same_shape(x, b);
  const int q = x.q();
  std::vector<Symbol> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int v = x[i] + b[i];
    if (v >= q) v -= q;
    out[i] = static_cast<Symbol>(v);
  }
  return Sequence(std::move(out), q);
}

Sequence sub_mod(const Sequence& y, const Sequence& b) {
  require_same_shape(y, b);
  const int q = y.q();
  std::vector<Symbol> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    int v = y[i] - b[i];
    if (v < 0) v += q;
    out[i] = static_cast<Symbol>(v);
  }
  return Sequence(std::move(out), q);
}

Sequence concat(const Sequence& a, const Sequence& b) {
  if (a.q() != b.q()) {
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(a.q()) +
                           " vs " + std::to_string(b.q()));
  }
  std::vector<Symbol> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.symbols().begin(), a.symbols().end());
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return Sequence(std::move(out), a.q());
}

}  // namespace qbalance
