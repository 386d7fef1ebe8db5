#pragma once

#include <cstdint>
#include <iosfwd>

#include "qbalance/sequence.hpp"
#include "qbalance/walk.hpp"

namespace qbalance {

struct GrayWord {
  Sequence d;           // base-q digits of the rank, most significant first
  Sequence g;           // code word
  std::int64_t zPrime;  // rank

  friend bool operator==(const GrayWord&, const GrayWord&) = default;
};

// Prefix-parity recoding: a symbol is reflected to q-1-d when the sum of
// the preceding code symbols is odd. Consecutive ranks differ in exactly
// one position and their weights differ by exactly 1.
Sequence gray_encode(const Sequence& d);

// Exact inverse; runs the same left-to-right scan, summing code symbols.
Sequence gray_decode(const Sequence& g);

GrayWord gray_unrank(int q, int rPrime, std::int64_t zPrime);
std::int64_t gray_rank(const Sequence& g);

// Weight of the rank-zPrime word without building it.
std::int64_t gray_weight_at(int q, int rPrime, std::int64_t zPrime);

// Walk over all q^rPrime ranks; SizeGuardExceeded past kMaxEnumerationRows.
WalkTrace gray_walk(int q, int rPrime);

// TSV rows (z, d, g) for the full code, same guard.
void write_gray_table(std::ostream& out, int q, int rPrime);

}  // namespace qbalance
