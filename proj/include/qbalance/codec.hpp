#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qbalance/balancing.hpp"
#include "qbalance/graycode.hpp"
#include "qbalance/params.hpp"
#include "qbalance/rational.hpp"
#include "qbalance/sequence.hpp"

namespace qbalance {

// Rank window [z1, z2] of width kq plus its exact mean code weight.
struct SubsetSpec {
  std::int64_t z1 = 0;
  std::int64_t z2 = 0;
  Rational meanWeight{0};

  friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;
};

// Window selection over the q^rPrime ranks:
//   kq == q^rPrime  ->  the full range
//   q odd           ->  z1 = floor(q^rPrime / 2) - ceil(kq / 2), width kq
//   q even          ->  scan all width-kq windows left to right and keep
//                       the first whose exact mean weight is nearest
//                       rPrime(q-1)/2
// For the derived prefix length rPrime = ceil_log(q, k) + 1 the mean
// weight of the returned window always rounds to rPrime(q-1)/2;
// select_subset raises SubsetNotFound when a window misses that bound
// (possible only for oversized prefix lengths).
std::pair<std::int64_t, std::int64_t> subset_window(int q, std::int64_t k,
                                                    int rPrime);
SubsetSpec select_subset(int q, std::int64_t k, int rPrime);

// Codeword layout u | g | y: one filler symbol, the rank prefix, the
// shifted information word.
struct Codeword {
  Symbol u;
  Sequence gray;
  Sequence payload;

  Sequence flatten() const;
  static Codeword split(const Params& params, const Sequence& c);

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

struct EncodingRow {
  std::int64_t z;
  std::int64_t zPrime;
  Sequence b;
  Sequence y;
  Sequence g;
  Symbol u;
  std::int64_t weight;  // w(u | g | y)
  bool balanced;        // weight == betaN

  friend bool operator==(const EncodingRow&, const EncodingRow&) = default;
};

// The row with the smallest z whose assembled word reaches weight betaN.
// The filler is u = betaN - w(y) - w(g) when that lands in the alphabet,
// otherwise the row cannot balance and u is pinned to 0.
EncodingRow encode_row(const Params& params, const Sequence& x);
Codeword encode(const Params& params, const Sequence& x);

// All kq rows in z order; guarded at kMaxEnumerationRows.
std::vector<EncodingRow> enumerate_encodings(const Params& params,
                                             const Sequence& x);
void write_encoding_table(std::ostream& out, const Params& params,
                          const Sequence& x);

struct PrefixMapping {
  Sequence g;
  Sequence d;
  std::int64_t zPrime;
  std::int64_t z;
  std::int64_t s;
  std::int64_t p;
  Sequence b;

  friend bool operator==(const PrefixMapping&, const PrefixMapping&) = default;
};

// PrefixOutOfSubset when the rank of g falls outside [z1, z2].
PrefixMapping map_prefix(const Params& params, const Sequence& g);

struct DecodeTrace {
  Codeword parts;
  PrefixMapping prefix;
  Sequence x;
  std::int64_t weight;
  bool balanced;
};

DecodeTrace decode_trace(const Params& params, const Sequence& c);

// The filler symbol is dropped unchecked. strict additionally raises
// NotBalanced when w(c) != betaN, after the prefix mapping succeeds.
Sequence decode(const Params& params, const Sequence& c, bool strict = false);

}  // namespace qbalance
