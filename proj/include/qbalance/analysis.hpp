#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "qbalance/errors.hpp"

namespace qbalance {

// Approximate count of length-len words with symbol sum len(q-1)/2:
// q^len * sqrt(6 / (pi * len * (q^2 - 1))), evaluated in the log domain
// with the O(1/len) correction dropped.
double balanced_cardinality_approx(int q, std::int64_t len);

// Redundancy/capacity trade-offs of comparable balancing schemes, each
// giving the largest information length k servable with r redundant
// symbols.
enum class Scheme {
  swart_weber,  // k <= F(q, r) / q, full balanced prefix
  capocelli_a,  // k <= (q^r - 1) / (q - 1)
  capocelli_b,  // k <= 2 (q^r - 1) / (q - 1) - r
  prefixless,   // k <= q^(r-1) - r
  pelusi,       // k <= (F(q, r) - q mod 2 - ((q-1)k) mod 2) / (q - 1)
  gray_prefix,  // k = q^(r-2), this construction
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::swart_weber, Scheme::capocelli_a, Scheme::capocelli_b,
    Scheme::prefixless,  Scheme::pelusi,      Scheme::gray_prefix,
};

// Identifiers used in the compare CSV.
std::string_view scheme_id(Scheme s);
Scheme scheme_from_id(std::string_view id);  // UnknownScheme

struct SchemeBound {
  Scheme scheme;
  int q = 0;
  int r = 0;  // total redundancy
  bool exact = false;
  std::int64_t kmaxExact = 0;  // meaningful when exact
  double kmaxApprox = 0.0;     // meaningful when !exact

  double kmax() const {
    return exact ? static_cast<double>(kmaxExact) : kmaxApprox;
  }
};

// r >= 2 for gray_prefix, r >= 1 otherwise; r <= 64. UnsupportedRange when
// an exact formula leaves 64-bit range. The pelusi parity term depends on
// k itself and is resolved by a two-pass evaluation: first with the term
// at 0, then with the term recomputed from the resulting floor(k).
SchemeBound scheme_kmax(Scheme s, int q, int r);

// Rows with kmax >= 1, grouped by scheme in declaration order, r ascending.
std::vector<SchemeBound> redundancy_table(int q, int rMax);

// CSV "scheme,q,r,kmax,exactness" preceded by # comment lines.
void write_compare_csv(std::ostream& out, int q, int rMax);

}  // namespace qbalance
