#pragma once

#include <cstdint>

#include "qbalance/errors.hpp"
#include "qbalance/rational.hpp"

namespace qbalance {

// q^exponent with overflow detection; UnsupportedRange past 64-bit range.
std::int64_t ipow(int q, int exponent);

// Smallest m with q^m >= k.
int ceil_log(int q, std::int64_t k);

// Derived construction parameters for information length k over alphabet
// size q:
//   rPrime = ceil_log(q, k) + 1      prefix length
//   n      = k + rPrime + 1          codeword length (one filler symbol)
//   betaN  = n(q-1)/2                codeword target weight
//   betaR  = rPrime(q-1)/2           prefix target weight, may be half-integral
//   [z1, z2]                         prefix rank window of width kq
struct Params {
  int q = 0;
  std::int64_t k = 0;
  int rPrime = 0;
  std::int64_t n = 0;
  std::int64_t betaN = 0;
  Rational betaR{0};
  std::int64_t z1 = 0;
  std::int64_t z2 = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

// Deterministic; ParameterError when n(q-1) is odd, since the target
// weight must be integral.
Params make_params(int q, std::int64_t k);

}  // namespace qbalance
