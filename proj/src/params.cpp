#include "qbalance/params.hpp"

#include <limits>
#include <string>

#include "qbalance/codec.hpp"
#include "qbalance/sequence.hpp"

namespace qbalance {

namespace {

// Keeps q^(rPrime) comfortably inside the window arithmetic.
constexpr std::int64_t kMaxK = std::int64_t{1} << 40;

}  // namespace

std::int64_t ipow(int q, int exponent) {
  if (exponent < 0) throw ParameterError("negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / q) {
      throw UnsupportedRange(std::to_string(q) + "^" +
                             std::to_string(exponent) +
                             " exceeds 64-bit range");
    }
    result *= q;
  }
  return result;
}

int ceil_log(int q, std::int64_t k) {
  validate_alphabet_size(q);
  if (k < 1) throw ParameterError("k must be >= 1, got " + std::to_string(k));
  int m = 0;
  std::int64_t power = 1;
  while (power < k) {
    power *= q;  // power <= k*q, no overflow for guarded k
    ++m;
  }
  return m;
}

Params make_params(int q, std::int64_t k) {
  validate_alphabet_size(q);
  if (k < 1) throw ParameterError("k must be >= 1, got " + std::to_string(k));
  if (k > kMaxK) {
    throw UnsupportedRange("k = " + std::to_string(k) + " exceeds " +
                           std::to_string(kMaxK));
  }

  Params p;
  p.q = q;
  p.k = k;
  p.rPrime = ceil_log(q, k) + 1;
  p.n = k + p.rPrime + 1;

  const std::int64_t doubled = p.n * (q - 1);
  if (doubled % 2 != 0) {
    throw ParameterError("target weight n(q-1)/2 = " + std::to_string(doubled) +
                         "/2 is not integral for q=" + std::to_string(q) +
                         ", k=" + std::to_string(k));
  }
  p.betaN = doubled / 2;
  p.betaR = Rational(static_cast<std::int64_t>(p.rPrime) * (q - 1), 2);

  auto [z1, z2] = subset_window(q, k, p.rPrime);
  p.z1 = z1;
  p.z2 = z2;
  return p;
}

}  // namespace qbalance
