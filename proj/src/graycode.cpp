#include "qbalance/graycode.hpp"

#include <ostream>
#include <string>

#include "qbalance/params.hpp"

namespace qbalance {

namespace {

void validate_prefix_length(int rPrime) {
  if (rPrime < 1 || rPrime > 62) {
    throw ParameterError("prefix length must be in [1, 62], got " +
                         std::to_string(rPrime));
  }
}

std::int64_t checked_extent(int q, int rPrime) {
  validate_alphabet_size(q);
  validate_prefix_length(rPrime);
  return ipow(q, rPrime);
}

void validate_rank(std::int64_t zPrime, std::int64_t extent) {
  if (zPrime < 0 || zPrime >= extent) {
    throw IndexOutOfRange("rank " + std::to_string(zPrime) + " outside [0, " +
                          std::to_string(extent - 1) + "]");
  }
}

}  // namespace

Sequence gray_encode(const Sequence& d) {
  const int q = d.q();
  std::vector<Symbol> g(d.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    g[i] = sum % 2 == 0 ? d[i] : static_cast<Symbol>(q - 1 - d[i]);
    sum += g[i];
  }
  return Sequence(std::move(g), q);
}

Sequence gray_decode(const Sequence& g) {
  const int q = g.q();
  std::vector<Symbol> d(g.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    d[i] = sum % 2 == 0 ? g[i] : static_cast<Symbol>(q - 1 - g[i]);
    sum += g[i];
  }
  return Sequence(std::move(d), q);
}

GrayWord gray_unrank(int q, int rPrime, std::int64_t zPrime) {
  const std::int64_t extent = checked_extent(q, rPrime);
  validate_rank(zPrime, extent);
  std::vector<Symbol> digits(static_cast<std::size_t>(rPrime));
  std::int64_t rest = zPrime;
  for (int i = rPrime - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Symbol>(rest % q);
    rest /= q;
  }
  Sequence d(std::move(digits), q);
  Sequence g = gray_encode(d);
  return GrayWord{std::move(d), std::move(g), zPrime};
}

std::int64_t gray_rank(const Sequence& g) {
  validate_prefix_length(static_cast<int>(g.size()));
  const Sequence d = gray_decode(g);
  std::int64_t z = 0;
  for (std::size_t i = 0; i < d.size(); ++i) z = z * g.q() + d[i];
  return z;
}

std::int64_t gray_weight_at(int q, int rPrime, std::int64_t zPrime) {
  const std::int64_t extent = checked_extent(q, rPrime);
  validate_rank(zPrime, extent);
  std::int64_t weight = 0;
  std::int64_t sum = 0;
  std::int64_t unit = extent / q;  // value of the leading digit position
  std::int64_t rest = zPrime;
  for (int i = 0; i < rPrime; ++i) {
    const std::int64_t digit = rest / unit;
    rest %= unit;
    unit /= q;
    const std::int64_t symbol = sum % 2 == 0 ? digit : q - 1 - digit;
    weight += symbol;
    sum += symbol;
  }
  return weight;
}

WalkTrace gray_walk(int q, int rPrime) {
  const std::int64_t extent = checked_extent(q, rPrime);
  if (extent > kMaxEnumerationRows) {
    throw SizeGuardExceeded("walk of " + std::to_string(extent) +
                            " rows exceeds the enumeration cap");
  }
  WalkTrace trace;
  trace.points.reserve(static_cast<std::size_t>(extent));
  for (std::int64_t z = 0; z < extent; ++z) {
    trace.points.push_back({z, gray_weight_at(q, rPrime, z)});
  }
  return trace;
}

void write_gray_table(std::ostream& out, int q, int rPrime) {
  const std::int64_t extent = checked_extent(q, rPrime);
  if (extent > kMaxEnumerationRows) {
    throw SizeGuardExceeded("table of " + std::to_string(extent) +
                            " rows exceeds the enumeration cap");
  }
  out << "z\td\tg\n";
  for (std::int64_t z = 0; z < extent; ++z) {
    const GrayWord word = gray_unrank(q, rPrime, z);
    out << z << '\t' << word.d.str() << '\t' << word.g.str() << '\n';
  }
}

}  // namespace qbalance
