#include "qbalance/codec.hpp"

#include <cstdlib>
#include <ostream>
#include <string>

namespace qbalance {

namespace {

// Extent cap for the even-q window scan and for window mean sums.
constexpr std::int64_t kMaxScanExtent = std::int64_t{1} << 32;

void validate_payload(const Params& params, const Sequence& x) {
  if (x.q() != params.q) {
    throw AlphabetMismatch("word alphabet " + std::to_string(x.q()) +
                           " does not match q = " + std::to_string(params.q));
  }
  if (static_cast<std::int64_t>(x.size()) != params.k) {
    throw LengthMismatch("word length " + std::to_string(x.size()) +
                         " does not match k = " + std::to_string(params.k));
  }
}

std::int64_t window_weight_sum(int q, int rPrime, std::int64_t z1,
                               std::int64_t z2) {
  std::int64_t sum = 0;
  for (std::int64_t z = z1; z <= z2; ++z) sum += gray_weight_at(q, rPrime, z);
  return sum;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> subset_window(int q, std::int64_t k,
                                                    int rPrime) {
  validate_alphabet_size(q);
  if (k < 1) throw ParameterError("k must be >= 1, got " + std::to_string(k));
  const std::int64_t extent = ipow(q, rPrime);
  const std::int64_t kq = k * q;
  if (kq > extent) {
    throw ParameterError("window of width kq = " + std::to_string(kq) +
                         " does not fit in " + std::to_string(extent) +
                         " ranks");
  }
  if (kq == extent) return {0, extent - 1};

  if (q % 2 == 1) {
    const std::int64_t z1 = extent / 2 - (kq + 1) / 2;
    return {z1, z1 + kq - 1};
  }

  // Even q: the walk has no central symmetry, so scan every window and
  // compare |mean - rPrime(q-1)/2| through the integral distance
  // |2*sum - kq*rPrime*(q-1)|.
  if (extent > kMaxScanExtent) {
    throw UnsupportedRange("window scan over " + std::to_string(extent) +
                           " ranks exceeds the scan cap");
  }
  const std::int64_t target2 = kq * rPrime * (q - 1);
  std::int64_t sum = window_weight_sum(q, rPrime, 0, kq - 1);
  std::int64_t bestZ1 = 0;
  std::int64_t bestDistance = std::llabs(2 * sum - target2);
  for (std::int64_t z1 = 1; bestDistance != 0 && z1 + kq - 1 < extent; ++z1) {
    sum += gray_weight_at(q, rPrime, z1 + kq - 1) -
           gray_weight_at(q, rPrime, z1 - 1);
    const std::int64_t distance = std::llabs(2 * sum - target2);
    if (distance < bestDistance) {
      bestDistance = distance;
      bestZ1 = z1;
    }
  }
  return {bestZ1, bestZ1 + kq - 1};
}

SubsetSpec select_subset(int q, std::int64_t k, int rPrime) {
  const auto [z1, z2] = subset_window(q, k, rPrime);
  if (k * q > kMaxScanExtent) {
    throw UnsupportedRange("mean over " + std::to_string(k * q) +
                           " ranks exceeds the scan cap");
  }
  SubsetSpec spec;
  spec.z1 = z1;
  spec.z2 = z2;
  spec.meanWeight = Rational(window_weight_sum(q, rPrime, z1, z2), k * q);
  const Rational betaR(static_cast<std::int64_t>(rPrime) * (q - 1), 2);
  const Rational distance =
      spec.meanWeight > betaR ? spec.meanWeight - betaR : betaR - spec.meanWeight;
  if (distance > Rational(1, 2)) {
    throw SubsetNotFound("window [" + std::to_string(z1) + ", " +
                         std::to_string(z2) + "] has mean weight " +
                         to_string(spec.meanWeight) +
                         ", too far from " + to_string(betaR));
  }
  return spec;
}

Sequence Codeword::flatten() const {
  std::vector<Symbol> out;
  out.reserve(1 + gray.size() + payload.size());
  out.push_back(u);
  out.insert(out.end(), gray.symbols().begin(), gray.symbols().end());
  out.insert(out.end(), payload.symbols().begin(), payload.symbols().end());
  return Sequence(std::move(out), gray.q());
}

Codeword Codeword::split(const Params& params, const Sequence& c) {
  if (c.q() != params.q) {
    throw AlphabetMismatch("word alphabet " + std::to_string(c.q()) +
                           " does not match q = " + std::to_string(params.q));
  }
  if (static_cast<std::int64_t>(c.size()) != params.n) {
    throw LengthMismatch("word length " + std::to_string(c.size()) +
                         " does not match n = " + std::to_string(params.n));
  }
  return Codeword{c[0], c.slice(1, static_cast<std::size_t>(params.rPrime)),
                  c.slice(1 + static_cast<std::size_t>(params.rPrime),
                          static_cast<std::size_t>(params.k))};
}

EncodingRow encode_row(const Params& params, const Sequence& x) {
  validate_payload(params, x);
  for (detail::CandidateWalker walker(x); !walker.done(); walker.advance()) {
    const std::int64_t zPrime = params.z1 + walker.z();
    const std::int64_t wg = gray_weight_at(params.q, params.rPrime, zPrime);
    const std::int64_t u = params.betaN - walker.weight() - wg;
    if (u < 0 || u >= params.q) continue;
    return EncodingRow{walker.z(),
                       zPrime,
                       balancing_sequence(params.q, params.k, walker.z()),
                       Sequence(walker.y(), params.q),
                       gray_unrank(params.q, params.rPrime, zPrime).g,
                       static_cast<Symbol>(u),
                       params.betaN,
                       true};
  }
  throw EncodingFailure("no candidate reaches weight " +
                        std::to_string(params.betaN));
}

Codeword encode(const Params& params, const Sequence& x) {
  EncodingRow row = encode_row(params, x);
  return Codeword{row.u, std::move(row.g), std::move(row.y)};
}

std::vector<EncodingRow> enumerate_encodings(const Params& params,
                                             const Sequence& x) {
  validate_payload(params, x);
  const std::int64_t kq = params.k * params.q;
  if (kq > kMaxEnumerationRows) {
    throw SizeGuardExceeded("table of " + std::to_string(kq) +
                            " rows exceeds the enumeration cap");
  }
  std::vector<EncodingRow> rows;
  rows.reserve(static_cast<std::size_t>(kq));
  for (const Candidate& candidate : candidate_range(x)) {
    const std::int64_t zPrime = params.z1 + candidate.z;
    GrayWord word = gray_unrank(params.q, params.rPrime, zPrime);
    const std::int64_t wg = word.g.weight();
    std::int64_t u = params.betaN - candidate.weight - wg;
    const bool balanced = u >= 0 && u < params.q;
    if (!balanced) u = 0;
    rows.push_back(EncodingRow{
        candidate.z, zPrime,
        balancing_sequence(params.q, params.k, candidate.z), candidate.y,
        std::move(word.g), static_cast<Symbol>(u),
        u + wg + candidate.weight, balanced});
  }
  return rows;
}

void write_encoding_table(std::ostream& out, const Params& params,
                          const Sequence& x) {
  out << "z\tzprime\tb\ty\tc\tw\tbalanced\n";
  for (const EncodingRow& row : enumerate_encodings(params, x)) {
    const Codeword word{row.u, row.g, row.y};
    out << row.z << '\t' << row.zPrime << '\t' << row.b.str() << '\t'
        << row.y.str() << '\t' << word.flatten().str() << '\t' << row.weight
        << '\t' << (row.balanced ? 1 : 0) << '\n';
  }
}

PrefixMapping map_prefix(const Params& params, const Sequence& g) {
  if (g.q() != params.q) {
    throw AlphabetMismatch("prefix alphabet " + std::to_string(g.q()) +
                           " does not match q = " + std::to_string(params.q));
  }
  if (static_cast<std::int64_t>(g.size()) != params.rPrime) {
    throw LengthMismatch("prefix length " + std::to_string(g.size()) +
                         " does not match rPrime = " +
                         std::to_string(params.rPrime));
  }
  const std::int64_t zPrime = gray_rank(g);
  if (zPrime < params.z1 || zPrime > params.z2) {
    throw PrefixOutOfSubset("prefix rank " + std::to_string(zPrime) +
                            " outside [" + std::to_string(params.z1) + ", " +
                            std::to_string(params.z2) + "]");
  }
  const std::int64_t z = zPrime - params.z1;
  const BalancingIndex idx = balancing_index(params.q, params.k, z);
  return PrefixMapping{g,     gray_decode(g),
                       zPrime, z,
                       idx.s, idx.p,
                       balancing_sequence(params.q, params.k, z)};
}

DecodeTrace decode_trace(const Params& params, const Sequence& c) {
  Codeword parts = Codeword::split(params, c);
  PrefixMapping prefix = map_prefix(params, parts.gray);
  Sequence x = sub_mod(parts.payload, prefix.b);
  const std::int64_t weight = c.weight();
  return DecodeTrace{std::move(parts), std::move(prefix), std::move(x), weight,
                     weight == params.betaN};
}

Sequence decode(const Params& params, const Sequence& c, bool strict) {
  DecodeTrace trace = decode_trace(params, c);
  if (strict && !trace.balanced) {
    throw NotBalanced("weight " + std::to_string(trace.weight) +
                      " differs from " + std::to_string(params.betaN));
  }
  return trace.x;
}

}  // namespace qbalance
