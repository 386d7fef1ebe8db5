#include "qbalance/balancing.hpp"

#include <ostream>
#include <string>

namespace qbalance {

BalancingIndex balancing_index(int q, std::int64_t k, std::int64_t z) {
  validate_alphabet_size(q);
  if (k < 1) throw ParameterError("k must be >= 1, got " + std::to_string(k));
  if (z < 0 || z >= k * q) {
    throw IndexOutOfRange("z = " + std::to_string(z) + " outside [0, " +
                          std::to_string(k * q - 1) + "]");
  }
  return BalancingIndex{z, z / k, z % k};
}

Sequence balancing_sequence(int q, std::int64_t k, std::int64_t z) {
  const BalancingIndex idx = balancing_index(q, k, z);
  std::vector<Symbol> b(static_cast<std::size_t>(k),
                        static_cast<Symbol>(idx.s));
  const Symbol stepped = static_cast<Symbol>((idx.s + 1) % q);
  for (std::int64_t i = 0; i < idx.p; ++i) b[static_cast<std::size_t>(i)] = stepped;
  return Sequence(std::move(b), q);
}

namespace detail {

CandidateWalker::CandidateWalker(const Sequence& x)
    : y_(x.symbols()),
      k_(static_cast<std::int64_t>(x.size())),
      kq_(static_cast<std::int64_t>(x.size()) * x.q()),
      weight_(x.weight()),
      q_(x.q()) {
  if (k_ < 1) throw ParameterError("empty word has no candidates");
}

void CandidateWalker::advance() {
  ++z_;
  if (done()) return;
  // b gains one stepped position per z: position p-1 inside a block, the
  // last position when a new block starts.
  const std::int64_t p = z_ % k_;
  const std::size_t pos = static_cast<std::size_t>(p == 0 ? k_ - 1 : p - 1);
  int v = y_[pos] + 1;
  if (v == q_) {
    v = 0;
    weight_ -= q_ - 1;
  } else {
    ++weight_;
  }
  y_[pos] = static_cast<Symbol>(v);
}

}  // namespace detail

std::vector<Candidate> balance_candidates(const Sequence& x) {
  const std::int64_t kq = static_cast<std::int64_t>(x.size()) * x.q();
  if (kq > kMaxEnumerationRows) {
    throw SizeGuardExceeded("table of " + std::to_string(kq) +
                            " rows exceeds the enumeration cap");
  }
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(kq));
  for (const Candidate& c : candidate_range(x)) out.push_back(c);
  return out;
}

WalkTrace walk_trace(const Sequence& x) {
  const std::int64_t kq = static_cast<std::int64_t>(x.size()) * x.q();
  if (kq > kMaxEnumerationRows) {
    throw SizeGuardExceeded("walk of " + std::to_string(kq) +
                            " rows exceeds the enumeration cap");
  }
  WalkTrace trace;
  trace.points.reserve(static_cast<std::size_t>(kq));
  for (detail::CandidateWalker w(x); !w.done(); w.advance()) {
    trace.points.push_back({w.z(), w.weight()});
  }
  return trace;
}

void WalkTrace::write_csv(std::ostream& out) const {
  out << "z,weight\n";
  for (const auto& point : points) {
    out << point[0] << ',' << point[1] << '\n';
  }
}

}  // namespace qbalance
