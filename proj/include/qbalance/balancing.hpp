#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "qbalance/sequence.hpp"
#include "qbalance/walk.hpp"

namespace qbalance {

// z = s*k + p with 0 <= s <= q-1 and 0 <= p <= k-1.
struct BalancingIndex {
  std::int64_t z = 0;
  std::int64_t s = 0;
  std::int64_t p = 0;

  friend bool operator==(const BalancingIndex&, const BalancingIndex&) = default;
};

BalancingIndex balancing_index(int q, std::int64_t k, std::int64_t z);

// b_z: the first p symbols are (s+1) mod q, the remaining k-p are s.
Sequence balancing_sequence(int q, std::int64_t k, std::int64_t z);

struct Candidate {
  std::int64_t z;
  Sequence y;  // x (+) b_z
  std::int64_t weight;
};

namespace detail {

// Steps z through 0..kq-1 keeping y = x (+) b_z up to date. Consecutive
// balancing sequences differ in exactly one position, so each step is a
// single symbol bump and the weight moves by +1 or -(q-1).
class CandidateWalker {
 public:
  explicit CandidateWalker(const Sequence& x);

  bool done() const { return z_ >= kq_; }
  void advance();

  std::int64_t z() const { return z_; }
  std::int64_t weight() const { return weight_; }
  const std::vector<Symbol>& y() const { return y_; }
  int q() const { return q_; }

 private:
  std::vector<Symbol> y_;
  std::int64_t z_ = 0;
  std::int64_t k_;
  std::int64_t kq_;
  std::int64_t weight_;
  int q_;
};

}  // namespace detail

// Lazy single-pass view over the kq candidates, cheapest way to stop at
// the first hit.
class CandidateRange {
 public:
  explicit CandidateRange(Sequence x) : x_(std::move(x)) {}

  class iterator {
   public:
    using value_type = Candidate;
    using difference_type = std::ptrdiff_t;

    explicit iterator(const Sequence& x) : walker_(x) {}

    Candidate operator*() const {
      return Candidate{walker_.z(), Sequence(walker_.y(), walker_.q()),
                       walker_.weight()};
    }
    iterator& operator++() {
      walker_.advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return walker_.done(); }

   private:
    detail::CandidateWalker walker_;
  };

  iterator begin() const { return iterator(x_); }
  static constexpr std::default_sentinel_t end() { return {}; }

 private:
  Sequence x_;
};

inline CandidateRange candidate_range(Sequence x) {
  return CandidateRange(std::move(x));
}

// All kq candidates in z order.
std::vector<Candidate> balance_candidates(const Sequence& x);

// (z, w(y_z)) for z = 0..kq-1.
WalkTrace walk_trace(const Sequence& x);

}  // namespace qbalance
