#include "qbalance/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include "qbalance/params.hpp"
#include "qbalance/sequence.hpp"

namespace qbalance {

double balanced_cardinality_approx(int q, std::int64_t len) {
  validate_alphabet_size(q);
  if (len < 1) {
    throw ParameterError("length must be >= 1, got " + std::to_string(len));
  }
  const double logCount =
      static_cast<double>(len) * std::log(static_cast<double>(q)) +
      0.5 * (std::log(6.0) - std::log(std::numbers::pi) -
             std::log(static_cast<double>(len)) -
             std::log(static_cast<double>(q) * q - 1.0));
  return std::exp(logCount);
}

std::string_view scheme_id(Scheme s) {
  switch (s) {
    case Scheme::swart_weber:
      return "swart-weber";
    case Scheme::capocelli_a:
      return "capocelli-a";
    case Scheme::capocelli_b:
      return "capocelli-b";
    case Scheme::prefixless:
      return "prefixless";
    case Scheme::pelusi:
      return "pelusi";
    case Scheme::gray_prefix:
      return "this-paper";
  }
  throw ParameterError("unhandled scheme");
}

Scheme scheme_from_id(std::string_view id) {
  for (Scheme s : kAllSchemes) {
    if (scheme_id(s) == id) return s;
  }
  throw UnknownScheme("unknown scheme '" + std::string(id) + "'");
}

namespace {

// (q^r - 1)/(q - 1), the length of the longest q-ary counter with r digits.
std::int64_t geometric_sum(int q, int r) {
  return (ipow(q, r) - 1) / (q - 1);
}

int parity_term(double k) {
  const auto floored = static_cast<std::int64_t>(std::floor(k));
  return static_cast<int>(((floored % 2) + 2) % 2);
}

}  // namespace

SchemeBound scheme_kmax(Scheme s, int q, int r) {
  validate_alphabet_size(q);
  const int minR = s == Scheme::gray_prefix ? 2 : 1;
  if (r < minR) {
    throw ParameterError("redundancy must be >= " + std::to_string(minR) +
                         " for " + std::string(scheme_id(s)) + ", got " +
                         std::to_string(r));
  }
  if (r > 64) {
    throw UnsupportedRange("redundancy " + std::to_string(r) + " exceeds 64");
  }

  SchemeBound bound;
  bound.scheme = s;
  bound.q = q;
  bound.r = r;
  switch (s) {
    case Scheme::swart_weber:
      bound.exact = false;
      bound.kmaxApprox = balanced_cardinality_approx(q, r) / q;
      break;
    case Scheme::capocelli_a:
      bound.exact = true;
      bound.kmaxExact = geometric_sum(q, r);
      break;
    case Scheme::capocelli_b:
      bound.exact = true;
      bound.kmaxExact = 2 * geometric_sum(q, r) - r;
      break;
    case Scheme::prefixless:
      bound.exact = true;
      bound.kmaxExact = ipow(q, r - 1) - r;
      break;
    case Scheme::pelusi: {
      // The bound subtracts ((q-1)k) mod 2, which depends on k itself.
      // Two passes: evaluate with the term at 0, re-evaluate with the term
      // taken from the first result. For odd q the term is always 0 and
      // the first pass is already stable.
      bound.exact = false;
      const double count = balanced_cardinality_approx(q, r);
      const double base = q % 2;
      const double first = (count - base) / (q - 1);
      const int term = q % 2 == 1 ? 0 : parity_term(first);
      bound.kmaxApprox = (count - base - term) / (q - 1);
      break;
    }
    case Scheme::gray_prefix:
      bound.exact = true;
      bound.kmaxExact = ipow(q, r - 2);
      break;
  }
  return bound;
}

std::vector<SchemeBound> redundancy_table(int q, int rMax) {
  validate_alphabet_size(q);
  if (rMax < 1 || rMax > 64) {
    throw ParameterError("rMax must be in [1, 64], got " + std::to_string(rMax));
  }
  std::vector<SchemeBound> rows;
  for (Scheme s : kAllSchemes) {
    const int minR = s == Scheme::gray_prefix ? 2 : 1;
    for (int r = minR; r <= rMax; ++r) {
      const SchemeBound bound = scheme_kmax(s, q, r);
      if (bound.kmax() >= 1.0) rows.push_back(bound);
    }
  }
  return rows;
}

void write_compare_csv(std::ostream& out, int q, int rMax) {
  const std::vector<SchemeBound> rows = redundancy_table(q, rMax);
  out << "# gamma-parameterized constant-weight prefix bounds are omitted:"
         " free scalars, no closed form to evaluate\n";
  out << "# pelusi resolves its parity term by two-pass evaluation;"
         " kmax stays approximate\n";
  out << "scheme,q,r,kmax,exactness\n";
  for (const SchemeBound& row : rows) {
    out << scheme_id(row.scheme) << ',' << row.q << ',' << row.r << ',';
    if (row.exact) {
      out << row.kmaxExact;
    } else {
      out << std::fixed << std::setprecision(3) << row.kmaxApprox
          << std::defaultfloat;
    }
    out << ',' << (row.exact ? "exact" : "approx") << '\n';
  }
}

}  // namespace qbalance
