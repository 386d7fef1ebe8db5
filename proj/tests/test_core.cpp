#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qbalance/errors.hpp"
#include "qbalance/params.hpp"
#include "qbalance/rational.hpp"
#include "qbalance/sequence.hpp"

using namespace qbalance;

namespace {

// Enumerates all length-`len` words over alphabet q, invoking fn(word).
template <typename Fn>
void for_all_words(int q, int len, Fn&& fn) {
  std::vector<Symbol> word(static_cast<std::size_t>(len), 0);
  while (true) {
    fn(word);
    int pos = len - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] ==
                           static_cast<Symbol>(q - 1)) {
      word[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

TEST_CASE("parse and render round-trips for small alphabets") {
  Sequence s = Sequence::parse("2101", 3);
  CHECK(s.size() == 4);
  CHECK(s.weight() == 4);
  CHECK(s.str() == "2101");

  Sequence t = Sequence::parse("09091", 10);
  CHECK(t.str() == "09091");
  CHECK(t.weight() == 19);
}

TEST_CASE("parse and render use comma form for large alphabets") {
  Sequence s = Sequence::parse("15,0,7", 16);
  CHECK(s.size() == 3);
  CHECK(s.weight() == 22);
  CHECK(s.str() == "15,0,7");

  Sequence max = Sequence::parse("255,255", 256);
  CHECK(max.weight() == 510);
  CHECK(max.str() == "255,255");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Sequence::parse("21a1", 3), AlphabetMismatch);
  CHECK_THROWS_AS(Sequence::parse("231", 3), AlphabetMismatch);
  CHECK_THROWS_AS(Sequence::parse("15,16", 16), AlphabetMismatch);
  CHECK_THROWS_AS(Sequence::parse("15,,3", 16), AlphabetMismatch);
  CHECK_THROWS_AS(Sequence::parse("15, 3", 16), AlphabetMismatch);
  // Empty text is the empty word, matching zero-length slices.
  CHECK(Sequence::parse("", 3).size() == 0);
}

TEST_CASE("constructor validates symbols against the alphabet") {
  CHECK_THROWS_AS(Sequence({0, 3, 1}, 3), AlphabetMismatch);
  CHECK_THROWS_AS(Sequence({2}, 2), AlphabetMismatch);
  CHECK_NOTHROW(Sequence({0, 1, 2, 3}, 4));
}

TEST_CASE("alphabet size bounds") {
  CHECK_THROWS_AS(validate_alphabet_size(1), ParameterError);
  CHECK_THROWS_AS(validate_alphabet_size(257), ParameterError);
  CHECK_THROWS_AS(validate_alphabet_size(0), ParameterError);
  CHECK_NOTHROW(validate_alphabet_size(2));
  CHECK_NOTHROW(validate_alphabet_size(256));
}

TEST_CASE("zeros, slice, equality") {
  Sequence z = Sequence::zeros(4, 5);
  CHECK(z.size() == 4);
  CHECK(z.weight() == 0);
  CHECK(z == Sequence::parse("0000", 5));

  Sequence s = Sequence::parse("20112", 3);
  CHECK(s.slice(0, 2) == Sequence::parse("20", 3));
  CHECK(s.slice(2, 3) == Sequence::parse("112", 3));
  CHECK(s.slice(2, 0).size() == 0);
  CHECK_THROWS_AS(s.slice(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(s.slice(0, 6), IndexOutOfRange);
  CHECK_THROWS_AS(s.slice(6, 0), IndexOutOfRange);
}

TEST_CASE("componentwise add/sub golden values") {
  Sequence x = Sequence::parse("2101", 3);
  Sequence b = Sequence::parse("1110", 3);
  CHECK(add_mod(x, b) == Sequence::parse("0211", 3));
  CHECK(sub_mod(Sequence::parse("0211", 3), b) == x);

  // Subtraction wraps below zero.
  CHECK(sub_mod(Sequence::parse("04", 5), Sequence::parse("13", 5)) ==
        Sequence::parse("41", 5));
}

TEST_CASE("add/sub shape mismatches raise") {
  Sequence x = Sequence::parse("21", 3);
  CHECK_THROWS_AS(add_mod(x, Sequence::parse("210", 3)), LengthMismatch);
  CHECK_THROWS_AS(add_mod(x, Sequence::parse("21", 4)), AlphabetMismatch);
  CHECK_THROWS_AS(sub_mod(x, Sequence::parse("1", 3)), LengthMismatch);
  CHECK_THROWS_AS(sub_mod(x, Sequence::parse("21", 5)), AlphabetMismatch);
}

TEST_CASE("add/sub round-trip exhaustively for small shapes") {
  for (int q = 2; q <= 4; ++q) {
    for (int len = 1; len <= 3; ++len) {
      for_all_words(q, len, [&](const std::vector<Symbol>& xs) {
        Sequence x(xs, q);
        for_all_words(q, len, [&](const std::vector<Symbol>& bs) {
          Sequence b(bs, q);
          Sequence y = add_mod(x, b);
          CHECK(sub_mod(y, b) == x);
          CHECK(sub_mod(add_mod(b, x), x) == b);
        });
      });
    }
  }
}

TEST_CASE("add/sub round-trip randomly at the alphabet ceiling") {
  std::mt19937 rng(20240521);
  std::uniform_int_distribution<int> sym(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Symbol> xs(64), bs(64);
    for (auto& v : xs) v = static_cast<Symbol>(sym(rng));
    for (auto& v : bs) v = static_cast<Symbol>(sym(rng));
    Sequence x(xs, 256), b(bs, 256);
    CHECK(sub_mod(add_mod(x, b), b) == x);
  }
}

TEST_CASE("concat preserves alphabet and order") {
  Sequence a = Sequence::parse("20", 3);
  Sequence b = Sequence::parse("112", 3);
  CHECK(concat(a, b) == Sequence::parse("20112", 3));
  CHECK_THROWS_AS(concat(a, Sequence::parse("11", 4)), AlphabetMismatch);
}

TEST_CASE("rational rendering") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(14, 5)) == "14/5");
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
}

TEST_CASE("integer power and ceiling log") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(2, 40) == (1LL << 40));
  CHECK_THROWS_AS(ipow(256, 9), UnsupportedRange);

  CHECK(ceil_log(3, 1) == 0);
  CHECK(ceil_log(3, 3) == 1);
  CHECK(ceil_log(3, 4) == 2);
  CHECK(ceil_log(3, 9) == 2);
  CHECK(ceil_log(3, 10) == 3);
  CHECK(ceil_log(2, 1024) == 10);
  CHECK(ceil_log(2, 1025) == 11);
}

TEST_CASE("parameter derivation golden values") {
  Params p35 = make_params(3, 5);
  CHECK(p35.rPrime == 3);
  CHECK(p35.n == 9);
  CHECK(p35.betaN == 9);
  CHECK(p35.betaR == Rational(3));
  CHECK(p35.z1 == 5);
  CHECK(p35.z2 == 19);

  Params p33 = make_params(3, 3);
  CHECK(p33.rPrime == 2);
  CHECK(p33.n == 6);
  CHECK(p33.betaN == 6);
  CHECK(p33.z1 == 0);
  CHECK(p33.z2 == 8);

  Params p43 = make_params(4, 3);
  CHECK(p43.rPrime == 2);
  CHECK(p43.n == 6);
  CHECK(p43.betaN == 9);
  CHECK(p43.betaR == Rational(3));
  CHECK(p43.z1 == 1);
  CHECK(p43.z2 == 12);

  Params p24 = make_params(2, 4);
  CHECK(p24.rPrime == 3);
  CHECK(p24.n == 8);
  CHECK(p24.betaN == 4);
  CHECK(p24.betaR == Rational(3, 2));
  CHECK(p24.z1 == 0);
  CHECK(p24.z2 == 7);

  Params p36 = make_params(3, 6);
  CHECK(p36.rPrime == 3);
  CHECK(p36.n == 10);
  CHECK(p36.betaN == 10);
  CHECK(p36.z1 == 4);
  CHECK(p36.z2 == 21);
}

TEST_CASE("parameter derivation is deterministic") {
  Params a = make_params(5, 7);
  Params b = make_params(5, 7);
  CHECK(a.z1 == b.z1);
  CHECK(a.z2 == b.z2);
  CHECK(a.betaN == b.betaN);
  CHECK(a.betaR == b.betaR);
}

TEST_CASE("parameter derivation rejects invalid shapes") {
  CHECK_THROWS_AS(make_params(1, 4), ParameterError);
  CHECK_THROWS_AS(make_params(257, 4), ParameterError);
  CHECK_THROWS_AS(make_params(3, 0), ParameterError);
  CHECK_THROWS_AS(make_params(3, -2), ParameterError);
  // Non-integral target weight: n(q-1) odd.
  CHECK_THROWS_AS(make_params(2, 2), ParameterError);
  CHECK_THROWS_AS(make_params(4, 2), ParameterError);
  CHECK_THROWS_AS(make_params(2, 6), ParameterError);
  CHECK_THROWS_AS(make_params(3, (1LL << 40) + 1), ParameterError);
}

TEST_CASE("rejected shapes report the fractional target weight") {
  try {
    make_params(2, 2);
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("5/2") != std::string::npos);
  }
}
