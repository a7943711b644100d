#include <doctest.h>

#include <random>
#include <set>

#include "ccurves/errors.hpp"
#include "ccurves/words.hpp"
#include "oracles.hpp"

using namespace ccurves;

namespace {

CyclicWord w(const char* text) { return parse_word(text); }

LinearWord lw(const char* text) { return parse_letters(text); }

}  // namespace

TEST_CASE("letter order and inverse") {
  const auto a1 = Letter::generator(1), A1 = Letter::generator(1, true), a2 = Letter::generator(2);
  CHECK(a1 < A1);
  CHECK(A1 < a2);
  CHECK(a1.inverse() == A1);
  CHECK(A1.inverse().inverse() == A1);
  CHECK(a2.index() == 2);
  CHECK_FALSE(a2.barred());
}

TEST_CASE("make_cyclic") {
  CHECK(make_cyclic(lw("a1.a2.A2.a3")) == w("a1.a3"));
  CHECK_THROWS_AS(make_cyclic(lw("a1.A1")), TrivialClass);
  CHECK_THROWS_AS(make_cyclic(LinearWord{}), TrivialClass);
  CHECK(to_string(make_cyclic(lw("a2.a1"))) == "a1.a2");
  CHECK(make_cyclic(lw("a2.a1.a3.A1.A2")) == w("a3"));
  CHECK(make_cyclic(lw("A1.a2.a1")) == w("a2"));
}

TEST_CASE("canonical_from_reduced rejects input that needs reduction") {
  CHECK(canonical_from_reduced(lw("a2.a1")) == w("a1.a2"));
  CHECK_THROWS_AS(canonical_from_reduced(lw("a1.a2.A1")), std::logic_error);
}

TEST_CASE("inverse") {
  CHECK(inverse(w("a1.a2")) == w("A1.A2"));
  CHECK(inverse(w("a1")) == w("A1"));
  for (const auto& x : enumerate_reduced(2, 5)) CHECK(inverse(inverse(x)) == x);
}

TEST_CASE("power") {
  CHECK(power(w("a1.a2"), 2) == w("a1.a2.a1.a2"));
  CHECK(power(w("a1.A2.A2"), 1) == w("a1.A2.A2"));
  CHECK_THROWS_AS(power(w("a1"), 0), std::invalid_argument);
  CHECK_THROWS_AS(power(w("a1"), -2), std::invalid_argument);
  std::mt19937_64 rng(7);
  const auto words = enumerate_reduced(3, 4);
  for (int i = 0; i < 200; ++i) {
    const auto& x = words[rng() % words.size()];
    const int k = static_cast<int>(rng() % 5) + 1;
    CHECK(power(x, k).size() == x.size() * static_cast<std::size_t>(k));
  }
}

TEST_CASE("primitive_root") {
  auto r = primitive_root(w("a1.a2.a1.a2"));
  CHECK(r.root == w("a1.a2"));
  CHECK(r.multiplicity == 2);
  CHECK(primitive_root(w("a1")).multiplicity == 1);
  CHECK(primitive_root(w("a1.a1.a2")).multiplicity == 1);
  CHECK(primitive_root(w("a1.a1.a1")).root == w("a1"));
  CHECK(primitive_root(w("a1.a1.a1")).multiplicity == 3);
  CHECK_FALSE(is_primitive(w("A2.A2")));
}

TEST_CASE("primitive root round trip to length 12 on two generators") {
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for_each_reduced(2, len, {}, [&](const CyclicWord& x) {
      const auto r = primitive_root(x);
      REQUIRE(power(r.root, r.multiplicity) == x);
      REQUIRE(is_primitive(r.root));
      ++checked;
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("subword_at reads the periodic extension") {
  CHECK(subword_at(w("a1.a2"), 1, 3) == lw("a2.a1.a2"));
  CHECK(subword_at(w("A2.A2"), 1, 4) == lw("A2.A2.A2.A2"));
  const auto x = w("a1.A3.a2.a2");
  CHECK(subword_at(x, 0, x.size()) == LinearWord(x.letters().begin(), x.letters().end()));
  CHECK(rotation(x, 2) == lw("a2.a2.a1.A3"));
}

TEST_CASE("canonicalization is rotation invariant and idempotent") {
  for (const auto& x : enumerate_reduced(3, 5)) {
    const LinearWord base(x.letters().begin(), x.letters().end());
    CHECK(make_cyclic(base) == x);
    for (std::size_t r = 0; r < x.size(); ++r) CHECK(make_cyclic(rotation(x, r)) == x);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_reduced(2, 1).size() == 4);
  CHECK(enumerate_reduced(2, 2).size() == 12);
}

TEST_CASE("enumeration matches brute force") {
  for (auto [rank, max_len] : {std::pair{2, 6}, std::pair{3, 4}, std::pair{1, 5}}) {
    std::set<oracle::Seq> expected;
    for (int len = 1; len <= max_len; ++len) {
      for (const auto& s : oracle::all_words(rank, len)) expected.insert(s);
    }
    const auto got = enumerate_reduced(rank, static_cast<std::size_t>(max_len));
    std::set<oracle::Seq> seen;
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(is_cyclically_reduced(got[i].letters()));
      CHECK(least_rotation(got[i].letters()) == 0);
      if (i > 0) CHECK(got[i - 1] < got[i]);
      seen.insert(oracle::codes(got[i]));
    }
    CHECK(seen.size() == got.size());
    CHECK(seen == expected);
  }
}

TEST_CASE("prefix partition covers each length exactly") {
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<CyclicWord> all;
    for_each_reduced(2, len, {}, [&](const CyclicWord& x) { all.push_back(x); });
    std::vector<CyclicWord> parts;
    for (const auto& prefix : enumeration_prefixes(2, len, 3)) {
      for_each_reduced(2, len, prefix, [&](const CyclicWord& x) { parts.push_back(x); });
    }
    CHECK(parts == all);
  }
}

TEST_CASE("homology vectors") {
  CHECK(homology_vector(w("a1.a1.a2.a2"), 2).sums == std::vector<std::int64_t>{2, 2});
  CHECK(homology_vector(w("a1.A2.A2"), 2).sums == std::vector<std::int64_t>{1, -2});
  for (const auto& x : enumerate_reduced(2, 5)) {
    CHECK(homology_vector(inverse(x), 2) == -homology_vector(x, 2));
    CHECK(homology_vector(power(x, 3), 2) == homology_vector(x, 2) + homology_vector(x, 2) + homology_vector(x, 2));
  }
}

TEST_CASE("text grammar") {
  CHECK(to_string(w("a1.a1.A2")) == "a1.a1.A2");
  CHECK(w("a1 a1  A2") == w("a1.a1.A2"));
  CHECK(w("a12.A3") == make_cyclic(LinearWord{Letter::generator(12), Letter::generator(3, true)}));
  for (const char* bad : {"", "b1", "a0", "a01", "a", "a1..a2", "a1.", "a-1", "A", "a1x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_word("a1.A1"), TrivialClass);
  for (const auto& x : enumerate_reduced(3, 4)) CHECK(parse_word(to_string(x)) == x);
}
