#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freegroup.hpp"

#include <algorithm>
#include <set>

using namespace zigzag;

TEST_CASE("free reduction") {
  CHECK(reduce({1, 2, -2}) == Word{1});
  CHECK(reduce({}) == Word{});
  CHECK(reduce({1, -1, 2, -2}) == Word{});
  CHECK(reduce({-1, 1, 1}) == Word{1});
}

TEST_CASE("inverse and concat") {
  Word w{1, 2, -3};
  CHECK(concat(w, inverse(w)) == Word{});
  CHECK(inverse(w) == Word{3, -2, -1});
  CHECK(concat(Word{1}, Word{-1, 2}) == Word{2});
}

TEST_CASE("cyclic reduction") {
  auto [g, c] = cyclic_reduce({1, 2, -1});
  CHECK(g == Word{1});
  CHECK(c == Word{2});
  auto [g2, c2] = cyclic_reduce({2});
  CHECK(g2 == Word{});
  CHECK(c2 == Word{2});
}

TEST_CASE("letter counts") {
  CHECK(letter_counts({1, -2}) == std::pair<int, int>{1, 1});
  CHECK(letter_counts({1, -1}) == std::pair<int, int>{0, 0});
  CHECK(letter_counts(gamma_word(3)) == std::pair<int, int>{3, 0});
  CHECK(exponent_sum({1, 2, -1, -1}) == 0);
}

TEST_CASE("reflection necessary test") {
  CHECK(is_reflection({2}));
  CHECK(!is_reflection({-1}));
  CHECK(is_reflection({1, 2, -1}));
  CHECK(is_reflection({-1, 2, 1}));  // conjugate, though not a gamma-reflection
  CHECK(!is_reflection({1, 2}));
}

TEST_CASE("hurwitz moves") {
  Tuple base{{1}, {2}};
  Tuple moved = hurwitz(1, +1, base);
  CHECK(moved == Tuple{{1, 2, -1}, {1}});
  CHECK(hurwitz(1, -1, moved) == base);

  // braid relation on three strands
  Tuple t3{{1}, {2}, {3}};
  auto lhs = hurwitz(1, +1, hurwitz(2, +1, hurwitz(1, +1, t3)));
  auto rhs = hurwitz(2, +1, hurwitz(1, +1, hurwitz(2, +1, t3)));
  CHECK(lhs == rhs);
}

TEST_CASE("reduced factorizations of gamma") {
  auto tight = enumerate_red_gamma(2, 1);
  REQUIRE(tight.size() == 1);
  CHECK(tight[0] == Tuple{{1}, {2}});

  auto t3 = enumerate_red_gamma(2, 3);
  auto has = [&](const Tuple& t) {
    return std::find(t3.begin(), t3.end(), t) != t3.end();
  };
  CHECK(has({{1, 2, -1}, {1}}));
  CHECK(has({{2}, {-2, 1, 2}}));

  // every tuple multiplies to gamma
  for (const Tuple& t : t3) {
    Word prod;
    for (const Word& c : t) prod = concat(prod, c);
    CHECK(prod == gamma_word(2));
  }
}

TEST_CASE("gamma-reflections are orbit components, not all conjugates") {
  auto refs = enumerate_reflections(2, 3);
  auto has = [&](const Word& w) {
    return std::find(refs.begin(), refs.end(), w) != refs.end();
  };
  CHECK(has({1}));
  CHECK(has({2}));
  CHECK(has({1, 2, -1}));
  CHECK(has({-2, 1, 2}));
  CHECK(!has({-1, 2, 1}));
  CHECK(!has({2, 1, -2}));
}

TEST_CASE("gamma-reflection decision against the n=2 closed form") {
  // at n=2 the gamma-reflections are exactly gamma^k s_i gamma^-k
  int n = 2;
  std::set<Word> closed;
  Word g = gamma_word(n);
  for (int i = 1; i <= n; ++i)
    for (int k = -3; k <= 3; ++k) {
      Word c{i};
      for (int r = 0; r < std::abs(k); ++r)
        c = (k > 0) ? concat(concat(g, c), inverse(g))
                    : concat(concat(inverse(g), c), g);
      closed.insert(c);
    }
  // sweep every conjugate g s_i g^-1 with |g| <= 3 and compare verdicts
  std::vector<Word> conjugators{{}};
  for (std::size_t head = 0; head < conjugators.size(); ++head) {
    Word base = conjugators[head];
    if (base.size() < 3)
      for (int l : {1, -1, 2, -2}) {
        Word next = base;
        next.push_back(l);
        if (reduce(next) == next) conjugators.push_back(next);
      }
  }
  for (const Word& c : conjugators)
    for (int i = 1; i <= n; ++i) {
      Word w = reduce(concat(concat(c, Word{i}), inverse(c)));
      Tri got = is_gamma_reflection(w, n, 3);
      REQUIRE(got != Tri::Unknown);
      CHECK((got == Tri::True) == (closed.count(w) > 0));
    }
}

TEST_CASE("gamma-reflection enumeration is saturated in the cap") {
  // components of length <= L do not change when the cap grows past L
  for (int n : {2, 3}) {
    const int L = 7;
    auto small = enumerate_reflections(n, L);
    auto big = enumerate_reflections(n, L + 4);
    std::vector<Word> trimmed;
    for (const Word& w : big)
      if (static_cast<int>(w.size()) <= L) trimmed.push_back(w);
    CHECK(small == trimmed);
  }
}

TEST_CASE("simple elements") {
  auto s1 = enumerate_simples(2, 1);
  std::set<Word> set1(s1.begin(), s1.end());
  CHECK(set1 == std::set<Word>{{}, {1}, {1, 2}});

  auto s3 = enumerate_simples(2, 3);
  std::set<Word> set3(s3.begin(), s3.end());
  CHECK(set3.count({2}));
  CHECK(set3.count({1, 2, -1}));
  CHECK(set3.count(gamma_word(2)));
}

TEST_CASE("divisibility") {
  CHECK(divides({1}, {1, 2}, 2, 3) == Tri::True);
  CHECK(divides(gamma_word(2), {1, 1}, 2, 3) == Tri::False);
  CHECK(divides({1, 2}, {1, 2}, 2, 3) == Tri::True);
}

TEST_CASE("simplicity") {
  CHECK(is_simple({1, 2}, 2, 3) == Tri::True);
  CHECK(is_simple({1, 2, -1}, 2, 3) == Tri::True);
  CHECK(is_simple({2, 1}, 2, 3) == Tri::False);
  CHECK(is_simple({1, 1}, 2, 3) == Tri::False);
  // conjugate of a generator that is not a gamma-reflection divides nothing
  CHECK(is_simple({-1, 2, 1}, 2, 3) == Tri::False);
}

TEST_CASE("greedy normal form") {
  auto nf = greedy_normal_form({1, 1}, 2, 3);
  REQUIRE(nf.has_value());
  CHECK(*nf == std::vector<Word>{{1}, {1}});

  Word gs1 = concat(gamma_word(2), {1});
  auto nf2 = greedy_normal_form(gs1, 2, 3);
  REQUIRE(nf2.has_value());
  CHECK(*nf2 == std::vector<Word>{gamma_word(2), {1}});

  auto lf = left_factor({1}, 2, 3);
  REQUIRE(lf.has_value());
  CHECK(*lf == Word{1});
}

TEST_CASE("word parsing") {
  CHECK(parse_word("s1 s2^-1 s1") == Word{1, -2, 1});
  CHECK(parse_word("") == Word{});
  CHECK(format_word({1, -2}) == "s1 s2^-1");
  CHECK(parse_word(format_word({3, -1, 2})) == Word{3, -1, 2});
  CHECK_THROWS(parse_word("s1^2"));
  CHECK_THROWS(parse_word("q5"));
}
