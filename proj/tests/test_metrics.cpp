#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metrics.hpp"

#include <vector>

using namespace zigzag;

namespace {

const GradingMode kTilde = GradingMode::tilde();
const GradingMode kVec = GradingMode::vec();
const GradingMode kPath = GradingMode::path_length();

// all reduced words of length exactly len over n generators
std::vector<Word> reduced_words(int n, int len) {
  std::vector<Word> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int i = 1; i <= n; ++i)
        for (int s : {i, -i}) {
          if (!w.empty() && w.back() == -s) continue;
          Word v = w;
          v.push_back(s);
          next.push_back(std::move(v));
        }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("homological phi basics") {
  CHECK(homological_phi({}, kTilde, 2) == std::pair<int, int>{0, 0});
  CHECK(homological_phi({1}, kTilde, 2) == std::pair<int, int>{0, 1});
  CHECK(homological_phi({1, -2}, kTilde, 2) == std::pair<int, int>{-1, 1});
  CHECK(homological_phi(gamma_word(2), kVec, 2) == std::pair<int, int>{1, 1});
  CHECK(homological_phi(gamma_word(3), kVec, 3) == std::pair<int, int>{1, 1});
}

TEST_CASE("standard metric equals the word length") {
  CHECK(d_standard({1}, {1}) == 0);
  CHECK(d_standard({1, -2}, {}) == 2);
  CHECK(d_standard(gamma_word(3), {}) == 3);
  // left invariance
  CHECK(d_standard(concat({2, -1}, Word{1, -2}), concat({2, -1}, Word{})) == 2);
}

TEST_CASE("symmetric-orientation spread counts letters") {
  for (const Word& w : reduced_words(2, 4)) {
    auto [pos, neg] = letter_counts(w);
    auto [lo, hi] = homological_phi(w, kTilde, 2);
    CHECK(hi == pos);
    CHECK(-lo == neg);
    CHECK(hi - lo == static_cast<int>(w.size()));
  }
}

TEST_CASE("dual length on simples and inverses") {
  DualLength g = d_dual(gamma_word(2), 2, 3);
  CHECK(g.homological == 1);
  REQUIRE(g.oracle.has_value());
  CHECK(*g.oracle == 1);
  CHECK(g.oracle_exact);

  DualLength inv = d_dual({-1}, 2, 3);
  CHECK(inv.homological == 1);
  CHECK(*inv.oracle == 1);

  DualLength two = d_dual({-1, 2}, 2, 3);
  CHECK(two.homological == 2);
  CHECK(*two.oracle == 2);
}

TEST_CASE("dual length separates orbit reflections from other conjugates") {
  // genuine gamma-reflections have dual length 1 ...
  CHECK(d_dual({1, 2, -1}, 2, 3).homological == 1);
  CHECK(d_dual({-2, 1, 2}, 2, 3).homological == 1);
  // ... while a conjugate of a generator outside the Hurwitz orbit does not
  CHECK(d_dual({-1, 2, 1}, 2, 3).homological == 3);
  CHECK(d_dual({2, 1, -2}, 2, 3).homological == 3);
}

TEST_CASE("coxeter-lift metric, reference instances") {
  CHECK(d_cox({1, 2, 1}, {}) == 1);
  CHECK(d_cox({2, 1}, {1, 3, -1}) == 3);
  CHECK(d_cox({1, -2}, {1, -2}) == 0);
  CHECK(d_cox({1, 1}, {}) == 2);
  CHECK(d_cox({1, -2, 1}, {}) == 3);
}

TEST_CASE("coxeter-lift closed form matches the breadth-first oracle") {
  // rank two: lifts up to length 5 cover every geodesic of these words
  for (int len = 1; len <= 4; ++len)
    for (const Word& w : reduced_words(2, len)) {
      auto slow = d_cox_bfs(w, {}, 2, 5, 6);
      REQUIRE(slow.has_value());
      CHECK(d_cox(w, {}) == *slow);
    }
  // rank three: shorter sweep, the oracle search space grows quickly
  for (int len = 1; len <= 3; ++len)
    for (const Word& w : reduced_words(3, len)) {
      auto slow = d_cox_bfs(w, {}, 3, 3, 4);
      REQUIRE(slow.has_value());
      CHECK(d_cox(w, {}) == *slow);
    }
}

TEST_CASE("exotic metric, reference instances") {
  CHECK(d_exotic({2, 1}, {1, 3, -1}, 3) == 2);
  CHECK(d_exotic({1, -2}, {1, -2}, 2) == 0);
}

TEST_CASE("exotic equals coxeter-lift on rank two") {
  for (int len = 1; len <= 4; ++len)
    for (const Word& w : reduced_words(2, len))
      CHECK(d_exotic(w, {}, 2) == d_cox(w, {}));
}

TEST_CASE("exotic bounded by coxeter-lift on rank three samples") {
  for (const Word& w : reduced_words(3, 3))
    CHECK(d_exotic(w, {}, 3) <= d_cox(w, {}));
}

TEST_CASE("metric report fields") {
  MetricReport r = metric_report({2, 1}, {1, 3, -1}, kPath, 3, 3);
  CHECK(r.mode == "path");
  CHECK(r.spread == 2);
  CHECK(r.counterpart_value.has_value());
  CHECK(*r.counterpart_value == 3);

  MetricReport tilde = metric_report({1, -2}, {}, kTilde, 2, 3);
  CHECK(tilde.spread == 2);
  CHECK(tilde.phi == std::pair<int, int>{-1, 1});
}
