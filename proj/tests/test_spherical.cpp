#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherical.hpp"
#include "twists.hpp"

using namespace zigzag;

namespace {

const GradingMode kVec = GradingMode::vec();

void check_criteria(const EquivReport& rep, Tri expected,
                    std::initializer_list<int> except = {}) {
  for (const auto& [k, v] : rep.criteria) {
    bool skip = false;
    for (int e : except) skip = skip || e == k;
    if (!skip) {
      INFO("criterion " << k);
      CHECK(v == expected);
    }
  }
}

}  // namespace

TEST_CASE("base collection") {
  SphericalTuple tup = base_tuple(2);
  REQUIRE(tup.entries.size() == 2);
  CHECK(tup.entries[0].reflection == Word{1});
  CHECK(is_isomorphic(tup.entries[1].complex, Complex::projective(2, kVec, 2)));
  CHECK(is_o_spherical(tup));
  for (const auto& e : tup.entries) CHECK(is_spherical(e.complex));
}

TEST_CASE("sphericality is not automatic") {
  Complex two = direct_sum(Complex::projective(2, kVec, 1),
                           Complex::projective(2, kVec, 1));
  CHECK(!is_spherical(two));
  CHECK(!is_spherical(Complex::zero(2, kVec)));
}

TEST_CASE("hurwitz move on the base collection") {
  SphericalTuple moved = hurwitz_spherical(1, +1, base_tuple(2));
  CHECK(moved.entries[0].reflection == Word{1, 2, -1});
  CHECK(moved.entries[1].reflection == Word{1});
  // C_{s1 s2 s1^-1} = (P_2 -> P_1 (+) P_1)
  CHECK(iso_up_to_hom_shift(moved.entries[0].complex,
                            reflection_complex({1, 2, -1}, 2)));
  CHECK(is_o_spherical(moved));

  SphericalTuple back = hurwitz_spherical(1, -1, moved);
  CHECK(back.entries[0].reflection == Word{1});
  CHECK(back.entries[1].reflection == Word{2});
  for (int k : {0, 1})
    CHECK(iso_up_to_hom_shift(back.entries[k].complex,
                              base_tuple(2).entries[k].complex));
}

TEST_CASE("wrongly ordered collection is rejected") {
  SphericalTuple swapped = base_tuple(2);
  std::swap(swapped.entries[0], swapped.entries[1]);
  CHECK(!is_o_spherical(swapped));
}

TEST_CASE("iso up to shift helpers") {
  Complex p = Complex::projective(2, kVec, 1);
  CHECK(iso_up_to_hom_shift(p, p.shifted(3, 0)));
  CHECK(!iso_up_to_hom_shift(p, p.shifted(0, 1)));
  Complex twocopies = direct_sum(p, p.shifted(2, 0));
  CHECK(iso_to_shifted_copies(twocopies, p));
  CHECK(!iso_to_shifted_copies(twocopies, Complex::projective(2, kVec, 2)));
  CHECK(!iso_to_shifted_copies(p, twocopies));
}

TEST_CASE("equivalence criteria on the standard pair") {
  EquivReport rep = check_equiv({1}, {2}, 2, 3);
  check_criteria(rep, Tri::True);
  CHECK(rep.agree == Tri::True);
}

TEST_CASE("equivalence criteria on the reversed pair") {
  // s2 s1 does not divide gamma, so every criterion fails together
  EquivReport rep = check_equiv({2}, {1}, 2, 3);
  check_criteria(rep, Tri::False);
  CHECK(rep.agree == Tri::True);
}

TEST_CASE("diagonal pair") {
  // t = u makes (2),(3) vacuously true; the remaining criteria all fail
  EquivReport rep = check_equiv({1}, {1}, 2, 3);
  CHECK(rep.criteria.at(2) == Tri::True);
  CHECK(rep.criteria.at(3) == Tri::True);
  check_criteria(rep, Tri::False, {2, 3});
  CHECK(rep.agree == Tri::True);
}

TEST_CASE("longer reflections agree too") {
  EquivReport pos = check_equiv({1, 2, -1}, {1}, 2, 3);
  check_criteria(pos, Tri::True);
  CHECK(pos.agree == Tri::True);

  // a conjugate outside the Hurwitz orbit fails every criterion coherently
  EquivReport neg = check_equiv({-1, 2, 1}, {1}, 2, 3);
  check_criteria(neg, Tri::False);
  CHECK(neg.agree == Tri::True);
}

TEST_CASE("rank three pairs") {
  EquivReport a = check_equiv({1}, {3}, 3, 3);
  check_criteria(a, Tri::True);
  CHECK(a.agree == Tri::True);
  EquivReport b = check_equiv({3}, {1}, 3, 3);
  check_criteria(b, Tri::False);
  CHECK(b.agree == Tri::True);
}

TEST_CASE("non-reflection arguments are rejected") {
  CHECK_THROWS(check_equiv({1, 2}, {1}, 2, 3));
  CHECK_THROWS(check_equiv({1}, {-2}, 2, 3));
}
