#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "complexes.hpp"

#include <nlohmann/json.hpp>

using namespace zigzag;

namespace {

const GradingMode kTilde = GradingMode::tilde();

// P_1 --z--> P_1<dz>, the smallest complex with a nontrivial differential.
Complex loop_complex(const GradingMode& mode) {
  int dz = degree(BasisPath::loop(1), mode);
  Complex c(2, mode);
  int a = c.add_summand(1, 0, 0);
  int b = c.add_summand(1, dz, 1);
  c.set_entry(a, b, AlgebraElement::path(BasisPath::loop(1)));
  c.validate();
  return c;
}

}  // namespace

TEST_CASE("projective generators") {
  Complex p = Complex::projective(2, kTilde, 1);
  REQUIRE(p.size() == 1);
  CHECK(p.summands()[0].vertex == 1);
  CHECK(p.summands()[0].shift == 0);
  CHECK(p.summands()[0].degree == 0);
  CHECK(p.differential().empty());

  Complex q = Complex::projective(2, kTilde, 2, 1, 0);
  CHECK(q.summands()[0].shift == 1);

  // Y[k]^m = Y^{k+m}: P[1] puts the summand in degree -1
  Complex r = Complex::projective(2, kTilde, 1, 0, -1);
  CHECK(r.summands()[0].degree == -1);
}

TEST_CASE("shift moves degrees and flips the differential sign") {
  Complex c = loop_complex(kTilde);
  Complex s = c.shifted(1, 0);
  CHECK(s.summands()[0].degree == c.summands()[0].degree - 1);
  auto e = c.differential().begin()->second;
  auto es = s.differential().begin()->second;
  CHECK(es == -e);
  CHECK(is_isomorphic(s.shifted(-1, 0), c));

  Complex t = c.shifted(0, 2);
  for (std::size_t k = 0; k < c.size(); ++k)
    CHECK(t.summands()[k].shift == c.summands()[k].shift + 2);
}

TEST_CASE("double shift is additive on shifts and signs") {
  Complex c = loop_complex(kTilde);
  CHECK(c.shifted(1, 0).shifted(1, 1).serialize() == c.shifted(2, 1).serialize());
}

TEST_CASE("direct sum") {
  Complex p1 = Complex::projective(2, kTilde, 1);
  Complex p2 = Complex::projective(2, kTilde, 2);
  Complex s = direct_sum(p1, p2);
  CHECK(s.size() == 2);
  CHECK(s.differential().empty());
  CHECK(is_isomorphic(direct_sum(p1, Complex::zero(2, kTilde)), p1));
}

TEST_CASE("cone of the identity is contractible") {
  Complex p = Complex::projective(2, kTilde, 1);
  ChainMap id;
  id.entries[{p.summands()[0].uid, p.summands()[0].uid}] =
      AlgebraElement::path(BasisPath::idem(1));
  Complex c = cone(p, p, id);
  CHECK(c.size() == 2);
  CHECK(c.minimized().empty());
}

TEST_CASE("cone of the zero map is the shifted sum") {
  Complex p1 = Complex::projective(2, kTilde, 1);
  Complex p2 = Complex::projective(2, kTilde, 2);
  ChainMap zero;
  Complex c = cone(p1, p2, zero);
  CHECK(is_isomorphic(c, direct_sum(p1.shifted(1, 0), p2)));
}

TEST_CASE("minimize kills invertible entries and is idempotent") {
  Complex p = Complex::projective(2, kTilde, 1);
  Complex c(2, kTilde);
  int a = c.add_summand(1, 0, 0);
  int b = c.add_summand(1, 0, 1);
  c.set_entry(a, b, AlgebraElement::path(BasisPath::idem(1)));
  CHECK(c.minimized().empty());

  Complex l = loop_complex(kTilde);
  CHECK(l.minimized().serialize() == l.canonicalized().serialize());
  CHECK(l.minimized().minimized().serialize() == l.minimized().serialize());
  CHECK(p.minimized().size() == 1);
}

TEST_CASE("hom spaces between projectives match the path spaces") {
  Complex p1 = Complex::projective(2, kTilde, 1);
  Complex p2 = Complex::projective(2, kTilde, 2);
  CHECK(hom_space(p1, p1, 0, 0).dimension == 1);
  int dz = degree(BasisPath::loop(1), kTilde);
  CHECK(hom_space(p1, p1, 0, dz).dimension == 1);
  CHECK(hom_space(p1, p2, 1, 0).dimension == 0);

  HomTable t = hom_table(p1, p1);
  REQUIRE(t.dims.size() == 2);
  CHECK(t.dims.at({0, 0}) == 1);
  CHECK(t.dims.at({0, dz}) == 1);
}

TEST_CASE("hom table of the zero complex is empty") {
  Complex z = Complex::zero(2, kTilde);
  Complex p = Complex::projective(2, kTilde, 1);
  CHECK(hom_table(z, p).dims.empty());
  CHECK(hom_table(p, z).dims.empty());
}

TEST_CASE("isomorphism basics") {
  Complex p1 = Complex::projective(2, kTilde, 1);
  CHECK(is_isomorphic(p1, p1));
  CHECK(!is_isomorphic(p1, p1.shifted(0, 1)));
  CHECK(!is_isomorphic(p1, Complex::projective(2, kTilde, 2)));
  // homotopy equivalent but not equal on the nose
  Complex padded = direct_sum(p1, loop_complex(kTilde).shifted(0, 3));
  Complex contractible(2, kTilde);
  int a = contractible.add_summand(1, 3, 0);
  int b = contractible.add_summand(1, 3, 1);
  contractible.set_entry(a, b, AlgebraElement::path(BasisPath::idem(1)));
  CHECK(is_isomorphic(direct_sum(p1, contractible), p1));
  CHECK(!is_isomorphic(padded, p1));
}

TEST_CASE("isomorphism detects a sign-twisted copy") {
  // same summands, differential scaled by -1: still isomorphic
  Complex c = loop_complex(kTilde);
  Complex d(2, kTilde);
  int a = d.add_summand(1, 0, 0);
  int b = d.add_summand(1, degree(BasisPath::loop(1), kTilde), 1);
  d.set_entry(a, b, AlgebraElement::path(BasisPath::loop(1), -1));
  CHECK(c.serialize() != d.canonicalized().serialize());
  CHECK(is_isomorphic(c, d));
}

TEST_CASE("serialization round-trips and carries the documented fields") {
  Complex c = loop_complex(GradingMode::vec());
  std::string s = c.serialize();
  nlohmann::json j = nlohmann::json::parse(s);
  CHECK(j["format"] == "zigzag-complex");
  CHECK(j["version"] == 1);
  CHECK(j["rank"] == 2);
  CHECK(j["mode"] == "vec");
  CHECK(j["summands"].size() == 2);
  CHECK(j["differential"].size() == 1);
  Complex back = Complex::from_json(j);
  CHECK(back.serialize() == c.canonicalized().serialize());
}

TEST_CASE("a non-homogeneous entry is rejected") {
  Complex c(2, kTilde);
  int a = c.add_summand(1, 0, 0);
  int b = c.add_summand(1, 0, 1);
  // loop has degree 1 but the shift difference is 0
  CHECK_THROWS(c.set_entry(a, b, AlgebraElement::path(BasisPath::loop(1))));
}

TEST_CASE("validate rejects d^2 != 0") {
  Complex c(2, GradingMode::path_length());
  int a = c.add_summand(1, 0, 0);
  int b = c.add_summand(2, 1, 1);
  int d = c.add_summand(1, 2, 2);
  c.set_entry(a, b, AlgebraElement::path(BasisPath::edge(PathKind::EdgeX, 1, 2)));
  c.set_entry(b, d, AlgebraElement::path(BasisPath::edge(PathKind::EdgeXStar, 1, 2)));
  CHECK_THROWS(c.validate());
}
