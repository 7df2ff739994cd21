#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace zigzag {

using Rational = boost::multiprecision::cpp_rational;

// One basis path of the zigzag algebra of the doubled complete graph:
// an idempotent e_i, a loop z_i, or one of the four edges between a
// vertex pair i < j.  EdgeX/EdgeY run i -> j, the starred edges j -> i.
enum class PathKind : std::uint8_t {
  Idem = 0,
  Loop = 1,
  EdgeX = 2,
  EdgeY = 3,
  EdgeXStar = 4,
  EdgeYStar = 5,
};

struct BasisPath {
  PathKind kind{PathKind::Idem};
  int i{1};
  int j{1};  // equals i for Idem/Loop, i < j for edges

  static BasisPath idem(int v) { return {PathKind::Idem, v, v}; }
  static BasisPath loop(int v) { return {PathKind::Loop, v, v}; }
  static BasisPath edge(PathKind k, int a, int b);

  bool is_edge() const { return kind >= PathKind::EdgeX; }
  int source() const;
  int target() const;

  // Canonical order: idempotents, loops, then edges lexicographically in
  // (i, j) with x < y < x* < y*.
  std::tuple<int, int, int, int> key() const;

  friend bool operator==(const BasisPath& a, const BasisPath& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const BasisPath& a, const BasisPath& b) {
    return a.key() < b.key();
  }

  std::string to_string() const;
  static BasisPath parse(const std::string& s);
};

// The three grading modes of interest plus arbitrary orientation gradings.
struct GradingMode {
  enum class Kind { PathLength, OrientTilde, OrientVec, OrientCustom };
  Kind kind{Kind::OrientTilde};
  // For OrientCustom: (i, j) with i < j maps to whether the x (first) and
  // y (second) edge of the pair points i -> j.
  std::map<std::pair<int, int>, std::pair<bool, bool>> orientation;

  static GradingMode path_length() { return {Kind::PathLength, {}}; }
  static GradingMode tilde() { return {Kind::OrientTilde, {}}; }
  static GradingMode vec() { return {Kind::OrientVec, {}}; }

  bool is_orientation() const { return kind != Kind::PathLength; }
  // Largest degree of a basis path: 2 for path length, 1 otherwise.
  int max_degree() const { return kind == Kind::PathLength ? 2 : 1; }

  std::string name() const;
  static GradingMode by_name(const std::string& s);

  friend bool operator==(const GradingMode&, const GradingMode&) = default;
};

int degree(const BasisPath& p, const GradingMode& mode);

// The partner making a dual pair in the coevaluation g_i:
// e_i <-> z_i, x <-> x*, y <-> y*.  Involutive.
BasisPath dual_partner(const BasisPath& p);

// All 2n^2 basis paths in canonical order.
std::vector<BasisPath> basis(int n);

// Canonical ordered basis of e_i A e_j (always two-dimensional).
std::vector<BasisPath> hom_basis(int i, int j);

// Product of two basis paths in the zigzag algebra: zero, a single path,
// or a loop (dual pairs compose to z at the starting vertex).
class AlgebraElement;
AlgebraElement multiply_paths(const BasisPath& a, const BasisPath& b);

class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement path(const BasisPath& p, const Rational& c = 1);
  static AlgebraElement unit(int n);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisPath, Rational>& terms() const { return terms_; }
  Rational coeff(const BasisPath& p) const;

  AlgebraElement& add_term(const BasisPath& p, const Rational& c);

  AlgebraElement operator-() const;
  AlgebraElement scaled(const Rational& c) const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  // True when all stored paths share one source and one target vertex.
  bool endpoint_pure(int* src = nullptr, int* tgt = nullptr) const;
  // True when all stored paths have the same degree in the given mode.
  bool homogeneous(const GradingMode& mode, int* deg = nullptr) const;

  std::string to_string() const;

 private:
  std::map<BasisPath, Rational> terms_;
};

}  // namespace zigzag
