#pragma once

#include "algebra.hpp"
#include "linalg.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zigzag {

// One graded projective summand P_vertex<shift> sitting in cohomological
// degree `degree`.  uids are stable handles into the differential.
struct Summand {
  int uid{0};
  int vertex{1};
  int shift{0};
  int degree{0};

  std::tuple<int, int, int, int> key() const { return {degree, vertex, shift, uid}; }
  friend bool operator==(const Summand&, const Summand&) = default;
};

// Bounded complex of graded projectives over the zigzag algebra.  The
// differential raises cohomological degree by one; entry (S, T) is a
// homogeneous element of e_{v(S)} A e_{v(T)} of degree shift(T) - shift(S),
// acting by right multiplication.
class Complex {
 public:
  Complex(int rank, GradingMode mode) : rank_(rank), mode_(std::move(mode)) {}

  static Complex zero(int rank, const GradingMode& mode) { return {rank, mode}; }
  static Complex projective(int rank, const GradingMode& mode, int vertex,
                            int shift = 0, int degree = 0);

  int rank() const { return rank_; }
  const GradingMode& mode() const { return mode_; }
  bool empty() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }

  // Sorted by (degree, vertex, shift, uid).
  const std::vector<Summand>& summands() const { return summands_; }
  const Summand& summand(int uid) const;
  const std::map<std::pair<int, int>, AlgebraElement>& differential() const {
    return diff_;
  }
  AlgebraElement entry(int src, int tgt) const;

  int add_summand(int vertex, int shift, int degree);
  void set_entry(int src, int tgt, const AlgebraElement& value);

  int min_degree() const;
  int max_degree() const;
  int min_shift() const;
  int max_shift() const;

  // Throws std::runtime_error when any structural invariant fails
  // (endpoints, homogeneity, degree step, d^2 = 0).
  void validate() const;

  // Y[hom]<internal>: degree d -> d - hom, shift s -> s + internal,
  // differential scaled by (-1)^hom.  uids are preserved.
  Complex shifted(int hom, int internal) const;

  // Homotopy-equivalent complex with no invertible differential entries,
  // computed by exact Gaussian elimination.  Output is canonicalized.
  Complex minimized() const;

  // Renumber uids along the canonical summand order.
  Complex canonicalized() const;

  nlohmann::ordered_json to_json() const;
  static Complex from_json(const nlohmann::json& j);
  std::string serialize() const;

 private:
  int rank_;
  GradingMode mode_;
  int next_uid_{0};
  std::vector<Summand> summands_;
  std::map<std::pair<int, int>, AlgebraElement> diff_;
};

Complex direct_sum(const Complex& a, const Complex& b);

// A chain map X -> Y[hom_shift]<int_shift>; entry (uid in X, uid in Y) is a
// homogeneous algebra element acting by right multiplication.
struct ChainMap {
  int hom_shift{0};
  int int_shift{0};
  std::map<std::pair<int, int>, AlgebraElement> entries;
};

void validate_chain_map(const Complex& x, const Complex& y, const ChainMap& f);

// Mapping cone of f : X -> Y (zero shifts): X[1] (+) Y with the usual sign.
Complex cone(const Complex& x, const Complex& y, const ChainMap& f);

// g after f, entry-wise: (g . f)(S, U) = sum_T f(S, T) * g(T, U).
ChainMap compose(const ChainMap& f, const ChainMap& g);

struct HomSpace {
  int dimension{0};                // dim Hom_{K^b}(X, Y[hom]<internal>)
  std::vector<ChainMap> basis;     // coset representatives mod null-homotopic
  std::vector<ChainMap> cycle_basis;  // all chain maps, before the quotient
};

HomSpace hom_space(const Complex& x, const Complex& y, int hom, int internal);
int dim_hom(const Complex& x, const Complex& y, int hom, int internal);

bool is_nullhomotopic(const Complex& x, const Complex& y, const ChainMap& f);

struct HomTable {
  // (hom shift, internal shift) -> dimension; zero cells omitted.
  std::map<std::pair<int, int>, int> dims;
  int hom_min{0}, hom_max{0}, int_min{0}, int_max{0};
};

HomTable hom_table(const Complex& x, const Complex& y);

// Isomorphism in the homotopy category (decided exactly via minimal models).
bool is_isomorphic(const Complex& x, const Complex& y, unsigned seed = 20260823);

}  // namespace zigzag
