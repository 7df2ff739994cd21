#pragma once

#include "complexes.hpp"
#include "freegroup.hpp"

namespace zigzag {

// One slot of a spherical collection: a reflection word together with the
// complex tracking it under the Hurwitz action.
struct SphericalEntry {
  Word reflection;
  Complex complex;
};

struct SphericalTuple {
  int rank{0};
  std::vector<SphericalEntry> entries;
};

// ((s_1, P_1), ..., (s_n, P_n)) in the ordered-orientation grading.
SphericalTuple base_tuple(int n);

// Hurwitz move on both tracks: words via the free-group action, complexes by
// twisting with the word of the moving entry.  Asserts that each new complex
// stays isomorphic, up to homological shift, to the reflection complex of
// its word.
SphericalTuple hurwitz_spherical(int index, int sign, const SphericalTuple& tup);

// End(E), aggregated over homological and internal shifts, is spanned by the
// identity and one square-zero element.
bool is_spherical(const Complex& e);

// Spherical entries in the baric heart whose cross-homs concentrate in
// internal degree 1 (upward) and 0 (downward).
bool is_o_spherical(const SphericalTuple& tup);

// a ~ b[m] for some integer m.
bool iso_up_to_hom_shift(const Complex& a, const Complex& b);

// a ~ b[m_1] (+) ... (+) b[m_r] for some integers m_i, r >= 1.
bool iso_to_shifted_copies(const Complex& a, const Complex& b);

// Per-criterion evaluation of the reflection-pair equivalences: simplicity of
// tu, reflection conjugates, hom concentration against the shift-aggregated
// reflection complexes, and the twist/slice descriptions.  Criteria are
// reported individually so a discrepancy is data, not a crash.
struct EquivReport {
  std::map<int, Tri> criteria;  // keys 1,2,3,5,6,7,8,9,10
  Tri agree{Tri::Unknown};      // all decided criteria match ((2),(3) skipped for t = u)
  std::string detail;
};

EquivReport check_equiv(const Word& t, const Word& u, int n, int bound);

}  // namespace zigzag
