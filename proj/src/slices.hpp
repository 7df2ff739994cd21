#pragma once

#include "complexes.hpp"
#include "freegroup.hpp"

namespace zigzag {

enum class SliceFlavor { Baric, T };

// Layered view of a minimal complex: baric slices collect summands of equal
// internal shift with the shift-preserving differential entries; t-slices
// (path-length grading) collect summands of equal shift minus homological
// degree.
struct SliceDecomposition {
  SliceFlavor flavor{SliceFlavor::Baric};
  Complex minimal;
  std::map<int, Complex> slices;

  SliceDecomposition(SliceFlavor f, Complex m) : flavor(f), minimal(std::move(m)) {}
};

SliceDecomposition baric_slices(const Complex& y);
SliceDecomposition t_slices(const Complex& y);

// Bottom and top nonzero slice indices (baric for orientation gradings,
// t-flavor for path length).  Throws on the zero complex.
std::pair<int, int> phi(const Complex& y);

// dim of the shift-aggregated Hom(Y, C[k]<m>), summed over all homological
// shifts k in the support window of the pair.
int dim_hom_aggregated(const Complex& y, const Complex& c, int internal);

// Ping-pong membership tests in the symmetric-orientation grading; the
// caller guarantees indecomposability.
bool in_x_plus(const Complex& y, int i);
bool in_x_minus(const Complex& y, int i);

// Dual ping-pong membership: Y lies in D_{>=0} and Hom(Y, c_t) vanishes
// exactly for the reflections t of the supplied test set dividing w.
bool in_x_w(const Complex& y, const Word& w, const std::vector<Word>& reflections,
            int bound);

}  // namespace zigzag
