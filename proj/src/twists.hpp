#pragma once

#include "complexes.hpp"
#include "freegroup.hpp"

namespace zigzag {

// Two-term bimodule tensor for the twist at vertex i (sign +1) or its
// inverse (sign -1), before minimization.
Complex sigma_unreduced(int i, int sign, const Complex& y);

// Spherical twist functor at vertex i (sign +1) or its inverse (sign -1);
// the result is minimized.
Complex sigma(int i, int sign, const Complex& y);

// Composite twist for a free group word, rightmost letter applied first,
// minimizing after each letter.
Complex psi(const Word& w, const Complex& y);

// The complex attached to a reflection t = g s_i g^{-1} (cyclically
// reduced): psi(g, P_i) in the OrientVec grading, minimized and pinned to
// the baric heart with lowest homological degree zero.
Complex reflection_complex(const Word& t, int rank);

}  // namespace zigzag
