#pragma once

#include "algebra.hpp"
#include "complexes.hpp"
#include "freegroup.hpp"

#include <optional>

namespace zigzag {

// Extreme slice indices of the minimal twist of the sum of all projectives:
// baric indices for the orientation gradings, shift-minus-degree for path
// length.  The identity word is (0, 0).
std::pair<int, int> homological_phi(const Word& beta, const GradingMode& mode, int n);

// Reduced word length of beta^{-1} alpha.
int d_standard(const Word& alpha, const Word& beta);

struct DualLength {
  int homological{0};             // clamped baric spread in the ordered orientation
  std::optional<int> oracle;      // factorization length over bounded simples
  bool oracle_exact{false};       // true when the oracle value is certified minimal
};

// Dual Bessis length of beta: homological value plus a bounded search over
// products of enumerated simples and their inverses.
DualLength d_dual(const Word& beta, int n, int bound);

// Distance in the generating set of canonical positive lifts (square-free
// positive words) and their inverses; computed in closed form as the minimal
// number of uniform-sign square-free blocks partitioning beta^{-1} alpha.
int d_cox(const Word& alpha, const Word& beta);

// Breadth-first oracle for the same distance over lifts of length <= bound;
// nullopt when the bounded search does not reach the target within maxdist.
std::optional<int> d_cox_bfs(const Word& alpha, const Word& beta, int n, int bound,
                             int maxdist);

// Path-length t-slice spread of beta^{-1} alpha.
int d_exotic(const Word& alpha, const Word& beta, int n);

struct MetricReport {
  Word word;                     // reduced beta^{-1} alpha
  std::string mode;
  std::pair<int, int> phi{0, 0};
  std::pair<int, int> phi_clamped{0, 0};  // ordered orientation only
  int spread{0};
  std::string counterpart;       // name of the combinatorial comparison value
  std::optional<int> counterpart_value;
  std::string provenance;
};

MetricReport metric_report(const Word& alpha, const Word& beta,
                           const GradingMode& mode, int n, int bound);

}  // namespace zigzag
