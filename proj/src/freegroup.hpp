#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zigzag {

// Free group words over generators s1..sn, stored as nonzero signed indices
// (k for s_k, -k for its inverse).
using Word = std::vector<int>;
using Tuple = std::vector<Word>;

// Three-valued answers for searches bounded by reflection length.
enum class Tri { False, True, Unknown };

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // reduced product
int exponent_sum(const Word& w);
// (positive letters, negative letters) of the reduced word.
std::pair<int, int> letter_counts(const Word& w);

// w = g c g^{-1} with c cyclically reduced; returns (g, c).
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Quick necessary test: w is conjugate to a single positive generator
// (a counterclockwise loop around one puncture).  Every gamma-reflection
// passes this, but not conversely; see is_gamma_reflection.
bool is_reflection(const Word& w);
Word gamma_word(int n);

// Hurwitz moves on reflection tuples: index i (1-based, acting on slots
// i, i+1), sign +1 for tau_i, -1 for its inverse.
Tuple hurwitz(int index, int sign, const Tuple& t);

// All reduced reflection factorizations of gamma reachable from the standard
// one whose components have reduced length <= bound.
std::vector<Tuple> enumerate_red_gamma(int n, int bound);

// All gamma-reflections of reduced length <= max_len: the components of the
// enumerated reduced factorizations of gamma.  Note this is a proper subset
// of the conjugates of generators (s1^-1 s2 s1 is conjugate to s2 but occurs
// in no factorization of gamma and divides nothing).
std::vector<Word> enumerate_reflections(int n, int max_len);

// Is w a gamma-reflection, i.e. an entry of some reduced factorization of
// gamma?  Decided by Hurwitz enumeration with component cap max(bound,
// |w|) + 2; the enumeration is saturated in the cap (every gamma-reflection
// of length L appears with components <= L already), so absence is decisive.
Tri is_gamma_reflection(const Word& w, int n, int bound);

// Divisors of gamma arising as prefix products of the enumerated reduced
// factorizations (includes the identity and gamma itself).
std::vector<Word> enumerate_simples(int n, int bound);

// Membership in the dual monoid (the submonoid generated by reflections).
// Exact on exponent sum <= 1; otherwise a bounded factorization search that
// may return Unknown.
Tri in_monoid(const Word& w, int n, int bound);

// Does u divide w in the dual monoid order, i.e. u^{-1} w in the monoid?
Tri divides(const Word& u, const Word& w, int n, int bound);

// Is w a simple element (divisor of gamma)?
Tri is_simple(const Word& w, int n, int bound);

// Largest simple left factor of g, when the bounded lattice search can
// certify one.
std::optional<Word> left_factor(const Word& g, int n, int bound);

// Greedy normal form of a monoid element as a sequence of simples; nullopt
// when any step is uncertain within the bound.
std::optional<std::vector<Word>> greedy_normal_form(const Word& g, int n, int bound);

Word parse_word(const std::string& s);       // "s1 s2^-1 s1"
std::string format_word(const Word& w);

}  // namespace zigzag
