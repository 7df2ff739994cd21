#pragma once

#include "algebra.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace zigzag {

// Dense matrix over the rationals, row-major.  Everything here is exact.
struct Matrix {
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::size_t rank(Matrix m);

// Sparse vector: column index -> nonzero value.
using SparseVec = std::map<std::size_t, Rational>;

// Sparse matrix as a bag of sparse rows; the chain-map systems this library
// solves are close to block diagonal, so dense elimination is wasteful.
struct SparseMatrix {
  std::size_t cols{0};
  std::vector<SparseVec> rows;

  explicit SparseMatrix(std::size_t c = 0) : cols(c) {}
};

std::size_t rank(const SparseMatrix& m);

// Forward (unreduced) echelon form keyed by pivot column; every row has
// leading coefficient 1 and support only on columns >= its pivot.
std::map<std::size_t, SparseVec> sparse_echelon(const SparseMatrix& m);

// Basis of the right kernel { v : m v = 0 }.
std::vector<SparseVec> nullspace(const SparseMatrix& m);

// Incremental row reduction: feed vectors one at a time, learn whether each
// one enlarges the span.  Used to pick coset representatives.
class SparseReducer {
 public:
  // Returns true when v was independent of the current span (and absorbs it).
  bool add(SparseVec v);
  // Like add(), but leaves the span unchanged.
  bool independent(SparseVec v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(SparseVec& v) const;
  std::map<std::size_t, SparseVec> rows_;  // pivot column -> row, leading 1
};

}  // namespace zigzag
