#include "linalg.hpp"

#include <algorithm>

namespace zigzag {

namespace {

// In-place Gauss-Jordan on a dense matrix: returns pivot columns.
std::vector<std::size_t> echelonize(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// v -= f * w, sparse.  f by value: callers pass coefficients living in v.
void axpy(SparseVec& v, Rational f, const SparseVec& w) {
  for (const auto& [c, val] : w) {
    auto [it, ins] = v.emplace(c, -f * val);
    if (!ins) {
      it->second -= f * val;
      if (it->second == 0) v.erase(it);
    } else if (it->second == 0) {
      v.erase(it);
    }
  }
}

// Forward elimination of v against rows keyed by pivot column (leading 1).
void forward_reduce(SparseVec& v, const std::map<std::size_t, SparseVec>& rows) {
  while (!v.empty()) {
    auto it = rows.find(v.begin()->first);
    if (it == rows.end()) return;
    axpy(v, v.begin()->second, it->second);
  }
}

// Reduced row echelon form keyed by pivot column.
std::map<std::size_t, SparseVec> sparse_rref(const SparseMatrix& m) {
  std::map<std::size_t, SparseVec> rows;
  for (const SparseVec& r_in : m.rows) {
    SparseVec v = r_in;
    forward_reduce(v, rows);
    if (v.empty()) continue;
    Rational inv = 1 / v.begin()->second;
    if (inv != 1)
      for (auto& [c, val] : v) val *= inv;
    rows.emplace(v.begin()->first, std::move(v));
  }
  // Back substitution so each pivot column survives in its own row only.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (auto jt = rows.begin(); jt->first != it->first; ++jt) {
      auto hit = jt->second.find(it->first);
      if (hit != jt->second.end()) axpy(jt->second, hit->second, it->second);
    }
  return rows;
}

}  // namespace

std::size_t rank(Matrix m) { return echelonize(m).size(); }

std::size_t rank(const SparseMatrix& m) { return sparse_echelon(m).size(); }

std::map<std::size_t, SparseVec> sparse_echelon(const SparseMatrix& m) {
  std::map<std::size_t, SparseVec> rows;
  for (const SparseVec& r_in : m.rows) {
    SparseVec v = r_in;
    forward_reduce(v, rows);
    if (v.empty()) continue;
    Rational inv = 1 / v.begin()->second;
    if (inv != 1)
      for (auto& [c, val] : v) val *= inv;
    rows.emplace(v.begin()->first, std::move(v));
  }
  return rows;
}

std::vector<SparseVec> nullspace(const SparseMatrix& m) {
  std::map<std::size_t, SparseVec> rows = sparse_rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (const auto& [p, r] : rows) is_pivot[p] = true;

  std::vector<SparseVec> out;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    SparseVec v;
    v[free_col] = 1;
    for (const auto& [p, r] : rows) {
      auto it = r.find(free_col);
      if (it != r.end()) v[p] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

void SparseReducer::reduce(SparseVec& v) const { forward_reduce(v, rows_); }

bool SparseReducer::add(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  Rational inv = 1 / v.begin()->second;
  if (inv != 1)
    for (auto& [c, val] : v) val *= inv;
  rows_.emplace(v.begin()->first, std::move(v));
  return true;
}

bool SparseReducer::independent(SparseVec v) const {
  reduce(v);
  return !v.empty();
}

}  // namespace zigzag
