#include "slices.hpp"

#include "twists.hpp"

#include <stdexcept>

namespace zigzag {

namespace {

SliceDecomposition slice_by(const Complex& y, SliceFlavor flavor) {
  Complex m = y.minimized();
  SliceDecomposition out(flavor, m);
  auto index_of = [flavor](const Summand& s) {
    return flavor == SliceFlavor::Baric ? s.shift : s.shift - s.degree;
  };
  std::map<int, std::map<int, int>> remap;  // slice -> (uid in m -> uid in slice)
  for (const Summand& s : m.summands()) {
    int idx = index_of(s);
    auto [it, ins] = out.slices.try_emplace(idx, Complex::zero(m.rank(), m.mode()));
    remap[idx][s.uid] = it->second.add_summand(s.vertex, s.shift, s.degree);
  }
  for (const auto& [k, v] : m.differential()) {
    const Summand& s = m.summand(k.first);
    const Summand& t = m.summand(k.second);
    int idx = index_of(s);
    if (index_of(t) != idx) continue;
    out.slices.at(idx).set_entry(remap[idx][k.first], remap[idx][k.second], v);
  }
  return out;
}

}  // namespace

SliceDecomposition baric_slices(const Complex& y) {
  if (!y.mode().is_orientation())
    throw std::invalid_argument("baric slices need an orientation grading");
  return slice_by(y, SliceFlavor::Baric);
}

SliceDecomposition t_slices(const Complex& y) {
  if (y.mode().kind != GradingMode::Kind::PathLength)
    throw std::invalid_argument("t-slices need the path-length grading");
  return slice_by(y, SliceFlavor::T);
}

std::pair<int, int> phi(const Complex& y) {
  SliceDecomposition d = y.mode().is_orientation() ? baric_slices(y) : t_slices(y);
  if (d.slices.empty()) throw std::domain_error("phi undefined for the zero complex");
  return {d.slices.begin()->first, d.slices.rbegin()->first};
}

int dim_hom_aggregated(const Complex& y, const Complex& c, int internal) {
  if (y.empty() || c.empty()) return 0;
  int lo = c.min_degree() - y.max_degree() - 1;
  int hi = c.max_degree() - y.min_degree() + 1;
  int total = 0;
  for (int k = lo; k <= hi; ++k) total += dim_hom(y, c, k, internal);
  return total;
}

namespace {

bool slice_is_all_vertex(const Complex& slice, int i) {
  for (const Summand& s : slice.summands())
    if (s.vertex != i) return false;
  return true;
}

}  // namespace

bool in_x_plus(const Complex& y, int i) {
  Complex m = y.minimized();
  if (m.empty()) throw std::domain_error("membership undefined for the zero complex");
  SliceDecomposition d = baric_slices(m);
  auto [lo, hi] = phi(m);
  if (!slice_is_all_vertex(d.slices.at(hi), i)) return false;
  for (int j = 1; j <= m.rank(); ++j) {
    Complex pj = Complex::projective(m.rank(), m.mode(), j);
    bool vanishes = dim_hom_aggregated(m, pj, lo) == 0;
    if (vanishes != (j == i)) return false;
  }
  return true;
}

bool in_x_minus(const Complex& y, int i) {
  Complex m = y.minimized();
  if (m.empty()) throw std::domain_error("membership undefined for the zero complex");
  SliceDecomposition d = baric_slices(m);
  auto [lo, hi] = phi(m);
  if (!slice_is_all_vertex(d.slices.at(lo), i)) return false;
  for (int j = 1; j <= m.rank(); ++j) {
    Complex pj = Complex::projective(m.rank(), m.mode(), j);
    bool vanishes = dim_hom_aggregated(pj, m, -hi) == 0;
    if (vanishes != (j == i)) return false;
  }
  return true;
}

bool in_x_w(const Complex& y, const Word& w, const std::vector<Word>& reflections,
            int bound) {
  if (!(y.mode() == GradingMode::vec()))
    throw std::invalid_argument("dual ping-pong uses the ordered orientation");
  Complex m = y.minimized();
  for (const Summand& s : m.summands())
    if (s.shift < 0) return false;
  for (const Word& t : reflections) {
    if (!is_reflection(t)) throw std::invalid_argument("test set member is not a reflection");
    Complex ct = reflection_complex(t, m.rank());
    bool vanishes = dim_hom_aggregated(m, ct, 0) == 0;
    Tri div = divides(t, w, m.rank(), bound);
    if (div == Tri::Unknown)
      throw std::runtime_error("divisibility unknown within bound");
    if (vanishes != (div == Tri::True)) return false;
  }
  return true;
}

}  // namespace zigzag
