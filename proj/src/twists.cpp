#include "twists.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zigzag {

Complex sigma_unreduced(int i, int sign, const Complex& y) {
  if (i < 1 || i > y.rank()) throw std::invalid_argument("twist vertex out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +-1");
  const GradingMode& mode = y.mode();
  const int s = mode.max_degree();  // deg(b) + deg(dual b) for every dual pair

  Complex out(y.rank(), mode);
  // Copy of Y.
  std::map<int, int> ry;
  for (const Summand& t : y.summands())
    ry[t.uid] = out.add_summand(t.vertex, t.shift, t.degree);

  // One slot P_i per summand and basis path of e_i A e_{vertex}.
  std::map<std::pair<int, int>, int> slot;  // (uid in Y, index in hom_basis) -> uid
  for (const Summand& t : y.summands()) {
    std::vector<BasisPath> hb = hom_basis(i, t.vertex);
    for (std::size_t k = 0; k < hb.size(); ++k) {
      int d = degree(hb[k], mode);
      int uid = (sign > 0)
                    ? out.add_summand(i, t.shift + s - d, t.degree + 1)
                    : out.add_summand(i, t.shift - d, t.degree - 1);
      slot[{t.uid, static_cast<int>(k)}] = uid;
    }
  }

  for (const auto& [k, v] : y.differential()) out.set_entry(ry[k.first], ry[k.second], v);

  // Evaluation / coevaluation components between Y and the slots.
  for (const Summand& t : y.summands()) {
    std::vector<BasisPath> hb = hom_basis(i, t.vertex);
    for (std::size_t k = 0; k < hb.size(); ++k) {
      int su = slot.at({t.uid, static_cast<int>(k)});
      if (sign > 0)
        out.set_entry(ry[t.uid], su, AlgebraElement::path(dual_partner(hb[k])));
      else
        out.set_entry(su, ry[t.uid], AlgebraElement::path(hb[k]));
    }
  }

  // Slot-to-slot components induced by the differential of Y.
  for (const auto& [k, a] : y.differential()) {
    const Summand& src = y.summand(k.first);
    const Summand& tgt = y.summand(k.second);
    std::vector<BasisPath> hb_src = hom_basis(i, src.vertex);
    std::vector<BasisPath> hb_tgt = hom_basis(i, tgt.vertex);
    for (std::size_t p = 0; p < hb_src.size(); ++p) {
      AlgebraElement prod = AlgebraElement::path(hb_src[p]) * a;
      if (prod.is_zero()) continue;
      for (std::size_t q = 0; q < hb_tgt.size(); ++q) {
        Rational c = prod.coeff(hb_tgt[q]);
        if (c == 0) continue;
        int su = slot.at({src.uid, static_cast<int>(p)});
        int tu = slot.at({tgt.uid, static_cast<int>(q)});
        out.set_entry(su, tu,
                      out.entry(su, tu) +
                          AlgebraElement::path(BasisPath::idem(i), -c));
      }
    }
  }
  return out;
}

Complex sigma(int i, int sign, const Complex& y) {
  return sigma_unreduced(i, sign, y).minimized();
}

Complex psi(const Word& w, const Complex& y) {
  Complex cur = y;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 0) throw std::invalid_argument("zero letter in word");
    cur = sigma(std::abs(*it), *it > 0 ? 1 : -1, cur);
  }
  return cur;
}

Complex reflection_complex(const Word& t, int rank) {
  auto [g, core] = cyclic_reduce(t);
  if (core.size() != 1 || core[0] < 1 || core[0] > rank)
    throw std::invalid_argument("not a reflection word");
  Complex p = Complex::projective(rank, GradingMode::vec(), core[0]);
  Complex m = psi(g, p).minimized();
  // For a genuine gamma-reflection the result sits in a single baric layer;
  // the conjugator is determined only up to a power of the core generator, so
  // pin the representative to the heart with lowest homological degree zero.
  // Conjugates of generators that are not gamma-reflections (s1^-1 s2 s1)
  // spread over several layers; those come back as computed.
  int s0 = m.summands().front().shift;
  for (const Summand& s : m.summands())
    if (s.shift != s0) return m.canonicalized();
  return m.shifted(m.min_degree(), -s0).canonicalized();
}

}  // namespace zigzag
