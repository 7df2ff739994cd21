#include "algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace zigzag {

BasisPath BasisPath::edge(PathKind k, int a, int b) {
  if (a >= b) throw std::invalid_argument("edge needs i < j");
  if (k == PathKind::Idem || k == PathKind::Loop)
    throw std::invalid_argument("edge kind expected");
  return {k, a, b};
}

int BasisPath::source() const {
  switch (kind) {
    case PathKind::Idem:
    case PathKind::Loop:
      return i;
    case PathKind::EdgeX:
    case PathKind::EdgeY:
      return i;
    case PathKind::EdgeXStar:
    case PathKind::EdgeYStar:
      return j;
  }
  return i;
}

int BasisPath::target() const {
  switch (kind) {
    case PathKind::Idem:
    case PathKind::Loop:
      return i;
    case PathKind::EdgeX:
    case PathKind::EdgeY:
      return j;
    case PathKind::EdgeXStar:
    case PathKind::EdgeYStar:
      return i;
  }
  return i;
}

std::tuple<int, int, int, int> BasisPath::key() const {
  int cat;
  switch (kind) {
    case PathKind::Idem: cat = 0; break;
    case PathKind::Loop: cat = 1; break;
    default: cat = 2; break;
  }
  return {cat, i, j, static_cast<int>(kind)};
}

std::string BasisPath::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case PathKind::Idem: os << 'e' << i; break;
    case PathKind::Loop: os << 'z' << i; break;
    case PathKind::EdgeX: os << "x(" << i << ',' << j << ')'; break;
    case PathKind::EdgeY: os << "y(" << i << ',' << j << ')'; break;
    case PathKind::EdgeXStar: os << "x*(" << i << ',' << j << ')'; break;
    case PathKind::EdgeYStar: os << "y*(" << i << ',' << j << ')'; break;
  }
  return os.str();
}

BasisPath BasisPath::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty basis path");
  char head = s[0];
  if (head == 'e' || head == 'z') {
    int v = std::stoi(s.substr(1));
    return head == 'e' ? idem(v) : loop(v);
  }
  if (head != 'x' && head != 'y') throw std::invalid_argument("bad basis path: " + s);
  std::size_t pos = 1;
  bool star = pos < s.size() && s[pos] == '*';
  if (star) ++pos;
  if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("bad basis path: " + s);
  std::size_t comma = s.find(',', pos);
  std::size_t close = s.find(')', pos);
  if (comma == std::string::npos || close == std::string::npos || close < comma)
    throw std::invalid_argument("bad basis path: " + s);
  int a = std::stoi(s.substr(pos + 1, comma - pos - 1));
  int b = std::stoi(s.substr(comma + 1, close - comma - 1));
  PathKind k;
  if (head == 'x')
    k = star ? PathKind::EdgeXStar : PathKind::EdgeX;
  else
    k = star ? PathKind::EdgeYStar : PathKind::EdgeY;
  return edge(k, a, b);
}

std::string GradingMode::name() const {
  switch (kind) {
    case Kind::PathLength: return "path";
    case Kind::OrientTilde: return "tilde";
    case Kind::OrientVec: return "vec";
    case Kind::OrientCustom: return "custom";
  }
  return "?";
}

GradingMode GradingMode::by_name(const std::string& s) {
  if (s == "path") return path_length();
  if (s == "tilde") return tilde();
  if (s == "vec") return vec();
  throw std::invalid_argument("unknown grading mode: " + s);
}

int degree(const BasisPath& p, const GradingMode& mode) {
  using K = GradingMode::Kind;
  switch (mode.kind) {
    case K::PathLength:
      switch (p.kind) {
        case PathKind::Idem: return 0;
        case PathKind::Loop: return 2;
        default: return 1;
      }
    case K::OrientTilde:
      // All x edges and all y* edges point forward.
      switch (p.kind) {
        case PathKind::Idem: return 0;
        case PathKind::Loop: return 1;
        case PathKind::EdgeX: return 1;
        case PathKind::EdgeY: return 0;
        case PathKind::EdgeXStar: return 0;
        case PathKind::EdgeYStar: return 1;
      }
      return 0;
    case K::OrientVec:
      // Both unstarred edges point forward.
      switch (p.kind) {
        case PathKind::Idem: return 0;
        case PathKind::Loop: return 1;
        case PathKind::EdgeX: return 1;
        case PathKind::EdgeY: return 1;
        case PathKind::EdgeXStar: return 0;
        case PathKind::EdgeYStar: return 0;
      }
      return 0;
    case K::OrientCustom: {
      switch (p.kind) {
        case PathKind::Idem: return 0;
        case PathKind::Loop: return 1;
        default: break;
      }
      auto it = mode.orientation.find({p.i, p.j});
      if (it == mode.orientation.end())
        throw std::invalid_argument("custom orientation missing pair");
      bool fwd = (p.kind == PathKind::EdgeX || p.kind == PathKind::EdgeXStar)
                     ? it->second.first
                     : it->second.second;
      bool unstarred = (p.kind == PathKind::EdgeX || p.kind == PathKind::EdgeY);
      // deg(a) + deg(a*) = 1 with the oriented one carrying degree 1.
      return (fwd == unstarred) ? 1 : 0;
    }
  }
  return 0;
}

BasisPath dual_partner(const BasisPath& p) {
  switch (p.kind) {
    case PathKind::Idem: return BasisPath::loop(p.i);
    case PathKind::Loop: return BasisPath::idem(p.i);
    case PathKind::EdgeX: return {PathKind::EdgeXStar, p.i, p.j};
    case PathKind::EdgeXStar: return {PathKind::EdgeX, p.i, p.j};
    case PathKind::EdgeY: return {PathKind::EdgeYStar, p.i, p.j};
    case PathKind::EdgeYStar: return {PathKind::EdgeY, p.i, p.j};
  }
  return p;
}

std::vector<BasisPath> basis(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<BasisPath> out;
  out.reserve(static_cast<std::size_t>(2 * n * n));
  for (int v = 1; v <= n; ++v) out.push_back(BasisPath::idem(v));
  for (int v = 1; v <= n; ++v) out.push_back(BasisPath::loop(v));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (PathKind k : {PathKind::EdgeX, PathKind::EdgeY, PathKind::EdgeXStar,
                         PathKind::EdgeYStar})
        out.push_back({k, a, b});
  return out;
}

std::vector<BasisPath> hom_basis(int i, int j) {
  if (i == j) return {BasisPath::idem(i), BasisPath::loop(i)};
  if (i < j)
    return {{PathKind::EdgeX, i, j}, {PathKind::EdgeY, i, j}};
  return {{PathKind::EdgeXStar, j, i}, {PathKind::EdgeYStar, j, i}};
}

AlgebraElement multiply_paths(const BasisPath& a, const BasisPath& b) {
  if (a.target() != b.source()) return {};
  if (a.kind == PathKind::Idem) return AlgebraElement::path(b);
  if (b.kind == PathKind::Idem) return AlgebraElement::path(a);
  // Loops kill every non-idempotent on either side.
  if (a.kind == PathKind::Loop || b.kind == PathKind::Loop) return {};
  // Two edges: zero unless a closed zigzag of a dual pair.
  if (a.source() != b.target()) return {};
  if (a.i == b.i && a.j == b.j && b.kind == dual_partner(a).kind)
    return AlgebraElement::path(BasisPath::loop(a.source()));
  return {};
}

AlgebraElement AlgebraElement::path(const BasisPath& p, const Rational& c) {
  AlgebraElement e;
  e.add_term(p, c);
  return e;
}

AlgebraElement AlgebraElement::unit(int n) {
  AlgebraElement e;
  for (int v = 1; v <= n; ++v) e.add_term(BasisPath::idem(v), 1);
  return e;
}

Rational AlgebraElement::coeff(const BasisPath& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::add_term(const BasisPath& p, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement out;
  if (c == 0) return out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [p, c] : b.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [p, c] : b.terms_) out.add_term(p, -c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) {
      AlgebraElement prod = multiply_paths(pa, pb);
      for (const auto& [pp, cp] : prod.terms()) out.add_term(pp, ca * cb * cp);
    }
  return out;
}

bool AlgebraElement::endpoint_pure(int* src, int* tgt) const {
  if (terms_.empty()) return true;
  int s = terms_.begin()->first.source();
  int t = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target() != t) return false;
  if (src) *src = s;
  if (tgt) *tgt = t;
  return true;
}

bool AlgebraElement::homogeneous(const GradingMode& mode, int* deg) const {
  if (terms_.empty()) return true;
  int d = degree(terms_.begin()->first, mode);
  for (const auto& [p, c] : terms_)
    if (degree(p, mode) != d) return false;
  if (deg) *deg = d;
  return true;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << p.to_string();
  }
  return os.str();
}

}  // namespace zigzag
