#include "complexes.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace zigzag {

namespace {

bool summand_less(const Summand& a, const Summand& b) { return a.key() < b.key(); }

AlgebraElement entry_or_zero(const std::map<std::pair<int, int>, AlgebraElement>& d,
                             int src, int tgt) {
  auto it = d.find({src, tgt});
  return it == d.end() ? AlgebraElement{} : it->second;
}

}  // namespace

Complex Complex::projective(int rank, const GradingMode& mode, int vertex,
                            int shift, int degree) {
  Complex c(rank, mode);
  c.add_summand(vertex, shift, degree);
  return c;
}

const Summand& Complex::summand(int uid) const {
  for (const Summand& s : summands_)
    if (s.uid == uid) return s;
  throw std::out_of_range("unknown summand uid");
}

AlgebraElement Complex::entry(int src, int tgt) const {
  auto it = diff_.find({src, tgt});
  return it == diff_.end() ? AlgebraElement{} : it->second;
}

int Complex::add_summand(int vertex, int shift, int degree) {
  if (vertex < 1 || vertex > rank_) throw std::invalid_argument("vertex out of range");
  Summand s{next_uid_++, vertex, shift, degree};
  auto pos = std::lower_bound(summands_.begin(), summands_.end(), s, summand_less);
  summands_.insert(pos, s);
  return s.uid;
}

void Complex::set_entry(int src, int tgt, const AlgebraElement& value) {
  if (value.is_zero()) {
    diff_.erase({src, tgt});
    return;
  }
  const Summand& s = summand(src);
  const Summand& t = summand(tgt);
  if (t.degree != s.degree + 1)
    throw std::invalid_argument("differential entry must raise degree by one");
  int vs = 0, vt = 0;
  if (!value.endpoint_pure(&vs, &vt) || vs != s.vertex || vt != t.vertex)
    throw std::invalid_argument("entry endpoints do not match summands");
  int deg = 0;
  if (!value.homogeneous(mode_, &deg) || deg != t.shift - s.shift)
    throw std::invalid_argument("entry is not homogeneous of the right degree");
  diff_[{src, tgt}] = value;
}

int Complex::min_degree() const {
  int d = 0;
  bool first = true;
  for (const Summand& s : summands_) {
    if (first || s.degree < d) d = s.degree;
    first = false;
  }
  return d;
}

int Complex::max_degree() const {
  int d = 0;
  bool first = true;
  for (const Summand& s : summands_) {
    if (first || s.degree > d) d = s.degree;
    first = false;
  }
  return d;
}

int Complex::min_shift() const {
  int d = 0;
  bool first = true;
  for (const Summand& s : summands_) {
    if (first || s.shift < d) d = s.shift;
    first = false;
  }
  return d;
}

int Complex::max_shift() const {
  int d = 0;
  bool first = true;
  for (const Summand& s : summands_) {
    if (first || s.shift > d) d = s.shift;
    first = false;
  }
  return d;
}

void Complex::validate() const {
  std::map<int, const Summand*> by_uid;
  for (const Summand& s : summands_) {
    if (s.vertex < 1 || s.vertex > rank_) throw std::runtime_error("vertex out of range");
    if (!by_uid.emplace(s.uid, &s).second) throw std::runtime_error("duplicate uid");
  }
  for (const auto& [key, val] : diff_) {
    auto si = by_uid.find(key.first);
    auto ti = by_uid.find(key.second);
    if (si == by_uid.end() || ti == by_uid.end())
      throw std::runtime_error("differential references unknown summand");
    const Summand& s = *si->second;
    const Summand& t = *ti->second;
    if (val.is_zero()) throw std::runtime_error("stored zero differential entry");
    if (t.degree != s.degree + 1) throw std::runtime_error("degree step is not one");
    int vs = 0, vt = 0;
    if (!val.endpoint_pure(&vs, &vt) || vs != s.vertex || vt != t.vertex)
      throw std::runtime_error("entry endpoints mismatch");
    int deg = 0;
    if (!val.homogeneous(mode_, &deg) || deg != t.shift - s.shift)
      throw std::runtime_error("entry degree mismatch");
  }
  // d^2 = 0, checked pairwise.
  std::map<std::pair<int, int>, AlgebraElement> square;
  for (const auto& [k1, v1] : diff_)
    for (const auto& [k2, v2] : diff_) {
      if (k1.second != k2.first) continue;
      AlgebraElement prod = v1 * v2;
      if (prod.is_zero()) continue;
      auto [it, ins] = square.emplace(std::make_pair(k1.first, k2.second), prod);
      if (!ins) it->second = it->second + prod;
    }
  for (const auto& [k, v] : square)
    if (!v.is_zero()) throw std::runtime_error("differential does not square to zero");
}

Complex Complex::shifted(int hom, int internal) const {
  Complex out(rank_, mode_);
  out.next_uid_ = next_uid_;
  for (const Summand& s : summands_)
    out.summands_.push_back({s.uid, s.vertex, s.shift + internal, s.degree - hom});
  std::sort(out.summands_.begin(), out.summands_.end(), summand_less);
  Rational sign = (hom % 2 == 0) ? 1 : -1;
  for (const auto& [k, v] : diff_) out.diff_.emplace(k, v.scaled(sign));
  return out;
}

Complex Complex::canonicalized() const {
  Complex out(rank_, mode_);
  std::map<int, int> remap;
  for (const Summand& s : summands_) remap[s.uid] = out.add_summand(s.vertex, s.shift, s.degree);
  for (const auto& [k, v] : diff_) out.diff_[{remap[k.first], remap[k.second]}] = v;
  return out;
}

Complex Complex::minimized() const {
  std::map<int, Summand> live;
  for (const Summand& s : summands_) live[s.uid] = s;
  std::map<std::pair<int, int>, AlgebraElement> d = diff_;

  for (;;) {
    // Deterministic pivot: the canonically least entry whose idempotent
    // coefficient is nonzero.
    const std::pair<int, int>* pivot = nullptr;
    std::pair<std::tuple<int, int, int, int>, std::tuple<int, int, int, int>> best;
    Rational lambda = 0;
    for (const auto& [k, v] : d) {
      const Summand& s = live.at(k.first);
      Rational l = v.coeff(BasisPath::idem(s.vertex));
      if (l == 0) continue;
      auto cand = std::make_pair(s.key(), live.at(k.second).key());
      if (pivot == nullptr || cand < best) {
        pivot = &k;
        best = cand;
        lambda = l;
      }
    }
    if (pivot == nullptr) break;

    const int suid = pivot->first;
    const int tuid = pivot->second;
    const Summand& s = live.at(suid);
    const AlgebraElement a = d.at(*pivot);
    Rational mu = a.coeff(BasisPath::loop(s.vertex));
    AlgebraElement a_inv =
        AlgebraElement::path(BasisPath::idem(s.vertex), 1 / lambda) +
        AlgebraElement::path(BasisPath::loop(s.vertex), -mu / (lambda * lambda));

    std::vector<std::pair<int, AlgebraElement>> into_t, out_of_s;
    for (const auto& [k, v] : d) {
      if (k.second == tuid && k.first != suid) into_t.emplace_back(k.first, v);
      if (k.first == suid && k.second != tuid) out_of_s.emplace_back(k.second, v);
    }
    for (const auto& [u, bu] : into_t)
      for (const auto& [v, cv] : out_of_s) {
        AlgebraElement upd = entry_or_zero(d, u, v) - bu * a_inv * cv;
        if (upd.is_zero())
          d.erase({u, v});
        else
          d[{u, v}] = upd;
      }
    for (auto it = d.begin(); it != d.end();) {
      if (it->first.first == suid || it->first.second == suid ||
          it->first.first == tuid || it->first.second == tuid)
        it = d.erase(it);
      else
        ++it;
    }
    live.erase(suid);
    live.erase(tuid);
  }

  Complex out(rank_, mode_);
  std::vector<Summand> order;
  order.reserve(live.size());
  for (const auto& [uid, s] : live) order.push_back(s);
  std::sort(order.begin(), order.end(), summand_less);
  std::map<int, int> remap;
  for (const Summand& s : order) remap[s.uid] = out.add_summand(s.vertex, s.shift, s.degree);
  for (const auto& [k, v] : d) out.diff_[{remap.at(k.first), remap.at(k.second)}] = v;
  return out;
}

nlohmann::ordered_json Complex::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "zigzag-complex";
  j["version"] = 1;
  j["rank"] = rank_;
  j["mode"] = mode_.name();
  if (mode_.kind == GradingMode::Kind::OrientCustom) {
    nlohmann::ordered_json o = nlohmann::ordered_json::array();
    for (const auto& [pair, fwd] : mode_.orientation)
      o.push_back({pair.first, pair.second, fwd.first, fwd.second});
    j["orientation"] = o;
  }
  nlohmann::ordered_json summands = nlohmann::ordered_json::array();
  for (const Summand& s : summands_)
    summands.push_back({{"uid", s.uid},
                        {"vertex", s.vertex},
                        {"shift", s.shift},
                        {"degree", s.degree}});
  j["summands"] = summands;
  nlohmann::ordered_json diff = nlohmann::ordered_json::array();
  for (const auto& [k, v] : diff_) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [p, c] : v.terms())
      terms.push_back({{"path", p.to_string()},
                       {"num", boost::multiprecision::numerator(c).str()},
                       {"den", boost::multiprecision::denominator(c).str()}});
    diff.push_back({{"src", k.first}, {"tgt", k.second}, {"entry", terms}});
  }
  j["differential"] = diff;
  return j;
}

Complex Complex::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "zigzag-complex")
    throw std::invalid_argument("not a zigzag complex document");
  GradingMode mode;
  std::string mode_name = j.at("mode").get<std::string>();
  if (mode_name == "custom") {
    mode.kind = GradingMode::Kind::OrientCustom;
    for (const auto& o : j.at("orientation"))
      mode.orientation[{o.at(0).get<int>(), o.at(1).get<int>()}] = {
          o.at(2).get<bool>(), o.at(3).get<bool>()};
  } else {
    mode = GradingMode::by_name(mode_name);
  }
  Complex c(j.at("rank").get<int>(), mode);
  std::map<int, int> remap;
  for (const auto& s : j.at("summands")) {
    int uid = c.add_summand(s.at("vertex").get<int>(), s.at("shift").get<int>(),
                            s.at("degree").get<int>());
    if (!remap.emplace(s.at("uid").get<int>(), uid).second)
      throw std::invalid_argument("duplicate summand uid");
  }
  for (const auto& e : j.at("differential")) {
    AlgebraElement val;
    for (const auto& t : e.at("entry")) {
      Rational num(t.at("num").get<std::string>());
      Rational den(t.at("den").get<std::string>());
      if (den == 0) throw std::invalid_argument("zero denominator");
      val.add_term(BasisPath::parse(t.at("path").get<std::string>()), num / den);
    }
    c.set_entry(remap.at(e.at("src").get<int>()), remap.at(e.at("tgt").get<int>()), val);
  }
  c.validate();
  return c;
}

std::string Complex::serialize() const { return canonicalized().to_json().dump(); }

Complex direct_sum(const Complex& a, const Complex& b) {
  if (a.rank() != b.rank() || !(a.mode() == b.mode()))
    throw std::invalid_argument("direct sum needs matching rank and mode");
  Complex out(a.rank(), a.mode());
  std::map<int, int> ra, rb;
  for (const Summand& s : a.summands()) ra[s.uid] = out.add_summand(s.vertex, s.shift, s.degree);
  for (const Summand& s : b.summands()) rb[s.uid] = out.add_summand(s.vertex, s.shift, s.degree);
  for (const auto& [k, v] : a.differential()) out.set_entry(ra[k.first], ra[k.second], v);
  for (const auto& [k, v] : b.differential()) out.set_entry(rb[k.first], rb[k.second], v);
  return out;
}

void validate_chain_map(const Complex& x, const Complex& y, const ChainMap& f) {
  Complex z = y.shifted(f.hom_shift, f.int_shift);
  std::map<std::pair<int, int>, AlgebraElement> resid;
  for (const auto& [k, v] : f.entries) {
    const Summand& s = x.summand(k.first);
    const Summand& t = z.summand(k.second);
    if (v.is_zero()) continue;
    if (t.degree != s.degree) throw std::runtime_error("chain map component off-degree");
    int vs = 0, vt = 0;
    if (!v.endpoint_pure(&vs, &vt) || vs != s.vertex || vt != t.vertex)
      throw std::runtime_error("chain map endpoints mismatch");
    int deg = 0;
    if (!v.homogeneous(x.mode(), &deg) || deg != t.shift - s.shift)
      throw std::runtime_error("chain map entry degree mismatch");
  }
  // d_Z f - f-after-d_X must vanish.
  auto acc = [&resid](int a, int b, const AlgebraElement& v) {
    if (v.is_zero()) return;
    auto [it, ins] = resid.emplace(std::make_pair(a, b), v);
    if (!ins) it->second = it->second + v;
  };
  for (const auto& [dk, dv] : x.differential())
    for (const auto& [fk, fv] : f.entries)
      if (dk.second == fk.first) acc(dk.first, fk.second, dv * fv);
  for (const auto& [fk, fv] : f.entries)
    for (const auto& [dk, dv] : z.differential())
      if (fk.second == dk.first) acc(fk.first, dk.second, fv.scaled(-1) * dv);
  for (const auto& [k, v] : resid)
    if (!v.is_zero()) throw std::runtime_error("not a chain map");
}

Complex cone(const Complex& x, const Complex& y, const ChainMap& f) {
  if (f.hom_shift != 0 || f.int_shift != 0)
    throw std::invalid_argument("cone expects an unshifted chain map");
  Complex out(x.rank(), x.mode());
  std::map<int, int> rx, ry;
  for (const Summand& s : x.summands())
    rx[s.uid] = out.add_summand(s.vertex, s.shift, s.degree - 1);
  for (const Summand& s : y.summands())
    ry[s.uid] = out.add_summand(s.vertex, s.shift, s.degree);
  for (const auto& [k, v] : x.differential())
    out.set_entry(rx[k.first], rx[k.second], -v);
  for (const auto& [k, v] : y.differential()) out.set_entry(ry[k.first], ry[k.second], v);
  for (const auto& [k, v] : f.entries)
    if (!v.is_zero()) out.set_entry(rx[k.first], ry[k.second], v);
  return out;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  ChainMap out;
  out.hom_shift = f.hom_shift + g.hom_shift;
  out.int_shift = f.int_shift + g.int_shift;
  for (const auto& [fk, fv] : f.entries)
    for (const auto& [gk, gv] : g.entries) {
      if (fk.second != gk.first) continue;
      AlgebraElement prod = fv * gv;
      if (prod.is_zero()) continue;
      auto [it, ins] = out.entries.emplace(std::make_pair(fk.first, gk.second), prod);
      if (!ins) it->second = it->second + prod;
    }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
  return out;
}

namespace {

using Coord = std::tuple<int, int, BasisPath>;  // (src uid, tgt uid, basis path)

// Component coordinates for maps X -> Z with a fixed degree offset
// (0 for chain maps, -1 for homotopies).
struct CoordSpace {
  std::vector<Coord> coords;
  std::map<Coord, std::size_t> index;

  static CoordSpace build(const Complex& x, const Complex& z, int offset) {
    CoordSpace cs;
    for (const Summand& s : x.summands())
      for (const Summand& t : z.summands()) {
        if (t.degree != s.degree + offset) continue;
        for (const BasisPath& b : hom_basis(s.vertex, t.vertex))
          if (degree(b, x.mode()) == t.shift - s.shift)
            cs.coords.emplace_back(s.uid, t.uid, b);
      }
    for (std::size_t k = 0; k < cs.coords.size(); ++k) cs.index[cs.coords[k]] = k;
    return cs;
  }
};

struct HomSystem {
  const Complex& x;
  Complex z;
  CoordSpace maps;   // candidate chain-map components
  CoordSpace htpy;   // homotopy components

  HomSystem(const Complex& x_in, const Complex& y, int hom, int internal)
      : x(x_in), z(y.shifted(hom, internal)) {
    maps = CoordSpace::build(x, z, 0);
    htpy = CoordSpace::build(x, z, -1);
  }

  // Linear conditions expressing d_X f = f d_Z, in map coordinates.
  SparseMatrix chain_conditions() const {
    std::map<Coord, SparseVec> rows;
    for (std::size_t col = 0; col < maps.coords.size(); ++col) {
      const auto& [tu, uu, b] = maps.coords[col];
      for (const auto& [dk, dv] : x.differential()) {
        if (dk.second != tu) continue;
        AlgebraElement prod = dv * AlgebraElement::path(b);
        for (const auto& [p, c] : prod.terms()) rows[{dk.first, uu, p}][col] += c;
      }
      for (const auto& [dk, dv] : z.differential()) {
        if (dk.first != uu) continue;
        AlgebraElement prod = AlgebraElement::path(b) * dv;
        for (const auto& [p, c] : prod.terms()) rows[{tu, dk.second, p}][col] -= c;
      }
    }
    SparseMatrix m(maps.coords.size());
    for (auto& [key, row] : rows) {
      for (auto it = row.begin(); it != row.end();)
        it = (it->second == 0) ? row.erase(it) : std::next(it);
      if (!row.empty()) m.rows.push_back(std::move(row));
    }
    return m;
  }

  // Columns: image of each homotopy component under h -> d_X h + h d_Z,
  // written in map coordinates.
  std::vector<SparseVec> homotopy_columns() const {
    std::vector<SparseVec> cols;
    cols.reserve(htpy.coords.size());
    for (const auto& [su, wu, b] : htpy.coords) {
      SparseVec col;
      for (const auto& [dk, dv] : x.differential()) {
        if (dk.second != su) continue;
        AlgebraElement prod = dv * AlgebraElement::path(b);
        for (const auto& [p, c] : prod.terms())
          col[maps.index.at({dk.first, wu, p})] += c;
      }
      for (const auto& [dk, dv] : z.differential()) {
        if (dk.first != wu) continue;
        AlgebraElement prod = AlgebraElement::path(b) * dv;
        for (const auto& [p, c] : prod.terms())
          col[maps.index.at({su, dk.second, p})] += c;
      }
      for (auto it = col.begin(); it != col.end();)
        it = (it->second == 0) ? col.erase(it) : std::next(it);
      if (!col.empty()) cols.push_back(std::move(col));
    }
    return cols;
  }

  ChainMap to_chain_map(const SparseVec& v, int hom, int internal) const {
    ChainMap f;
    f.hom_shift = hom;
    f.int_shift = internal;
    for (const auto& [k, c] : v) {
      const auto& [su, tu, b] = maps.coords[k];
      auto [it, ins] = f.entries.emplace(std::make_pair(su, tu), AlgebraElement{});
      it->second.add_term(b, c);
    }
    return f;
  }

  SparseVec to_vector(const ChainMap& f) const {
    SparseVec v;
    for (const auto& [k, val] : f.entries)
      for (const auto& [p, c] : val.terms()) v[maps.index.at({k.first, k.second, p})] += c;
    for (auto it = v.begin(); it != v.end();)
      it = (it->second == 0) ? v.erase(it) : std::next(it);
    return v;
  }
};

}  // namespace

HomSpace hom_space(const Complex& x, const Complex& y, int hom, int internal) {
  HomSystem sys(x, y, hom, internal);
  HomSpace out;
  if (sys.maps.coords.empty()) return out;

  std::vector<SparseVec> kernel = nullspace(sys.chain_conditions());
  SparseReducer reducer;
  for (auto& col : sys.homotopy_columns()) reducer.add(std::move(col));
  for (const auto& v : kernel) {
    out.cycle_basis.push_back(sys.to_chain_map(v, hom, internal));
    if (reducer.add(v)) {
      out.basis.push_back(out.cycle_basis.back());
      ++out.dimension;
    }
  }
  return out;
}

int dim_hom(const Complex& x, const Complex& y, int hom, int internal) {
  HomSystem sys(x, y, hom, internal);
  if (sys.maps.coords.empty()) return 0;
  std::size_t nullity = sys.maps.coords.size() - rank(sys.chain_conditions());
  SparseMatrix h(sys.maps.coords.size());
  h.rows = sys.homotopy_columns();  // rank is transpose-invariant
  return static_cast<int>(nullity - rank(h));
}

bool is_nullhomotopic(const Complex& x, const Complex& y, const ChainMap& f) {
  HomSystem sys(x, y, f.hom_shift, f.int_shift);
  SparseVec v = sys.to_vector(f);
  SparseReducer reducer;
  for (auto& col : sys.homotopy_columns()) reducer.add(std::move(col));
  return !reducer.independent(std::move(v));
}

HomTable hom_table(const Complex& x, const Complex& y) {
  HomTable t;
  if (x.empty() || y.empty()) return t;
  int maxdeg = x.mode().max_degree();
  t.hom_min = y.min_degree() - x.max_degree();
  t.hom_max = y.max_degree() - x.min_degree();
  t.int_min = x.min_shift() - y.max_shift();
  t.int_max = x.max_shift() - y.min_shift() + maxdeg;
  for (int h = t.hom_min; h <= t.hom_max; ++h)
    for (int m = t.int_min; m <= t.int_max; ++m) {
      int d = dim_hom(x, y, h, m);
      if (d > 0) t.dims[{h, m}] = d;
    }
  return t;
}

bool is_isomorphic(const Complex& x, const Complex& y, unsigned seed) {
  Complex a = x.minimized();
  Complex b = y.minimized();
  if (a.empty() || b.empty()) return a.empty() && b.empty();

  // Graded multisets of summands must match.
  std::map<std::tuple<int, int, int>, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (const Summand& s : a.summands())
    groups[{s.degree, s.vertex, s.shift}].first.push_back(s.uid);
  for (const Summand& s : b.summands())
    groups[{s.degree, s.vertex, s.shift}].second.push_back(s.uid);
  for (const auto& [k, g] : groups)
    if (g.first.size() != g.second.size()) return false;
  if (a.serialize() == b.serialize()) return true;

  HomSystem sys(a, b, 0, 0);
  if (sys.maps.coords.empty()) return false;
  std::map<std::size_t, SparseVec> ech = sparse_echelon(sys.chain_conditions());
  if (ech.size() == sys.maps.coords.size()) return false;  // only the zero map

  // An isomorphism of minimal complexes is exactly a chain map whose scalar
  // (idempotent-component) blocks between matching summand groups are all
  // invertible.  Record where those components live in map coordinates.
  struct Block {
    std::size_t rows, cols;
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // coord -> flat slot
  };
  std::vector<Block> blocks;
  for (const auto& [key, g] : groups) {
    Block blk{g.first.size(), g.second.size(), {}};
    int vertex = std::get<1>(key);
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) {
        auto it = sys.maps.index.find({g.first[r], g.second[c], BasisPath::idem(vertex)});
        if (it != sys.maps.index.end()) blk.cells.push_back({it->second, r * blk.cols + c});
      }
    blocks.push_back(std::move(blk));
  }

  // Sample chain maps straight from the echelon form: random values on the
  // free columns, one back substitution per draw.  The kernel basis is never
  // materialized; on large complexes it runs to thousands of vectors.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  const int attempts = 64;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    SparseVec v;
    for (std::size_t c = 0; c < sys.maps.coords.size(); ++c)
      if (!ech.count(c))
        if (int r = dist(rng)) v[c] = r;
    for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
      Rational s = 0;
      for (auto jt = std::next(it->second.begin()); jt != it->second.end(); ++jt) {
        auto hit = v.find(jt->first);
        if (hit != v.end()) s += jt->second * hit->second;
      }
      if (s != 0) v[it->first] = -s;
    }
    bool ok = true;
    for (const Block& blk : blocks) {
      Matrix m(blk.rows, blk.cols);
      for (const auto& [coord, slot] : blk.cells) {
        auto hit = v.find(coord);
        if (hit != v.end()) m.a[slot] = hit->second;
      }
      if (rank(std::move(m)) != blk.rows) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace zigzag
