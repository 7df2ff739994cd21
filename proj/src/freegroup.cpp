#include "freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zigzag {

Word reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

int exponent_sum(const Word& w) {
  int e = 0;
  for (int x : w) e += (x > 0) ? 1 : -1;
  return e;
}

std::pair<int, int> letter_counts(const Word& w) {
  Word r = reduce(w);
  int pos = 0, neg = 0;
  for (int x : r) (x > 0 ? pos : neg)++;
  return {pos, neg};
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = reduce(w);
  Word g;
  while (core.size() >= 2 && core.front() == -core.back()) {
    g.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {g, core};
}

bool is_reflection(const Word& w) {
  auto [g, core] = cyclic_reduce(w);
  return core.size() == 1 && core[0] > 0;
}

Word gamma_word(int n) {
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

Tuple hurwitz(int index, int sign, const Tuple& t) {
  if (t.size() < 2 || index < 1 || static_cast<std::size_t>(index) > t.size() - 1)
    throw std::invalid_argument("hurwitz index out of range");
  Tuple out = t;
  const Word a = t[index - 1];
  const Word b = t[index];
  if (sign >= 0) {
    out[index - 1] = reduce(concat(concat(a, b), inverse(a)));
    out[index] = a;
  } else {
    out[index - 1] = b;
    out[index] = reduce(concat(concat(inverse(b), a), b));
  }
  return out;
}

std::vector<Tuple> enumerate_red_gamma(int n, int bound) {
  Tuple start;
  for (int i = 1; i <= n; ++i) start.push_back({i});
  std::set<Tuple> seen{start};
  std::vector<Tuple> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Tuple cur = queue[head];
    for (int i = 1; i <= n - 1; ++i)
      for (int sign : {+1, -1}) {
        Tuple next = hurwitz(i, sign, cur);
        bool ok = true;
        for (const Word& c : next)
          if (static_cast<int>(c.size()) > bound) ok = false;
        if (!ok) continue;
        if (seen.insert(next).second) queue.push_back(next);
      }
  }
  std::vector<Tuple> out(seen.begin(), seen.end());
  return out;
}

namespace {

// Components of the bounded Hurwitz orbit, cached per (rank, cap).  Entries
// are never removed, so returned references stay valid.
const std::set<Word>& reflection_set(int n, int cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::set<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({n, cap});
  if (fresh)
    for (const Tuple& t : enumerate_red_gamma(n, cap))
      for (const Word& c : t) it->second.insert(c);
  return it->second;
}

}  // namespace

std::vector<Word> enumerate_reflections(int n, int max_len) {
  const std::set<Word>& s = reflection_set(n, max_len);
  std::vector<Word> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return v;
}

Tri is_gamma_reflection(const Word& w_in, int n, int bound) {
  Word w = reduce(w_in);
  if (!is_reflection(w)) return Tri::False;
  for (int x : w)
    if (std::abs(x) > n) throw std::invalid_argument("letter exceeds rank");
  int cap = std::max(bound, static_cast<int>(w.size())) + 2;
  return reflection_set(n, cap).count(w) ? Tri::True : Tri::False;
}

std::vector<Word> enumerate_simples(int n, int bound) {
  std::set<Word> out;
  for (const Tuple& t : enumerate_red_gamma(n, bound)) {
    Word prefix;
    out.insert(prefix);
    for (const Word& r : t) {
      prefix = concat(prefix, r);
      out.insert(prefix);
    }
  }
  std::vector<Word> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return v;
}

namespace {

// Coordinates of the image in Z^n; each reflection conjugate to s_i maps to
// the i-th unit vector, so monoid elements have non-negative coordinates.
std::vector<int> abelianization(const Word& w, int n) {
  std::vector<int> v(n, 0);
  for (int x : w) {
    int i = std::abs(x) - 1;
    if (i >= n) throw std::invalid_argument("letter exceeds rank");
    v[i] += (x > 0) ? 1 : -1;
  }
  return v;
}

struct MonoidSearch {
  int n;
  int bound;
  std::vector<Word> refs;
  std::map<Word, Tri> memo;
  long budget{400000};

  Tri run(const Word& w_in) {
    Word w = reduce(w_in);
    int e = exponent_sum(w);
    if (e < 0) return Tri::False;
    if (e == 0) return w.empty() ? Tri::True : Tri::False;
    if (e == 1) return is_gamma_reflection(w, n, bound);
    for (int c : abelianization(w, n))
      if (c < 0) return Tri::False;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    memo[w] = Tri::Unknown;  // cycle guard; overwritten on success
    Tri result = Tri::Unknown;
    for (const Word& r : refs) {
      if (budget-- <= 0) break;
      Word rest = concat(inverse(r), w);
      // Only follow factors that interact with the word at all.
      if (rest.size() >= w.size() + r.size()) continue;
      if (run(rest) == Tri::True) {
        result = Tri::True;
        break;
      }
    }
    memo[w] = result;
    return result;
  }
};

}  // namespace

Tri in_monoid(const Word& w, int n, int bound) {
  MonoidSearch search{n, bound, enumerate_reflections(n, std::max(bound, 3))};
  return search.run(w);
}

Tri divides(const Word& u, const Word& w, int n, int bound) {
  return in_monoid(concat(inverse(u), w), n, bound);
}

Tri is_simple(const Word& w_in, int n, int bound) {
  Word w = reduce(w_in);
  Word rest = concat(inverse(w), gamma_word(n));
  if (w.empty() || rest.empty()) return Tri::True;
  Tri a = in_monoid(w, n, bound);
  if (a == Tri::False) return Tri::False;
  Tri b = in_monoid(rest, n, bound);
  if (b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  // Complement shortcut: gamma-reflections divide gamma on both sides, so if
  // w or its complement w^-1 gamma is one, w is simple.
  if (is_gamma_reflection(w, n, bound) == Tri::True ||
      is_gamma_reflection(rest, n, bound) == Tri::True)
    return Tri::True;
  return Tri::Unknown;
}

std::optional<Word> left_factor(const Word& g_in, int n, int bound) {
  Word g = reduce(g_in);
  if (g.empty()) return Word{};
  Word gamma = gamma_word(n);
  std::vector<Word> simples = enumerate_simples(n, bound);
  std::vector<Word> divisors;
  for (const Word& s : simples) {
    if (s.empty()) continue;
    Tri t = divides(s, g, n, bound);
    if (t == Tri::Unknown) return std::nullopt;
    if (t == Tri::True) divisors.push_back(s);
  }
  if (divisors.empty()) return std::nullopt;
  std::vector<Word> maximal;
  for (const Word& m : divisors) {
    bool all = true;
    for (const Word& s : divisors) {
      if (s == m) continue;
      if (m == gamma) continue;  // every simple divides gamma
      Tri t = divides(s, m, n, bound);
      if (t != Tri::True) {
        all = false;
        break;
      }
    }
    if (all) maximal.push_back(m);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal[0];
}

std::optional<std::vector<Word>> greedy_normal_form(const Word& g_in, int n, int bound) {
  Word rem = reduce(g_in);
  std::vector<Word> factors;
  while (!rem.empty()) {
    if (factors.size() > 64) return std::nullopt;
    if (is_simple(rem, n, bound) == Tri::True) {
      factors.push_back(rem);
      break;
    }
    std::optional<Word> m = left_factor(rem, n, bound);
    if (!m || m->empty()) return std::nullopt;
    factors.push_back(*m);
    rem = concat(inverse(*m), rem);
    if (in_monoid(rem, n, bound) != Tri::True) return std::nullopt;
  }
  return factors;
}

Word parse_word(const std::string& s) {
  Word out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "1" || tok == "e") continue;
    if (tok.empty() || tok[0] != 's')
      throw std::invalid_argument("bad word token: " + tok);
    std::size_t caret = tok.find('^');
    int idx = std::stoi(tok.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1));
    if (idx < 1) throw std::invalid_argument("bad generator index: " + tok);
    int exp = 1;
    if (caret != std::string::npos) {
      exp = std::stoi(tok.substr(caret + 1));
      if (exp != 1 && exp != -1)
        throw std::invalid_argument("exponent must be 1 or -1: " + tok);
    }
    out.push_back(exp > 0 ? idx : -idx);
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int x : w) {
    if (!first) os << ' ';
    first = false;
    os << 's' << std::abs(x);
    if (x < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace zigzag
