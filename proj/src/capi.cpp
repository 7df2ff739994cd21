#include "zigzag/zigzag.h"

#include "complexes.hpp"
#include "freegroup.hpp"
#include "metrics.hpp"
#include "spherical.hpp"
#include "twists.hpp"
#include "verify.hpp"

#include <nlohmann/json.hpp>

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

using nlohmann::ordered_json;

struct zz_complex {
  zigzag::Complex value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Translate C++ failures into status codes without leaking exceptions
// across the C boundary.
template <typename Fn>
zz_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ZZ_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ZZ_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return ZZ_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return ZZ_ERR_INTERNAL;
  }
}

zz_status need(bool ok, const char* message) {
  if (ok) return ZZ_OK;
  g_last_error = message;
  return ZZ_ERR_INVALID_ARGUMENT;
}

ordered_json word_json(const zigzag::Word& w) { return zigzag::format_word(w); }

}  // namespace

extern "C" {

const char* zz_last_error(void) { return g_last_error.c_str(); }

void zz_complex_free(zz_complex* c) { delete c; }
void zz_string_free(char* s) { delete[] s; }

zz_status zz_complex_projective(int n, const char* mode, int vertex, int shift,
                                int degree, zz_complex** out) {
  if (zz_status st = need(out && mode, "null argument")) return st;
  return guarded([&] {
    auto m = zigzag::GradingMode::by_name(mode);
    *out = new zz_complex{zigzag::Complex::projective(n, m, vertex, shift, degree)};
    return ZZ_OK;
  });
}

zz_status zz_complex_from_json(const char* json, zz_complex** out) {
  if (zz_status st = need(out && json, "null argument")) return st;
  return guarded([&] {
    *out = new zz_complex{zigzag::Complex::from_json(nlohmann::json::parse(json))};
    return ZZ_OK;
  });
}

zz_status zz_complex_to_json(const zz_complex* c, char** out) {
  if (zz_status st = need(out && c, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(c->value.serialize());
    return ZZ_OK;
  });
}

zz_status zz_complex_minimize(const zz_complex* c, zz_complex** out) {
  if (zz_status st = need(out && c, "null argument")) return st;
  return guarded([&] {
    *out = new zz_complex{c->value.minimized()};
    return ZZ_OK;
  });
}

zz_status zz_complex_direct_sum(const zz_complex* a, const zz_complex* b,
                                zz_complex** out) {
  if (zz_status st = need(out && a && b, "null argument")) return st;
  return guarded([&] {
    *out = new zz_complex{zigzag::direct_sum(a->value, b->value)};
    return ZZ_OK;
  });
}

zz_status zz_complex_twist(const zz_complex* c, const char* word, zz_complex** out) {
  if (zz_status st = need(out && c && word, "null argument")) return st;
  return guarded([&] {
    *out = new zz_complex{zigzag::psi(zigzag::parse_word(word), c->value)};
    return ZZ_OK;
  });
}

zz_status zz_complex_is_isomorphic(const zz_complex* a, const zz_complex* b,
                                   unsigned seed, int* iso) {
  if (zz_status st = need(iso && a && b, "null argument")) return st;
  return guarded([&] {
    *iso = zigzag::is_isomorphic(a->value, b->value, seed ? seed : 20260823u) ? 1 : 0;
    return ZZ_OK;
  });
}

zz_status zz_hom_table_json(const zz_complex* a, const zz_complex* b, char** out) {
  if (zz_status st = need(out && a && b, "null argument")) return st;
  return guarded([&] {
    zigzag::HomTable t = zigzag::hom_table(a->value, b->value);
    ordered_json j;
    j["hom_min"] = t.hom_min;
    j["hom_max"] = t.hom_max;
    j["int_min"] = t.int_min;
    j["int_max"] = t.int_max;
    j["cells"] = ordered_json::array();
    for (const auto& [k, d] : t.dims)
      j["cells"].push_back({{"hom", k.first}, {"int", k.second}, {"dim", d}});
    *out = dup_string(j.dump());
    return ZZ_OK;
  });
}

zz_status zz_metric_report_json(int n, const char* mode, const char* alpha,
                                const char* beta, int bound, char** out) {
  if (zz_status st = need(out && mode && alpha && beta, "null argument")) return st;
  return guarded([&] {
    zigzag::MetricReport r =
        zigzag::metric_report(zigzag::parse_word(alpha), zigzag::parse_word(beta),
                              zigzag::GradingMode::by_name(mode), n,
                              bound > 0 ? bound : 3);
    ordered_json j;
    j["word"] = zigzag::format_word(r.word);
    j["mode"] = r.mode;
    j["phi"] = {r.phi.first, r.phi.second};
    j["phi_clamped"] = {r.phi_clamped.first, r.phi_clamped.second};
    j["spread"] = r.spread;
    j["counterpart"] = r.counterpart;
    if (r.counterpart_value)
      j["counterpart_value"] = *r.counterpart_value;
    else
      j["counterpart_value"] = nullptr;
    j["provenance"] = r.provenance;
    *out = dup_string(j.dump());
    return ZZ_OK;
  });
}

zz_status zz_hurwitz_orbit_json(int n, int depth, char** out) {
  if (zz_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    ordered_json orbit = ordered_json::array();
    struct Node {
      std::vector<int> braid;
      zigzag::SphericalTuple tup;
    };
    std::vector<Node> queue{{{}, zigzag::base_tuple(n)}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Node cur = queue[head];
      ordered_json item;
      std::string braid;
      for (int b : cur.braid) {
        if (!braid.empty()) braid += ' ';
        braid += 't' + std::to_string(std::abs(b));
        if (b < 0) braid += "^-1";
      }
      item["braid"] = braid;
      item["reflections"] = ordered_json::array();
      item["complexes"] = ordered_json::array();
      for (const auto& e : cur.tup.entries) {
        item["reflections"].push_back(word_json(e.reflection));
        item["complexes"].push_back(ordered_json::parse(e.complex.serialize()));
      }
      orbit.push_back(std::move(item));
      if (static_cast<int>(cur.braid.size()) == depth) continue;
      for (int i = 1; i <= n - 1; ++i)
        for (int sign : {+1, -1})
          queue.push_back({[&] {
                             auto b = cur.braid;
                             b.push_back(sign * i);
                             return b;
                           }(),
                           zigzag::hurwitz_spherical(i, sign, cur.tup)});
    }
    ordered_json j;
    j["n"] = n;
    j["depth"] = depth;
    j["orbit"] = std::move(orbit);
    *out = dup_string(j.dump());
    return ZZ_OK;
  });
}

zz_status zz_simples_json(int n, int bound, char** out) {
  if (zz_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    ordered_json arr = ordered_json::array();
    for (const zigzag::Word& s : zigzag::enumerate_simples(n, bound)) {
      ordered_json item;
      item["word"] = zigzag::format_word(s);
      item["length"] = s.size();
      item["is_simple"] = zigzag::is_simple(s, n, bound) == zigzag::Tri::True;
      arr.push_back(std::move(item));
    }
    ordered_json j;
    j["n"] = n;
    j["bound"] = bound;
    j["simples"] = std::move(arr);
    *out = dup_string(j.dump());
    return ZZ_OK;
  });
}

zz_status zz_verify(const char* suite, int n, int maxlen, int bound, unsigned seed,
                    int threads, int* passed, char** report_json) {
  if (zz_status st = need(suite && passed, "null argument")) return st;
  return guarded([&] {
    zigzag::VerifyOptions opt;
    opt.n = n;
    opt.maxlen = maxlen;
    if (bound > 0) opt.bound = bound;
    if (seed != 0) opt.seed = seed;
    opt.threads = threads;
    zigzag::SuiteResult r = zigzag::run_suite(suite, opt);
    *passed = r.passed ? 1 : 0;
    if (report_json) {
      ordered_json j;
      j["suite"] = r.name;
      j["passed"] = r.passed;
      j["checks"] = r.checks;
      j["failures"] = r.failure_count;
      j["failure_samples"] = r.failures;
      *report_json = dup_string(j.dump());
    }
    return ZZ_OK;
  });
}

zz_status zz_verify_suites(char** out) {
  if (zz_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    std::string s;
    for (const auto& name : zigzag::suite_names()) {
      if (!s.empty()) s += '\n';
      s += name;
    }
    *out = dup_string(s);
    return ZZ_OK;
  });
}

}  // extern "C"
