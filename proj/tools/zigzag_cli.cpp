// Command-line front end.  Talks to the engine exclusively through the C
// interface in zigzag/zigzag.h; all heavy lifting happens behind it.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <zigzag/zigzag.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
  int n = 2;
  bool n_given = false;
  std::string mode = "tilde";
  int bound = 3;
  unsigned seed = 0;
  std::string format = "text";
  std::string word, target = "all", alpha, beta, suite;
  int maxlen = 0;
};

// RAII helpers for C-interface ownership.
using ComplexPtr = std::unique_ptr<zz_complex, decltype(&zz_complex_free)>;
ComplexPtr wrap(zz_complex* c) { return ComplexPtr(c, zz_complex_free); }

std::string take_string(char* s) {
  std::string out = s ? s : "";
  zz_string_free(s);
  return out;
}

[[noreturn]] void fail(const Options& opt, int code, const std::string& message) {
  if (opt.format == "json") {
    ordered_json err;
    err["error"] = message;
    err["exit"] = code;
    std::fputs((err.dump() + "\n").c_str(), stderr);
  } else {
    std::fprintf(stderr, "error: %s\n", message.c_str());
  }
  std::exit(code);
}

void check(const Options& opt, zz_status st) {
  if (st == ZZ_OK) return;
  // Bad user input maps to a usage error; anything else is an internal fault.
  int code = (st == ZZ_ERR_INVALID_ARGUMENT || st == ZZ_ERR_PARSE) ? 2 : 1;
  fail(opt, code, zz_last_error());
}

// Targets name either one projective ("P2") or the sum of all of them
// ("all").  Complexes start in shift 0, degree 0.
ComplexPtr build_target(const Options& opt) {
  zz_complex* out = nullptr;
  if (opt.target == "all") {
    check(opt, zz_complex_projective(opt.n, opt.mode.c_str(), 1, 0, 0, &out));
    ComplexPtr sum = wrap(out);
    for (int i = 2; i <= opt.n; ++i) {
      zz_complex *p = nullptr, *next = nullptr;
      check(opt, zz_complex_projective(opt.n, opt.mode.c_str(), i, 0, 0, &p));
      ComplexPtr pp = wrap(p);
      check(opt, zz_complex_direct_sum(sum.get(), pp.get(), &next));
      sum = wrap(next);
    }
    return sum;
  }
  if (opt.target.size() < 2 || opt.target[0] != 'P')
    fail(opt, 2, "target must be \"all\" or \"P<vertex>\": " + opt.target);
  int vertex = std::atoi(opt.target.c_str() + 1);
  check(opt, zz_complex_projective(opt.n, opt.mode.c_str(), vertex, 0, 0, &out));
  return wrap(out);
}

void emit(const std::string& payload) { std::printf("%s\n", payload.c_str()); }

int cmd_twist(const Options& opt) {
  ComplexPtr target = build_target(opt);
  zz_complex* twisted = nullptr;
  check(opt, zz_complex_twist(target.get(), opt.word.c_str(), &twisted));
  ComplexPtr result = wrap(twisted);
  char* s = nullptr;
  check(opt, zz_complex_to_json(result.get(), &s));
  emit(take_string(s));
  return 0;
}

int cmd_metric(const Options& opt) {
  char* s = nullptr;
  check(opt, zz_metric_report_json(opt.n, opt.mode.c_str(), opt.alpha.c_str(),
                                   opt.beta.c_str(), opt.bound, &s));
  std::string payload = take_string(s);
  if (opt.format == "json") {
    emit(payload);
    return 0;
  }
  json j = json::parse(payload);
  std::printf("word: %s\nmode: %s\n", j["word"].get<std::string>().c_str(),
              j["mode"].get<std::string>().c_str());
  std::printf("phi: [%d, %d]  clamped: [%d, %d]\n", j["phi"][0].get<int>(),
              j["phi"][1].get<int>(), j["phi_clamped"][0].get<int>(),
              j["phi_clamped"][1].get<int>());
  std::printf("distance (homological): %d\n", j["spread"].get<int>());
  if (j["counterpart_value"].is_null())
    std::printf("%s: n/a (%s)\n", j["counterpart"].get<std::string>().c_str(),
                j["provenance"].get<std::string>().c_str());
  else
    std::printf("%s: %d (%s)\n", j["counterpart"].get<std::string>().c_str(),
                j["counterpart_value"].get<int>(),
                j["provenance"].get<std::string>().c_str());
  return 0;
}

int cmd_hom(const Options& opt) {
  ComplexPtr target = build_target(opt);
  zz_complex *xa = nullptr, *xb = nullptr;
  check(opt, zz_complex_twist(target.get(), opt.alpha.c_str(), &xa));
  ComplexPtr a = wrap(xa);
  check(opt, zz_complex_twist(target.get(), opt.beta.c_str(), &xb));
  ComplexPtr b = wrap(xb);
  char* s = nullptr;
  check(opt, zz_hom_table_json(a.get(), b.get(), &s));
  std::string payload = take_string(s);
  if (opt.format == "json") {
    emit(payload);
    return 0;
  }
  json j = json::parse(payload);
  int h0 = j["hom_min"], h1 = j["hom_max"], i0 = j["int_min"], i1 = j["int_max"];
  std::map<std::pair<int, int>, int> dims;
  for (const auto& cell : j["cells"])
    dims[{cell["hom"].get<int>(), cell["int"].get<int>()}] = cell["dim"].get<int>();
  std::printf("dim Hom(X, Y<k>[h]) by homological degree h (rows) and shift k (columns)\n");
  std::printf("%6s", "");
  for (int k = i0; k <= i1; ++k) std::printf(" %4d", k);
  std::printf("\n");
  for (int h = h0; h <= h1; ++h) {
    std::printf("%6d", h);
    for (int k = i0; k <= i1; ++k) {
      auto it = dims.find({h, k});
      if (it == dims.end() || it->second == 0)
        std::printf(" %4s", ".");
      else
        std::printf(" %4d", it->second);
    }
    std::printf("\n");
  }
  return 0;
}

int cmd_hurwitz(const Options& opt) {
  int depth = opt.maxlen > 0 ? opt.maxlen : 2;
  char* s = nullptr;
  check(opt, zz_hurwitz_orbit_json(opt.n, depth, &s));
  std::string payload = take_string(s);
  if (opt.format == "json") {
    emit(payload);
    return 0;
  }
  ordered_json j = ordered_json::parse(payload);
  for (const auto& node : j["orbit"]) {
    std::string braid = node["braid"].get<std::string>();
    std::printf("braid: %s\n", braid.empty() ? "(identity)" : braid.c_str());
    for (std::size_t i = 0; i < node["reflections"].size(); ++i)
      std::printf("  %zu: %s  %s\n", i + 1,
                  node["reflections"][i].get<std::string>().c_str(),
                  node["complexes"][i].dump().c_str());
  }
  return 0;
}

int cmd_simples(const Options& opt) {
  char* s = nullptr;
  check(opt, zz_simples_json(opt.n, opt.bound, &s));
  std::string payload = take_string(s);
  if (opt.format == "json") {
    emit(payload);
    return 0;
  }
  json j = json::parse(payload);
  for (const auto& item : j["simples"])
    std::printf("%-30s len=%zu certified=%s\n",
                item["word"].get<std::string>().c_str(),
                item["length"].get<std::size_t>(),
                item["is_simple"].get<bool>() ? "yes" : "no");
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> suites;
  if (!opt.suite.empty()) {
    suites.push_back(opt.suite);
  } else {
    char* names = nullptr;
    check(opt, zz_verify_suites(&names));
    std::string all = take_string(names);
    for (std::size_t pos = 0; pos < all.size();) {
      std::size_t nl = all.find('\n', pos);
      if (nl == std::string::npos) nl = all.size();
      suites.push_back(all.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  bool all_passed = true;
  ordered_json reports = ordered_json::array();
  for (const std::string& suite : suites) {
    int passed = 0;
    char* report = nullptr;
    // n = 0 leaves each suite on its own documented rank range.
    check(opt, zz_verify(suite.c_str(), opt.n_given ? opt.n : 0, opt.maxlen,
                         opt.bound, opt.seed, /*threads=*/0, &passed, &report));
    std::string payload = take_string(report);
    all_passed = all_passed && passed;
    if (opt.format == "json") {
      reports.push_back(ordered_json::parse(payload));
    } else {
      json j = json::parse(payload);
      std::printf("%-14s %s  checks=%lld failures=%lld\n", suite.c_str(),
                  passed ? "PASS" : "FAIL", j["checks"].get<long long>(),
                  j["failures"].get<long long>());
      for (const auto& sample : j["failure_samples"])
        std::printf("  %s\n", sample.get<std::string>().c_str());
    }
  }
  if (opt.format == "json") emit(reports.dump());
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag-algebra engine: twists, metrics, and dual-braid combinatorics"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "rank (number of vertices)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { opt.n_given = true; });
    sub->add_option("--mode", opt.mode, "grading mode: tilde, vec, path")
        ->check(CLI::IsMember({"tilde", "vec", "path"}));
    sub->add_option("--bound", opt.bound, "search bound for monoid enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "seed for randomized samples");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  CLI::App* twist = add_common(app.add_subcommand("twist", "apply the twist of a word"));
  twist->add_option("--word", opt.word, "free-group word, e.g. \"s1 s2^-1\"")->required();
  twist->add_option("--target", opt.target, "P<vertex> or \"all\"");

  CLI::App* metric = add_common(app.add_subcommand("metric", "distance between two words"));
  metric->add_option("--alpha", opt.alpha)->required();
  metric->add_option("--beta", opt.beta)->required();

  CLI::App* hom = add_common(
      app.add_subcommand("hom", "hom table between twists of a target"));
  hom->add_option("--alpha", opt.alpha, "word for the source complex")->required();
  hom->add_option("--beta", opt.beta, "word for the target complex")->required();
  hom->add_option("--target", opt.target, "P<vertex> or \"all\"");

  CLI::App* hurwitz = add_common(
      app.add_subcommand("hurwitz", "orbit of the base spherical collection"));
  hurwitz->add_option("--maxlen", opt.maxlen, "braid word depth");

  add_common(app.add_subcommand("simples", "enumerate simple dual-monoid elements"));

  CLI::App* verify = add_common(app.add_subcommand("verify", "run verification suites"));
  verify->add_option("--suite", opt.suite, "single suite name (default: all)");
  verify->add_option("--maxlen", opt.maxlen, "sweep length override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; any parse failure is usage
  }

  if (twist->parsed()) return cmd_twist(opt);
  if (metric->parsed()) return cmd_metric(opt);
  if (hom->parsed()) return cmd_hom(opt);
  if (hurwitz->parsed()) return cmd_hurwitz(opt);
  if (verify->parsed()) return cmd_verify(opt);
  return cmd_simples(opt);
}
