// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cdg/pipeline.hpp"
#include "cdg/suites.hpp"

#ifndef CDG_DATA_DIR
#define CDG_DATA_DIR "data"
#endif

using namespace cdg;

namespace {

struct Line {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string secs(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << s << "s";
  return o.str();
}

std::string graph_text(const std::vector<std::vector<u64>>& comps) {
  std::string s;
  for (const auto& c : comps) s += primes_string(c);
  return s;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Line()>& f) {
    Line l;
    try {
      l = f();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    failures += !l.ok;
    std::cout << (l.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << l.detail << std::endl;
  };

  std::vector<CorpusEntry> corpus;
  double corpus_s = 0;
  {
    auto t = std::chrono::steady_clock::now();
    for (const auto& r : read_recipe_file(std::string(CDG_DATA_DIR) + "/corpus_default.txt"))
      corpus.push_back(analyze_recipe(r));
    corpus = sorted_by_name(std::move(corpus));
    corpus_s = seconds_since(t);
  }

  report(1, "Zsigmondy exceptions over a <= 50, n <= 24", [] {
    auto t = std::chrono::steady_clock::now();
    std::vector<std::pair<u64, u64>> found;
    for (u64 a = 2; a <= 50; ++a)
      for (u64 n = 1; n <= 24; ++n)
        if (!zsigmondy_ppd(a, n)) found.emplace_back(a, n);
    const double scan = seconds_since(t);
    std::vector<std::pair<u64, u64>> stated, degenerate;
    for (auto [a, n] : found) (n == 1 ? degenerate : stated).emplace_back(a, n);
    std::vector<std::pair<u64, u64>> expected;
    for (u64 a = 2; a <= 50; ++a)
      for (u64 n = 2; n <= 24; ++n)
        if (zsigmondy_statement_exception(a, n)) expected.emplace_back(a, n);
    auto brute = suite_zsigmondy(50, 24);
    std::string list;
    for (auto [a, n] : stated) list += "(" + std::to_string(a) + "," + std::to_string(n) + ")";
    const bool ok = stated == expected && degenerate == std::vector<std::pair<u64, u64>>{{2, 1}} &&
                    brute.violations == 0 && scan < 1.0;
    return Line{ok, list + " plus degenerate (2,1); brute-force agreement " + std::to_string(brute.instances - brute.violations) +
                        "/" + std::to_string(brute.instances) + "; scan " + secs(scan)};
  });

  report(2, "Palfy condition over the corpus", [&] {
    auto t = std::chrono::steady_clock::now();
    auto s = suite_palfy("default", corpus);
    const double el = corpus_s + seconds_since(t);
    const std::size_t solvable = s.params["solvable_groups"].get<std::size_t>();
    const BigInt hi(s.params["max_order"].get<std::string>()), lo(s.params["min_order"].get<std::string>());
    const bool ok = s.outcome() == Outcome::pass && solvable >= 25 && lo >= 1 && hi <= 20000 && el < 120;
    return Line{ok, std::to_string(solvable) + " solvable groups, orders " + big_string(lo) + ".." + big_string(hi) +
                        ", " + std::to_string(s.violations) + " violations, " + secs(el)};
  });

  report(3, "Diameter bound over the corpus", [&] {
    auto s = suite_diameter("default", corpus);
    return Line{s.outcome() == Outcome::pass,
                std::to_string(s.instances) + " groups, " + std::to_string(s.violations) + " violations"};
  });

  report(4, "SL(2,3) fixture", [] {
    auto t = std::chrono::steady_clock::now();
    AnalysisResult r = analyze_named("sl23");
    const double el = seconds_since(t);
    const auto& v = *r.verdict;
    const bool cd = r.degrees->multiplicities() == std::map<u64, u64>{{1, 3}, {2, 3}, {3, 1}} &&
                    r.degrees->sum_of_squares() == 24;
    const bool comps = v.components == std::vector<std::vector<u64>>{{2}, {3}} && !v.connected;
    const bool branch = v.theorem_c && v.theorem_c->branch == 1 && v.theorem_c->outcome == Outcome::pass;
    return Line{cd && comps && branch && el < 1.0,
                "cd " + r.degrees->to_string() + ", components " + graph_text(v.components) + ", branch " +
                    (v.theorem_c && v.theorem_c->branch == 1 ? "(i)" : "?") + ", " + secs(el)};
  });

  report(5, "Non-fully-ramified bound and form/character agreement", [&] {
    auto s = suite_ramification("default", corpus);
    const auto b = s.summary["bound_instances"].get<std::size_t>();
    const auto o = s.summary["oracle_instances"].get<std::size_t>();
    return Line{s.outcome() == Outcome::pass && b > 0 && o > 0,
                std::to_string(b) + " bound instances, " + std::to_string(o) + " oracle instances (" +
                    std::to_string(s.summary["characters_compared"].get<std::size_t>()) + " characters), " +
                    std::to_string(s.violations) + " violations"};
  });

  report(6, "Hall conjugate equivalence (a)<=>(b)<=>(c)", [] {
    auto t = std::chrono::steady_clock::now();
    auto s = suite_semilinear0({8, 16, 27, 64, 81}, 2, 15, 50, 0);
    const double el = seconds_since(t);
    return Line{s.outcome() == Outcome::pass && el < 300,
                std::to_string(s.summary["exhaustive_instances"].get<std::size_t>()) + " exhaustive + " +
                    std::to_string(s.summary["sampled_instances"].get<std::size_t>()) + " sampled at 2^15, " +
                    std::to_string(s.violations) + " violations, " + secs(el)};
  });

  report(7, "Module lemmas over q^m <= 4096", [] {
    auto s = suite_modules(4096);
    const auto inst = s.summary["instances"].get<std::size_t>();
    const auto runs = s.summary["matrix_runs"].get<std::size_t>();
    const auto dis = s.summary["disagreements"].get<std::size_t>();
    return Line{s.outcome() == Outcome::pass && inst > 0 && dis == 0,
                std::to_string(inst) + " instances, " + std::to_string(s.violations) + " counterexamples, " +
                    std::to_string(runs) + " matrix cross-checks, " + std::to_string(dis) + " disagreements"};
  });

  report(8, "Clifford degrees equal oracle degrees", [&] {
    auto s = suite_clifford("default", corpus);
    bool has1200 = false;
    for (const auto& rec : s.records) has1200 = has1200 || rec["params"]["order"] == "1200";
    return Line{s.outcome() == Outcome::pass && has1200,
                std::to_string(s.instances) + " structured groups" + (has1200 ? " (incl. order 1200)" : "") + ", " +
                    std::to_string(s.violations) + " mismatches"};
  });

  report(9, "Minimal diameter-three example via 'analyze --named lewis'", [] {
    auto t = std::chrono::steady_clock::now();
    AnalysisResult r = analyze_named("lewis");
    const double el = seconds_since(t);
    const PrimeGraph& g = *r.graph;
    GraphMetrics m = metrics(g);
    const auto& v = *r.verdict;
    bool close = true;
    for (u64 w : g.vertices()) {
      auto d = distance(g, m, 2, w);
      close = close && d && *d <= 2;
    }
    const BigInt want = big_pow(2, 45) * (big_pow(2, 15) - 1) * 15;
    const bool verts = g.vertices() == std::vector<u64>{2, 3, 5, 7, 31, 151};
    const bool diam = m.diameter && *m.diameter == 3;
    const bool split = v.pi1 && v.pi2 && *v.pi1 == std::vector<u64>{2, 7, 31, 151} && *v.pi2 == std::vector<u64>{3, 5} &&
                       v.pi1->size() >= (std::size_t{1} << v.pi2->size());
    const bool sq = r.degrees->sum_of_squares() == want;
    return Line{verts && diam && close && split && sq && el < 300,
                "vertices " + primes_string(g.vertices()) + ", diameter " + (m.diameter ? std::to_string(*m.diameter) : "inf") +
                    ", pi1 " + (v.pi1 ? primes_string(*v.pi1) : "-") + ", pi2 " + (v.pi2 ? primes_string(*v.pi2) : "-") +
                    ", sum d^2 = " + big_string(r.degrees->sum_of_squares()) + (sq ? " (exact)" : " (WRONG)") + ", " + secs(el)};
  });

  report(10, "Minimal order search over bounds 2^15..2^60", [] {
    auto t = std::chrono::steady_clock::now();
    auto s = suite_minimal_order(15, 60);
    const double el = seconds_since(t);
    return Line{s.outcome() == Outcome::pass && el < 10,
                std::to_string(s.instances) + " bounds, all (2, 15, 15) with order " +
                    s.summary["expected_order"].get<std::string>() + ", " + std::to_string(s.violations) +
                    " deviations, " + secs(el)};
  });

  report(11, "Corpus lemma checks", [&] {
    auto s = suite_corpus_theorems("default", corpus);
    std::string detail;
    bool ok = s.outcome() == Outcome::pass;
    for (const char* name : {"zuccari", "brodkey", "unique_noncentral_core", "delta_equals_delta_mod_center"}) {
      std::size_t pass = 0, fail = 0;
      for (const auto& rec : s.records) {
        if (rec["lemma"] != name) continue;
        (rec["holds"].get<bool>() ? pass : fail)++;
      }
      ok = ok && fail == 0 && pass > 0;
      detail += std::string(detail.empty() ? "" : ", ") + name + " " + std::to_string(pass) + "/" + std::to_string(pass + fail);
    }
    return Line{ok, detail + "; " + std::to_string(s.violations) + " violations"};
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
