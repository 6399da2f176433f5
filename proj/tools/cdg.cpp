// cdg: command-line front end. Subcommands analyze, verify, construct, limits, export-dot.
// Reports are JSON on stdout (or --out); one-line summaries go to stderr.
// Exit codes: 0 no failures, 1 some verdict failed, 2 usage/input/scale error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cdg/group_io.hpp"
#include "cdg/pipeline.hpp"
#include "cdg/suites.hpp"

#ifndef CDG_DATA_DIR
#define CDG_DATA_DIR "data"
#endif

namespace {

using namespace cdg;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

/// Runs f(i) for i in [0, n) on up to `jobs` threads. Results are written by index, so the
/// output order does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

std::string corpus_path(const std::string& corpus) {
  if (corpus == "default") return std::string(CDG_DATA_DIR) + "/corpus_default.txt";
  return corpus;
}

std::vector<CorpusEntry> load_corpus(const std::string& corpus, unsigned jobs) {
  auto recipes = read_recipe_file(corpus_path(corpus));
  std::vector<CorpusEntry> entries(recipes.size());
  parallel_for(recipes.size(), jobs, [&](std::size_t i) { entries[i] = analyze_recipe(recipes[i]); });
  return sorted_by_name(std::move(entries));
}

struct InputFlags {
  std::string named, group, recipe, spec, degrees;
  int count() const {
    return !named.empty() + !group.empty() + !recipe.empty() + !spec.empty() + !degrees.empty();
  }
};

void add_input_flags(CLI::App* app, InputFlags& in) {
  app->add_option("--named", in.named, "bundled example id (see 'construct --list')");
  app->add_option("--group", in.group, "permutation group file (.grp)");
  app->add_option("--recipe", in.recipe, "recipe or corpus manifest file");
  app->add_option("--spec", in.spec, "structured Clifford specification file");
  app->add_option("--degrees", in.degrees, "comma separated degree list (graph-only analysis)");
}

DegreeMultiset parse_degree_list(const std::string& s) {
  std::map<u64, u64> m;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long long d = std::stoull(tok, &pos);
    if (d == 0) throw std::invalid_argument("degree list: zero degree");
    ++m[d];
  }
  if (!m.count(1)) throw std::invalid_argument("degree list: degree 1 missing");
  return DegreeMultiset(DegreeMultiset::unchecked(m).sum_of_squares(), m, Provenance::manual);
}

/// The input digest and the analysis results, sorted by name.
std::pair<json, std::vector<AnalysisResult>> run_inputs(const InputFlags& in, unsigned jobs) {
  json input;
  std::vector<AnalysisResult> results;
  if (!in.named.empty()) {
    input = {{"kind", "named"}, {"id", in.named}, {"digest", fnv1a_hex("named:" + in.named)}};
    results.push_back(analyze_named(in.named));
  } else if (!in.group.empty()) {
    std::string text = slurp(in.group);
    input = {{"kind", "group"}, {"path", in.group}, {"digest", fnv1a_hex(text)}};
    PermGroup g = parse_group(text);
    std::string name = in.group.substr(in.group.find_last_of('/') + 1);
    results.push_back(analyze_explicit(name, g));
  } else if (!in.spec.empty()) {
    std::string text = slurp(in.spec);
    input = {{"kind", "spec"}, {"path", in.spec}, {"digest", fnv1a_hex(text)}};
    results.push_back(analyze_structured(parse_clifford_spec(text)));
  } else if (!in.recipe.empty()) {
    std::string text = slurp(in.recipe);
    input = {{"kind", "recipe"}, {"path", in.recipe}, {"digest", fnv1a_hex(text)}};
    auto recipes = parse_recipes(text);
    results.resize(recipes.size());
    parallel_for(recipes.size(), jobs, [&](std::size_t i) { results[i] = analyze_recipe_input(recipes[i]); });
    std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  } else {
    input = {{"kind", "degrees"}, {"degrees", in.degrees}, {"digest", fnv1a_hex("degrees:" + in.degrees)}};
    AnalysisResult r;
    r.name = "degrees";
    r.kind = "degrees";
    r.degrees = parse_degree_list(in.degrees);
    r.order = r.degrees->group_order();
    r.graph = build_graph(*r.degrees);
    r.verdict = analyze_degrees(*r.degrees);
    results.push_back(std::move(r));
  }
  return {input, std::move(results)};
}

int cmd_analyze(const InputFlags& in, std::uint64_t seed, unsigned jobs, const std::string& out,
                const std::string& dot, bool timings) {
  auto [input, results] = run_inputs(in, jobs);
  json rep = report_header("analyze", seed);
  rep["input"] = input;
  json arr = json::array();
  bool failed = false;
  std::string dots;
  for (const auto& r : results) {
    arr.push_back(to_json(r, timings));
    failed = failed || r.outcome() == Outcome::fail;
    if (r.graph) dots += to_dot(*r.graph, r.name);
    std::cerr << r.name << ": " << to_string(r.outcome());
    if (r.graph) {
      GraphMetrics m = metrics(*r.graph);
      std::cerr << ", " << r.graph->vertices().size() << " vertices, "
                << (m.diameter ? "diameter " + std::to_string(*m.diameter)
                               : std::to_string(m.components.size()) + " component(s)");
    }
    if (!r.error.empty()) std::cerr << " (" << r.error << ")";
    std::cerr << "\n";
  }
  rep["results"] = arr;
  rep["outcome"] = failed ? "fail" : "pass";
  emit(rep.dump(2) + "\n", out);
  if (!dot.empty()) emit(dots, dot);
  return failed ? 1 : 0;
}

struct VerifyFlags {
  std::string suite;
  u64 a_max = 50, n_max = 24, qm_max = 4096;
  std::string corpus = "default";
  std::size_t samples = 50;
  unsigned lo_exp = 15, hi_exp = 60;
};

int cmd_verify(const VerifyFlags& f, std::uint64_t seed, unsigned jobs, const std::string& out, bool timings) {
  std::vector<std::string> suites;
  if (f.suite == "all") suites = suite_names();
  else suites.push_back(f.suite);
  const auto names = suite_names();
  for (const auto& s : suites)
    if (std::find(names.begin(), names.end(), s) == names.end()) throw CLI::ValidationError("unknown suite '" + s + "'");

  std::optional<std::vector<CorpusEntry>> corpus;
  std::string corpus_digest;
  json stage_ms = json::object();
  detail::Stopwatch sw;
  auto need_corpus = [&] {
    if (corpus) return;
    corpus_digest = fnv1a_hex(slurp(corpus_path(f.corpus)));
    corpus = load_corpus(f.corpus, jobs);
    stage_ms["corpus_ms"] = sw.lap_ms();
  };
  json rep = report_header("verify", seed);
  rep["suite"] = f.suite;
  json results = json::array();
  bool failed = false;
  for (const auto& s : suites) {
    SuiteResult r;
    if (is_corpus_suite(s)) need_corpus();
    sw.lap_ms();
    if (s == "zsigmondy") r = suite_zsigmondy(f.a_max, f.n_max);
    else if (s == "palfy") r = suite_palfy(f.corpus, *corpus);
    else if (s == "diameter") r = suite_diameter(f.corpus, *corpus);
    else if (s == "corpus-theorems") r = suite_corpus_theorems(f.corpus, *corpus);
    else if (s == "ramification") r = suite_ramification(f.corpus, *corpus);
    else if (s == "clifford") r = suite_clifford(f.corpus, *corpus);
    else if (s == "sl23") r = suite_sl23();
    else if (s == "lewis") r = suite_lewis();
    else if (s == "minimal-order") r = suite_minimal_order(f.lo_exp, f.hi_exp);
    else if (s == "semilinear0") r = suite_semilinear0({8, 16, 27, 64, 81}, 2, 15, f.samples, seed);
    else if (s == "modules") r = suite_modules(f.qm_max);
    else if (s == "ppd") r = suite_ppd({4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256});
    else if (s == "semilinear1") r = suite_semilinear1({4, 8, 9, 16, 25, 27}, seed);
    stage_ms[s + "_ms"] = sw.lap_ms();
    failed = failed || r.outcome() == Outcome::fail;
    std::cerr << s << ": " << to_string(r.outcome()) << ", " << r.instances << " instances, " << r.violations
              << " violations\n";
    for (const auto& msg : r.failures) std::cerr << "  " << msg << "\n";
    results.push_back(r.to_json());
  }
  json input = {{"suites", suites}};
  std::string digest_src = f.suite + "|" + std::to_string(f.a_max) + "|" + std::to_string(f.n_max) + "|" +
                           std::to_string(f.qm_max) + "|" + std::to_string(f.samples) + "|" +
                           std::to_string(f.lo_exp) + "|" + std::to_string(f.hi_exp);
  if (corpus) {
    input["corpus"] = f.corpus;
    input["corpus_digest"] = corpus_digest;
    digest_src += "|" + corpus_digest;
  }
  input["digest"] = fnv1a_hex(digest_src);
  rep["input"] = input;
  rep["results"] = results;
  rep["outcome"] = failed ? "fail" : "pass";
  if (timings) rep["timings"] = stage_ms;
  emit(rep.dump(2) + "\n", out);
  return failed ? 1 : 0;
}

int cmd_construct(const std::string& named_id, const std::string& recipe_file, const std::string& recipe_name,
                  bool list, const std::string& out) {
  if (list) {
    std::string s;
    for (const auto& id : named_ids()) s += id + "\n";
    emit(s, out);
    return 0;
  }
  auto write = [&](const std::optional<PermGroup>& g, const std::optional<CliffordSpec>& spec, const std::string& name) {
    std::string text;
    if (g) text = "# " + name + ", order " + std::to_string(g->order()) + "\n" + write_group(*g);
    else if (spec) text = write_clifford_spec(*spec);
    else throw std::runtime_error("construction of '" + name + "' produced nothing");
    emit(text, out);
  };
  if (!named_id.empty()) {
    NamedObject obj = named(named_id);
    if (auto* g = std::get_if<PermGroup>(&obj)) write(*g, std::nullopt, named_id);
    else write(std::nullopt, std::get<CliffordSpec>(obj), named_id);
    return 0;
  }
  if (recipe_file.empty()) throw CLI::ValidationError("construct needs --named, --recipe or --list");
  auto recipes = read_recipe_file(recipe_file);
  for (const auto& r : recipes) {
    if (!recipe_name.empty() && r.name != recipe_name) continue;
    if (recipe_name.empty() && recipes.size() > 1)
      throw CLI::ValidationError("recipe file has several recipes; choose one with --name");
    Construction c = build(r);
    auto bad = check_expectations(r, c);
    for (const auto& b : bad) std::cerr << r.name << ": expectation " << b << "\n";
    if (c.group) write(c.group, std::nullopt, r.name);
    else write(std::nullopt, c.clifford, r.name);
    return bad.empty() ? 0 : 1;
  }
  throw CLI::ValidationError("no recipe named '" + recipe_name + "'");
}

int cmd_limits(bool as_json, const std::string& out) {
  std::string text;
  if (as_json) {
    json a = json::array();
    for (const auto& l : all_limits()) a.push_back({{"name", l.name}, {"value", l.value}, {"meaning", l.meaning}});
    text = json{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"limits", a}}.dump(2) + "\n";
  } else {
    for (const auto& l : all_limits()) {
      std::string name = l.name;
      name.resize(28, ' ');
      text += name + std::to_string(l.value) + "  " + l.meaning + "\n";
    }
  }
  emit(text, out);
  return 0;
}

int cmd_export_dot(const InputFlags& in, unsigned jobs, const std::string& out) {
  auto [input, results] = run_inputs(in, jobs);
  std::string dots;
  for (const auto& r : results) {
    if (!r.graph) throw std::runtime_error(r.name + ": " + (r.error.empty() ? "no graph" : r.error));
    dots += to_dot(*r.graph, r.name);
  }
  emit(dots, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character degree graph toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
  bool timings = false;
  app.add_flag("--version", [](std::int64_t) {
    std::cout << "cdg " << cdg::kToolVersion << "\n";
    std::exit(0);
  }, "print version and exit");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for randomized searches (default 0)");
    sub->add_option("--jobs", jobs, "worker threads across corpus entries")->check(CLI::PositiveNumber);
    sub->add_option("-o,--out", out, "output file (default stdout)");
  };

  InputFlags ain;
  std::string dot;
  auto* analyze = app.add_subcommand("analyze", "degrees, graph and classification checks of one input");
  add_input_flags(analyze, ain);
  common(analyze);
  analyze->add_option("--dot", dot, "also write the graph(s) as DOT");
  analyze->add_flag("--timings", timings, "include per-stage timings (makes reports run-dependent)");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run a verifier suite or 'all'");
  verify->add_option("suite", vf.suite, "suite id or 'all'")->required();
  verify->add_option("--a-max", vf.a_max, "zsigmondy: largest base");
  verify->add_option("--n-max", vf.n_max, "zsigmondy: largest exponent");
  verify->add_option("--qm-max", vf.qm_max, "modules: bound on q^m");
  verify->add_option("--corpus", vf.corpus, "corpus manifest, or 'default'");
  verify->add_option("--samples", vf.samples, "semilinear0: sampled subgroups at 2^15");
  verify->add_option("--min-exp", vf.lo_exp, "minimal-order: least bound exponent")->check(CLI::Range(1, 63));
  verify->add_option("--max-exp", vf.hi_exp, "minimal-order: largest bound exponent")->check(CLI::Range(1, 63));
  common(verify);
  verify->add_flag("--timings", timings, "include per-suite timings");

  std::string cnamed, crecipe, cname;
  bool clist = false;
  auto* construct = app.add_subcommand("construct", "write a bundled example or recipe as a group/spec file");
  construct->add_option("--named", cnamed, "bundled example id");
  construct->add_option("--recipe", crecipe, "recipe file");
  construct->add_option("--name", cname, "recipe to build from a multi-recipe file");
  construct->add_flag("--list", clist, "list bundled example ids");
  common(construct);

  bool ljson = false;
  auto* lim = app.add_subcommand("limits", "print the scale bounds");
  lim->add_flag("--json", ljson, "JSON output");
  common(lim);

  InputFlags din;
  auto* exdot = app.add_subcommand("export-dot", "write the character degree graph as DOT");
  add_input_flags(exdot, din);
  common(exdot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      if (ain.count() != 1) throw CLI::ValidationError("analyze needs exactly one input flag");
      return cmd_analyze(ain, seed, jobs, out, dot, timings);
    }
    if (*verify) return cmd_verify(vf, seed, jobs, out, timings);
    if (*construct) return cmd_construct(cnamed, crecipe, cname, clist, out);
    if (*lim) return cmd_limits(ljson, out);
    if (*exdot) {
      if (din.count() != 1) throw CLI::ValidationError("export-dot needs exactly one input flag");
      return cmd_export_dot(din, jobs, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cdg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cdg::ScaleError& e) {
    std::cerr << "scale error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
