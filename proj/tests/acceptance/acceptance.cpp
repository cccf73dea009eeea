// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned
// below. Criteria that cannot be met by construction are reported as
// "FAIL (known)" and do not change the exit status; any other failure does.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <spdlog/spdlog.h>

#include "graphsym/algorithms.hpp"
#include "graphsym/client.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/harness.hpp"
#include "graphsym/metrics.hpp"
#include "graphsym/permutation.hpp"
#include "graphsym/report.hpp"
#include "graphsym/runner.hpp"
#include "graphsym/serialize.hpp"
#include "graphsym/spectral.hpp"
#include "graphsym/tasks.hpp"
#include "support.hpp"

using namespace graphsym;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr double kRoundTripBudgetS = 30.0;
constexpr int kRoundTripGraphs = 200;
constexpr int kRelabelings = 100;
constexpr double kFloatInvariance = 1e-8;
constexpr double kTraceTol = 1e-8;
constexpr double kSquaresTol = 1e-6;
constexpr double kCompleteSpectrumTol = 1e-8;
constexpr double kSmapeTol = 1e-3;
constexpr double kRelmaeExampleTol = 1e-12;
constexpr double kMeanPredictorTol = 1e-12;
constexpr double kOracleRunBudgetS = 300.0;
// Relabeling reorders floating-point sums in the solvers; spans at round-off
// level count as zero.
constexpr double kZeroSpanTol = 1e-12;
constexpr double kMeanBaselineTol = 1e-9;
constexpr double kNoiseSigma = 0.05;
constexpr std::size_t kSmokePrompts = 10;

int unexpected_failures = 0;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail,
            bool known_unattainable = false) {
  const char* status = ok ? "PASS" : (known_unattainable ? "FAIL (known)" : "FAIL");
  std::printf("[%s] %s %s: %s\n", status, id.c_str(), what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok && !known_unattainable) ++unexpected_failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Graph random_graph_upto20(RngStream& rng, bool directed) {
  const int n = 1 + static_cast<int>(rng.bounded(20));
  const double p = 0.05 + 0.45 * rng.uniform();
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = directed ? 1 : u + 1; v <= n; ++v) {
      if (u != v && rng.uniform() < p) edges.push_back({u, v, std::nullopt});
    }
  }
  return Graph(n, directed, edges);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("graphsym_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read(const fs::path& p) { return graphsym::testing::read_file(p); }

// -- 1 ---------------------------------------------------------------------------

void round_trip() {
  const auto start = Clock::now();
  RngStream rng(2024);
  std::size_t renders = 0, failures = 0;
  for (int i = 0; i < kRoundTripGraphs; ++i) {
    const Graph g = random_graph_upto20(rng, i % 4 == 3);
    for (Structure st : {Structure::kEdgeList, Structure::kAdjList, Structure::kAdjMatrix}) {
      for (OrderRule order :
           {OrderRule::kSortedSourceTarget, OrderRule::kSortedSourceShuffledTarget,
            OrderRule::kSortedTargetShuffledSource, OrderRule::kShuffledAll,
            OrderRule::kErdosDefault, OrderRule::kVerbatim}) {
        for (Syntax sx : {Syntax::kErdosPlain, Syntax::kJson, Syntax::kNetworkxCode,
                          Syntax::kPygCode}) {
          for (bool repl : {false, true}) {
            EncodingSpec spec{st, order, repl, sx, static_cast<std::uint64_t>(i + 1)};
            try {
              validate(spec, g.directed());
            } catch (const InvalidSpecError&) {
              continue;
            }
            ++renders;
            try {
              const ParsedGraph back = parse(render(g, spec).text);
              if (back.graph.node_count() != g.node_count() ||
                  back.graph.directed() != g.directed() || !same_canonical(back.graph, g)) {
                ++failures;
              }
            } catch (const Error&) {
              ++failures;
            }
          }
        }
      }
    }
  }
  const double secs = seconds_since(start);
  report("1", failures == 0 && secs < kRoundTripBudgetS, "round-trip invariance",
         std::to_string(renders) + " renders of " + std::to_string(kRoundTripGraphs) +
             " graphs, " + std::to_string(failures) + " mismatches, " + fmt("%.1f s", secs) +
             " (budget 30 s)");
}

// -- 2 ---------------------------------------------------------------------------

void golden_fidelity() {
  const fs::path dir = graphsym::testing::tests_dir() / "golden" / "appendix";
  const json manifest = graphsym::testing::read_json(dir / "manifest.json");
  const Graph g = graphsym::testing::appendix_graph();
  int exact_ok = 0, exact_total = 0;
  std::vector<std::string> mismatched, unreproducible;
  for (const auto& e : manifest) {
    const std::string file = e["file"];
    const std::string mode = e["match"];
    EncodingSpec spec = EncodingSpec::from_id(e["encoding"].get<std::string>());
    if (is_shuffled(spec.order)) spec.shuffle_seed = 1;
    std::string golden = read(dir / file);
    const std::string text = render(g, spec).text;
    if (mode == "exact" || mode == "prefix") {
      ++exact_total;
      bool ok;
      if (mode == "exact") {
        while (!golden.empty() && golden.back() == '\n') golden.pop_back();
        ok = text == golden;
      } else {
        ok = text.compare(0, golden.size(), golden) == 0;
      }
      exact_ok += ok;
      if (!ok) mismatched.push_back(file);
    } else {
      unreproducible.push_back(file);
    }
  }
  // The full appendix prompt, not just the graph block.
  {
    ++exact_total;
    TaskInstance inst{"shortest_path", "appendix", g, {{"source", 12}, {"target", 19}}, nullptr,
                          InstanceSource::kComputed, std::nullopt};
    std::string golden = read(dir / "prompt_shortest_path.txt");
    while (!golden.empty() && golden.back() == '\n') golden.pop_back();
    std::string prompt = build_prompt(inst, EncodingSpec::from_id(
                                                "edge_list/verbatim/norepl/erdos_plain"));
    while (!prompt.empty() && prompt.back() == '\n') prompt.pop_back();
    const bool ok = prompt == golden;
    exact_ok += ok;
    if (!ok) mismatched.push_back("prompt_shortest_path.txt");
  }
  std::string detail = std::to_string(exact_ok) + "/" + std::to_string(exact_total) +
                       " deterministic renders byte-match (default, sorted, replicated, "
                       "adjacency list, adjacency matrix, json, NetworkX, PyG, full prompt)";
  for (const auto& m : mismatched) detail += "; mismatch " + m;
  report("2a", mismatched.empty(), "golden-format fidelity", detail);

  report("2b", false, "golden-format fidelity, shuffled/relabeled examples",
         std::to_string(unreproducible.size()) +
             " examples depend on the original shuffle generator and random relabeling, "
             "which are not published; byte-match is impossible. Header, edge multiset and "
             "adjacency sets are checked in the serialize unit tests instead",
         true);
}

// -- 3 ---------------------------------------------------------------------------

void relabel_invariance() {
  RngStream rng(3);
  std::size_t comparisons = 0, failures = 0, tasks = 0;
  std::string first_bad;
  for (const auto& t : task_catalog()) {
    if (t.spectral || !t.core_solver) continue;
    if (t.answer_kind != AnswerKind::kInteger && t.answer_kind != AnswerKind::kFloat &&
        t.answer_kind != AnswerKind::kBoolean) {
      continue;
    }
    ++tasks;
    for (const auto& inst : generate_instances(t, 2, 11)) {
      for (int k = 0; k < kRelabelings; ++k) {
        const TaskInstance moved =
            relabel_instance(inst, random_permutation(inst.graph.node_count(), rng));
        const json b = solve(t, moved.graph, moved.params);
        const bool ok = t.answer_kind == AnswerKind::kFloat
                            ? std::abs(inst.truth.get<double>() - b.get<double>()) <=
                                  kFloatInvariance
                            : inst.truth == b;
        ++comparisons;
        if (!ok) {
          ++failures;
          if (first_bad.empty()) first_bad = t.id;
        }
      }
    }
  }
  std::size_t spectral = 0;
  for (SpectralTask t : all_spectral_tasks()) {
    ++spectral;
    RngStream grng(derive_seed(5, std::string(to_string(t))));
    for (int gi = 0; gi < 3; ++gi) {
      const Graph g = random_graph_upto20(grng, false);
      double base;
      try {
        base = spectral_truth(t, g);
      } catch (const DegenerateSpectrumError&) {
        continue;
      }
      for (int k = 0; k < kRelabelings; ++k) {
        const double v = spectral_truth(t, relabel(g, random_permutation(g.node_count(), rng)));
        ++comparisons;
        if (std::abs(v - base) > kFloatInvariance * std::max(1.0, std::abs(base))) {
          ++failures;
          if (first_bad.empty()) first_bad = std::string(to_string(t));
        }
      }
    }
  }
  report("3", failures == 0, "relabeling invariance",
         std::to_string(tasks) + " scalar core tasks + " + std::to_string(spectral) +
             " spectral tasks, " + std::to_string(comparisons) + " comparisons, " +
             std::to_string(failures) + " disagreements" +
             (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
}

// -- 4 ---------------------------------------------------------------------------

void spectral_identities() {
  RngStream rng(4);
  double worst_trace = 0, worst_squares = 0;
  int component_mismatch = 0, entropy_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph_upto20(rng, false);
    const Spectrum s = eigensym(adjacency_matrix(g), false);
    worst_trace = std::max(worst_trace,
                           std::abs(std::accumulate(s.values.begin(), s.values.end(), 0.0)));
    worst_squares = std::max(
        worst_squares, std::abs(spectral_truth(SpectralTask::kSumLambdaSquared, g) -
                                2.0 * static_cast<double>(g.edge_count())));
    component_mismatch += spectral_truth(SpectralTask::kNComponents, g) !=
                          static_cast<double>(connected_component_count(g));
    if (g.edge_count() > 0) {
      const double h = spectral_truth(SpectralTask::kVonNeumannEntropy, g);
      entropy_bad += h < 0.0 || h > std::log(static_cast<double>(g.node_count())) + 1e-12;
    }
  }
  double worst_kn = 0;
  for (int n = 2; n <= 8; ++n) {
    const Spectrum s = eigensym(adjacency_matrix(graphsym::testing::complete_graph(n)), false);
    worst_kn = std::max(worst_kn, std::abs(s.values[0] - (n - 1)));
    for (int i = 1; i < n; ++i) worst_kn = std::max(worst_kn, std::abs(s.values[i] + 1.0));
  }
  const bool ok = worst_trace <= kTraceTol && worst_squares <= kSquaresTol &&
                  component_mismatch == 0 && entropy_bad == 0 &&
                  worst_kn <= kCompleteSpectrumTol;
  report("4", ok, "spectral identities",
         "100 graphs: max |sum lambda| " + fmt("%.1e", worst_trace) +
             ", max |sum lambda^2 - 2m| " + fmt("%.1e", worst_squares) + ", component mismatches " +
             std::to_string(component_mismatch) + ", entropy out of [0, ln n] " +
             std::to_string(entropy_bad) + "; K_2..K_8 max deviation " + fmt("%.1e", worst_kn));
}

// -- 5 ---------------------------------------------------------------------------

PairedSeries one(double y, double f) {
  PairedSeries s;
  s.truths = {y};
  s.predictions = {f};
  return s;
}

void metric_examples() {
  // The worked numbers follow 2|y - f| / (|y| + |f|), the 0-200 form.
  const double a = smape(one(150, 100), SmapeScale::k0To200);
  const double b = smape(one(0.1, 0.2), SmapeScale::k0To200);
  PairedSeries rel;
  rel.truths = {0, 10};
  rel.predictions = {2, 8};
  const double r = relmae(rel);
  RngStream rng(5);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    PairedSeries s;
    const std::size_t n = 2 + rng.bounded(40);
    for (std::size_t k = 0; k < n; ++k) s.truths.push_back(100.0 * rng.normal());
    const double mean = std::accumulate(s.truths.begin(), s.truths.end(), 0.0) / n;
    s.predictions.assign(n, mean);
    worst = std::max(worst, std::abs(relmae(s) - 1.0));
  }
  const bool ok = std::abs(a - 40.0) <= kSmapeTol && std::abs(b - 200.0 / 3.0) <= kSmapeTol &&
                  std::abs(r - 0.4) <= kRelmaeExampleTol && worst <= kMeanPredictorTol;
  report("5", ok, "metric worked examples",
         "sMAPE(150,100) = " + fmt("%.3f%%", a) + ", sMAPE(0.1,0.2) = " + fmt("%.3f%%", b) +
             " (2|y-f|/(|y|+|f|) form), RelMAE example = " + fmt("%.12f", r) +
             ", mean predictor max |RelMAE - 1| = " + fmt("%.1e", worst));
}

// -- 6 ---------------------------------------------------------------------------

void oracle_run() {
  const fs::path dir = scratch("oracle");
  const RunConfig cfg = config_from_json({{"run_id", "oracle"},
                                          {"output", dir.string()},
                                          {"models", {{{"name", "oracle"}, {"mock", "oracle"}}}},
                                          {"tasks", "all"},
                                          {"encodings", "full_grid"},
                                          {"relabel_seeds", 3},
                                          {"suite", {{"count", 3}, {"seed", 7}}}});
  const auto start = Clock::now();
  const RunSummary s = run_matrix(cfg);
  const MetricReport rep = score_records(load_records(s.records_path), cfg.baseline);
  const double secs = seconds_since(start);
  std::size_t bad_acc = 0, bad_span = 0, spans = 0;
  double max_span = 0.0;
  for (const auto& c : rep.cells) {
    bad_acc += c.accuracy.mean != 1.0;
    if (c.span) {
      ++spans;
      max_span = std::max(max_span, *c.span);
      bad_span += *c.span > kZeroSpanTol;
    }
  }
  report("6", bad_acc == 0 && bad_span == 0 && spans > 0 && secs < kOracleRunBudgetS,
         "end-to-end oracle run",
         std::to_string(selected_tasks(cfg).size()) + " tasks, " + std::to_string(s.executed) +
             " inferences, " + std::to_string(rep.cells.size()) + " cells, " +
             std::to_string(bad_acc) + " below accuracy 1.0, " + std::to_string(bad_span) + "/" +
             std::to_string(spans) + " numeric spans above 1e-12 (max " + fmt("%.1e", max_span) +
             "), " + fmt("%.1f s", secs) +
             " (budget 300 s)");
}

// -- 7 ---------------------------------------------------------------------------

void mean_baseline() {
  const fs::path dir = scratch("baseline");
  const RunConfig cfg = config_from_json(
      {{"run_id", "spectral"},
       {"output", dir.string()},
       {"models",
        {{{"name", "oracle"}, {"mock", "oracle"}},
         {{"name", "noisy"}, {"mock", "noisy"}, {"sigma", kNoiseSigma}, {"seed", 1}},
         {{"name", "mean"}, {"mock", "mean_baseline"}}}},
       {"tasks", "spectral"},
       {"relabel_seeds", 1},
       {"suite", {{"count", 20}, {"seed", 9}}}});
  const RunSummary s = run_matrix(cfg);
  const MetricReport rep = score_records(load_records(s.records_path), cfg.baseline);
  double worst = 0;
  std::size_t tasks = 0;
  bool missing = false;
  for (const auto& c : rep.cells) {
    if (c.model != "mean") continue;
    ++tasks;
    if (!c.relmae) {
      missing = true;
      continue;
    }
    worst = std::max(worst, std::abs(*c.relmae - 1.0));
  }
  const auto& ge = rep.global_error;
  const bool ranked = ge.count("oracle") && ge.count("noisy") && ge.count("mean") &&
                      ge.at("oracle") < ge.at("noisy") && ge.at("noisy") < ge.at("mean");
  report("7", !missing && tasks == 12 && worst <= kMeanBaselineTol && ranked,
         "mean baseline and global error ranking",
         std::to_string(tasks) + " spectral tasks, max |RelMAE - 1| = " + fmt("%.1e", worst) +
             "; global error oracle " + fmt("%.3f", ge.count("oracle") ? ge.at("oracle") : -1) +
             " < noisy(sigma 0.05) " + fmt("%.3f", ge.count("noisy") ? ge.at("noisy") : -1) +
             " < mean " + fmt("%.3f", ge.count("mean") ? ge.at("mean") : -1));
}

// -- 8 ---------------------------------------------------------------------------

void endpoint_smoke() {
  const fs::path dir = scratch("endpoint");
  MockEndpoint server({"The final answer is: 1", 4});
  const int port = server.start();
  const RunConfig cfg = config_from_json(
      {{"run_id", "smoke"},
       {"output", dir.string()},
       {"models",
        {{{"name", "local"},
          {"endpoint", "http://127.0.0.1:" + std::to_string(port) + "/v1"},
          {"retry_base_ms", 5}}}},
       {"tasks", {"node_number", "edge_number", "density", "graph_energy"}},
       {"relabel_seeds", 2},
       {"suite", {{"count", 2}, {"seed", 5}}}});
  const RunSummary s = run_matrix(cfg);
  server.stop();
  const auto records = load_records(s.records_path);
  bool replayable = true;
  for (const auto& r : records) {
    replayable &= record_to_json(rescore(r, cfg.check, cfg.extract)) == record_to_json(r);
  }
  const MetricReport rep = score_records(records, cfg.baseline);
  write_report(rep, dir / "report");
  const std::string acc = read(dir / "report" / "accuracy.csv");
  const std::string err = read(dir / "report" / "errors.csv");
  const bool tables = acc.rfind("task,", 0) == 0 && err.find("parse_fail") != std::string::npos &&
                      err.find("RelMAE") != std::string::npos &&
                      fs::exists(dir / "report" / "cells.jsonl");
  report("8", records.size() >= kSmokePrompts && s.transport_errors == 0 && replayable && tables,
         "endpoint smoke matrix (substitute property)",
         "the published model accuracy tables need GPU-hosted models and are not reproduced "
         "here; local OpenAI-compatible endpoint served " +
             std::to_string(server.requests()) + " requests (with injected 503s) for " +
             std::to_string(records.size()) + " prompts, " + std::to_string(s.transport_errors) +
             " transport errors, records " + (replayable ? "replay identically" : "do NOT replay") +
             ", accuracy/error tables with parse-failure rates " +
             (tables ? "written" : "MISSING"));
}

// -- 9 ---------------------------------------------------------------------------

bool same_tree(const fs::path& a, const fs::path& b, std::size_t& files) {
  files = 0;
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file()) continue;
    ++files;
    const fs::path other = b / fs::relative(e.path(), a);
    if (!fs::exists(other) || read(e.path()) != read(other)) return false;
  }
  std::size_t other_files = 0;
  for (const auto& e : fs::recursive_directory_iterator(b)) other_files += e.is_regular_file();
  return other_files == files;
}

void determinism() {
  const fs::path dir = scratch("determinism");
  const RunConfig cfg = config_from_json({{"run_id", "det"},
                                          {"output", dir.string()},
                                          {"models", {{{"name", "oracle"}, {"mock", "oracle"}}}},
                                          {"tasks", "all"},
                                          {"encodings", "full_grid"},
                                          {"relabel_seeds", 2},
                                          {"suite", {{"count", 1}, {"seed", 3}}}});
  write_corpus(cfg, dir / "corpus_a");
  write_corpus(cfg, dir / "corpus_b");
  std::size_t corpus_files = 0;
  const bool corpus_same = same_tree(dir / "corpus_a", dir / "corpus_b", corpus_files);

  const RunConfig scored = config_from_json({{"run_id", "replay"},
                                             {"output", dir.string()},
                                             {"models",
                                              {{{"name", "noisy"},
                                                {"mock", "noisy"},
                                                {"sigma", 0.5},
                                                {"seed", 2}},
                                               {{"name", "mean"}, {"mock", "mean_baseline"}}}},
                                             {"tasks", "all"},
                                             {"relabel_seeds", 2},
                                             {"suite", {{"count", 2}, {"seed", 3}}}});
  const RunSummary s = run_matrix(scored);
  write_report(score_records(load_records(s.records_path), scored.baseline), dir / "report_a");
  std::vector<EvalRecord> replay;
  for (const auto& r : load_records(s.records_path)) {
    replay.push_back(rescore(r, scored.check, scored.extract));
  }
  write_report(score_records(replay, scored.baseline), dir / "report_b");
  std::size_t report_files = 0;
  const bool report_same = same_tree(dir / "report_a", dir / "report_b", report_files);
  report("9", corpus_same && report_same && corpus_files > 0, "determinism",
         "two encode runs: " + std::to_string(corpus_files) + " files " +
             (corpus_same ? "byte-identical" : "DIFFER") + "; score replay: " +
             std::to_string(report_files) + " report files " +
             (report_same ? "byte-identical" : "DIFFER"));
}

template <class F>
void guarded(const std::string& id, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, "criterion", std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::err);
  guarded("1", round_trip);
  guarded("2", golden_fidelity);
  guarded("3", relabel_invariance);
  guarded("4", spectral_identities);
  guarded("5", metric_examples);
  guarded("6", oracle_run);
  guarded("7", mean_baseline);
  guarded("8", endpoint_smoke);
  guarded("9", determinism);
  std::printf("%s\n", unexpected_failures == 0 ? "acceptance: OK" : "acceptance: FAILED");
  return unexpected_failures == 0 ? 0 : 1;
}
