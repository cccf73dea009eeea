#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "graphsym/client.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/harness.hpp"
#include "graphsym/report.hpp"
#include "graphsym/runner.hpp"
#include "support.hpp"

using namespace graphsym;
using nlohmann::json;
using graphsym::testing::appendix_graph;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("graphsym_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig small_config(const fs::path& out, const std::string& run_id) {
  return config_from_json({{"run_id", run_id},
                           {"output", out.string()},
                           {"models", {{{"name", "oracle"}, {"mock", "oracle"}}}},
                           {"tasks", {"node_number", "density", "shortest_path"}},
                           {"relabel_seeds", 2},
                           {"suite", {{"count", 2}, {"seed", 3}}}});
}

TaskInstance appendix_instance(const std::string& task, Params params = {}) {
  TaskInstance inst{task,    "appendix", appendix_graph(), std::move(params), nullptr,
                    InstanceSource::kComputed, std::nullopt};
  inst.truth = solve(find_task(task), inst.graph, inst.params);
  return inst;
}

}  // namespace

// -- answer extraction -------------------------------------------------------

TEST(ExtractAnswer, FinalAnswerSentence) {
  EXPECT_EQ(extract_answer("Therefore, the final answer is: 0.2.", AnswerKind::kFloat),
            json(0.2));
  EXPECT_EQ(extract_answer("The final answer is approximately: 54.24", AnswerKind::kFloat),
            json(54.24));
  EXPECT_EQ(extract_answer("The final answer is: 19", AnswerKind::kInteger), json(19));
}

TEST(ExtractAnswer, Lists) {
  EXPECT_EQ(extract_answer("So the path is [12, 1, 6, 17, 19].", AnswerKind::kNodeSequence),
            json::array({12, 1, 6, 17, 19}));
  EXPECT_EQ(extract_answer("The final answer is: [(1, 2), (3, 4)]", AnswerKind::kEdgeSet),
            json::array({json::array({1, 2}), json::array({3, 4})}));
}

TEST(ExtractAnswer, BoxedWinsByDefault) {
  EXPECT_EQ(extract_answer("\\boxed{5}\nThe final answer is: 3", AnswerKind::kInteger),
            json(5));
  EXPECT_EQ(extract_answer("\\boxed{5}\nThe final answer is: 3", AnswerKind::kInteger,
                           {ExtractRule::kFinalAnswer}),
            json(3));
}

TEST(ExtractAnswer, BooleansAndFailures) {
  EXPECT_EQ(extract_answer("The final answer is: Yes", AnswerKind::kBoolean), json(true));
  EXPECT_EQ(extract_answer("The final answer is: False.", AnswerKind::kBoolean), json(false));
  EXPECT_EQ(extract_answer("I cannot determine this.", AnswerKind::kInteger), std::nullopt);
  EXPECT_EQ(extract_answer("", AnswerKind::kFloat), std::nullopt);
}

// -- configuration -----------------------------------------------------------

TEST(Config, Defaults) {
  const RunConfig c = config_from_json({{"models", {{{"name", "m"}, {"mock", "oracle"}}}}});
  EXPECT_EQ(c.relabel_seeds.size(), 10u);
  EXPECT_EQ(c.relabel_seeds.front(), 1u);
  EXPECT_EQ(c.baseline.id(), erdos_baseline().id());
  EXPECT_EQ(c.models[0].temperature, 0.0);
  EXPECT_EQ(selected_tasks(c).size(), task_catalog().size());
}

TEST(Config, IngestDefaultsToVerbatimBaseline) {
  const RunConfig c = config_from_json({{"models", {{{"name", "m"}, {"mock", "oracle"}}}},
                                        {"suite", {{"source", "ingest"}, {"path", "x.jsonl"}}}});
  EXPECT_EQ(c.baseline.order, OrderRule::kVerbatim);
}

TEST(Config, Errors) {
  EXPECT_THROW(config_from_json({{"models", json::array()}}), ConfigError);
  EXPECT_THROW(config_from_json({{"models", {{{"name", "m"}}}}}), ConfigError);
  EXPECT_THROW(config_from_json({{"models", {{{"name", "m"}, {"mock", "oracle"}}}},
                                 {"suite", {{"source", "scrape"}}}}),
               ConfigError);
  EXPECT_THROW(config_from_json({{"models", {{{"name", "m"}, {"mock", "psychic"}}}}}),
               ConfigError);
}

TEST(Config, JsonRoundTrip) {
  RunConfig c = small_config("/tmp/x", "rt");
  c.models.push_back(config_from_json({{"models",
                                        {{{"name", "n"},
                                          {"mock", "noisy"},
                                          {"sigma", 0.5},
                                          {"seed", 9}}}}})
                         .models[0]);
  const json j = config_to_json(c);
  EXPECT_EQ(config_to_json(config_from_json(j)), j);
}

TEST(Config, TaskAndEncodingSelection) {
  const RunConfig c = config_from_json({{"models", {{{"name", "m"}, {"mock", "oracle"}}}},
                                        {"tasks", "spectral"},
                                        {"encodings", "full_grid"}});
  EXPECT_EQ(selected_tasks(c).size(), 12u);
  const auto specs = selected_encodings(c, false);
  ASSERT_FALSE(specs.empty());
  EXPECT_EQ(specs.front().id(), c.baseline.id());
  for (const auto& s : selected_encodings(c, true)) EXPECT_FALSE(s.replicate_undirected);
}

// -- prompts and mocks ---------------------------------------------------------

TEST(Prompt, ContainsGraphAndQuestion) {
  const TaskInstance inst = appendix_instance("shortest_path", {{"source", 12}, {"target", 19}});
  const std::string p = build_prompt(inst, erdos_baseline());
  EXPECT_NE(p.find("What is the shortest path between node 12 and node 19?"), std::string::npos);
  EXPECT_NE(p.find("(1, 7)"), std::string::npos);
}

TEST(MockClient, OracleAnswersFromThePrompt) {
  const TaskInstance inst = appendix_instance("node_number");
  ModelConfig cfg;
  cfg.name = "oracle";
  cfg.mock = MockKind::kOracle;
  MockClient client(cfg);
  const Completion c = client.complete({build_prompt(inst, erdos_baseline()), &inst, std::nullopt, std::nullopt});
  EXPECT_EQ(c.text, "The final answer is: 19");
}

TEST(MockClient, MeanBaselineAnswersTheTaskMean) {
  const TaskInstance inst = appendix_instance("density");
  ModelConfig cfg;
  cfg.name = "mean";
  cfg.mock = MockKind::kMeanBaseline;
  MockClient client(cfg);
  ModelRequest req{build_prompt(inst, erdos_baseline()), &inst, std::nullopt, std::nullopt};
  req.task_mean = (2.0 + 4.0) / 2.0;
  const auto parsed = extract_answer(client.complete(req).text, AnswerKind::kFloat);
  ASSERT_TRUE(parsed.has_value());
  EXPECT_DOUBLE_EQ(parsed->get<double>(), 3.0);
}

TEST(MockClient, NoisyWithZeroSigmaIsTheOracle) {
  const TaskInstance inst = appendix_instance("density");
  ModelConfig oracle;
  oracle.mock = MockKind::kOracle;
  ModelConfig noisy;
  noisy.mock = MockKind::kNoisy;
  noisy.noise_sigma = 0.0;
  const ModelRequest req{build_prompt(inst, erdos_baseline()), &inst, std::nullopt, std::nullopt};
  EXPECT_EQ(MockClient(noisy).complete(req).text, MockClient(oracle).complete(req).text);
}

// -- records -----------------------------------------------------------------------

TEST(Records, JsonRoundTrip) {
  EvalRecord r;
  r.run_id = "r";
  r.model = "m";
  r.task = "density";
  r.graph_id = "g1";
  r.encoding = erdos_baseline();
  r.relabel_seed = 4;
  r.graph = Graph::undirected(3, {{1, 2}, {2, 3}});
  r.prompt = "p";
  r.completion = "The final answer is: 0.5";
  r.parsed = json(0.5);
  r.truth = json(2.0 / 3.0);
  r.verdict = Verdict::kIncorrect;
  r.error = 1.0 / 6.0;
  r.prompt_tokens = 12;
  const json j = record_to_json(r);
  const EvalRecord back = record_from_json(j);
  EXPECT_EQ(record_to_json(back), j);
  EXPECT_EQ(back.cell_key(), r.cell_key());
  EXPECT_EQ(back.graph, r.graph);
}

TEST(Records, TruncatedLastLineIsSkipped) {
  const fs::path dir = fresh_dir("truncated");
  const RunConfig cfg = small_config(dir, "t");
  run_matrix(cfg);
  const fs::path path = records_path(cfg);
  const std::size_t full = load_records(path).size();
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"run_id\": \"t\", \"model\":";
  }
  EXPECT_EQ(load_records(path).size(), full);
}

// -- runner ------------------------------------------------------------------------

TEST(Runner, ResumeSkipsFinishedCells) {
  const fs::path dir = fresh_dir("resume");
  const RunConfig cfg = small_config(dir, "resume");
  const std::size_t cells = build_cells(cfg, build_suite(cfg)).size();
  ASSERT_GT(cells, 5u);
  const RunSummary first = run_matrix(cfg, 5);
  EXPECT_EQ(first.executed, 5u);
  const RunSummary second = run_matrix(cfg);
  EXPECT_EQ(second.skipped, 5u);
  EXPECT_EQ(second.executed, cells - 5);
  const auto records = load_records(records_path(cfg));
  EXPECT_EQ(records.size(), cells);
  std::set<std::string> keys;
  for (const auto& r : records) keys.insert(r.cell_key());
  EXPECT_EQ(keys.size(), cells);
  for (const auto& r : records) EXPECT_EQ(r.verdict, Verdict::kCorrect) << r.cell_key();
}

TEST(Runner, CorpusIsDeterministic) {
  const fs::path a = fresh_dir("corpus_a"), b = fresh_dir("corpus_b");
  const RunConfig cfg = small_config(a, "c");
  const std::size_t n = write_corpus(cfg, a / "corpus");
  EXPECT_EQ(write_corpus(cfg, b / "corpus"), n);
  for (const auto& entry : fs::recursive_directory_iterator(a / "corpus")) {
    if (!entry.is_regular_file()) continue;
    const fs::path other = b / "corpus" / fs::relative(entry.path(), a / "corpus");
    EXPECT_EQ(graphsym::testing::read_file(entry.path()), graphsym::testing::read_file(other))
        << entry.path();
  }
}

TEST(Report, ScoringIsAPureFunctionOfTheRecords) {
  const fs::path dir = fresh_dir("replay");
  const RunConfig cfg = small_config(dir, "replay");
  run_matrix(cfg);
  auto records = load_records(records_path(cfg));
  const MetricReport first = score_records(records, cfg.baseline);
  std::mt19937 gen(1);
  std::shuffle(records.begin(), records.end(), gen);
  const MetricReport second = score_records(records, cfg.baseline);
  EXPECT_EQ(accuracy_table_csv(first), accuracy_table_csv(second));
  EXPECT_EQ(error_table_csv(first), error_table_csv(second));
  ASSERT_EQ(first.cells.size(), second.cells.size());
  for (std::size_t i = 0; i < first.cells.size(); ++i) {
    EXPECT_EQ(cell_to_json(first.cells[i]), cell_to_json(second.cells[i]));
  }
  for (const auto& c : first.cells) EXPECT_DOUBLE_EQ(c.accuracy.mean, 1.0);
}

TEST(Report, RescoreKeepsVerdicts) {
  const fs::path dir = fresh_dir("rescore");
  const RunConfig cfg = small_config(dir, "rescore");
  run_matrix(cfg);
  for (const auto& r : load_records(records_path(cfg))) {
    EXPECT_EQ(record_to_json(rescore(r, cfg.check, cfg.extract)), record_to_json(r));
  }
}

// -- HTTP ----------------------------------------------------------------------------

TEST(Http, RequestBody) {
  ModelConfig cfg;
  cfg.name = "qwen";
  cfg.model = "Qwen/Qwen2.5-7B-Instruct";
  cfg.endpoint = "http://127.0.0.1:9/v1";
  const json body = HttpChatClient(cfg).request_body("hello");
  EXPECT_EQ(body["model"], "Qwen/Qwen2.5-7B-Instruct");
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_EQ(body["messages"][0]["role"], "user");
  EXPECT_EQ(body["messages"][0]["content"], "hello");
}

TEST(Http, MockEndpointRoundTripWithRetries) {
  MockEndpoint server({"The final answer is: 7", 2});
  const int port = server.start();
  ModelConfig cfg;
  cfg.name = "local";
  cfg.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1";
  cfg.retry_base_ms = 1;
  HttpChatClient client(cfg);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(client.complete({"prompt " + std::to_string(i), nullptr, std::nullopt, std::nullopt}).text, "The final answer is: 7");
  }
  EXPECT_GT(server.requests(), 4);
  server.stop();
}

TEST(Http, UnreachableEndpointBecomesATransportErrorRecord) {
  const fs::path dir = fresh_dir("unreachable");
  MockEndpoint server;
  const int port = server.start();
  server.stop();  // the port is now closed
  RunConfig cfg = config_from_json(
      {{"run_id", "down"},
       {"output", dir.string()},
       {"models",
        {{{"name", "down"},
          {"endpoint", "http://127.0.0.1:" + std::to_string(port) + "/v1"},
          {"retry_base_ms", 1},
          {"timeout_s", 2}}}},
       {"tasks", {"node_number"}},
       {"relabel_seeds", 1},
       {"suite", {{"count", 1}, {"seed", 1}}}});
  const RunSummary s = run_matrix(cfg);
  EXPECT_EQ(s.transport_errors, s.executed);
  for (const auto& r : load_records(records_path(cfg))) {
    EXPECT_TRUE(r.transport_error.has_value());
    EXPECT_EQ(r.verdict, Verdict::kUnparsed);
  }
}
