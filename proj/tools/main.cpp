#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "graphsym/client.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/harness.hpp"
#include "graphsym/report.hpp"
#include "graphsym/runner.hpp"
#include "graphsym/tasks.hpp"

using namespace graphsym;
using nlohmann::json;

namespace {

// A run directory or its records.jsonl.
std::filesystem::path records_in(const std::string& arg) {
  std::filesystem::path p = arg;
  if (std::filesystem::is_directory(p)) p /= "records.jsonl";
  if (!std::filesystem::is_regular_file(p)) throw ConfigError("no records at " + p.string());
  return p;
}

// Explicit config, else the one saved next to the records, else defaults.
RunConfig config_for(const std::string& path, const std::filesystem::path& records) {
  if (!path.empty()) return load_config(path);
  const auto saved = records.parent_path() / "config.json";
  if (std::filesystem::is_regular_file(saved)) return load_config(saved);
  return RunConfig{};
}

std::vector<EvalRecord> rescored(const std::vector<EvalRecord>& records, const RunConfig& cfg) {
  std::vector<EvalRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(rescore(r, cfg.check, cfg.extract));
  return out;
}

void print_summary(const MetricReport& r) {
  std::cout << accuracy_table_text(r) << "\n" << error_table_text(r);
  if (!r.global_error.empty()) {
    std::cout << "\nglobal normalized error\n";
    for (const auto& [m, v] : r.global_error) {
      std::printf("  %-24s %.4f\n", m.c_str(), v);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphsym: graph serialization robustness harness"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  std::string config_path;
  std::string out_path;

  auto* encode = app.add_subcommand("encode", "Write the prompt corpus and manifest");
  encode->add_option("-c,--config", config_path, "Run config (JSON)")->required();
  encode->add_option("-o,--out", out_path, "Output directory")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Emit ground truths as JSON lines");
  solve_cmd->add_option("-c,--config", config_path, "Run config (JSON)")->required();
  solve_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");

  std::size_t limit = 0;
  auto* run = app.add_subcommand("run", "Run the model x cell matrix");
  run->add_option("-c,--config", config_path, "Run config (JSON)")->required();
  run->add_option("--limit", limit, "Stop after this many new inferences");

  std::string records_file;
  auto* score = app.add_subcommand("score", "Re-score persisted records into a report");
  score->add_option("-r,--records", records_file, "Run directory or its records.jsonl")->required();
  score->add_option("-c,--config", config_path, "Config for baseline and extraction");
  score->add_option("-o,--out", out_path, "Report directory")->required();

  std::string table = "accuracy";
  std::string format = "text";
  auto* report = app.add_subcommand("report", "Print a table from persisted records");
  report->add_option("-r,--records", records_file, "Run directory or its records.jsonl")->required();
  report->add_option("-c,--config", config_path, "Config for baseline and extraction");
  report->add_option("--table", table, "accuracy | errors")
      ->check(CLI::IsMember({"accuracy", "errors"}));
  report->add_option("--format", format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

  std::string host = "127.0.0.1";
  int port = 8000;
  MockEndpoint::Options endpoint_opts;
  auto* server = app.add_subcommand("mock-server", "Serve a fixed-answer chat endpoint");
  server->add_option("--host", host, "Bind address");
  server->add_option("--port", port, "Port");
  server->add_option("--answer", endpoint_opts.answer, "Completion text");
  server->add_option("--fail-every", endpoint_opts.fail_every, "Return 503 every k-th request");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);

  try {
    if (*encode) {
      const RunConfig cfg = load_config(config_path);
      const std::size_t n = write_corpus(cfg, out_path);
      spdlog::info("wrote {} prompts to {}", n, out_path);
    } else if (*solve_cmd) {
      const RunConfig cfg = load_config(config_path);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw ConfigError("cannot write " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      for (const auto& inst : build_suite(cfg)) {
        json params = json::object();
        for (const auto& [k, v] : inst.params) params[k] = v;
        out << json{{"task", inst.task},
                    {"graph_id", inst.graph_id},
                    {"graph", graph_to_json(inst.graph)},
                    {"params", params},
                    {"answer", inst.truth}}
                   .dump()
            << "\n";
      }
    } else if (*run) {
      const RunConfig cfg = load_config(config_path);
      const RunSummary s =
          run_matrix(cfg, limit > 0 ? std::optional<std::size_t>(limit) : std::nullopt);
      spdlog::info("{} executed, {} skipped, {} transport errors -> {}", s.executed, s.skipped,
                   s.transport_errors, s.records_path.string());
      const MetricReport r = score_records(load_records(s.records_path), cfg.baseline);
      write_report(r, s.records_path.parent_path() / "report");
      print_summary(r);
    } else if (*score) {
      const auto path = records_in(records_file);
      const RunConfig cfg = config_for(config_path, path);
      const MetricReport r = score_records(rescored(load_records(path), cfg), cfg.baseline);
      write_report(r, out_path);
      spdlog::info("{} cells written to {}", r.cells.size(), out_path);
    } else if (*report) {
      const auto path = records_in(records_file);
      const RunConfig cfg = config_for(config_path, path);
      const MetricReport r = score_records(rescored(load_records(path), cfg), cfg.baseline);
      if (table == "accuracy") {
        std::cout << (format == "csv" ? accuracy_table_csv(r) : accuracy_table_text(r));
      } else {
        std::cout << (format == "csv" ? error_table_csv(r) : error_table_text(r));
      }
    } else if (*server) {
      MockEndpoint endpoint(endpoint_opts);
      spdlog::info("listening on http://{}:{}/v1", host, port);
      endpoint.serve_forever(host, port);
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
