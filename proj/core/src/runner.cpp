#include "graphsym/runner.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "graphsym/client.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/serialize.hpp"

namespace graphsym {

using nlohmann::json;

std::vector<TaskInstance> build_suite(const RunConfig& cfg) {
  const auto tasks = selected_tasks(cfg);
  std::vector<TaskInstance> out;
  if (cfg.suite.source == "ingest") {
    std::set<std::string> wanted;
    for (const TaskSpec* t : tasks) wanted.insert(t->id);
    for (auto& inst : ingest_erdos(cfg.suite.path)) {
      if (wanted.count(inst.task)) out.push_back(std::move(inst));
    }
    return out;
  }
  for (const TaskSpec* t : tasks) {
    for (auto& inst : generate_instances(*t, cfg.suite.count, cfg.suite.seed)) {
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::string PromptCell::key() const {
  return relabeled.task + "|" + relabeled.graph_id + "|" + spec.id() + "|" +
         (relabel_seed ? std::to_string(*relabel_seed) : std::string("identity"));
}

std::vector<PromptCell> build_cells(const RunConfig& cfg,
                                    const std::vector<TaskInstance>& suite) {
  std::vector<std::optional<std::uint64_t>> seeds;
  if (cfg.include_identity) seeds.emplace_back(std::nullopt);
  for (auto s : cfg.relabel_seeds) seeds.emplace_back(s);

  std::vector<PromptCell> cells;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const TaskInstance& inst = suite[i];
    const auto specs = selected_encodings(cfg, inst.graph.directed());
    for (const auto& seed : seeds) {
      TaskInstance relabeled = inst;
      if (seed) {
        RngStream rng(derive_seed(*seed, inst.task + "|" + inst.graph_id));
        relabeled = relabel_instance(inst, random_permutation(inst.graph.node_count(), rng));
      }
      for (EncodingSpec spec : specs) {
        if (is_shuffled(spec.order)) {
          spec.shuffle_seed =
              derive_seed(cfg.shuffle_seed, inst.task + "|" + inst.graph_id + "|" +
                                                (seed ? std::to_string(*seed) : "id"));
        }
        PromptCell cell{i, relabeled, spec, seed, build_prompt(relabeled, spec)};
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

std::size_t write_corpus(const RunConfig& cfg, const std::filesystem::path& dir) {
  const auto suite = build_suite(cfg);
  const auto cells = build_cells(cfg, suite);
  std::filesystem::create_directories(dir / "prompts");
  std::ofstream manifest(dir / "manifest.jsonl", std::ios::trunc);
  if (!manifest) throw ConfigError("cannot write to " + dir.string());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const PromptCell& c = cells[i];
    char name[32];
    std::snprintf(name, sizeof name, "%06zu.txt", i);
    std::ofstream out(dir / "prompts" / name, std::ios::trunc | std::ios::binary);
    out << c.prompt;
    json params = json::object();
    for (const auto& [k, v] : c.relabeled.params) params[k] = v;
    manifest << json{{"file", std::string("prompts/") + name},
                     {"key", c.key()},
                     {"task", c.relabeled.task},
                     {"graph_id", c.relabeled.graph_id},
                     {"encoding", c.spec},
                     {"relabel_seed", c.relabel_seed ? json(*c.relabel_seed) : json()},
                     {"params", params},
                     {"truth", c.relabeled.truth}}
                    .dump()
             << "\n";
  }
  std::ofstream(dir / "config.json", std::ios::trunc) << config_to_json(cfg).dump(2) << "\n";
  return cells.size();
}

std::filesystem::path records_path(const RunConfig& cfg) {
  return cfg.output / cfg.run_id / "records.jsonl";
}

namespace {

struct TaskStats {
  std::optional<double> mean;
  std::optional<json> mode;
};

std::map<std::string, TaskStats> task_stats(const std::vector<TaskInstance>& suite) {
  std::map<std::string, std::vector<double>> numbers;
  std::map<std::string, std::map<std::string, std::pair<int, json>>> counts;
  for (const auto& inst : suite) {
    if (inst.truth.is_number()) numbers[inst.task].push_back(inst.truth.get<double>());
    auto& slot = counts[inst.task][inst.truth.dump()];
    ++slot.first;
    slot.second = inst.truth;
  }
  std::map<std::string, TaskStats> out;
  for (const auto& [task, v] : numbers) {
    double s = 0.0;
    for (double x : v) s += x;
    out[task].mean = s / static_cast<double>(v.size());
  }
  for (const auto& [task, by_value] : counts) {
    int best = 0;
    for (const auto& [text, cv] : by_value) {
      if (cv.first > best) {
        best = cv.first;
        out[task].mode = cv.second;
      }
    }
  }
  return out;
}

}  // namespace

RunSummary run_matrix(const RunConfig& cfg, std::optional<std::size_t> limit) {
  RunSummary summary;
  summary.records_path = records_path(cfg);
  const auto existing = load_records(summary.records_path);
  std::unordered_set<std::string> done;
  for (const auto& r : existing) done.insert(r.cell_key());

  const auto suite = build_suite(cfg);
  const auto cells = build_cells(cfg, suite);
  const auto stats = task_stats(suite);

  std::filesystem::create_directories(summary.records_path.parent_path());
  std::ofstream(summary.records_path.parent_path() / "config.json", std::ios::trunc)
      << config_to_json(cfg).dump(2) << "\n";
  RecordSink sink(summary.records_path);

  std::size_t budget = limit.value_or(std::numeric_limits<std::size_t>::max());
  for (const ModelConfig& model : cfg.models) {
    std::vector<const PromptCell*> todo;
    for (const auto& c : cells) {
      if (done.count(model.name + "|" + c.key())) {
        ++summary.skipped;
      } else if (todo.size() < budget) {
        todo.push_back(&c);
      }
    }
    budget -= todo.size();
    if (todo.empty()) continue;
    spdlog::info("model {}: {} inferences ({} already recorded)", model.name, todo.size(),
                 summary.skipped);

    auto client = make_client(model);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> transport{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
      while (!abort) {
        const std::size_t i = next++;
        if (i >= todo.size()) return;
        const PromptCell& cell = *todo[i];
        const auto& st = stats.count(cell.relabeled.task) ? stats.at(cell.relabeled.task)
                                                          : TaskStats{};
        EvalRecord r;
        r.run_id = cfg.run_id;
        r.model = model.name;
        r.task = cell.relabeled.task;
        r.graph_id = cell.relabeled.graph_id;
        r.encoding = cell.spec;
        r.relabel_seed = cell.relabel_seed;
        r.graph = cell.relabeled.graph;
        r.params = cell.relabeled.params;
        r.prompt = cell.prompt;
        r.truth = cell.relabeled.truth;
        try {
          const Completion c = client->complete(
              ModelRequest{cell.prompt, &cell.relabeled, st.mean, st.mode});
          r.completion = c.text;
          r.latency_ms = c.latency_ms;
          r.prompt_tokens = c.prompt_tokens;
          r.completion_tokens = c.completion_tokens;
        } catch (const TransportError& e) {
          r.transport_error = e.what();
          ++transport;
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          abort = true;
          return;
        }
        try {
          sink.write(rescore(r, cfg.check, cfg.extract));
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          abort = true;
          return;
        }
      }
    };

    const int threads = std::max(1, std::min<int>(model.max_in_flight,
                                                  static_cast<int>(todo.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    summary.executed += todo.size();
    summary.transport_errors += transport;
  }
  return summary;
}

}  // namespace graphsym
