#include "graphsym/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <string>

#include <spdlog/spdlog.h>

#include "graphsym/errors.hpp"
#include "graphsym/serialize.hpp"

namespace graphsym {

using nlohmann::json;

// -- configuration ----------------------------------------------------------

std::string_view to_string(MockKind k) noexcept {
  switch (k) {
    case MockKind::kOracle: return "oracle";
    case MockKind::kMeanBaseline: return "mean_baseline";
    case MockKind::kNoisy: return "noisy";
  }
  return "?";
}

std::string_view to_string(ExtractRule r) noexcept {
  switch (r) {
    case ExtractRule::kBoxed: return "boxed";
    case ExtractRule::kFinalAnswer: return "final_answer";
    case ExtractRule::kLastList: return "last_list";
    case ExtractRule::kLastScalar: return "last_scalar";
  }
  return "?";
}

ExtractRule parse_extract_rule(std::string_view text) {
  for (auto r : {ExtractRule::kBoxed, ExtractRule::kFinalAnswer, ExtractRule::kLastList,
                 ExtractRule::kLastScalar}) {
    if (to_string(r) == text) return r;
  }
  throw ConfigError("unknown extraction rule '" + std::string(text) + "'");
}

namespace {

MockKind parse_mock(const std::string& s) {
  for (auto k : {MockKind::kOracle, MockKind::kMeanBaseline, MockKind::kNoisy}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("unknown mock model '" + s + "'");
}

ModelConfig model_from_json(const json& j) {
  ModelConfig m;
  m.name = j.at("name").get<std::string>();
  m.endpoint = j.value("endpoint", "");
  m.model = j.value("model", m.name);
  m.api_key_env = j.value("api_key_env", "");
  m.temperature = j.value("temperature", 0.0);
  m.max_tokens = j.value("max_tokens", 4096);
  if (j.contains("reasoning_effort") && !j.at("reasoning_effort").is_null()) {
    m.reasoning_effort = j.at("reasoning_effort").get<std::string>();
  }
  m.max_in_flight = j.value("max_in_flight", 4);
  m.timeout_s = j.value("timeout_s", 600);
  m.retry_base_ms = j.value("retry_base_ms", 200);
  if (j.contains("mock") && !j.at("mock").is_null()) {
    m.mock = parse_mock(j.at("mock").get<std::string>());
  }
  m.noise_sigma = j.value("sigma", 0.0);
  m.noise_seed = j.value("seed", std::uint64_t{0});
  if (!m.mock && m.endpoint.empty()) {
    throw ConfigError("model " + m.name + " needs an endpoint or a mock kind");
  }
  if (m.max_in_flight < 1) throw ConfigError("max_in_flight must be positive");
  return m;
}

json model_to_json(const ModelConfig& m) {
  json j = {{"name", m.name},
            {"endpoint", m.endpoint},
            {"model", m.model},
            {"api_key_env", m.api_key_env},
            {"temperature", m.temperature},
            {"max_tokens", m.max_tokens},
            {"reasoning_effort", m.reasoning_effort ? json(*m.reasoning_effort) : json()},
            {"max_in_flight", m.max_in_flight},
            {"timeout_s", m.timeout_s},
            {"retry_base_ms", m.retry_base_ms},
            {"mock", m.mock ? json(std::string(to_string(*m.mock))) : json()}};
  if (m.mock == MockKind::kNoisy) {
    j["sigma"] = m.noise_sigma;
    j["seed"] = m.noise_seed;
  }
  return j;
}

}  // namespace

RunConfig config_from_json(const json& j) {
  try {
    RunConfig c;
    c.run_id = j.value("run_id", "run");
    c.output = j.value("output", "runs");
    for (const auto& m : j.at("models")) c.models.push_back(model_from_json(m));
    const json tasks = j.value("tasks", json("all"));
    if (tasks.is_string()) {
      c.tasks = {tasks.get<std::string>()};
    } else {
      c.tasks = tasks.get<std::vector<std::string>>();
    }
    if (j.contains("suite")) {
      const json& s = j.at("suite");
      c.suite.source = s.value("source", "generate");
      c.suite.count = s.value("count", 5);
      c.suite.seed = s.value("seed", std::uint64_t{1});
      c.suite.path = s.value("path", "");
      if (c.suite.source != "generate" && c.suite.source != "ingest") {
        throw ConfigError("suite.source must be 'generate' or 'ingest'");
      }
    }
    const json enc = j.value("encodings", json("baseline"));
    if (enc.is_string()) {
      c.encoding_set = enc.get<std::string>();
    } else {
      c.encoding_set = "explicit";
      for (const auto& e : enc) c.encodings.push_back(e.get<EncodingSpec>());
    }
    if (j.contains("baseline")) {
      c.baseline = j.at("baseline").get<EncodingSpec>();
    } else if (c.suite.source == "ingest") {
      // Ingested files carry the dataset's own edge order.
      c.baseline.order = OrderRule::kVerbatim;
    }
    if (j.contains("relabel_seeds")) {
      const json& s = j.at("relabel_seeds");
      if (s.is_number_integer()) {
        for (std::uint64_t i = 1; i <= s.get<std::uint64_t>(); ++i) {
          c.relabel_seeds.push_back(i);
        }
      } else {
        c.relabel_seeds = s.get<std::vector<std::uint64_t>>();
      }
    } else {
      for (std::uint64_t i = 1; i <= 10; ++i) c.relabel_seeds.push_back(i);
    }
    c.include_identity = j.value("include_identity", false);
    c.shuffle_seed = j.value("shuffle_seed", std::uint64_t{0});
    if (j.contains("check")) {
      c.check.abs_tol = j.at("check").value("abs_tol", c.check.abs_tol);
      c.check.rel_tol = j.at("check").value("rel_tol", c.check.rel_tol);
    }
    if (j.contains("extract")) {
      c.extract.clear();
      for (const auto& r : j.at("extract")) {
        c.extract.push_back(parse_extract_rule(r.get<std::string>()));
      }
    }
    if (c.models.empty()) throw ConfigError("config lists no models");
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid run config: ") + e.what());
  }
}

json config_to_json(const RunConfig& c) {
  json models = json::array();
  for (const auto& m : c.models) models.push_back(model_to_json(m));
  json encodings;
  if (c.encoding_set == "explicit") {
    encodings = json::array();
    for (const auto& e : c.encodings) encodings.push_back(e);
  } else {
    encodings = c.encoding_set;
  }
  json extract = json::array();
  for (auto r : c.extract) extract.push_back(std::string(to_string(r)));
  return {{"run_id", c.run_id},
          {"output", c.output.string()},
          {"models", models},
          {"tasks", c.tasks},
          {"suite",
           {{"source", c.suite.source},
            {"count", c.suite.count},
            {"seed", c.suite.seed},
            {"path", c.suite.path.string()}}},
          {"encodings", encodings},
          {"baseline", c.baseline},
          {"relabel_seeds", c.relabel_seeds},
          {"include_identity", c.include_identity},
          {"shuffle_seed", c.shuffle_seed},
          {"check", {{"abs_tol", c.check.abs_tol}, {"rel_tol", c.check.rel_tol}}},
          {"extract", extract}};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config " + path.string() + " is not JSON");
  return config_from_json(j);
}

std::vector<const TaskSpec*> selected_tasks(const RunConfig& cfg) {
  std::vector<const TaskSpec*> out;
  std::set<std::string> seen;
  auto add = [&](const TaskSpec& t) {
    if (seen.insert(t.id).second) out.push_back(&t);
  };
  for (const auto& name : cfg.tasks) {
    if (name == "all" || name == "core" || name == "spectral" || name == "topological") {
      for (const auto& t : task_catalog()) {
        if (name == "all" || (name == "core" && (t.core_solver || t.spectral)) ||
            (name == "spectral" && t.spectral) || (name == "topological" && !t.spectral)) {
          add(t);
        }
      }
    } else {
      add(find_task(name));
    }
  }
  return out;
}

std::vector<EncodingSpec> selected_encodings(const RunConfig& cfg, bool directed) {
  std::vector<EncodingSpec> candidates;
  const std::string& set = cfg.encoding_set;
  if (set == "baseline") {
  } else if (set == "full_grid") {
    candidates = full_spec_grid(directed, cfg.shuffle_seed);
  } else if (set == "explicit") {
    candidates = cfg.encodings;
  } else {
    candidates = enumerate_specs(parse_ablation(set), cfg.shuffle_seed);
  }
  std::vector<EncodingSpec> out{cfg.baseline};
  for (const auto& s : candidates) {
    if (std::find(out.begin(), out.end(), s) != out.end()) continue;
    try {
      validate(s, directed);
    } catch (const InvalidSpecError&) {
      continue;
    }
    out.push_back(s);
  }
  return out;
}

// -- prompts ----------------------------------------------------------------

std::string build_prompt(const TaskInstance& inst, const EncodingSpec& spec) {
  const TaskSpec& task = find_task(inst.task);
  const std::string question = inst.question ? *inst.question : question_text(task, inst.params);
  return task.description + "\n\n" + render(inst.graph, spec).text + "\n\nQuestion: " +
         question + "\n\n" + format_instruction(task.answer_kind);
}

// -- answer extraction ------------------------------------------------------

namespace {

bool is_list_kind(AnswerKind k) {
  return k == AnswerKind::kNodeSequence || k == AnswerKind::kNodeSet ||
         k == AnswerKind::kEdgeSet;
}

// Balanced top-level [...] spans in order of appearance.
std::vector<std::string_view> top_level_lists(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') {
      if (depth++ == 0) start = i;
    } else if (s[i] == ']' && depth > 0) {
      if (--depth == 0) out.push_back(s.substr(start, i - start + 1));
    }
  }
  return out;
}

const std::regex& number_re() {
  static const std::regex re(R"([-+]?(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][-+]?\d+)?)");
  return re;
}

std::optional<json> parse_list(std::string_view list, AnswerKind kind) {
  const std::string s(list);
  json out = json::array();
  if (kind == AnswerKind::kEdgeSet) {
    static const std::regex pair_re(
        R"([\(\[]\s*([-+]?\d+)\s*,\s*([-+]?\d+)\s*(?:,[^\)\]]*)?[\)\]])");
    const std::string inner = s.substr(1, s.size() - 2);
    for (auto it = std::sregex_iterator(inner.begin(), inner.end(), pair_re);
         it != std::sregex_iterator(); ++it) {
      out.push_back({std::stoll((*it)[1]), std::stoll((*it)[2])});
    }
    if (out.empty() && inner.find_first_not_of(" \t\n") != std::string::npos) {
      return std::nullopt;
    }
    return coerce_answer(kind, out);
  }
  for (auto it = std::sregex_iterator(s.begin(), s.end(), number_re());
       it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod(it->str()));
  }
  return coerce_answer(kind, out);
}

std::optional<json> parse_scalar_token(const std::string& tok, AnswerKind kind) {
  if (kind == AnswerKind::kBoolean) {
    std::string t = tok;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return coerce_answer(kind, json(t));
  }
  return coerce_answer(kind, json(std::stod(tok)));
}

// First value of the kind inside a snippet.
std::optional<json> first_value(std::string_view snippet, AnswerKind kind) {
  if (is_list_kind(kind)) {
    const auto lists = top_level_lists(snippet);
    if (lists.empty()) return std::nullopt;
    return parse_list(lists.front(), kind);
  }
  const std::string s(snippet);
  std::smatch m;
  if (kind == AnswerKind::kBoolean) {
    static const std::regex bool_re(R"(\b(True|False|true|false|TRUE|FALSE|Yes|No|yes|no)\b)");
    if (std::regex_search(s, m, bool_re)) return parse_scalar_token(m[1], kind);
    return std::nullopt;
  }
  if (std::regex_search(s, m, number_re())) return parse_scalar_token(m[0], kind);
  return std::nullopt;
}

std::optional<json> last_value(std::string_view text, AnswerKind kind) {
  const std::string s(text);
  std::string last;
  if (kind == AnswerKind::kBoolean) {
    static const std::regex bool_re(R"(\b(True|False|true|false|TRUE|FALSE|Yes|No|yes|no)\b)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), bool_re);
         it != std::sregex_iterator(); ++it) {
      last = (*it)[1];
    }
  } else {
    for (auto it = std::sregex_iterator(s.begin(), s.end(), number_re());
         it != std::sregex_iterator(); ++it) {
      last = it->str();
    }
  }
  if (last.empty()) return std::nullopt;
  return parse_scalar_token(last, kind);
}

std::optional<std::string_view> last_boxed(std::string_view text) {
  const std::string_view tag = "\\boxed{";
  const auto pos = text.rfind(tag);
  if (pos == std::string_view::npos) return std::nullopt;
  int depth = 1;
  for (std::size_t i = pos + tag.size(); i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0) {
      return text.substr(pos + tag.size(), i - pos - tag.size());
    }
  }
  return std::nullopt;
}

std::optional<std::string_view> after_final_answer(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const std::string_view tag = "final answer is";
  const auto pos = lower.rfind(tag);
  if (pos == std::string::npos) return std::nullopt;
  std::string_view rest = text.substr(pos + tag.size());
  const auto nl = rest.find('\n');
  if (nl != std::string_view::npos && rest.substr(0, nl).find_first_not_of(" :\t") !=
                                          std::string_view::npos) {
    rest = rest.substr(0, nl);
  }
  return rest;
}

}  // namespace

std::optional<json> extract_answer(std::string_view raw, AnswerKind kind,
                                   const std::vector<ExtractRule>& precedence) {
  for (ExtractRule rule : precedence) {
    std::optional<json> v;
    switch (rule) {
      case ExtractRule::kBoxed:
        if (auto s = last_boxed(raw)) v = first_value(*s, kind);
        break;
      case ExtractRule::kFinalAnswer:
        if (auto s = after_final_answer(raw)) v = first_value(*s, kind);
        break;
      case ExtractRule::kLastList:
        if (is_list_kind(kind)) {
          const auto lists = top_level_lists(raw);
          if (!lists.empty()) v = parse_list(lists.back(), kind);
        }
        break;
      case ExtractRule::kLastScalar:
        if (!is_list_kind(kind)) v = last_value(raw, kind);
        break;
    }
    if (v) return v;
  }
  return std::nullopt;
}

// -- records ----------------------------------------------------------------

std::string EvalRecord::cell_key() const {
  return model + "|" + task + "|" + graph_id + "|" + encoding.id() + "|" +
         (relabel_seed ? std::to_string(*relabel_seed) : std::string("identity"));
}

json record_to_json(const EvalRecord& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"run_id", r.run_id},
          {"model", r.model},
          {"task", r.task},
          {"graph_id", r.graph_id},
          {"encoding", r.encoding},
          {"relabel_seed", r.relabel_seed ? json(*r.relabel_seed) : json()},
          {"graph", graph_to_json(r.graph)},
          {"params", params},
          {"prompt", r.prompt},
          {"completion", r.completion},
          {"parsed", r.parsed ? *r.parsed : json()},
          {"truth", r.truth},
          {"verdict", std::string(to_string(r.verdict))},
          {"error", r.error ? json(*r.error) : json()},
          {"latency_ms", r.latency_ms},
          {"prompt_tokens", r.prompt_tokens ? json(*r.prompt_tokens) : json()},
          {"completion_tokens", r.completion_tokens ? json(*r.completion_tokens) : json()},
          {"transport_error", r.transport_error ? json(*r.transport_error) : json()}};
}

EvalRecord record_from_json(const json& j) {
  EvalRecord r;
  r.run_id = j.at("run_id").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.task = j.at("task").get<std::string>();
  r.graph_id = j.at("graph_id").get<std::string>();
  r.encoding = j.at("encoding").get<EncodingSpec>();
  if (!j.at("relabel_seed").is_null()) r.relabel_seed = j.at("relabel_seed").get<std::uint64_t>();
  r.graph = graph_from_json(j.at("graph"));
  for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<NodeId>();
  r.prompt = j.at("prompt").get<std::string>();
  r.completion = j.at("completion").get<std::string>();
  if (!j.at("parsed").is_null()) r.parsed = j.at("parsed");
  r.truth = j.at("truth");
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!j.at("error").is_null()) r.error = j.at("error").get<double>();
  r.latency_ms = j.at("latency_ms").get<double>();
  if (!j.at("prompt_tokens").is_null()) r.prompt_tokens = j.at("prompt_tokens").get<int>();
  if (!j.at("completion_tokens").is_null()) {
    r.completion_tokens = j.at("completion_tokens").get<int>();
  }
  if (!j.at("transport_error").is_null()) {
    r.transport_error = j.at("transport_error").get<std::string>();
  }
  return r;
}

RecordSink::RecordSink(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::app);
  if (!out_) throw ConfigError("cannot append to " + path.string());
}

void RecordSink::write(const EvalRecord& r) {
  const std::string line = record_to_json(r).dump() + "\n";
  std::lock_guard lock(mu_);
  out_ << line;
  out_.flush();
  if (!out_) throw ConfigError("write to record file failed");
}

std::vector<EvalRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::vector<EvalRecord> out;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    ++index;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      spdlog::warn("{}:{}: skipping unreadable record", path.string(), index);
      continue;
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

EvalRecord rescore(const EvalRecord& r, const CheckOptions& check_options,
                   const std::vector<ExtractRule>& extract) {
  EvalRecord out = r;
  const TaskSpec& task = find_task(r.task);
  out.parsed = r.transport_error ? std::nullopt
                                 : extract_answer(r.completion, task.answer_kind, extract);
  out.verdict = check(task, r.graph, r.params, out.parsed, r.truth, check_options);
  out.error.reset();
  const bool numeric = task.answer_kind == AnswerKind::kInteger ||
                       task.answer_kind == AnswerKind::kFloat;
  if (numeric && out.parsed && r.truth.is_number()) {
    out.error = std::abs(out.parsed->get<double>() - r.truth.get<double>());
  }
  return out;
}

}  // namespace graphsym
