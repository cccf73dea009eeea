#include "graphsym/client.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "graphsym/errors.hpp"
#include "graphsym/serialize.hpp"

namespace graphsym {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string final_answer(const TaskSpec& task, const json& value) {
  return "The final answer is: " + format_answer(task.answer_kind, value);
}

bool numeric(AnswerKind k) {
  return k == AnswerKind::kInteger || k == AnswerKind::kFloat;
}

}  // namespace

// -- HTTP client ------------------------------------------------------------

HttpChatClient::HttpChatClient(ModelConfig cfg) : cfg_(std::move(cfg)) {
  const std::string& url = cfg_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint '" + url + "' needs a scheme (http://...)");
  }
  if (url.compare(0, scheme_end, "http") != 0) {
    throw ConfigError("only plain http endpoints are supported: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  host_ = url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!path.empty() && path.back() == '/') path.pop_back();
  const std::string suffix = "/chat/completions";
  if (path.size() < suffix.size() ||
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) != 0) {
    path += suffix;
  }
  path_ = path;
  if (!cfg_.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg_.api_key_env.c_str())) api_key_ = key;
  }
}

json HttpChatClient::request_body(const std::string& prompt) const {
  json body = {{"model", cfg_.model.empty() ? cfg_.name : cfg_.model},
               {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
               {"temperature", cfg_.temperature},
               {"max_tokens", cfg_.max_tokens}};
  if (cfg_.reasoning_effort) body["reasoning_effort"] = *cfg_.reasoning_effort;
  return body;
}

Completion HttpChatClient::complete(const ModelRequest& request) {
  httplib::Client cli(host_);
  cli.set_connection_timeout(10);
  cli.set_read_timeout(cfg_.timeout_s);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  const std::string body = request_body(request.prompt).dump();

  constexpr int kAttempts = 3;
  std::string last_error;
  const auto start = Clock::now();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(cfg_.retry_base_ms * (1 << (attempt - 1))));
    }
    auto res = cli.Post(path_, headers, body, "application/json");
    if (!res) {
      last_error = "request failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status >= 400) {
      throw ConfigError("endpoint " + cfg_.endpoint + " rejected the request: HTTP " +
                        std::to_string(res->status) + " " + res->body);
    }
    json j = json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || j["choices"].empty()) {
      last_error = "malformed response body";
      continue;
    }
    Completion c;
    const json& msg = j["choices"][0]["message"];
    c.text = msg.contains("content") && msg["content"].is_string()
                 ? msg["content"].get<std::string>()
                 : std::string();
    c.latency_ms = elapsed_ms(start);
    if (j.contains("usage") && j["usage"].is_object()) {
      const json& u = j["usage"];
      if (u.contains("prompt_tokens")) c.prompt_tokens = u["prompt_tokens"].get<int>();
      if (u.contains("completion_tokens")) {
        c.completion_tokens = u["completion_tokens"].get<int>();
      }
    }
    return c;
  }
  throw TransportError("giving up after " + std::to_string(kAttempts) +
                       " attempts: " + last_error);
}

// -- mocks ------------------------------------------------------------------

MockClient::MockClient(ModelConfig cfg) : cfg_(std::move(cfg)) {
  if (!cfg_.mock) throw ConfigError("model " + cfg_.name + " is not a mock");
}

Completion MockClient::complete(const ModelRequest& request) {
  const auto start = Clock::now();
  if (!request.instance) throw ConfigError("mock models need the task instance");
  const TaskInstance& inst = *request.instance;
  const TaskSpec& task = find_task(inst.task);
  Completion c;

  if (*cfg_.mock == MockKind::kMeanBaseline) {
    if (numeric(task.answer_kind) && request.task_mean) {
      const double mean = *request.task_mean;
      c.text = final_answer(task, task.answer_kind == AnswerKind::kInteger
                                      ? json(std::llround(mean))
                                      : json(mean));
    } else if (request.task_mode) {
      c.text = final_answer(task, *request.task_mode);
    } else {
      c.text = "I do not know.";
    }
    c.latency_ms = elapsed_ms(start);
    return c;
  }

  json answer;
  try {
    const ParsedGraph parsed = parse(request.prompt);
    answer = reference_answer(task, parsed.graph, inst.params);
  } catch (const ReferenceUnavailableError&) {
    answer = inst.truth;
  } catch (const Error& e) {
    c.text = std::string("I could not read the graph: ") + e.what();
    c.latency_ms = elapsed_ms(start);
    return c;
  }

  if (*cfg_.mock == MockKind::kNoisy && numeric(task.answer_kind) && answer.is_number()) {
    RngStream rng(derive_seed(cfg_.noise_seed, request.prompt));
    const double noisy = answer.get<double>() + cfg_.noise_sigma * rng.normal();
    answer = task.answer_kind == AnswerKind::kInteger ? json(std::llround(noisy))
                                                      : json(noisy);
  }
  c.text = final_answer(task, answer);
  c.latency_ms = elapsed_ms(start);
  return c;
}

std::unique_ptr<ChatClient> make_client(const ModelConfig& cfg) {
  if (cfg.mock) return std::make_unique<MockClient>(cfg);
  return std::make_unique<HttpChatClient>(cfg);
}

// -- local endpoint ---------------------------------------------------------

struct MockEndpoint::Impl {
  httplib::Server server;
};

MockEndpoint::MockEndpoint() : MockEndpoint(Options{}) {}

MockEndpoint::MockEndpoint(Options options)
    : impl_(std::make_unique<Impl>()), options_(std::move(options)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const int n = ++requests_;
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.contains("messages")) {
      res.status = 400;
      res.set_content(R"({"error":"bad request"})", "application/json");
      return;
    }
    if (options_.fail_every > 0 && n % options_.fail_every == 0) {
      res.status = 503;
      return;
    }
    const json out = {
        {"id", "mock-" + std::to_string(n)},
        {"object", "chat.completion"},
        {"model", body.value("model", "mock")},
        {"choices",
         json::array({{{"index", 0},
                       {"message", {{"role", "assistant"}, {"content", options_.answer}}},
                       {"finish_reason", "stop"}}})},
        {"usage", {{"prompt_tokens", 1}, {"completion_tokens", 1}, {"total_tokens", 2}}}};
    res.set_content(out.dump(), "application/json");
  };
  impl_->server.Post("/v1/chat/completions", handler);
  impl_->server.Post("/chat/completions", handler);
}

MockEndpoint::~MockEndpoint() { stop(); }

int MockEndpoint::start(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw TransportError("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void MockEndpoint::serve_forever(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw TransportError("cannot listen on " + host + ":" + std::to_string(port));
  }
}

void MockEndpoint::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace graphsym
