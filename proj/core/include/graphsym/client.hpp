#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "graphsym/harness.hpp"

namespace graphsym {

struct Completion {
  std::string text;
  double latency_ms = 0.0;
  std::optional<int> prompt_tokens;
  std::optional<int> completion_tokens;
};

/// What a model sees. Mocks also peek at the instance behind the prompt.
struct ModelRequest {
  std::string prompt;
  const TaskInstance* instance = nullptr;
  /// Mean numeric ground truth of the task over the run's instances.
  std::optional<double> task_mean;
  /// Most common ground truth of the task (non-numeric kinds).
  std::optional<nlohmann::json> task_mode;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  /// Throws TransportError after exhausting retries and ConfigError on a
  /// 4xx response.
  virtual Completion complete(const ModelRequest& request) = 0;
};

/// OpenAI-compatible chat completions over HTTP, three attempts with
/// exponential backoff.
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(ModelConfig cfg);
  Completion complete(const ModelRequest& request) override;

  /// Request body sent for a prompt (exposed for tests).
  nlohmann::json request_body(const std::string& prompt) const;

 private:
  ModelConfig cfg_;
  std::string host_;  // scheme://host:port
  std::string path_;  // .../chat/completions
  std::string api_key_;
};

/// Synthetic models.
///
/// oracle: parses the graph block out of the prompt, re-solves the task on
/// it and answers "The final answer is: X". mean_baseline: answers the task
/// mean (numeric) or mode. noisy: oracle plus seeded Gaussian noise of
/// standard deviation sigma on numeric answers.
class MockClient : public ChatClient {
 public:
  explicit MockClient(ModelConfig cfg);
  Completion complete(const ModelRequest& request) override;

 private:
  ModelConfig cfg_;
};

std::unique_ptr<ChatClient> make_client(const ModelConfig& cfg);

/// Local OpenAI-compatible endpoint for smoke tests. Answers every request
/// with a fixed completion; every `fail_every`-th request (if > 0) gets a
/// 503 first so retries are exercised.
class MockEndpoint {
 public:
  struct Options {
    std::string answer = "The final answer is: 1";
    int fail_every = 0;
  };

  MockEndpoint();
  explicit MockEndpoint(Options options);
  ~MockEndpoint();
  MockEndpoint(const MockEndpoint&) = delete;
  MockEndpoint& operator=(const MockEndpoint&) = delete;

  /// Binds (port 0 picks a free one) and serves on a background thread.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  /// Blocks serving on the calling thread.
  void serve_forever(const std::string& host, int port);
  void stop();
  int requests() const noexcept { return requests_.load(); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Options options_;
  std::atomic<int> requests_{0};
  std::thread thread_;
};

}  // namespace graphsym
