#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "astp/backend.hpp"

namespace astp {

struct HttpBackendConfig {
  std::string base_url;  // e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::string api_key_env = "ASTP_API_KEY";
  double timeout_seconds = 60.0;
  int max_attempts = 3;
  double backoff_base_seconds = 0.5;
  int max_in_flight = 4;
  // Pass a JSON-object response_format to providers that support native
  // structured output. Capability flag only.
  bool structured_output = false;
};

struct HttpRequestData {
  std::string url;
  std::map<std::string, std::string> headers;
  std::string body;
  double timeout_seconds = 60.0;
};

struct HttpResponseData {
  int status = 0;            // 0 = transport failure
  std::string body;
  std::string error;         // transport diagnostics when status == 0
};

/// Chat-completions client over a pluggable transport. The default transport
/// uses cpp-httplib; tests inject a fake to exercise retry, backoff, and
/// error mapping without sockets. Transient failures (429, 5xx, transport
/// errors) are retried with bounded exponential backoff, at most
/// `max_attempts` tries; auth failures abort immediately. A global
/// max-in-flight limit bounds concurrent calls across sessions.
class HttpBackend : public Backend {
 public:
  using Transport = std::function<HttpResponseData(const HttpRequestData&)>;
  using Sleeper = std::function<void(double seconds)>;

  explicit HttpBackend(HttpBackendConfig config, Transport transport = {},
                       Sleeper sleeper = {});
  ~HttpBackend() override;

  ChatResult complete(const ChatRequest& req) override;
  std::string name() const override { return "http"; }

  /// Request body for a chat request; exposed for tests.
  std::string build_body(const ChatRequest& req) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace astp
