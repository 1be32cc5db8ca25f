#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "astp/errors.hpp"

namespace astp {

struct ChatRequest {
  std::string prompt;
  std::string model_id;
  double temperature = 0.7;
  int thinking_budget = 0;
  std::optional<int> seed_hint;
};

struct ChatResult {
  std::string text;
  std::int64_t completion_tokens = 0;
  std::int64_t thought_tokens = 0;  // -1 when the provider does not report it
  double latency_seconds = 0.0;
  std::map<std::string, std::string> provider_meta;
};

enum class BackendKind { HTTP_PROVIDER, SCRIPTED, RECORD_REPLAY };

class Backend {
 public:
  virtual ~Backend() = default;
  virtual ChatResult complete(const ChatRequest& req) = 0;
  virtual std::string name() const = 0;
};

/// Replays queued texts in order. Exhaustion is an error.
class ScriptedBackend : public Backend {
 public:
  ScriptedBackend() = default;
  explicit ScriptedBackend(std::vector<std::string> texts);

  void push(std::string text);
  void push_result(ChatResult result);
  std::size_t remaining() const;

  ChatResult complete(const ChatRequest& req) override;
  std::string name() const override { return "scripted"; }

 private:
  mutable std::mutex mutex_;
  std::deque<ChatResult> queue_;
};

/// Stable 64-bit hash of (model_id, prompt); cassette records key on it.
std::uint64_t request_hash(const ChatRequest& req);
std::string request_hash_hex(const ChatRequest& req);

struct CassetteRecord {
  std::string request_hash;
  ChatResult result;
};

std::vector<CassetteRecord> load_cassette(const std::filesystem::path& path);
void save_cassette(const std::filesystem::path& path,
                   const std::vector<CassetteRecord>& records);

/// Replays a recorded cassette in order. A request whose hash differs from
/// the next record is a hard CassetteMismatchError: the prompt drifted from
/// what was recorded.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(std::vector<CassetteRecord> records);
  static std::unique_ptr<ReplayBackend> from_file(
      const std::filesystem::path& path);

  ChatResult complete(const ChatRequest& req) override;
  std::string name() const override { return "replay"; }
  std::size_t remaining() const;

 private:
  mutable std::mutex mutex_;
  std::vector<CassetteRecord> records_;
  std::size_t next_ = 0;
};

/// Wraps another backend and appends every exchange to a cassette.
class RecordingBackend : public Backend {
 public:
  RecordingBackend(Backend& inner, std::filesystem::path out_path);
  ~RecordingBackend() override;

  ChatResult complete(const ChatRequest& req) override;
  std::string name() const override { return "record(" + inner_.name() + ")"; }

 private:
  Backend& inner_;
  std::filesystem::path out_path_;
  std::mutex mutex_;
  std::vector<CassetteRecord> records_;
};

}  // namespace astp
