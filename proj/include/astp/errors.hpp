#pragma once

#include <stdexcept>
#include <string>

namespace astp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files (world data, policies, transcripts, cassettes).
struct FileFormatError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct TemplateError : Error {
  using Error::Error;
};

// Cart totals exceeding the exact-integer cap signal corrupt input.
struct PriceOverflowError : Error {
  using Error::Error;
};

struct BackendError : Error {
  using Error::Error;
};

struct AuthError : BackendError {
  using BackendError::BackendError;
};

struct TimeoutError : BackendError {
  using BackendError::BackendError;
};

struct RateLimitError : BackendError {
  using BackendError::BackendError;
};

struct TransportError : BackendError {
  using BackendError::BackendError;
};

struct ScriptExhaustedError : BackendError {
  using BackendError::BackendError;
};

// Replay saw a request whose hash differs from the recorded one: prompt drift.
struct CassetteMismatchError : BackendError {
  using BackendError::BackendError;
};

}  // namespace astp
