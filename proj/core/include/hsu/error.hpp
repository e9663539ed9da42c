#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hsu {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteInput,
  OutOfRange,
  NegativeThreshold,
  EmptySignal,
  NotPositiveDefinite,
  GridTooLargeForDense,
  TooLarge,
  ConfigError,
  ZeroReference,
  ZeroColumn,
  ZeroSignal,
  UnreachableCoherence,
  TooManyEndmembers,
  BadMagic,
  TruncatedFile,
  IoError,
  InexactSolve,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type carried across the library; `code()` tells callers
/// (notably the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ConfigError that remembers which configuration key was rejected.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(ErrorCode::ConfigError, key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace hsu
