#pragma once

#include <stdexcept>
#include <string>

namespace softtop {

enum class ErrorCode {
  kInvalidContext,
  kContextMismatch,
  kDomain,          // soft set outside the admissible collection (MIXED)
  kInvalidArgument,
  kInvalidTopology,
  kInvalidSubbase,
  kCapExceeded,
  kInstance,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what)
      : Error(ErrorCode::kContextMismatch, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kDomain, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what)
      : Error(ErrorCode::kCapExceeded, what) {}
};

}  // namespace softtop
