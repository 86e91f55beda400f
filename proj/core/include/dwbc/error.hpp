#pragma once

#include <stdexcept>
#include <string>

namespace dwbc {

enum class ErrorKind {
  ZeroDenominator,
  OrderExceeded,
  OutOfRange,
  NonInvertible,
  TruncationInsufficient,
  SizeLimit,
  InvalidConfig,
  InvalidRegion,
  NearDegenerate,
  Singular,
  DegeneratePoints,
  PoleCollision,
  DegenerateHankel,
  SamplePoleHit,
  ChainBreak,
  Parse,
};

const char* error_name(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace dwbc
