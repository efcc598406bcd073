#pragma once

#include <stdexcept>
#include <string>

namespace permdual {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  EmptyInput,
  LabelOutOfRange,
  InvalidCover,
  NotATree,
  WrongProduct,
  NotDownFactorization,
  CrossingChords,
  ParseError,
  ResourceCap,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace permdual
