#pragma once

#include <stdexcept>
#include <string>

namespace plabic {

enum class ErrorKind {
  InvalidGraph,
  IllegalMove,
  BadLabel,
  UndecoratableFixedPoint,
  NotNormal,
  HasInternalLeaf,
  NotReduced,
  MalformedWindow,
  MalformedPermutation,
  NotANecklace,
  SizeMismatch,
  FrozenVertex,
  NotATriangulation,
  BadWord,
  TooLarge,
  ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace plabic
