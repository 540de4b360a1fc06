#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agmswarm {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  Overflow,
  BadDegree,
  ParseError,
  NonSquareInput,
  FieldNot3Mod4,
  ZeroInput,
  DomainError,
  InadmissibleInput,
  GuardExceeded,
  WrongCongruenceClass,
  SmallCharacteristic,
  BadLambda,
  BadDiscriminant,
  MismatchedDiscriminants,
  TwoNotSplit,
  PrecisionExhausted,
  NoCandidateMatched,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace agmswarm
