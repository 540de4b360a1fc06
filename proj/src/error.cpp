#include "agmswarm/error.hpp"

namespace agmswarm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSquareInput: return "NonSquareInput";
    case ErrorCode::FieldNot3Mod4: return "FieldNot3Mod4";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InadmissibleInput: return "InadmissibleInput";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::WrongCongruenceClass: return "WrongCongruenceClass";
    case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::MismatchedDiscriminants: return "MismatchedDiscriminants";
    case ErrorCode::TwoNotSplit: return "TwoNotSplit";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NoCandidateMatched: return "NoCandidateMatched";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace agmswarm
