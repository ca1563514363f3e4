#include "pc/error.hpp"

namespace pc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAPowerCircuit: return "NotAPowerCircuit";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::CircuitMismatch: return "CircuitMismatch";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotCompact: return "NotCompact";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::RuleNotApplicable: return "RuleNotApplicable";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace pc
