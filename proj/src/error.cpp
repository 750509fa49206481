#include "edgeideal/error.hpp"

namespace edgeideal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotUnmixed: return "NotUnmixed";
    case ErrorKind::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotTransitivelyClosed: return "NotTransitivelyClosed";
    case ErrorKind::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::CoordinateTie: return "CoordinateTie";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace edgeideal
