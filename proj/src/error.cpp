#include "locdom/error.hpp"

namespace locdom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::BadSyntax: return "BadSyntax";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::EdgeTwins: return "EdgeTwins";
    case ErrorCode::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SpecTooLarge: return "SpecTooLarge";
  }
  return "Unknown";
}

}  // namespace locdom
