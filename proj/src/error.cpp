#include "origami/error.hpp"

namespace origami {

std::string qualified_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "surface.SYNTAX";
    case ErrorCode::DuplicateSquare: return "surface.DUPLICATE_SQUARE";
    case ErrorCode::MissingSquare: return "surface.MISSING_SQUARE";
    case ErrorCode::BadFlip: return "surface.BAD_FLIP";
    case ErrorCode::NonFilling: return "surface.NON_FILLING";
    case ErrorCode::Disconnected: return "surface.DISCONNECTED";
    case ErrorCode::InconsistentTraversal: return "curves.INCONSISTENT_TRAVERSAL";
    case ErrorCode::NotTransverse: return "curves.NOT_TRANSVERSE";
    case ErrorCode::Degenerate: return "curves.DEGENERATE";
    case ErrorCode::RankMismatch: return "homology.RANK_MISMATCH";
    case ErrorCode::UnknownCurve: return "twists.UNKNOWN_CURVE";
    case ErrorCode::BadWord: return "twists.BAD_WORD";
    case ErrorCode::ClassNotInvariant: return "flux.CLASS_NOT_INVARIANT";
    case ErrorCode::NotNullhomologous: return "flux.NOT_NULLHOMOLOGOUS";
    case ErrorCode::Io: return "cli.IO";
  }
  return "unknown";
}

}  // namespace origami
