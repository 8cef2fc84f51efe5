#include "cthh/error.hpp"

namespace cthh {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Loop: return "Loop";
    case Errc::ParallelArrows: return "ParallelArrows";
    case Errc::TwoCycle: return "TwoCycle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MultipleArrowProduced: return "MultipleArrowProduced";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotDynkin: return "NotDynkin";
    case Errc::NonOrientedChordlessCycle: return "NonOrientedChordlessCycle";
    case Errc::ArrowOnThreeCycles: return "ArrowOnThreeCycles";
    case Errc::NotFiniteDimensional: return "NotFiniteDimensional";
    case Errc::InvalidRelations: return "InvalidRelations";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::UnclassifiedD: return "UnclassifiedD";
    case Errc::NotInTable: return "NotInTable";
    case Errc::NonIntegralN: return "NonIntegralN";
    case Errc::ResolutionBudgetExceeded: return "ResolutionBudgetExceeded";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonIntegerInterpolation: return "NonIntegerInterpolation";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace cthh
