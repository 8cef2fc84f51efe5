#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cthh {

enum class Errc {
  // quiver-core
  Loop,
  ParallelArrows,
  TwoCycle,
  Disconnected,
  VertexOutOfRange,
  MultipleArrowProduced,
  CapExceeded,
  NotDynkin,
  // relations-gen
  NonOrientedChordlessCycle,
  ArrowOnThreeCycles,
  // algebra-model
  NotFiniteDimensional,
  InvalidRelations,
  // classifier
  WrongFamily,
  UnclassifiedD,
  NotInTable,
  NonIntegralN,
  // hochschild-oracle
  ResolutionBudgetExceeded,
  FieldMismatch,
  InternalInconsistency,
  // exact-linalg and shared
  InvalidArgument,
  NonIntegerInterpolation,
  // cli
  SyntaxError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the violated condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cthh
