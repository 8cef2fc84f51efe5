#pragma once

// Brute-force Hochschild cohomology of a bound quiver algebra over an exact
// field, via a minimal projective bimodule resolution
//
//   ... -> P_2 -> P_1 -> P_0 -> Lambda -> 0,   P_k = (+) Lambda e_a (x) e_b Lambda
//
// followed by Hom_{Lambda-Lambda}(-, Lambda), where the summand for (a, b)
// contributes e_a Lambda e_b. Also HH^0 (the center) and HH^1 (outer
// derivations) by direct linear algebra.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cthh/algebra.hpp"
#include "cthh/field.hpp"

namespace cthh {

struct OracleOptions {
  /// Largest total K-dimension allowed for a single projective.
  std::size_t budget = 50000;
  /// 0 keeps the kernel basis order when lifting generators; any other value
  /// shuffles the candidates deterministically.
  std::uint64_t lift_seed = 0;
  /// Verify d o d = 0, exactness, and HH^0 / HH^1 against the direct
  /// computations; violations throw InternalInconsistency.
  bool check_invariants = true;
};

struct ResolutionStep {
  /// (a, b) for each summand Lambda e_a (x) e_b Lambda, 1-based vertices.
  std::vector<std::pair<Vertex, Vertex>> summands;
  std::size_t dimension = 0;
  /// d_{k-1} o d_k = 0 was checked on every generator (k >= 1).
  bool composition_zero = false;
  /// image(d_{k+1}) == kernel(d_k) was checked block by block.
  bool exact = false;
};

struct HHDims {
  std::vector<std::size_t> dims;
  FieldSpec field;
  std::size_t max_i = 0;
};

struct OracleReport {
  HHDims hh;
  std::vector<ResolutionStep> steps;
};

/// Throws FieldMismatch when field differs from the field a was built over.
[[nodiscard]] std::size_t center_dim(const BoundAlgebra& a, FieldSpec field);

/// dim Der - dim Inn, computed on derivations that vanish on the vertex
/// idempotents (every derivation is cohomologous to one of those).
[[nodiscard]] std::size_t hh1_dim(const BoundAlgebra& a, FieldSpec field);

/// dim Der - dim Inn with all linear maps as unknowns. Quadratically many
/// unknowns in dim a; meant for small algebras and cross-checks.
[[nodiscard]] std::size_t hh1_dim_all_derivations(const BoundAlgebra& a, FieldSpec field);

[[nodiscard]] HHDims hh_dims(const BoundAlgebra& a, FieldSpec field, std::size_t max_i,
                             const OracleOptions& options = {});

/// hh_dims together with the resolution it used.
[[nodiscard]] OracleReport hochschild_report(const BoundAlgebra& a, FieldSpec field, std::size_t max_i,
                                             const OracleOptions& options = {});

}  // namespace cthh
