#pragma once

// Finite-dimensional bound quiver algebras KQ/I, with the ideal generated by
// a RelationSet, and the Cartan data derived from them.
//
// Paths compose left to right: the product of paths p and q is the
// concatenation pq when target(p) == source(q) and zero otherwise, so
// e_i * Lambda * e_j is spanned by the paths from i to j.

#include <cstddef>
#include <optional>
#include <vector>

#include "cthh/field.hpp"
#include "cthh/integer.hpp"
#include "cthh/quiver.hpp"
#include "cthh/relations.hpp"

namespace cthh {

struct SparseTerm {
  std::size_t index = 0;
  Rational coefficient;
  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};
using SparseVector = std::vector<SparseTerm>;

class BoundAlgebra {
 public:
  BoundAlgebra(Quiver quiver, FieldSpec field, std::vector<Path> basis, std::vector<SparseVector> products,
               std::size_t cutoff);

  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(quiver_.vertex_count()); }

  /// Trivial paths e_1..e_n come first (index v - 1), then the remaining
  /// normal paths in increasing degree-lexicographic order.
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  [[nodiscard]] const Path& basis_path(std::size_t i) const { return basis_[i]; }
  [[nodiscard]] Vertex source(std::size_t i) const { return basis_[i].source; }
  [[nodiscard]] Vertex target(std::size_t i) const { return basis_[i].target; }
  [[nodiscard]] std::size_t idempotent(Vertex v) const { return static_cast<std::size_t>(v - 1); }
  [[nodiscard]] std::optional<std::size_t> index_of(const Path& p) const;

  /// Number of basis paths per length, without trailing zeros.
  [[nodiscard]] const std::vector<std::size_t>& degree_dims() const noexcept { return degree_dims_; }
  [[nodiscard]] std::size_t degree_dim(std::size_t length) const {
    return length < degree_dims_.size() ? degree_dims_[length] : 0;
  }
  [[nodiscard]] std::size_t max_path_length() const noexcept { return degree_dims_.size() - 1; }

  /// Product of basis elements i and j as a combination of basis elements.
  /// Coefficients are exact rationals; over GF(p) they are the canonical
  /// residues in [0, p).
  [[nodiscard]] const SparseVector& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }

  /// Path-length cutoff at which the quotient stabilized.
  [[nodiscard]] std::size_t cutoff() const noexcept { return cutoff_; }

 private:
  Quiver quiver_;
  FieldSpec field_;
  std::vector<Path> basis_;
  std::vector<SparseVector> products_;
  std::vector<std::size_t> degree_dims_;
  std::size_t cutoff_;
};

/// KQ/(relations) over the given field, by truncated ideal closure with
/// stabilization of the cutoff. Throws NotFiniteDimensional or
/// InvalidRelations.
[[nodiscard]] BoundAlgebra build_algebra(const Quiver& q, const RelationSet& relations,
                                         FieldSpec field = FieldSpec::rationals());

/// Relations from generate_relations, then build_algebra.
[[nodiscard]] BoundAlgebra cluster_tilted_algebra(const Quiver& q, FieldSpec field = FieldSpec::rationals());

struct CartanData {
  /// matrix[i][j] = number of basis paths from vertex i+1 to vertex j+1.
  IntMatrix matrix;
  BigInt det;
  /// det(x C - C^T).
  IntPolynomial assoc_poly;
};

[[nodiscard]] CartanData cartan(const BoundAlgebra& a);
[[nodiscard]] CartanData cartan_of_matrix(IntMatrix c);

/// (xy)z == x(yz) on every basis triple, checked exactly over a.field().
[[nodiscard]] bool is_associative(const BoundAlgebra& a);

}  // namespace cthh
