#pragma once

// Simply-laced quivers: validation, mutation, canonical forms, mutation-class
// enumeration, chordless cycles and Dynkin-type detection.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cthh {

/// Vertices are 1-based throughout the public interface.
using Vertex = int;

struct Arrow {
  Vertex source = 0;
  Vertex target = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A finite quiver. Arrows are kept sorted by (source, target); that order
/// is the arrow order used for paths and basis choices downstream.
/// Construction does not validate; call validate() (parse_quiver and the
/// seed constructors do).
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }

  /// Number of arrows i -> j.
  [[nodiscard]] int arrows_between(Vertex i, Vertex j) const;
  [[nodiscard]] bool has_arrow(Vertex i, Vertex j) const { return arrows_between(i, j) > 0; }
  /// Adjacent in the underlying undirected graph.
  [[nodiscard]] bool adjacent(Vertex i, Vertex j) const { return has_arrow(i, j) || has_arrow(j, i); }
  /// Exchange-matrix entry #(i -> j) - #(j -> i).
  [[nodiscard]] int exchange(Vertex i, Vertex j) const { return arrows_between(i, j) - arrows_between(j, i); }
  /// Index of the arrow i -> j in arrows(), or -1.
  [[nodiscard]] int arrow_index(Vertex i, Vertex j) const;

  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const;
  [[nodiscard]] int out_degree(Vertex v) const;
  [[nodiscard]] int in_degree(Vertex v) const;
  /// Underlying graph is a tree (connected, n - 1 edges).
  [[nodiscard]] bool is_tree() const;

  /// Relabels vertex v to perm[v - 1] (perm is a permutation of 1..n).
  [[nodiscard]] Quiver relabeled(std::span<const Vertex> perm) const;
  /// Full subquiver on the given vertices, renumbered 1..k in list order.
  [[nodiscard]] Quiver induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

 private:
  [[nodiscard]] std::size_t cell(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::uint8_t> adjacency_;
};

/// Throws Error with Loop, ParallelArrows, TwoCycle, Disconnected or
/// VertexOutOfRange.
void validate(const Quiver& q);

/// Fomin-Zelevinsky mutation at k. Throws MultipleArrowProduced when an
/// entry of the mutated exchange matrix exceeds 1 in absolute value.
[[nodiscard]] Quiver mutate(const Quiver& q, Vertex k);

/// Label-invariant encoding; equal iff the quivers are isomorphic.
[[nodiscard]] std::string canonical_form(const Quiver& q);
/// The relabeling of q whose serialization realizes canonical_form(q).
[[nodiscard]] Quiver canonical_relabel(const Quiver& q);
/// Hex rendering of a canonical form for reports.
[[nodiscard]] std::string canonical_hex(const std::string& form);

struct ClassMember {
  std::string canonical;  // canonical_form of quiver
  Quiver quiver;          // canonically labeled representative
};

inline constexpr std::size_t kDefaultClassCap = 100000;

/// Mutation class of seed up to isomorphism, sorted by canonical form.
/// Throws CapExceeded when more than cap classes are found.
[[nodiscard]] std::vector<ClassMember> enumerate_class(const Quiver& seed, std::size_t cap = kDefaultClassCap);

struct Cycle {
  /// Cyclic vertex order starting at the smallest vertex. For oriented
  /// cycles the order follows the arrows.
  std::vector<Vertex> vertices;
  bool oriented = false;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Every vertex set whose induced subquiver is a cycle of length >= 3.
[[nodiscard]] std::vector<Cycle> chordless_cycles(const Quiver& q);
[[nodiscard]] std::size_t count_oriented_triangles(const Quiver& q);

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 0;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

[[nodiscard]] std::string to_string(DynkinType t);
/// Parses "A5", "D4", "E8".
[[nodiscard]] DynkinType parse_dynkin(const std::string& text);

/// Classifies a tree quiver by the shape of its underlying graph.
/// Throws NotDynkin for other shapes.
[[nodiscard]] DynkinType classify_tree(const Quiver& tree);

/// Searches the mutation class of q for a tree and classifies it.
[[nodiscard]] DynkinType detect_dynkin(const Quiver& q, std::size_t cap = kDefaultClassCap);

/// Standard seed orientations: A_n path 1->...->n; D_n 1->3, 2->3, 3->4,
/// ..., (n-1)->n; E_n path 1->...->(n-1) plus n->3.
[[nodiscard]] Quiver standard_seed(DynkinType type);

}  // namespace cthh
