#pragma once

// Defining relations of a cluster-tilted algebra of finite type, read off
// from the chordless oriented cycles of its quiver (cyclic derivatives of
// the potential that sums those cycles).

#include <cstddef>
#include <string>
#include <vector>

#include "cthh/quiver.hpp"

namespace cthh {

/// A path in a quiver as a list of arrow indices (into Quiver::arrows()).
/// The empty list is the trivial path at `source` (== `target`).
struct Path {
  std::vector<std::size_t> arrows;
  Vertex source = 0;
  Vertex target = 0;

  [[nodiscard]] std::size_t length() const noexcept { return arrows.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return arrows.empty(); }

  static Path trivial(Vertex v) { return {{}, v, v}; }
  /// Checks composability against q and fills in source and target.
  static Path from_arrows(const Quiver& q, std::vector<std::size_t> arrows);

  friend bool operator==(const Path&, const Path&) = default;
};

/// Degree-lexicographic order: shorter first, then by arrow indices.
[[nodiscard]] bool deglex_less(const Path& a, const Path& b) noexcept;

/// Renders a path as its vertex sequence, e.g. "2>3>1"; trivial paths as "e2".
[[nodiscard]] std::string format_path(const Quiver& q, const Path& p);

struct RelationTerm {
  int coefficient = 1;
  Path path;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct Relation {
  std::vector<RelationTerm> terms;
  /// Index of the arrow whose cyclic derivative produced this relation.
  std::size_t arrow = 0;

  [[nodiscard]] Vertex source() const { return terms.front().path.source; }
  [[nodiscard]] Vertex target() const { return terms.front().path.target; }
  [[nodiscard]] bool is_zero_relation() const noexcept { return terms.size() == 1; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct RelationSet {
  /// Sorted by producing arrow.
  std::vector<Relation> relations;

  [[nodiscard]] std::size_t size() const noexcept { return relations.size(); }
  [[nodiscard]] bool empty() const noexcept { return relations.empty(); }
  [[nodiscard]] std::size_t zero_relations() const;
  [[nodiscard]] std::size_t commutativity_relations() const;
};

/// One relation per arrow on a chordless oriented cycle: the sum, with
/// coefficient +1, of the complementary paths of that arrow in each such
/// cycle. Throws NonOrientedChordlessCycle or ArrowOnThreeCycles.
[[nodiscard]] RelationSet generate_relations(const Quiver& q);

/// "a>b>c + d>e>f" style rendering.
[[nodiscard]] std::string format_relation(const Quiver& q, const Relation& r);

}  // namespace cthh
