#include "cthh/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "cthh/error.hpp"
#include "cthh/matrix.hpp"

namespace cthh {

BoundAlgebra::BoundAlgebra(Quiver quiver, FieldSpec field, std::vector<Path> basis,
                           std::vector<SparseVector> products, std::size_t cutoff)
    : quiver_(std::move(quiver)),
      field_(field),
      basis_(std::move(basis)),
      products_(std::move(products)),
      cutoff_(cutoff) {
  for (const auto& p : basis_) {
    if (degree_dims_.size() <= p.length()) degree_dims_.resize(p.length() + 1, 0);
    ++degree_dims_[p.length()];
  }
}

std::optional<std::size_t> BoundAlgebra::index_of(const Path& p) const {
  if (p.is_trivial()) return idempotent(p.source);
  auto lo = std::lower_bound(basis_.begin() + static_cast<std::ptrdiff_t>(vertex_count()), basis_.end(), p,
                             [](const Path& a, const Path& b) { return deglex_less(a, b); });
  if (lo != basis_.end() && lo->arrows == p.arrows) return static_cast<std::size_t>(lo - basis_.begin());
  return std::nullopt;
}

namespace {

using ArrowWord = std::vector<std::size_t>;

bool word_less(const ArrowWord& a, const ArrowWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// KQ / (I + paths of length >= cutoff), for a two-sided ideal I generated by
// the relations. Each (source, target) block of paths is ordered from largest
// to smallest in degree-lexicographic order, so the pivot of every echelon
// row is its largest path and normal paths are the non-pivot ones.
template <class Field>
class TruncatedQuotient {
 public:
  using Value = typename Field::value_type;

  TruncatedQuotient(const Quiver& q, const RelationSet& relations, Field field, std::size_t cutoff)
      : q_(&q), field_(std::move(field)), n_(static_cast<std::size_t>(q.vertex_count())), cutoff_(cutoff) {
    enumerate_paths();
    for (std::size_t b = 0; b < blocks_.size(); ++b) bases_.emplace_back(field_, blocks_[b].paths.size());
    close_ideal(relations);
  }

  [[nodiscard]] std::size_t cutoff() const noexcept { return cutoff_; }

  /// Non-trivial normal paths in increasing degree-lexicographic order.
  [[nodiscard]] std::vector<ArrowWord> normal_paths() const {
    std::vector<ArrowWord> out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::size_t c = 0; c < blocks_[b].paths.size(); ++c) {
        if (!bases_[b].is_pivot(c)) out.push_back(blocks_[b].paths[c]);
      }
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
  }

  [[nodiscard]] std::vector<std::size_t> degree_dims() const {
    std::vector<std::size_t> dims{n_};
    for (const auto& w : normal_paths()) {
      if (dims.size() <= w.size()) dims.resize(w.size() + 1, 0);
      ++dims[w.size()];
    }
    return dims;
  }

  /// Normal form of a non-trivial path as (normal path, coefficient) pairs.
  [[nodiscard]] std::vector<std::pair<ArrowWord, Value>> normal_form(const ArrowWord& w) const {
    if (w.size() >= cutoff_) return {};
    const auto b = block_of(w);
    const auto& block = blocks_[b];
    const auto col = block.column.at(w);
    const auto* row = bases_[b].row_with_pivot(col);
    if (row == nullptr) return {{w, field_.one()}};
    std::vector<std::pair<ArrowWord, Value>> out;
    for (std::size_t c = 0; c < row->size(); ++c) {
      if (c == col || field_.is_zero((*row)[c])) continue;
      out.emplace_back(block.paths[c], field_.neg((*row)[c]));
    }
    return out;
  }

 private:
  struct Block {
    std::vector<ArrowWord> paths;
    std::map<ArrowWord, std::size_t> column;
  };

  [[nodiscard]] std::size_t block_index(Vertex s, Vertex t) const {
    return static_cast<std::size_t>(s - 1) * n_ + static_cast<std::size_t>(t - 1);
  }
  [[nodiscard]] std::size_t block_of(const ArrowWord& w) const {
    return block_index(q_->arrows()[w.front()].source, q_->arrows()[w.back()].target);
  }

  void enumerate_paths() {
    blocks_.assign(n_ * n_, {});
    const auto& arrows = q_->arrows();
    std::vector<ArrowWord> layer;
    for (std::size_t a = 0; a < arrows.size(); ++a) layer.push_back({a});
    while (!layer.empty() && layer.front().size() < cutoff_) {
      std::vector<ArrowWord> next;
      for (auto& w : layer) {
        const Vertex end = arrows[w.back()].target;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
          if (arrows[a].source != end) continue;
          ArrowWord longer = w;
          longer.push_back(a);
          next.push_back(std::move(longer));
        }
        blocks_[block_of(w)].paths.push_back(std::move(w));
      }
      layer = std::move(next);
    }
    for (auto& block : blocks_) {
      std::sort(block.paths.begin(), block.paths.end(),
                [](const ArrowWord& a, const ArrowWord& b) { return word_less(b, a); });
      for (std::size_t c = 0; c < block.paths.size(); ++c) block.column.emplace(block.paths[c], c);
    }
  }

  void close_ideal(const RelationSet& relations) {
    std::deque<std::pair<std::size_t, std::vector<Value>>> queue;
    auto offer = [&](std::size_t b, std::vector<Value> v) {
      if (bases_[b].insert(v)) queue.emplace_back(b, std::move(v));
    };

    for (const auto& rel : relations.relations) {
      const auto b = block_index(rel.source(), rel.target());
      std::vector<Value> v(blocks_[b].paths.size(), field_.zero());
      for (const auto& term : rel.terms) {
        if (term.path.length() >= cutoff_) continue;
        auto& slot = v[blocks_[b].column.at(term.path.arrows)];
        slot = field_.add(slot, field_.from_int(term.coefficient));
      }
      offer(b, std::move(v));
    }

    const auto& arrows = q_->arrows();
    while (!queue.empty()) {
      auto [b, v] = std::move(queue.front());
      queue.pop_front();
      const Vertex s = static_cast<Vertex>(b / n_) + 1;
      const Vertex t = static_cast<Vertex>(b % n_) + 1;
      const auto& paths = blocks_[b].paths;
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        // Left multiplication by an arrow ending at s.
        if (arrows[a].target == s) {
          const auto nb = block_index(arrows[a].source, t);
          std::vector<Value> w(blocks_[nb].paths.size(), field_.zero());
          for (std::size_t c = 0; c < paths.size(); ++c) {
            if (field_.is_zero(v[c]) || paths[c].size() + 1 >= cutoff_) continue;
            ArrowWord longer{a};
            longer.insert(longer.end(), paths[c].begin(), paths[c].end());
            w[blocks_[nb].column.at(longer)] = v[c];
          }
          offer(nb, std::move(w));
        }
        // Right multiplication by an arrow starting at t.
        if (arrows[a].source == t) {
          const auto nb = block_index(s, arrows[a].target);
          std::vector<Value> w(blocks_[nb].paths.size(), field_.zero());
          for (std::size_t c = 0; c < paths.size(); ++c) {
            if (field_.is_zero(v[c]) || paths[c].size() + 1 >= cutoff_) continue;
            ArrowWord longer = paths[c];
            longer.push_back(a);
            w[blocks_[nb].column.at(longer)] = v[c];
          }
          offer(nb, std::move(w));
        }
      }
    }
  }

  const Quiver* q_;
  Field field_;
  std::size_t n_;
  std::size_t cutoff_;
  std::vector<Block> blocks_;
  std::vector<EchelonBasis<Field>> bases_;
};

void check_relations(const Quiver& q, const RelationSet& relations) {
  const auto& arrows = q.arrows();
  for (const auto& rel : relations.relations) {
    if (rel.terms.empty()) throw Error(Errc::InvalidRelations, "relation without terms");
    for (const auto& term : rel.terms) {
      const auto& p = term.path;
      if (p.is_trivial()) throw Error(Errc::InvalidRelations, "relation contains a trivial path");
      for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (p.arrows[i] >= arrows.size()) throw Error(Errc::InvalidRelations, "relation uses an unknown arrow");
        if (i > 0 && arrows[p.arrows[i - 1]].target != arrows[p.arrows[i]].source) {
          throw Error(Errc::InvalidRelations, "relation path is not composable");
        }
      }
      if (arrows[p.arrows.front()].source != p.source || arrows[p.arrows.back()].target != p.target) {
        throw Error(Errc::InvalidRelations, "relation path endpoints are inconsistent");
      }
      if (p.source != rel.source() || p.target != rel.target()) {
        throw Error(Errc::InvalidRelations, "relation terms have different endpoints");
      }
      if (term.coefficient == 0) throw Error(Errc::InvalidRelations, "relation term with zero coefficient");
    }
  }
}

template <class Field>
BoundAlgebra build_over(const Quiver& q, const RelationSet& relations, Field field) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  const std::size_t max_cutoff = 2 * n + 2;

  std::optional<TruncatedQuotient<Field>> chosen;
  auto current = std::make_optional<TruncatedQuotient<Field>>(q, relations, field, n + 2);
  for (std::size_t cutoff = n + 2; cutoff <= max_cutoff; ++cutoff) {
    auto next = std::make_optional<TruncatedQuotient<Field>>(q, relations, field, cutoff + 1);
    const auto dims = current->degree_dims();
    const bool short_enough = dims.size() + 2 <= cutoff;  // longest normal path < cutoff - 2
    if (short_enough && dims == next->degree_dims()) {
      chosen = std::move(current);
      break;
    }
    current = std::move(next);
  }
  if (!chosen) {
    throw Error(Errc::NotFiniteDimensional,
                "quotient did not stabilize up to path length cutoff " + std::to_string(max_cutoff));
  }

  std::vector<Path> basis;
  for (Vertex v = 1; v <= q.vertex_count(); ++v) basis.push_back(Path::trivial(v));
  for (auto& w : chosen->normal_paths()) basis.push_back(Path::from_arrows(q, std::move(w)));

  const std::size_t d = basis.size();
  std::map<ArrowWord, std::size_t> index;
  for (std::size_t i = n; i < d; ++i) index.emplace(basis[i].arrows, i);

  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Path& x = basis[i];
      const Path& y = basis[j];
      if (x.target != y.source) continue;
      auto& out = products[i * d + j];
      if (x.is_trivial()) {
        out.push_back({j, Rational(1)});
      } else if (y.is_trivial()) {
        out.push_back({i, Rational(1)});
      } else {
        ArrowWord w = x.arrows;
        w.insert(w.end(), y.arrows.begin(), y.arrows.end());
        for (auto& [word, coeff] : chosen->normal_form(w)) {
          out.push_back({index.at(word), field.to_rational(coeff)});
        }
        std::sort(out.begin(), out.end(),
                  [](const SparseTerm& a, const SparseTerm& b) { return a.index < b.index; });
      }
    }
  }
  return {q, field.spec(), std::move(basis), std::move(products), chosen->cutoff()};
}

template <class Field>
bool associative_over(const BoundAlgebra& a, const Field& f) {
  const std::size_t d = a.dimension();
  using Value = typename Field::value_type;
  // Multiplies a dense element by basis element j on the right / left.
  auto times = [&](const std::vector<Value>& x, std::size_t j, bool right) {
    std::vector<Value> out(d, f.zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (f.is_zero(x[i])) continue;
      const auto& prod = right ? a.product(i, j) : a.product(j, i);
      for (const auto& term : prod) {
        out[term.index] = f.add(out[term.index], f.mul(x[i], f.from_rational(term.coefficient)));
      }
    }
    return out;
  };
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (a.target(x) != a.source(y)) continue;
      std::vector<Value> xy(d, f.zero());
      for (const auto& term : a.product(x, y)) xy[term.index] = f.from_rational(term.coefficient);
      for (std::size_t z = 0; z < d; ++z) {
        if (a.target(y) != a.source(z)) continue;
        auto left = times(xy, z, true);
        std::vector<Value> yz(d, f.zero());
        for (const auto& term : a.product(y, z)) yz[term.index] = f.from_rational(term.coefficient);
        auto right = times(yz, x, false);
        if (left != right) return false;
      }
    }
  }
  return true;
}

}  // namespace

BoundAlgebra build_algebra(const Quiver& q, const RelationSet& relations, FieldSpec field) {
  check_relations(q, relations);
  return with_field(field, [&](auto f) { return build_over(q, relations, f); });
}

BoundAlgebra cluster_tilted_algebra(const Quiver& q, FieldSpec field) {
  return build_algebra(q, generate_relations(q), field);
}

CartanData cartan_of_matrix(IntMatrix c) {
  const std::size_t n = c.size();
  IntMatrix minus_transpose(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) minus_transpose[i][j] = -c[j][i];
  CartanData out;
  out.det = det_int(c);
  out.assoc_poly = pencil_det(c, minus_transpose);
  out.matrix = std::move(c);
  return out;
}

CartanData cartan(const BoundAlgebra& a) {
  const std::size_t n = a.vertex_count();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (const auto& p : a.basis()) ++c[static_cast<std::size_t>(p.source - 1)][static_cast<std::size_t>(p.target - 1)];
  return cartan_of_matrix(std::move(c));
}

bool is_associative(const BoundAlgebra& a) {
  return with_field(a.field(), [&](auto f) { return associative_over(a, f); });
}

}  // namespace cthh
