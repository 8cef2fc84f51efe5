#include "cthh/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cthh/error.hpp"
#include "cthh/matrix.hpp"

namespace cthh {

namespace {

void require_field(const BoundAlgebra& a, const FieldSpec& field) {
  if (a.field() != field) {
    throw Error(Errc::FieldMismatch,
                "algebra was built over " + a.field().name() + " but " + field.name() + " was requested");
  }
}

// Multiplication table and index structures of an algebra, converted to
// elements of Field.
template <class Field>
struct AlgebraTables {
  using Value = typename Field::value_type;
  struct Term {
    std::size_t index;
    Value coeff;
  };
  using Combo = std::vector<Term>;

  AlgebraTables(const BoundAlgebra& a, Field field)
      : f(std::move(field)), d(a.dimension()), n(a.vertex_count()) {
    src.resize(d);
    tgt.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      src[i] = static_cast<std::size_t>(a.source(i) - 1);
      tgt[i] = static_cast<std::size_t>(a.target(i) - 1);
    }
    mult.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& t : a.product(i, j)) mult[i * d + j].push_back({t.index, f.from_rational(t.coefficient)});
      }
    }
    ending_at.resize(n);
    starting_at.resize(n);
    component.resize(n * n);
    arrows_from.resize(n);
    arrows_into.resize(n);
    pos_ending.resize(d);
    pos_starting.resize(d);
    pos_component.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      pos_ending[i] = ending_at[tgt[i]].size();
      ending_at[tgt[i]].push_back(i);
      pos_starting[i] = starting_at[src[i]].size();
      starting_at[src[i]].push_back(i);
      pos_component[i] = component[src[i] * n + tgt[i]].size();
      component[src[i] * n + tgt[i]].push_back(i);
      if (a.basis_path(i).length() == 1) {
        arrows_from[src[i]].push_back(i);
        arrows_into[tgt[i]].push_back(i);
      }
    }
  }

  [[nodiscard]] const Combo& product(std::size_t i, std::size_t j) const { return mult[i * d + j]; }

  Field f;
  std::size_t d;
  std::size_t n;
  std::vector<std::size_t> src, tgt;
  std::vector<Combo> mult;
  std::vector<std::vector<std::size_t>> ending_at;    // basis of Lambda e_a
  std::vector<std::vector<std::size_t>> starting_at;  // basis of e_b Lambda
  std::vector<std::vector<std::size_t>> component;    // basis of e_a Lambda e_b at a * n + b
  std::vector<std::size_t> pos_ending, pos_starting, pos_component;
  std::vector<std::vector<std::size_t>> arrows_from, arrows_into;
};

// A projective bimodule (+)_g Lambda e_{a_g} (x) e_{b_g} Lambda with basis
// u (x) v over u in Lambda e_a, v in e_b Lambda. Element blocks are the
// (source(u), target(v)) components.
struct Projective {
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> elem_gen;
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_pos;
};

template <class Field>
Projective make_projective(const AlgebraTables<Field>& t, std::vector<std::pair<std::size_t, std::size_t>> gens,
                           std::size_t budget) {
  Projective p;
  p.gens = std::move(gens);
  for (const auto& [a, b] : p.gens) {
    p.offset.push_back(p.dim);
    p.dim += t.ending_at[a].size() * t.starting_at[b].size();
  }
  if (p.dim > budget) {
    throw Error(Errc::ResolutionBudgetExceeded,
                "projective of dimension " + std::to_string(p.dim) + " exceeds budget " + std::to_string(budget));
  }
  p.elem_gen.resize(p.dim);
  p.block_pos.resize(p.dim);
  p.blocks.assign(t.n * t.n, {});
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    const auto [a, b] = p.gens[g];
    std::size_t idx = p.offset[g];
    for (auto u : t.ending_at[a]) {
      for (auto v : t.starting_at[b]) {
        p.elem_gen[idx] = g;
        auto& block = p.blocks[t.src[u] * t.n + t.tgt[v]];
        p.block_pos[idx] = block.size();
        block.push_back(idx);
        ++idx;
      }
    }
  }
  return p;
}

template <class Field>
class Resolver {
 public:
  using Value = typename Field::value_type;
  using Sparse = std::vector<std::pair<std::size_t, Value>>;
  using Dense = std::vector<Value>;

  Resolver(const BoundAlgebra& a, Field field, const OracleOptions& options)
      : t_(a, field), f_(t_.f), options_(options) {}

  [[nodiscard]] std::size_t center_dim() const {
    EchelonBasis<Field> eqs(f_, t_.d);
    for (std::size_t b = 0; b < t_.d; ++b) {
      // Coordinates of x*b - b*x as linear forms in x.
      std::vector<Dense> rows(t_.d, Dense(t_.d, f_.zero()));
      for (std::size_t x = 0; x < t_.d; ++x) {
        for (const auto& term : t_.product(x, b)) rows[term.index][x] = f_.add(rows[term.index][x], term.coeff);
        for (const auto& term : t_.product(b, x)) rows[term.index][x] = f_.sub(rows[term.index][x], term.coeff);
      }
      for (auto& r : rows) eqs.insert(std::move(r));
    }
    return t_.d - eqs.rank();
  }

  [[nodiscard]] std::size_t hh1_normalized() const {
    // Unknowns: D(b) in e_s Lambda e_t for each non-trivial basis element b.
    std::vector<std::size_t> var_offset(t_.d, 0);
    std::size_t vars = 0;
    for (std::size_t b = t_.n; b < t_.d; ++b) {
      var_offset[b] = vars;
      vars += t_.component[t_.src[b] * t_.n + t_.tgt[b]].size();
    }
    auto var = [&](std::size_t b, std::size_t w) { return var_offset[b] + t_.pos_component[w]; };

    EchelonBasis<Field> eqs(f_, vars);
    for (std::size_t x = t_.n; x < t_.d; ++x) {
      for (std::size_t y = t_.n; y < t_.d; ++y) {
        if (t_.tgt[x] != t_.src[y]) continue;
        const auto& out = t_.component[t_.src[x] * t_.n + t_.tgt[y]];
        std::vector<Dense> rows(out.size(), Dense(vars, f_.zero()));
        // D(xy)
        for (const auto& term : t_.product(x, y)) {
          for (auto w : t_.component[t_.src[term.index] * t_.n + t_.tgt[term.index]]) {
            auto& slot = rows[t_.pos_component[w]][var(term.index, w)];
            slot = f_.add(slot, term.coeff);
          }
        }
        // - D(x) y
        for (auto w : t_.component[t_.src[x] * t_.n + t_.tgt[x]]) {
          for (const auto& term : t_.product(w, y)) {
            auto& slot = rows[t_.pos_component[term.index]][var(x, w)];
            slot = f_.sub(slot, term.coeff);
          }
        }
        // - x D(y)
        for (auto w : t_.component[t_.src[y] * t_.n + t_.tgt[y]]) {
          for (const auto& term : t_.product(x, w)) {
            auto& slot = rows[t_.pos_component[term.index]][var(y, w)];
            slot = f_.sub(slot, term.coeff);
          }
        }
        for (auto& r : rows) eqs.insert(std::move(r));
      }
    }
    const std::size_t der0 = vars - eqs.rank();
    std::size_t diagonal = 0;
    for (std::size_t v = 0; v < t_.n; ++v) diagonal += t_.component[v * t_.n + v].size();
    const std::size_t inn0 = diagonal - center_dim();
    return der0 - inn0;
  }

  [[nodiscard]] std::size_t hh1_all() const {
    const std::size_t d = t_.d;
    const std::size_t vars = d * d;  // D(b) = sum_w X[b][w] w
    EchelonBasis<Field> eqs(f_, vars);
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        std::vector<Dense> rows(d, Dense(vars, f_.zero()));
        for (const auto& term : t_.product(x, y)) {
          for (std::size_t w = 0; w < d; ++w) rows[w][term.index * d + w] = f_.add(rows[w][term.index * d + w], term.coeff);
        }
        for (std::size_t w = 0; w < d; ++w) {
          for (const auto& term : t_.product(w, y)) {
            rows[term.index][x * d + w] = f_.sub(rows[term.index][x * d + w], term.coeff);
          }
          for (const auto& term : t_.product(x, w)) {
            rows[term.index][y * d + w] = f_.sub(rows[term.index][y * d + w], term.coeff);
          }
        }
        for (auto& r : rows) eqs.insert(std::move(r));
      }
    }
    const std::size_t der = vars - eqs.rank();
    const std::size_t inn = d - center_dim();
    return der - inn;
  }

  OracleReport run(std::size_t max_i) {
    const std::size_t length = max_i + 1;
    std::vector<Projective> proj;
    std::vector<std::vector<Sparse>> images;  // images[k][g] of generators of P_k
    std::vector<ResolutionStep> steps;

    std::vector<std::pair<std::size_t, std::size_t>> gens0;
    for (std::size_t v = 0; v < t_.n; ++v) gens0.emplace_back(v, v);
    proj.push_back(make_projective(t_, gens0, options_.budget));
    images.emplace_back();
    for (std::size_t v = 0; v < t_.n; ++v) images[0].push_back({{v, f_.one()}});
    steps.push_back(describe(proj[0]));

    std::mt19937_64 rng(options_.lift_seed);
    std::vector<std::size_t> previous_kernel_dims;
    for (std::size_t k = 0; k <= length; ++k) {
      // Kernel of d_k, block by block.
      std::vector<std::vector<Sparse>> kernel(t_.n * t_.n);
      std::vector<std::vector<Dense>> kernel_dense(t_.n * t_.n);
      std::vector<std::size_t> kernel_dims(t_.n * t_.n, 0);
      for (std::size_t st = 0; st < t_.n * t_.n; ++st) {
        auto m = block_matrix(proj, images, k, st);
        auto basis = kernel_basis(m);
        kernel_dims[st] = basis.size();
        const std::size_t rank_here = proj[k].blocks[st].size() - basis.size();
        if (options_.check_invariants && k >= 1 && rank_here != previous_kernel_dims[st]) {
          throw Error(Errc::InternalInconsistency,
                      "resolution not exact at step " + std::to_string(k - 1) + " in block " + std::to_string(st));
        }
        if (k == length) continue;
        for (auto& vec : basis) {
          Sparse sparse;
          for (std::size_t c = 0; c < vec.size(); ++c) {
            if (!f_.is_zero(vec[c])) sparse.emplace_back(proj[k].blocks[st][c], vec[c]);
          }
          kernel[st].push_back(std::move(sparse));
          kernel_dense[st].push_back(std::move(vec));
        }
      }
      if (k >= 1 && options_.check_invariants) steps[k - 1].exact = true;
      if (k == length) break;
      previous_kernel_dims = kernel_dims;

      // Minimal generators: a complement of rad*K + K*rad in each block.
      std::vector<std::pair<std::size_t, std::size_t>> gens;
      std::vector<Sparse> gen_images;
      for (std::size_t s = 0; s < t_.n; ++s) {
        for (std::size_t tt = 0; tt < t_.n; ++tt) {
          const std::size_t st = s * t_.n + tt;
          if (kernel[st].empty()) continue;
          EchelonBasis<Field> span(f_, proj[k].blocks[st].size());
          for (auto alpha : t_.arrows_from[s]) {
            for (const auto& vec : kernel[t_.tgt[alpha] * t_.n + tt]) span.insert(left_multiply(proj[k], alpha, vec, st));
          }
          for (auto beta : t_.arrows_into[tt]) {
            for (const auto& vec : kernel[s * t_.n + t_.src[beta]]) span.insert(right_multiply(proj[k], vec, beta, st));
          }
          std::vector<std::size_t> order(kernel[st].size());
          for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
          if (options_.lift_seed != 0) std::shuffle(order.begin(), order.end(), rng);
          for (auto i : order) {
            if (span.rank() == kernel[st].size()) break;
            if (span.insert(kernel_dense[st][i])) {
              gens.emplace_back(s, tt);
              gen_images.push_back(kernel[st][i]);
            }
          }
        }
      }
      proj.push_back(make_projective(t_, gens, options_.budget));
      images.push_back(std::move(gen_images));
      steps.push_back(describe(proj[k + 1]));
      if (options_.check_invariants) {
        check_composition(proj, images, k + 1);
        steps[k + 1].composition_zero = true;
      }
    }

    // Hom(P_k, Lambda) and the induced differentials.
    std::vector<std::size_t> hom_dims;
    std::vector<std::vector<std::size_t>> hom_offsets;
    for (const auto& p : proj) {
      std::vector<std::size_t> offsets;
      std::size_t dim = 0;
      for (const auto& [a, b] : p.gens) {
        offsets.push_back(dim);
        dim += t_.component[a * t_.n + b].size();
      }
      hom_dims.push_back(dim);
      hom_offsets.push_back(std::move(offsets));
    }
    std::vector<std::size_t> ranks(length + 1, 0);  // ranks[k] = rank of d*_k
    for (std::size_t k = 1; k <= length; ++k) ranks[k] = rank(hom_differential(proj, images, hom_offsets, hom_dims, k));

    OracleReport report;
    report.hh.field = f_.spec();
    report.hh.max_i = max_i;
    for (std::size_t i = 0; i <= max_i; ++i) report.hh.dims.push_back(hom_dims[i] - ranks[i + 1] - ranks[i]);
    steps.resize(length + 1);
    report.steps = std::move(steps);
    if (options_.check_invariants) {
      if (report.hh.dims[0] != center_dim()) {
        throw Error(Errc::InternalInconsistency, "HH^0 from the resolution differs from the center");
      }
      if (max_i >= 1 && report.hh.dims[1] != hh1_normalized()) {
        throw Error(Errc::InternalInconsistency, "HH^1 from the resolution differs from outer derivations");
      }
    }
    return report;
  }

 private:
  ResolutionStep describe(const Projective& p) const {
    ResolutionStep step;
    for (const auto& [a, b] : p.gens) step.summands.emplace_back(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
    step.dimension = p.dim;
    return step;
  }

  [[nodiscard]] std::size_t element(const Projective& p, std::size_t g, std::size_t u, std::size_t v) const {
    return p.offset[g] + t_.pos_ending[u] * t_.starting_at[p.gens[g].second].size() + t_.pos_starting[v];
  }
  [[nodiscard]] std::pair<std::size_t, std::size_t> factors(const Projective& p, std::size_t idx) const {
    const std::size_t g = p.elem_gen[idx];
    const auto [a, b] = p.gens[g];
    const std::size_t local = idx - p.offset[g];
    const std::size_t width = t_.starting_at[b].size();
    return {t_.ending_at[a][local / width], t_.starting_at[b][local % width]};
  }

  // alpha * vec, as a dense vector over block st of p.
  Dense left_multiply(const Projective& p, std::size_t alpha, const Sparse& vec, std::size_t st) const {
    Dense out(p.blocks[st].size(), f_.zero());
    for (const auto& [idx, c] : vec) {
      const auto [u, v] = factors(p, idx);
      const std::size_t g = p.elem_gen[idx];
      for (const auto& term : t_.product(alpha, u)) {
        auto& slot = out[p.block_pos[element(p, g, term.index, v)]];
        slot = f_.add(slot, f_.mul(c, term.coeff));
      }
    }
    return out;
  }

  Dense right_multiply(const Projective& p, const Sparse& vec, std::size_t beta, std::size_t st) const {
    Dense out(p.blocks[st].size(), f_.zero());
    for (const auto& [idx, c] : vec) {
      const auto [u, v] = factors(p, idx);
      const std::size_t g = p.elem_gen[idx];
      for (const auto& term : t_.product(v, beta)) {
        auto& slot = out[p.block_pos[element(p, g, u, term.index)]];
        slot = f_.add(slot, f_.mul(c, term.coeff));
      }
    }
    return out;
  }

  // Matrix of d_k restricted to block st: columns are the block's elements
  // of P_k, rows the block's elements of P_{k-1} (of Lambda when k = 0).
  Matrix<Field> block_matrix(const std::vector<Projective>& proj, const std::vector<std::vector<Sparse>>& images,
                             std::size_t k, std::size_t st) const {
    const auto& p = proj[k];
    const auto& cols = p.blocks[st];
    if (k == 0) {
      Matrix<Field> m(f_, t_.component[st].size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto [u, v] = factors(p, cols[c]);
        for (const auto& term : t_.product(u, v)) {
          auto& slot = m(t_.pos_component[term.index], c);
          slot = f_.add(slot, term.coeff);
        }
      }
      return m;
    }
    const auto& prev = proj[k - 1];
    Matrix<Field> m(f_, prev.blocks[st].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [u, v] = factors(p, cols[c]);
      for (const auto& [idx, coeff] : images[k][p.elem_gen[cols[c]]]) {
        const auto [u2, v2] = factors(prev, idx);
        const std::size_t g2 = prev.elem_gen[idx];
        for (const auto& left : t_.product(u, u2)) {
          const auto lc = f_.mul(coeff, left.coeff);
          for (const auto& right : t_.product(v2, v)) {
            auto& slot = m(prev.block_pos[element(prev, g2, left.index, right.index)], c);
            slot = f_.add(slot, f_.mul(lc, right.coeff));
          }
        }
      }
    }
    return m;
  }

  void check_composition(const std::vector<Projective>& proj, const std::vector<std::vector<Sparse>>& images,
                         std::size_t k) const {
    // d_{k-1}(d_k(g)) for every generator g of P_k.
    const auto& prev = proj[k - 1];
    for (std::size_t g = 0; g < proj[k].gens.size(); ++g) {
      const auto [a, b] = proj[k].gens[g];
      const std::size_t st = a * t_.n + b;
      auto m = block_matrix(proj, images, k - 1, st);
      Dense x(prev.blocks[st].size(), f_.zero());
      for (const auto& [idx, c] : images[k][g]) x[prev.block_pos[idx]] = c;
      for (const auto& y : m.apply(x)) {
        if (!f_.is_zero(y)) {
          throw Error(Errc::InternalInconsistency, "d o d != 0 at step " + std::to_string(k));
        }
      }
    }
  }

  // d*_k : Hom(P_{k-1}, Lambda) -> Hom(P_k, Lambda), phi |-> phi o d_k.
  Matrix<Field> hom_differential(const std::vector<Projective>& proj, const std::vector<std::vector<Sparse>>& images,
                                 const std::vector<std::vector<std::size_t>>& offsets,
                                 const std::vector<std::size_t>& dims, std::size_t k) const {
    Matrix<Field> m(f_, dims[k], dims[k - 1]);
    const auto& prev = proj[k - 1];
    for (std::size_t g = 0; g < proj[k].gens.size(); ++g) {
      for (const auto& [idx, coeff] : images[k][g]) {
        const auto [u, v] = factors(prev, idx);
        const std::size_t g2 = prev.elem_gen[idx];
        const auto [a2, b2] = prev.gens[g2];
        for (auto w : t_.component[a2 * t_.n + b2]) {
          const std::size_t col = offsets[k - 1][g2] + t_.pos_component[w];
          for (const auto& left : t_.product(u, w)) {
            const auto lc = f_.mul(coeff, left.coeff);
            for (const auto& right : t_.product(left.index, v)) {
              auto& slot = m(offsets[k][g] + t_.pos_component[right.index], col);
              slot = f_.add(slot, f_.mul(lc, right.coeff));
            }
          }
        }
      }
    }
    return m;
  }

  AlgebraTables<Field> t_;
  const Field& f_;
  OracleOptions options_;
};

}  // namespace

std::size_t center_dim(const BoundAlgebra& a, FieldSpec field) {
  require_field(a, field);
  return with_field(field, [&](auto f) { return Resolver(a, f, {}).center_dim(); });
}

std::size_t hh1_dim(const BoundAlgebra& a, FieldSpec field) {
  require_field(a, field);
  return with_field(field, [&](auto f) { return Resolver(a, f, {}).hh1_normalized(); });
}

std::size_t hh1_dim_all_derivations(const BoundAlgebra& a, FieldSpec field) {
  require_field(a, field);
  return with_field(field, [&](auto f) { return Resolver(a, f, {}).hh1_all(); });
}

OracleReport hochschild_report(const BoundAlgebra& a, FieldSpec field, std::size_t max_i,
                               const OracleOptions& options) {
  require_field(a, field);
  return with_field(field, [&](auto f) { return Resolver(a, f, options).run(max_i); });
}

HHDims hh_dims(const BoundAlgebra& a, FieldSpec field, std::size_t max_i, const OracleOptions& options) {
  return hochschild_report(a, field, max_i, options).hh;
}

}  // namespace cthh
