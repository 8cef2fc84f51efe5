#pragma once

// Dense exact matrices over a Field (see field.hpp), reduced row-echelon
// form, right kernels and an incrementally maintained echelon basis.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cthh/error.hpp"
#include "cthh/field.hpp"

namespace cthh {

template <class Field>
class Matrix {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;

  explicit Matrix(Field field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(Errc::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
  }

  [[nodiscard]] std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw Error(Errc::InvalidArgument, "vector length does not match matrix");
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      value_type acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(v[j]) && !field_.is_zero((*this)(i, j))) {
          acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
        }
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <class Field>
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix<Field> reduced;
};

namespace detail {

// row[from..] -= factor * pivot_row[from..]
template <class Field, class Row, class PivotRow>
void eliminate(const Field& f, Row&& row, const PivotRow& pivot_row, const typename Field::value_type& factor,
               std::size_t from) {
  const std::size_t n = pivot_row.size();
  for (std::size_t j = from; j < n; ++j) {
    if (!f.is_zero(pivot_row[j])) row[j] = f.sub_mul(row[j], factor, pivot_row[j]);
  }
}

template <class Field, class Row>
void scale(const Field& f, Row&& row, const typename Field::value_type& s, std::size_t from) {
  const std::size_t n = row.size();
  for (std::size_t j = from; j < n; ++j) {
    if (!f.is_zero(row[j])) row[j] = f.mul(row[j], s);
  }
}

}  // namespace detail

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <class Field>
Echelon<Field> echelonize(Matrix<Field> m) {
  const Field& f = m.field();
  Echelon<Field> out{0, {}, Matrix<Field>(f)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    auto inv = f.inv(m(r, c));
    detail::scale(f, m.row(r), inv, c);
    auto pivot_row = m.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      detail::eliminate(f, m.row(i), pivot_row, factor, c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return echelonize(m).rank;
}

/// Basis of {v : m v = 0}; one vector per free column of the echelon form.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(const Matrix<Field>& m) {
  const Field& f = m.field();
  auto ech = echelonize(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : ech.pivots) is_pivot[p] = 1;
  std::vector<std::vector<typename Field::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.rank; ++i) {
      const auto& e = ech.reduced(i, free);
      if (!f.is_zero(e)) v[ech.pivots[i]] = f.neg(e);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A fully reduced echelon basis of a growing subspace of Field^dim.
/// Each stored row has a 1 in its pivot column and 0 in every other pivot
/// column, so reducing a vector against it yields a canonical normal form.
template <class Field>
class EchelonBasis {
 public:
  using value_type = typename Field::value_type;
  using Vector = std::vector<value_type>;

  EchelonBasis(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim), pivot_row_(dim, npos) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<Vector>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  [[nodiscard]] bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  /// Stored row whose pivot is col, if any.
  [[nodiscard]] const Vector* row_with_pivot(std::size_t col) const {
    return pivot_row_[col] == npos ? nullptr : &rows_[pivot_row_[col]];
  }

  /// Subtracts the span; afterwards v is zero on every pivot column.
  void reduce(Vector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto col = pivots_[k];
      if (field_.is_zero(v[col])) continue;
      auto factor = v[col];
      detail::eliminate(field_, v, rows_[k], factor, 0);
    }
  }

  [[nodiscard]] bool contains(Vector v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [&](const value_type& x) { return field_.is_zero(x); });
  }

  /// Adds v to the span. Returns true iff v was independent of it.
  bool insert(Vector v) {
    if (v.size() != dim_) throw Error(Errc::InvalidArgument, "vector length does not match basis");
    reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && field_.is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    auto inv = field_.inv(v[lead]);
    detail::scale(field_, v, inv, lead);
    for (auto& row : rows_) {
      if (field_.is_zero(row[lead])) continue;
      auto factor = row[lead];
      detail::eliminate(field_, row, v, factor, 0);
    }
    pivot_row_[lead] = rows_.size();
    pivots_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace cthh
