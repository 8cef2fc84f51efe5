#pragma once

// Closed-form Hochschild series h(z) = sum_j f_{n_j}(z), where
//   f_n(z) = z/(1-z) - z^2 (1 + eps_n (z + z^2) + z^3) / (1 - z^{2n})
// and eps_n = 0 exactly when the characteristic divides n - 1.

#include <cstddef>
#include <string>
#include <vector>

#include "cthh/field.hpp"

namespace cthh {

class HSeries {
 public:
  HSeries() = default;
  /// Throws InvalidArgument if some order is below 3.
  explicit HSeries(std::vector<int> cycle_orders);

  static HSeries zero() { return {}; }
  /// multiplicity copies of f_n.
  static HSeries f(int n, std::size_t multiplicity = 1);

  /// Cycle orders in decreasing order.
  [[nodiscard]] const std::vector<int>& cycle_orders() const noexcept { return orders_; }
  [[nodiscard]] bool is_zero() const noexcept { return orders_.empty(); }
  [[nodiscard]] std::size_t multiplicity(int n) const;

  HSeries& operator+=(const HSeries& other);
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend bool operator==(const HSeries&, const HSeries&) = default;
  friend auto operator<=>(const HSeries&, const HSeries&) = default;

 private:
  std::vector<int> orders_;
};

/// 0 or 1: eps_n over the given field.
[[nodiscard]] int epsilon(int n, const FieldSpec& field);

/// Coefficient of z^i in f_n(z); always 0 or 1.
[[nodiscard]] int f_coeff(int n, std::size_t i, const FieldSpec& field);

/// dim HH^i read off from h: 1 for i = 0, the z^i coefficient otherwise.
[[nodiscard]] std::size_t hh_dim(const HSeries& h, std::size_t i, const FieldSpec& field);
[[nodiscard]] std::vector<std::size_t> hh_dims_from_series(const HSeries& h, std::size_t max_i,
                                                           const FieldSpec& field);

/// "0", "f_3", "f_4 + 2 f_3", ...
[[nodiscard]] std::string format_h(const HSeries& h);
/// Inverse of format_h; throws SyntaxError.
[[nodiscard]] HSeries parse_h(const std::string& text);

}  // namespace cthh
