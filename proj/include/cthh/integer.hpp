#pragma once

// Exact integer determinants (fraction-free) and integer polynomials.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cthh/field.hpp"

namespace cthh {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Integer polynomial with coefficients stored lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  /// Coefficients listed from the leading term down to the constant term.
  static IntPolynomial from_descending(const std::vector<BigInt>& descending);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  [[nodiscard]] const std::vector<BigInt>& ascending() const noexcept { return coeffs_; }
  [[nodiscard]] std::vector<BigInt> descending() const;
  [[nodiscard]] BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
  [[nodiscard]] BigInt evaluate(const BigInt& x) const;

  /// "c_N,...,c_1,c_0", the key format of the E-type table.
  [[nodiscard]] std::string descending_csv() const;
  /// Human-readable, e.g. "3x^6 + 3x^3 + 3".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Determinant by Bareiss fraction-free elimination.
[[nodiscard]] BigInt det_int(const IntMatrix& m);

/// det(x*a + b), by evaluating at x = 0..N and interpolating exactly.
[[nodiscard]] IntPolynomial pencil_det(const IntMatrix& a, const IntMatrix& b);

}  // namespace cthh
