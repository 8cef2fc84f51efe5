#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields GF(p) for
// machine-word primes. Both expose the same static-duck interface so the
// linear-algebra templates in matrix.hpp work over either.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cthh/error.hpp"

namespace cthh {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Characteristic 0 selects the rationals; a prime p selects GF(p).
class FieldSpec {
 public:
  constexpr FieldSpec() = default;
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec{p}; }

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return characteristic_; }
  [[nodiscard]] bool is_rational() const noexcept { return characteristic_ == 0; }
  /// "Q" or "GF(p)".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t characteristic_ = 0;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// The default oracle fields: GF(2), GF(3), GF(5), GF(7) and Q.
[[nodiscard]] const std::vector<FieldSpec>& default_oracle_fields();

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
  [[nodiscard]] FieldSpec spec() const { return FieldSpec::prime(p_); }

  [[nodiscard]] value_type zero() const noexcept { return 0; }
  [[nodiscard]] value_type one() const noexcept { return 1; }
  [[nodiscard]] bool is_zero(value_type a) const noexcept { return a == 0; }
  [[nodiscard]] bool is_one(value_type a) const noexcept { return a == 1; }

  [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  /// a - b*c
  [[nodiscard]] value_type sub_mul(value_type a, value_type b, value_type c) const noexcept {
    return sub(a, mul(b, c));
  }
  [[nodiscard]] value_type inv(value_type a) const;

  [[nodiscard]] value_type from_int(std::int64_t v) const noexcept;
  [[nodiscard]] value_type from_rational(const Rational& q) const;
  /// Residues are represented by their canonical integer in [0, p).
  [[nodiscard]] Rational to_rational(value_type a) const { return Rational(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  [[nodiscard]] FieldSpec spec() const { return FieldSpec::rationals(); }

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  [[nodiscard]] bool is_one(const value_type& a) const { return a == 1; }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  [[nodiscard]] value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const {
    return a - b * c;
  }
  [[nodiscard]] value_type inv(const value_type& a) const;

  [[nodiscard]] value_type from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  [[nodiscard]] value_type from_rational(const Rational& q) const { return q; }
  [[nodiscard]] Rational to_rational(const value_type& a) const { return a; }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

/// Calls fn(field) with a PrimeField or RationalField chosen by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) {
    return std::forward<Fn>(fn)(RationalField{});
  }
  return std::forward<Fn>(fn)(PrimeField{spec.characteristic()});
}

}  // namespace cthh
