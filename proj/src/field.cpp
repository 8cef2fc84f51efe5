#include "cthh/field.hpp"

#include <vector>

namespace cthh {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw Error(Errc::InvalidArgument,
                "field characteristic must be 0 or prime, got " + std::to_string(characteristic));
  }
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

const std::vector<FieldSpec>& default_oracle_fields() {
  static const std::vector<FieldSpec> fields{FieldSpec::prime(2), FieldSpec::prime(3),
                                             FieldSpec::prime(5), FieldSpec::prime(7),
                                             FieldSpec::rationals()};
  return fields;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(Errc::InvalidArgument, "GF(p) needs a prime modulus, got " + std::to_string(p));
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(Errc::InvalidArgument, "inverse of zero in " + spec().name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  BigInt pz(static_cast<unsigned long>(p_));
  BigInt num = q.get_num() % pz;
  BigInt den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) {
    throw Error(Errc::InvalidArgument, "denominator divisible by " + std::to_string(p_));
  }
  return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw Error(Errc::InvalidArgument, "inverse of zero in Q");
  return 1 / a;
}

}  // namespace cthh
