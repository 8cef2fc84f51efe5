#include "cthh/integer.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cthh/error.hpp"

namespace cthh {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(Errc::InvalidArgument, std::string(what) + " is not square");
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& descending) {
  return IntPolynomial(std::vector<BigInt>(descending.rbegin(), descending.rend()));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<BigInt> IntPolynomial::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::descending_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += it->get_str();
  }
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                      b.coeffs_.rend());
}

BigInt det_int(const IntMatrix& m) {
  require_square(m, "determinant input");
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);

  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntPolynomial pencil_det(const IntMatrix& a, const IntMatrix& b) {
  require_square(a, "pencil matrix a");
  require_square(b, "pencil matrix b");
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "pencil matrices differ in size");
  const std::size_t n = a.size();

  // Values at the nodes x = 0..n.
  std::vector<Rational> values(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<std::int64_t>(x) * a[i][j] + b[i][j];
    values[x] = Rational(det_int(m));
  }

  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  }
  std::vector<Rational> poly{dd[n]};
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (x - k) + dd[k]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * static_cast<long>(k);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (c.get_den() != 1) {
      throw Error(Errc::NonIntegerInterpolation, "pencil determinant interpolation gave " + c.get_str());
    }
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cthh
