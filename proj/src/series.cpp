#include "cthh/series.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cthh/error.hpp"

namespace cthh {

HSeries::HSeries(std::vector<int> cycle_orders) : orders_(std::move(cycle_orders)) {
  for (int n : orders_) {
    if (n < 3) throw Error(Errc::InvalidArgument, "f_n needs n >= 3, got " + std::to_string(n));
  }
  std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

HSeries HSeries::f(int n, std::size_t multiplicity) { return HSeries(std::vector<int>(multiplicity, n)); }

std::size_t HSeries::multiplicity(int n) const {
  return static_cast<std::size_t>(std::count(orders_.begin(), orders_.end(), n));
}

HSeries& HSeries::operator+=(const HSeries& other) {
  orders_.insert(orders_.end(), other.orders_.begin(), other.orders_.end());
  std::sort(orders_.begin(), orders_.end(), std::greater<>());
  return *this;
}

int epsilon(int n, const FieldSpec& field) {
  if (n < 3) throw Error(Errc::InvalidArgument, "f_n needs n >= 3, got " + std::to_string(n));
  const auto p = field.characteristic();
  if (p == 0) return 1;
  return (static_cast<std::uint32_t>(n - 1) % p == 0) ? 0 : 1;
}

int f_coeff(int n, std::size_t i, const FieldSpec& field) {
  const int eps = epsilon(n, field);
  if (i == 0) return 0;
  const std::size_t r = i % (2 * static_cast<std::size_t>(n));
  int c = 1;
  if (r == 2 || r == 5) c -= 1;
  if (r == 3 || r == 4) c -= eps;
  return c;
}

std::size_t hh_dim(const HSeries& h, std::size_t i, const FieldSpec& field) {
  if (i == 0) return 1;
  std::size_t total = 0;
  for (int n : h.cycle_orders()) total += static_cast<std::size_t>(f_coeff(n, i, field));
  return total;
}

std::vector<std::size_t> hh_dims_from_series(const HSeries& h, std::size_t max_i, const FieldSpec& field) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_i; ++i) out.push_back(hh_dim(h, i, field));
  return out;
}

std::string format_h(const HSeries& h) {
  if (h.is_zero()) return "0";
  std::string out;
  const auto& orders = h.cycle_orders();
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i) + " ";
    out += "f_" + std::to_string(orders[i]);
    i = j;
  }
  return out;
}

HSeries parse_h(const std::string& text) {
  auto fail = [&](const std::string& why) { return Error(Errc::SyntaxError, "bad series '" + text + "': " + why); };
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed == "0") return HSeries::zero();
  if (trimmed.empty()) throw fail("empty");
  std::vector<int> orders;
  std::stringstream terms(trimmed);
  std::string term;
  while (std::getline(terms, term, '+')) {
    const auto pos = term.find("f_");
    if (pos == std::string::npos) throw fail("term '" + term + "' lacks f_");
    const std::string mult = term.substr(0, pos);
    const std::string order = term.substr(pos + 2);
    auto all_digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if ((!mult.empty() && !all_digits(mult)) || !all_digits(order)) throw fail("term '" + term + "'");
    const int m = mult.empty() ? 1 : std::stoi(mult);
    const int n = std::stoi(order);
    if (n < 3) throw fail("f_n needs n >= 3");
    orders.insert(orders.end(), static_cast<std::size_t>(m), n);
  }
  return HSeries(std::move(orders));
}

}  // namespace cthh
