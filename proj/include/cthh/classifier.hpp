#pragma once

// Closed-form Hochschild series of cluster-tilted algebras of Dynkin type
// A, D and E, plus the determinant route h = f_n + t f_3 with
// t = dim HH^1 - 1 and n = 1 + det(C) / 2^t.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cthh/integer.hpp"
#include "cthh/quiver.hpp"
#include "cthh/series.hpp"

namespace cthh {

/// t copies of f_3, t = number of oriented 3-cycles. Throws WrongFamily
/// unless q is mutation equivalent to A_n.
[[nodiscard]] HSeries hh_type_A(const Quiver& q);

enum class DSubtype { I, II, III, IVa, IVb };
[[nodiscard]] std::string to_string(DSubtype s);

/// One spike of a type IV quiver: d arrows of the central cycle from this
/// spike to the next one, and the vertex / 3-cycle counts of its arm.
struct DSpike {
  int d = 0;
  int s = 0;
  int t = 0;
  friend bool operator==(const DSpike&, const DSpike&) = default;
};

/// Parameters of the four families of quivers mutation equivalent to D_n.
/// The s values are vertex counts of the type-A pieces and do not enter any
/// formula; the t values count oriented 3-cycles in those pieces.
struct DTypeParams {
  DSubtype subtype = DSubtype::I;
  int s = 0, t = 0;                    // I
  int s1 = 0, t1 = 0, s2 = 0, t2 = 0;  // II, III
  int n = 0;                           // IVa: cycle length; IVb: derived order
  std::vector<DSpike> spikes;          // IVb
  friend bool operator==(const DTypeParams&, const DTypeParams&) = default;
};

[[nodiscard]] std::string format_params(const DTypeParams& p);

/// Structural match of q against the type I-IV patterns. Throws WrongFamily
/// for quivers outside the D_n class and UnclassifiedD when no pattern fits.
[[nodiscard]] DTypeParams classify_D(const Quiver& q);
[[nodiscard]] DTypeParams classify_D_known(const Quiver& q);  // family already established

[[nodiscard]] HSeries hh_type_D(const DTypeParams& p);
[[nodiscard]] HSeries hh_type_D(const Quiver& q);

struct ETableEntry {
  int rank = 0;
  IntPolynomial assoc_poly;
  HSeries h;
};

/// Parses lines "rank;c_N,...,c_0;h", skipping blank lines and '#' comments.
[[nodiscard]] std::vector<ETableEntry> parse_e_table(std::string_view text);
/// The embedded table for E_6, E_7, E_8 (35 rows).
[[nodiscard]] const std::vector<ETableEntry>& e_table();
[[nodiscard]] std::string_view e_table_text();

/// Throws NotInTable.
[[nodiscard]] HSeries lookup_E(const IntPolynomial& assoc_poly);

/// h from dim HH^1 and det C. Throws NonIntegralN on inconsistent input.
[[nodiscard]] HSeries hh_universal(std::size_t hh1, const BigInt& cartan_det);

/// (t, n) with h = f_n + t f_3, or nullopt for h = 0. Throws
/// InvalidArgument when h is not of that shape.
struct SeriesShape {
  std::size_t t = 0;
  int n = 0;
};
[[nodiscard]] std::optional<SeriesShape> series_shape(const HSeries& h);

struct ClosedForm {
  DynkinType type;
  HSeries h;
  /// "type A", "type D", "type E" or "universal" (D fallback).
  std::string method;
  std::optional<DTypeParams> d_params;
};

/// Dispatch on the Dynkin family. Pass the type when already known to skip
/// detection.
[[nodiscard]] ClosedForm hh_closed_form(const Quiver& q, std::optional<DynkinType> known = std::nullopt);

}  // namespace cthh
