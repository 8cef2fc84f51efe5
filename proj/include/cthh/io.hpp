#pragma once

// Quiver documents {"vertices": N, "arrows": [[s, t], ...]} and JSON views of
// the main result types.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cthh/algebra.hpp"
#include "cthh/classifier.hpp"
#include "cthh/field.hpp"
#include "cthh/quiver.hpp"
#include "cthh/relations.hpp"
#include "cthh/series.hpp"

namespace cthh {

/// Parses and validates a quiver document. Malformed text throws SyntaxError
/// with line and column; structural problems come from validate().
[[nodiscard]] Quiver parse_quiver(std::string_view text);
[[nodiscard]] Quiver quiver_from_json(const nlohmann::json& doc);

/// Compact single-line document with arrows in sorted order.
[[nodiscard]] std::string serialize_quiver(const Quiver& q);
[[nodiscard]] nlohmann::json quiver_to_json(const Quiver& q);

/// "0", "Q" or "QQ" for the rationals, otherwise a prime. Throws InvalidArgument.
[[nodiscard]] FieldSpec parse_field(std::string_view text);
/// Comma-separated list of parse_field tokens.
[[nodiscard]] std::vector<FieldSpec> parse_field_list(std::string_view text);

[[nodiscard]] nlohmann::json to_json(const IntPolynomial& p);
[[nodiscard]] nlohmann::json to_json(const DTypeParams& p);
[[nodiscard]] nlohmann::json to_json(const Quiver& q, const RelationSet& relations);
[[nodiscard]] nlohmann::json to_json(const CartanData& c);

/// Decimal string of a big integer (JSON numbers would lose precision).
[[nodiscard]] std::string to_decimal(const BigInt& v);

}  // namespace cthh
