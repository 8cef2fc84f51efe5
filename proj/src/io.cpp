#include "cthh/io.hpp"

#include <algorithm>
#include <charconv>

#include "cthh/error.hpp"

namespace cthh {

namespace {

using nlohmann::json;

[[noreturn]] void syntax(const std::string& what) { throw Error(Errc::SyntaxError, what); }

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) syntax(where + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > 1'000'000) syntax(where + " is out of range");
  return static_cast<int>(x);
}

}  // namespace

Quiver quiver_from_json(const json& doc) {
  if (!doc.is_object()) syntax("quiver document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "arrows") syntax("unexpected key \"" + key + "\"");
  }
  if (!doc.contains("vertices")) syntax("missing key \"vertices\"");
  if (!doc.contains("arrows")) syntax("missing key \"arrows\"");
  const int n = as_int(doc["vertices"], "\"vertices\"");
  if (n < 1) syntax("\"vertices\" must be positive");
  const auto& list = doc["arrows"];
  if (!list.is_array()) syntax("\"arrows\" must be an array");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto& a = list[k];
    const std::string where = "arrow " + std::to_string(k);
    if (!a.is_array() || a.size() != 2) syntax(where + " must be a [source, target] pair");
    arrows.push_back({as_int(a[0], where + " source"), as_int(a[1], where + " target")});
  }
  for (const auto& a : arrows) {
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n) {
      throw Error(Errc::VertexOutOfRange, "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                                              " leaves 1.." + std::to_string(n));
    }
  }
  Quiver q(n, std::move(arrows));
  validate(q);
  return q;
}

Quiver parse_quiver(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    syntax("malformed document at " + position_of(text, byte));
  }
  return quiver_from_json(doc);
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

std::string serialize_quiver(const Quiver& q) { return quiver_to_json(q).dump(); }

FieldSpec parse_field(std::string_view text) {
  if (text == "0" || text == "Q" || text == "QQ" || text == "q") return FieldSpec::rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) digits = digits.substr(3, digits.size() - 4);
  std::uint32_t p = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || end != digits.data() + digits.size()) {
    throw Error(Errc::InvalidArgument, "not a field: \"" + std::string(text) + "\"");
  }
  return FieldSpec::prime(p);
}

std::vector<FieldSpec> parse_field_list(std::string_view text) {
  std::vector<FieldSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.empty()) throw Error(Errc::InvalidArgument, "empty entry in field list");
    out.push_back(parse_field(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

json to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.descending()) coeffs.push_back(to_decimal(c));
  return {{"descending", coeffs}, {"text", p.to_string()}};
}

json to_json(const DTypeParams& p) {
  json out{{"subtype", to_string(p.subtype)}};
  switch (p.subtype) {
    case DSubtype::I: out["s"] = p.s; out["t"] = p.t; break;
    case DSubtype::II:
    case DSubtype::III:
      out["s1"] = p.s1; out["t1"] = p.t1; out["s2"] = p.s2; out["t2"] = p.t2;
      break;
    case DSubtype::IVa: out["n"] = p.n; break;
    case DSubtype::IVb: {
      json spikes = json::array();
      for (const auto& s : p.spikes) spikes.push_back({{"d", s.d}, {"s", s.s}, {"t", s.t}});
      out["spikes"] = spikes;
      out["n"] = p.n;
      break;
    }
  }
  return out;
}

json to_json(const Quiver& q, const RelationSet& relations) {
  json list = json::array();
  for (const auto& r : relations.relations) {
    const auto& arrow = q.arrows()[static_cast<std::size_t>(r.arrow)];
    list.push_back({{"arrow", {arrow.source, arrow.target}},
                    {"kind", r.is_zero_relation() ? "zero" : "commutativity"},
                    {"text", format_relation(q, r)}});
  }
  return {{"relations", list},
          {"zero", relations.zero_relations()},
          {"commutativity", relations.commutativity_relations()}};
}

json to_json(const CartanData& c) {
  return {{"matrix", c.matrix}, {"det", to_decimal(c.det)}, {"assoc_poly", to_json(c.assoc_poly)}};
}

}  // namespace cthh
