#include "cthh/classifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cthh/algebra.hpp"
#include "cthh/error.hpp"
#include "cthh/oracle.hpp"

namespace cthh {

extern const char* const kETableData;

namespace {

using VertexSet = std::set<Vertex>;

// Connected component of start in q with the removed vertices deleted.
VertexSet component(const Quiver& q, Vertex start, const VertexSet& removed) {
  VertexSet seen{start};
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : q.neighbors(v)) {
      if (removed.contains(w) || seen.contains(w)) continue;
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen;
}

int triangles_within(const std::vector<Cycle>& triangles, const VertexSet& vs) {
  int count = 0;
  for (const auto& c : triangles) {
    if (std::all_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return vs.contains(v); })) ++count;
  }
  return count;
}

// Vertex w outside the cycle with v -> w -> u closes an oriented triangle on
// the cycle arrow u -> v.
std::optional<Vertex> spike_on(const Quiver& q, Vertex u, Vertex v, const VertexSet& cycle) {
  for (Vertex w = 1; w <= q.vertex_count(); ++w) {
    if (cycle.contains(w)) continue;
    if (q.has_arrow(v, w) && q.has_arrow(w, u)) return w;
  }
  return std::nullopt;
}

[[noreturn]] void unclassified(const std::string& why) { throw Error(Errc::UnclassifiedD, why); }

// Central oriented cycle (in arrow order) carrying spikes and nothing else.
std::optional<DTypeParams> match_type_iv(const Quiver& q, const std::vector<Vertex>& cycle,
                                         const std::vector<Cycle>& triangles) {
  const VertexSet on_cycle(cycle.begin(), cycle.end());
  const std::size_t len = cycle.size();
  std::vector<std::size_t> positions;
  std::vector<Vertex> spikes;
  for (std::size_t i = 0; i < len; ++i) {
    if (auto w = spike_on(q, cycle[i], cycle[(i + 1) % len], on_cycle)) {
      positions.push_back(i);
      spikes.push_back(*w);
    }
  }
  if (spikes.empty()) return std::nullopt;
  if (VertexSet(spikes.begin(), spikes.end()).size() != spikes.size()) return std::nullopt;
  // Cycle vertices may only touch their own spikes.
  for (std::size_t i = 0; i < len; ++i) {
    for (Vertex w : q.neighbors(cycle[i])) {
      if (on_cycle.contains(w)) continue;
      bool allowed = false;
      for (std::size_t j = 0; j < positions.size(); ++j) {
        const std::size_t p = positions[j];
        if ((p == i || (p + 1) % len == i) && spikes[j] == w) allowed = true;
      }
      if (!allowed) return std::nullopt;
    }
  }
  DTypeParams params;
  params.subtype = DSubtype::IVb;
  int total_d = 0, ones = 0;
  VertexSet covered = on_cycle;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    DSpike spike;
    const std::size_t next = positions[(j + 1) % positions.size()];
    spike.d = static_cast<int>(positions.size() == 1 ? len : (next + len - positions[j]) % len);
    const VertexSet arm = component(q, spikes[j], on_cycle);
    for (Vertex v : arm) {
      if (covered.contains(v)) return std::nullopt;  // arms must be disjoint
      covered.insert(v);
    }
    spike.s = static_cast<int>(arm.size());
    spike.t = triangles_within(triangles, arm);
    total_d += spike.d;
    if (spike.d == 1) ++ones;
    params.spikes.push_back(spike);
  }
  if (static_cast<int>(covered.size()) != q.vertex_count()) return std::nullopt;
  params.n = total_d + ones;
  return params;
}

std::vector<Vertex> rotate_to_min(std::vector<Vertex> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

HSeries hh_type_A(const Quiver& q) {
  const auto type = detect_dynkin(q);
  if (type.family != DynkinFamily::A) throw Error(Errc::WrongFamily, "quiver is of type " + to_string(type));
  return HSeries::f(3, count_oriented_triangles(q));
}

std::string to_string(DSubtype s) {
  switch (s) {
    case DSubtype::I: return "I";
    case DSubtype::II: return "II";
    case DSubtype::III: return "III";
    case DSubtype::IVa: return "IVa";
    case DSubtype::IVb: return "IVb";
  }
  return "?";
}

std::string format_params(const DTypeParams& p) {
  std::ostringstream os;
  os << to_string(p.subtype);
  switch (p.subtype) {
    case DSubtype::I: os << "(s=" << p.s << ",t=" << p.t << ")"; break;
    case DSubtype::II:
    case DSubtype::III:
      os << "(s1=" << p.s1 << ",t1=" << p.t1 << ",s2=" << p.s2 << ",t2=" << p.t2 << ")";
      break;
    case DSubtype::IVa: os << "(n=" << p.n << ")"; break;
    case DSubtype::IVb:
      os << "(";
      for (std::size_t j = 0; j < p.spikes.size(); ++j) {
        if (j) os << ",";
        os << "(" << p.spikes[j].d << "," << p.spikes[j].s << "," << p.spikes[j].t << ")";
      }
      os << ";n=" << p.n << ")";
      break;
  }
  return os.str();
}

DTypeParams classify_D(const Quiver& q) {
  const auto type = detect_dynkin(q);
  if (type.family != DynkinFamily::D) throw Error(Errc::WrongFamily, "quiver is of type " + to_string(type));
  return classify_D_known(q);
}

DTypeParams classify_D_known(const Quiver& q) {
  const int n = q.vertex_count();
  const auto cycles = chordless_cycles(q);
  std::vector<Cycle> triangles, long_cycles;
  for (const auto& c : cycles) {
    if (!c.oriented) unclassified("non-oriented chordless cycle");
    (c.length() == 3 ? triangles : long_cycles).push_back(c);
  }

  if (long_cycles.size() == 1 && static_cast<int>(long_cycles[0].length()) == n &&
      static_cast<int>(q.arrow_count()) == n) {
    DTypeParams p;
    p.subtype = DSubtype::IVa;
    p.n = n;
    return p;
  }
  if (long_cycles.size() > 1) unclassified("more than one chordless cycle of length >= 4");

  if (long_cycles.size() == 1) {
    const auto& cyc = long_cycles[0].vertices;
    if (auto p = match_type_iv(q, cyc, triangles)) return *p;
    if (cyc.size() != 4) unclassified("long cycle without spikes is not a 4-cycle");
    // Type III: arms only at two opposite vertices of the 4-cycle.
    const VertexSet on_cycle(cyc.begin(), cyc.end());
    std::vector<std::size_t> attached;
    for (std::size_t i = 0; i < 4; ++i) {
      if (q.degree(cyc[i]) > 2) attached.push_back(i);
    }
    std::size_t first = 0;
    if (attached.size() == 1) {
      first = attached[0] % 2;
    } else if (attached.size() == 2 && (attached[1] - attached[0]) == 2) {
      first = attached[0];
    } else {
      unclassified("4-cycle with arms at adjacent vertices");
    }
    const Vertex c1 = cyc[first];
    const Vertex c2 = cyc[first + 2];
    VertexSet removed1 = on_cycle;
    removed1.erase(c1);
    VertexSet removed2 = on_cycle;
    removed2.erase(c2);
    const VertexSet arm1 = component(q, c1, removed1);
    const VertexSet arm2 = component(q, c2, removed2);
    if (static_cast<int>(arm1.size() + arm2.size()) + 2 != n) unclassified("type III arms overlap");
    DTypeParams p;
    p.subtype = DSubtype::III;
    p.s1 = static_cast<int>(arm1.size());
    p.t1 = triangles_within(triangles, arm1);
    p.s2 = static_cast<int>(arm2.size());
    p.t2 = triangles_within(triangles, arm2);
    return p;
  }

  // No long cycles. A triangle with two or more spikes is the center of a
  // type IV quiver with a 3-cycle at its core.
  for (const auto& tri : triangles) {
    const auto& c = tri.vertices;
    const VertexSet on = {c[0], c[1], c[2]};
    int spikes = 0;
    for (std::size_t i = 0; i < 3; ++i) spikes += spike_on(q, c[i], c[(i + 1) % 3], on).has_value();
    if (spikes >= 2) {
      if (auto p = match_type_iv(q, c, triangles)) return *p;
      unclassified("triangle with several spikes and extra attachments");
    }
  }

  // Arrows shared by two triangles.
  std::vector<std::pair<Arrow, std::pair<Vertex, Vertex>>> shared;
  for (const auto& arrow : q.arrows()) {
    std::vector<Vertex> apexes;
    for (Vertex w = 1; w <= n; ++w) {
      if (q.has_arrow(arrow.target, w) && q.has_arrow(w, arrow.source)) apexes.push_back(w);
    }
    if (apexes.size() >= 3) unclassified("arrow on three triangles");
    if (apexes.size() == 2) shared.push_back({arrow, {apexes[0], apexes[1]}});
  }
  if (shared.size() > 1) unclassified("several arrows shared by two triangles");
  if (shared.size() == 1) {
    const auto [arrow, apexes] = shared[0];
    const auto [a, b] = apexes;
    if (q.degree(a) == 2 && q.degree(b) == 2) {
      const VertexSet arm1 = component(q, arrow.source, {a, b, arrow.target});
      const VertexSet arm2 = component(q, arrow.target, {a, b, arrow.source});
      if (static_cast<int>(arm1.size() + arm2.size()) + 2 != n) unclassified("type II arms overlap");
      DTypeParams p;
      p.subtype = DSubtype::II;
      p.s1 = static_cast<int>(arm1.size());
      p.t1 = triangles_within(triangles, arm1);
      p.s2 = static_cast<int>(arm2.size());
      p.t2 = triangles_within(triangles, arm2);
      return p;
    }
    // One apex of degree 2: its triangle is the center, the other apex a spike.
    const Vertex center_apex = q.degree(a) == 2 ? a : q.degree(b) == 2 ? b : 0;
    if (center_apex == 0) unclassified("shared arrow with both apexes attached");
    std::vector<Vertex> cyc = rotate_to_min({arrow.source, arrow.target, center_apex});
    if (auto p = match_type_iv(q, cyc, triangles)) return *p;
    unclassified("shared arrow with attachments at its endpoints");
  }

  // Type I: two leaves at a common vertex.
  for (Vertex c = 1; c <= n; ++c) {
    std::vector<Vertex> leaves;
    for (Vertex w : q.neighbors(c)) {
      if (q.degree(w) == 1) leaves.push_back(w);
    }
    if (leaves.size() >= 2) {
      DTypeParams p;
      p.subtype = DSubtype::I;
      p.s = n - 2;
      p.t = static_cast<int>(triangles.size());
      return p;
    }
  }
  unclassified("no type D pattern matches");
}

HSeries hh_type_D(const DTypeParams& p) {
  switch (p.subtype) {
    case DSubtype::I: return HSeries::f(3, static_cast<std::size_t>(p.t));
    case DSubtype::II: return HSeries::f(3, static_cast<std::size_t>(1 + p.t1 + p.t2));
    case DSubtype::III: return HSeries::f(4) + HSeries::f(3, static_cast<std::size_t>(p.t1 + p.t2));
    case DSubtype::IVa: return HSeries::f(p.n);
    case DSubtype::IVb: {
      std::size_t t = 0;
      for (const auto& s : p.spikes) t += static_cast<std::size_t>(s.t);
      return HSeries::f(p.n) + HSeries::f(3, t);
    }
  }
  throw Error(Errc::InvalidArgument, "unknown D subtype");
}

HSeries hh_type_D(const Quiver& q) { return hh_type_D(classify_D(q)); }

std::vector<ETableEntry> parse_e_table(std::string_view text) {
  std::vector<ETableEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(Errc::SyntaxError, "table line " + std::to_string(line_no) + ": " + why);
    };
    const auto p1 = line.find(';');
    const auto p2 = line.find(';', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) throw fail("expected rank;coefficients;h");
    ETableEntry e;
    try {
      e.rank = std::stoi(line.substr(0, p1));
    } catch (const std::exception&) {
      throw fail("bad rank");
    }
    std::vector<BigInt> coeffs;
    std::istringstream cs(line.substr(p1 + 1, p2 - p1 - 1));
    std::string c;
    while (std::getline(cs, c, ',')) {
      BigInt v;
      if (v.set_str(c, 10) != 0) throw fail("bad coefficient '" + c + "'");
      coeffs.push_back(v);
    }
    if (static_cast<int>(coeffs.size()) != e.rank + 1) throw fail("expected rank + 1 coefficients");
    e.assoc_poly = IntPolynomial::from_descending(coeffs);
    e.h = parse_h(line.substr(p2 + 1));
    out.push_back(std::move(e));
  }
  return out;
}

std::string_view e_table_text() { return kETableData; }

const std::vector<ETableEntry>& e_table() {
  static const std::vector<ETableEntry> table = parse_e_table(kETableData);
  return table;
}

HSeries lookup_E(const IntPolynomial& assoc_poly) {
  for (const auto& e : e_table()) {
    if (e.assoc_poly == assoc_poly) return e.h;
  }
  throw Error(Errc::NotInTable, "associated polynomial " + assoc_poly.to_string() + " is not in the E table");
}

HSeries hh_universal(std::size_t hh1, const BigInt& cartan_det) {
  if (hh1 == 0) {
    if (cartan_det != 1) {
      throw Error(Errc::NonIntegralN, "HH^1 = 0 needs det C = 1, got " + cartan_det.get_str());
    }
    return HSeries::zero();
  }
  const std::size_t t = hh1 - 1;
  BigInt power = 1;
  power <<= static_cast<mp_bitcnt_t>(t);
  if (cartan_det <= 0 || cartan_det % power != 0) {
    throw Error(Errc::NonIntegralN, "2^" + std::to_string(t) + " does not divide det C = " + cartan_det.get_str());
  }
  const BigInt n = 1 + cartan_det / power;
  if (n < 3 || !n.fits_sint_p()) throw Error(Errc::NonIntegralN, "cycle order n = " + n.get_str() + " is out of range");
  return HSeries::f(static_cast<int>(n.get_si())) + HSeries::f(3, t);
}

std::optional<SeriesShape> series_shape(const HSeries& h) {
  if (h.is_zero()) return std::nullopt;
  const auto& orders = h.cycle_orders();
  const std::size_t threes = h.multiplicity(3);
  if (threes == orders.size()) return SeriesShape{threes - 1, 3};
  if (threes + 1 != orders.size()) throw Error(Errc::InvalidArgument, format_h(h) + " is not f_n + t f_3");
  return SeriesShape{threes, orders.front()};
}

ClosedForm hh_closed_form(const Quiver& q, std::optional<DynkinType> known) {
  const DynkinType type = known ? *known : detect_dynkin(q);
  ClosedForm out;
  out.type = type;
  switch (type.family) {
    case DynkinFamily::A:
      out.h = HSeries::f(3, count_oriented_triangles(q));
      out.method = "type A";
      break;
    case DynkinFamily::D:
      try {
        out.d_params = classify_D_known(q);
        out.h = hh_type_D(*out.d_params);
        out.method = "type D";
      } catch (const Error& e) {
        if (e.code() != Errc::UnclassifiedD) throw;
        const auto algebra = cluster_tilted_algebra(q);
        out.h = hh_universal(hh1_dim(algebra, algebra.field()), cartan(algebra).det);
        out.method = "universal";
      }
      break;
    case DynkinFamily::E: {
      const auto algebra = cluster_tilted_algebra(q);
      out.h = lookup_E(cartan(algebra).assoc_poly);
      out.method = "type E";
      break;
    }
  }
  return out;
}

}  // namespace cthh
