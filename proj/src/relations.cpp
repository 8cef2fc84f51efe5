#include "cthh/relations.hpp"

#include <algorithm>
#include <map>

#include "cthh/error.hpp"

namespace cthh {

Path Path::from_arrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw Error(Errc::InvalidArgument, "use Path::trivial for length-0 paths");
  const auto& all = q.arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] >= all.size()) throw Error(Errc::InvalidRelations, "arrow index out of range");
    if (i > 0 && all[arrows[i - 1]].target != all[arrows[i]].source) {
      throw Error(Errc::InvalidRelations, "arrows do not compose");
    }
  }
  Path p;
  p.source = all[arrows.front()].source;
  p.target = all[arrows.back()].target;
  p.arrows = std::move(arrows);
  return p;
}

bool deglex_less(const Path& a, const Path& b) noexcept {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_trivial()) return a.source < b.source;
  return a.arrows < b.arrows;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.source);
  std::string out = std::to_string(p.source);
  for (auto idx : p.arrows) out += ">" + std::to_string(q.arrows()[idx].target);
  return out;
}

std::size_t RelationSet::zero_relations() const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [](const Relation& r) { return r.is_zero_relation(); }));
}

std::size_t RelationSet::commutativity_relations() const { return relations.size() - zero_relations(); }

RelationSet generate_relations(const Quiver& q) {
  // Arrow index lists of the oriented chordless cycles, in cycle order.
  std::vector<std::vector<std::size_t>> cycles;
  for (const auto& c : chordless_cycles(q)) {
    if (!c.oriented) {
      std::string vs;
      for (auto v : c.vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v);
      throw Error(Errc::NonOrientedChordlessCycle, "chordless cycle on {" + vs + "} is not oriented");
    }
    std::vector<std::size_t> arrows;
    for (std::size_t i = 0; i < c.length(); ++i) {
      const Vertex from = c.vertices[i];
      const Vertex to = c.vertices[(i + 1) % c.length()];
      arrows.push_back(static_cast<std::size_t>(q.arrow_index(from, to)));
    }
    cycles.push_back(std::move(arrows));
  }

  std::map<std::size_t, Relation> by_arrow;
  for (const auto& cyc : cycles) {
    const std::size_t len = cyc.size();
    for (std::size_t pos = 0; pos < len; ++pos) {
      std::vector<std::size_t> complement;
      for (std::size_t k = 1; k < len; ++k) complement.push_back(cyc[(pos + k) % len]);
      auto& rel = by_arrow[cyc[pos]];
      rel.arrow = cyc[pos];
      rel.terms.push_back({1, Path::from_arrows(q, std::move(complement))});
      if (rel.terms.size() >= 3) {
        const auto& a = q.arrows()[cyc[pos]];
        throw Error(Errc::ArrowOnThreeCycles, "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                                                  " lies on three or more chordless oriented cycles");
      }
    }
  }

  RelationSet out;
  for (auto& [arrow, rel] : by_arrow) {
    std::sort(rel.terms.begin(), rel.terms.end(),
              [](const RelationTerm& a, const RelationTerm& b) { return deglex_less(a.path, b.path); });
    out.relations.push_back(std::move(rel));
  }
  return out;
}

std::string format_relation(const Quiver& q, const Relation& r) {
  std::string out;
  for (const auto& t : r.terms) {
    if (!out.empty()) out += t.coefficient < 0 ? " - " : " + ";
    else if (t.coefficient < 0) out += "-";
    const int mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += format_path(q, t.path);
  }
  return out;
}

}  // namespace cthh
