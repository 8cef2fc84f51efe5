#include "cthh/quiver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

#include "cthh/error.hpp"

namespace cthh {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 1) throw Error(Errc::InvalidArgument, "a quiver needs at least one vertex");
  std::sort(arrows_.begin(), arrows_.end());
  adjacency_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (const auto& a : arrows_) {
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_) {
      throw Error(Errc::VertexOutOfRange, "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                                              " leaves the vertex range 1.." + std::to_string(n_));
    }
    ++adjacency_[cell(a.source, a.target)];
  }
}

void Quiver::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
  }
}

int Quiver::arrows_between(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  return adjacency_[cell(i, j)];
}

int Quiver::arrow_index(Vertex i, Vertex j) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), Arrow{i, j});
  if (it == arrows_.end() || it->source != i || it->target != j) return -1;
  return static_cast<int>(it - arrows_.begin());
}

std::vector<Vertex> Quiver::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= n_; ++w) {
    if (w != v && adjacent(v, w)) out.push_back(w);
  }
  return out;
}

int Quiver::degree(Vertex v) const { return out_degree(v) + in_degree(v); }

int Quiver::out_degree(Vertex v) const {
  int d = 0;
  for (Vertex w = 1; w <= n_; ++w) d += arrows_between(v, w);
  return d;
}

int Quiver::in_degree(Vertex v) const {
  int d = 0;
  for (Vertex w = 1; w <= n_; ++w) d += arrows_between(w, v);
  return d;
}

bool Quiver::is_tree() const {
  if (static_cast<int>(arrows_.size()) != n_ - 1) return false;
  // Connected with n - 1 edges.
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Quiver Quiver::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error(Errc::InvalidArgument, "permutation has wrong length");
  std::vector<Arrow> out;
  out.reserve(arrows_.size());
  for (const auto& a : arrows_) {
    out.push_back({perm[static_cast<std::size_t>(a.source - 1)], perm[static_cast<std::size_t>(a.target - 1)]});
  }
  return {n_, std::move(out)};
}

Quiver Quiver::induced(std::span<const Vertex> vertices) const {
  std::vector<Arrow> out;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int m = 0; m < arrows_between(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
           ++m) {
        out.push_back({i + 1, j + 1});
      }
    }
  }
  return {k, std::move(out)};
}

void validate(const Quiver& q) {
  const auto& arrows = q.arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    const std::string name = std::to_string(a.source) + "->" + std::to_string(a.target);
    if (a.source == a.target) throw Error(Errc::Loop, "loop at vertex " + std::to_string(a.source));
    if (i + 1 < arrows.size() && arrows[i + 1] == a) throw Error(Errc::ParallelArrows, "arrow " + name + " repeated");
    if (q.has_arrow(a.target, a.source)) {
      throw Error(Errc::TwoCycle, "arrows " + name + " and " + std::to_string(a.target) + "->" +
                                      std::to_string(a.source) + " form a 2-cycle");
    }
  }
  const int n = q.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : q.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (count != n) {
    throw Error(Errc::Disconnected, "only " + std::to_string(count) + " of " + std::to_string(n) +
                                        " vertices reachable from vertex 1");
  }
}

Quiver mutate(const Quiver& q, Vertex k) {
  const int n = q.vertex_count();
  if (k < 1 || k > n) {
    throw Error(Errc::VertexOutOfRange, "mutation vertex " + std::to_string(k) + " not in 1.." + std::to_string(n));
  }
  std::vector<Arrow> out;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) continue;
      int b = q.exchange(i, j);
      if (i == k || j == k) {
        b = -b;
      } else {
        const int bik = q.exchange(i, k);
        const int bkj = q.exchange(k, j);
        const int sign = (bik > 0) - (bik < 0);
        b += sign * std::max(bik * bkj, 0);
      }
      if (std::abs(b) > 1) {
        throw Error(Errc::MultipleArrowProduced, "mutation at " + std::to_string(k) + " gives " +
                                                     std::to_string(std::abs(b)) + " arrows between " +
                                                     std::to_string(i) + " and " + std::to_string(j));
      }
      if (b == 1) out.push_back({i, j});
    }
  }
  return {n, std::move(out)};
}

namespace {

// Label-invariant ordered partition of the vertices (0-based cells), refined
// from (out-degree, in-degree) by neighbor colors until stable.
std::vector<std::vector<Vertex>> refined_cells(const Quiver& q) {
  const int n = q.vertex_count();
  using Signature = std::vector<int>;
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Signature> sig(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) sig[static_cast<std::size_t>(v)] = {q.out_degree(v), q.in_degree(v)};

  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> distinct(sig.begin() + 1, sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 1; v <= n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<int> outs, ins;
      for (Vertex w = 1; w <= n; ++w) {
        if (q.has_arrow(v, w)) outs.push_back(color[static_cast<std::size_t>(w)]);
        if (q.has_arrow(w, v)) ins.push_back(color[static_cast<std::size_t>(w)]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      Signature s{color[static_cast<std::size_t>(v)], static_cast<int>(outs.size())};
      s.insert(s.end(), outs.begin(), outs.end());
      s.push_back(-1);
      s.insert(s.end(), ins.begin(), ins.end());
      sig[static_cast<std::size_t>(v)] = std::move(s);
    }
  }
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex v = 1; v <= n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  return cells;
}

struct CanonicalSearch {
  std::string form;
  std::vector<Vertex> order;  // position -> vertex
};

CanonicalSearch canonical_search(const Quiver& q) {
  const int n = q.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  auto cells = refined_cells(q);

  std::vector<Vertex> order;
  order.reserve(un);
  std::string best;
  std::vector<Vertex> best_order;
  std::string current(1 + un * un, '\0');
  current[0] = static_cast<char>(n);

  while (true) {
    order.clear();
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    for (std::size_t p = 0; p < un; ++p) {
      for (std::size_t r = 0; r < un; ++r) {
        current[1 + p * un + r] = q.has_arrow(order[p], order[r]) ? '\1' : '\0';
      }
    }
    if (best.empty() || current < best) {
      best = current;
      best_order = order;
    }
    // Odometer over within-cell permutations.
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      if (std::next_permutation(cells[c].begin(), cells[c].end())) break;
    }
    if (c == cells.size()) break;
  }
  return {best, best_order};
}

}  // namespace

std::string canonical_form(const Quiver& q) { return canonical_search(q).form; }

Quiver canonical_relabel(const Quiver& q) {
  auto search = canonical_search(q);
  std::vector<Vertex> perm(static_cast<std::size_t>(q.vertex_count()));
  for (std::size_t p = 0; p < search.order.size(); ++p) {
    perm[static_cast<std::size_t>(search.order[p] - 1)] = static_cast<Vertex>(p + 1);
  }
  return q.relabeled(perm);
}

std::string canonical_hex(const std::string& form) {
  // Vertex count byte, then the adjacency bits packed into hex nibbles.
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  if (form.empty()) return out;
  const auto n = static_cast<unsigned char>(form[0]);
  out += std::to_string(n);
  out += ':';
  unsigned nibble = 0;
  int bits = 0;
  for (std::size_t i = 1; i < form.size(); ++i) {
    nibble = (nibble << 1) | (form[i] ? 1U : 0U);
    if (++bits == 4) {
      out += digits[nibble];
      nibble = 0;
      bits = 0;
    }
  }
  if (bits > 0) out += digits[nibble << (4 - bits)];
  return out;
}

std::vector<ClassMember> enumerate_class(const Quiver& seed, std::size_t cap) {
  validate(seed);
  std::map<std::string, Quiver> seen;
  std::deque<Quiver> frontier;
  auto start = canonical_relabel(seed);
  seen.emplace(canonical_form(start), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    Quiver q = std::move(frontier.front());
    frontier.pop_front();
    for (Vertex k = 1; k <= q.vertex_count(); ++k) {
      Quiver m = canonical_relabel(mutate(q, k));
      auto form = canonical_form(m);
      if (seen.contains(form)) continue;
      seen.emplace(std::move(form), m);
      if (seen.size() > cap) {
        throw Error(Errc::CapExceeded, "mutation class exceeds " + std::to_string(cap) + " isomorphism classes");
      }
      frontier.push_back(std::move(m));
    }
  }
  std::vector<ClassMember> out;
  out.reserve(seen.size());
  for (auto& [form, q] : seen) out.push_back({form, std::move(q)});
  return out;
}

std::vector<Cycle> chordless_cycles(const Quiver& q) {
  const int n = q.vertex_count();
  if (n > 20) throw Error(Errc::InvalidArgument, "chordless cycle scan supports at most 20 vertices");
  std::vector<Cycle> out;
  const std::uint32_t limit = 1U << n;
  std::vector<Vertex> members;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) < 3) continue;
    members.clear();
    for (int v = 0; v < n; ++v) {
      if (mask & (1U << v)) members.push_back(v + 1);
    }
    bool two_regular = true;
    bool oriented = true;
    for (Vertex v : members) {
      int nb = 0, outs = 0;
      for (Vertex w : members) {
        if (w == v) continue;
        if (q.adjacent(v, w)) ++nb;
        if (q.has_arrow(v, w)) ++outs;
      }
      if (nb != 2) {
        two_regular = false;
        break;
      }
      if (outs != 1) oriented = false;
    }
    if (!two_regular) continue;

    // Walk the cycle from its smallest vertex; a 2-regular set is a cycle iff
    // the walk covers it.
    std::vector<Vertex> order{members.front()};
    Vertex prev = 0;
    Vertex cur = members.front();
    while (true) {
      Vertex next = 0;
      for (Vertex w : members) {
        if (w == cur || w == prev || !q.adjacent(cur, w)) continue;
        if (oriented) {
          if (q.has_arrow(cur, w)) next = w;
        } else if (next == 0) {
          next = w;
        }
        if (next != 0 && !oriented) break;
      }
      if (next == 0 || next == members.front()) break;
      if (order.size() > members.size()) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (order.size() != members.size()) continue;
    out.push_back({std::move(order), oriented});
  }
  return out;
}

std::size_t count_oriented_triangles(const Quiver& q) {
  std::size_t count = 0;
  for (const auto& c : chordless_cycles(q)) {
    if (c.oriented && c.length() == 3) ++count;
  }
  return count;
}

std::string to_string(DynkinType t) {
  const char letter = t.family == DynkinFamily::A ? 'A' : t.family == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(t.rank);
}

DynkinType parse_dynkin(const std::string& text) {
  if (text.size() < 2) throw Error(Errc::InvalidArgument, "bad Dynkin type '" + text + "'");
  DynkinType t;
  switch (text[0]) {
    case 'A': case 'a': t.family = DynkinFamily::A; break;
    case 'D': case 'd': t.family = DynkinFamily::D; break;
    case 'E': case 'e': t.family = DynkinFamily::E; break;
    default: throw Error(Errc::InvalidArgument, "bad Dynkin family in '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 3) {
    throw Error(Errc::InvalidArgument, "bad Dynkin rank in '" + text + "'");
  }
  t.rank = std::stoi(digits);
  const bool ok = (t.family == DynkinFamily::A && t.rank >= 1) || (t.family == DynkinFamily::D && t.rank >= 4) ||
                  (t.family == DynkinFamily::E && t.rank >= 6 && t.rank <= 8);
  if (!ok) throw Error(Errc::InvalidArgument, "no Dynkin diagram " + text);
  return t;
}

DynkinType classify_tree(const Quiver& tree) {
  if (!tree.is_tree()) throw Error(Errc::NotDynkin, "underlying graph is not a tree");
  const int n = tree.vertex_count();
  std::vector<Vertex> branch;
  for (Vertex v = 1; v <= n; ++v) {
    const int d = tree.degree(v);
    if (d >= 4) throw Error(Errc::NotDynkin, "vertex of degree " + std::to_string(d));
    if (d == 3) branch.push_back(v);
  }
  if (branch.empty()) return {DynkinFamily::A, n};
  if (branch.size() > 1) throw Error(Errc::NotDynkin, "tree has more than one branch vertex");

  const Vertex center = branch.front();
  std::vector<int> arms;
  for (Vertex start : tree.neighbors(center)) {
    int length = 1;
    Vertex prev = center;
    Vertex cur = start;
    while (true) {
      Vertex next = 0;
      for (Vertex w : tree.neighbors(cur)) {
        if (w != prev) next = w;
      }
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {DynkinFamily::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {DynkinFamily::E, n};
  throw Error(Errc::NotDynkin, "tree with arms (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                                   std::to_string(arms[2]) + ") is not simply-laced Dynkin");
}

DynkinType detect_dynkin(const Quiver& q, std::size_t cap) {
  validate(q);
  if (q.is_tree()) return classify_tree(q);
  std::map<std::string, bool> seen;
  std::deque<Quiver> frontier{q};
  seen.emplace(canonical_form(q), true);
  while (!frontier.empty()) {
    Quiver cur = std::move(frontier.front());
    frontier.pop_front();
    for (Vertex k = 1; k <= cur.vertex_count(); ++k) {
      Quiver m;
      try {
        m = mutate(cur, k);
      } catch (const Error& e) {
        if (e.code() == Errc::MultipleArrowProduced) throw Error(Errc::NotDynkin, e.what());
        throw;
      }
      if (m.is_tree()) return classify_tree(m);
      auto form = canonical_form(m);
      if (seen.contains(form)) continue;
      seen.emplace(std::move(form), true);
      if (seen.size() > cap) throw Error(Errc::NotDynkin, "no tree found within " + std::to_string(cap) + " classes");
      frontier.push_back(std::move(m));
    }
  }
  throw Error(Errc::NotDynkin, "mutation class contains no tree");
}

Quiver standard_seed(DynkinType type) {
  const int n = type.rank;
  std::vector<Arrow> arrows;
  switch (type.family) {
    case DynkinFamily::A:
      if (n < 1) throw Error(Errc::InvalidArgument, "A_n needs n >= 1");
      for (int i = 1; i < n; ++i) arrows.push_back({i, i + 1});
      break;
    case DynkinFamily::D:
      if (n < 4) throw Error(Errc::InvalidArgument, "D_n needs n >= 4");
      arrows = {{1, 3}, {2, 3}};
      for (int i = 3; i < n; ++i) arrows.push_back({i, i + 1});
      break;
    case DynkinFamily::E:
      if (n < 6 || n > 8) throw Error(Errc::InvalidArgument, "E_n needs 6 <= n <= 8");
      for (int i = 1; i < n - 1; ++i) arrows.push_back({i, i + 1});
      arrows.push_back({n, 3});
      break;
  }
  Quiver q(n, std::move(arrows));
  validate(q);
  return q;
}

}  // namespace cthh
