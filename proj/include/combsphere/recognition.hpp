#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace combsphere {

inline constexpr long kDefaultBudget = 10000;

enum class Status { Certified, Refuted, Unknown };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::Refuted: return "Refuted";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Outcome of ball/sphere certification. Refutations name the failed
/// invariant; sphere certificates carry a reduction trace or an exact tag.
struct Verdict {
  Status status = Status::Unknown;
  std::string reason;
  std::vector<std::string> trace;

  bool certified() const { return status == Status::Certified; }
  bool refuted() const { return status == Status::Refuted; }
};

struct StandardCheck {
  bool ball = false;
  bool sphere = false;
};

inline StandardCheck is_standard(const Complex& x) {
  StandardCheck out;
  if (x.empty()) return out;
  out.ball = x.num_facets() == 1;
  const auto n = static_cast<std::size_t>(x.dim() + 2);
  out.sphere = static_cast<std::size_t>(x.num_vertices()) == n && x.num_facets() == n;
  return out;
}

inline int degree(const Complex& x, Vertex v) {
  detail::require_vertex(x, v);
  Simplex nbrs;
  for (const Simplex& f : x.facets())
    if (f.contains(v)) nbrs = nbrs | f;
  return nbrs.without(v).size();
}

namespace detail {

struct Move {
  Simplex a;
  Simplex b;
  int facet_delta() const { return a.size() - b.size(); }
  int vertex_delta() const { return a.size() == 1 ? -1 : (b.size() == 1 ? 1 : 0); }
  std::string describe() const { return "A=[" + a.to_string() + "] B=[" + b.to_string() + "]"; }
};

/// Every bistellar move on a closed pseudomanifold except the vertex-adding
/// 0-moves, in deterministic order.
inline std::vector<Move> available_moves(const Complex& x) {
  const int d = x.dim();
  std::unordered_map<Simplex, std::pair<int, Simplex>> owners;  // A -> (count, union of F\A)
  for (const Simplex& f : x.facets()) {
    f.for_each_face([&](Simplex a) {
      if (a.size() > d) return;  // skip facets: those are 0-moves
      auto& [count, rest] = owners[a];
      ++count;
      rest = rest | f.minus(a);
    });
  }
  std::vector<Move> moves;
  for (const auto& [a, entry] : owners) {
    const auto& [count, b] = entry;
    const int bsize = d + 2 - a.size();
    if (count != bsize || b.size() != bsize) continue;
    if (x.has_face(b)) continue;
    moves.push_back({a, b});
  }
  std::sort(moves.begin(), moves.end(), [](const Move& l, const Move& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return moves;
}

inline Complex apply_move(const Complex& x, const Move& m) {
  std::vector<Simplex> facets;
  facets.reserve(x.num_facets() + m.a.size());
  for (const Simplex& f : x.facets())
    if (!m.a.is_subset_of(f)) facets.push_back(f);
  m.a.for_each_vertex([&](Vertex w) { facets.push_back(m.a.without(w) | m.b); });
  return Complex::from_simplices(std::move(facets));
}

/// Greedy bistellar reduction toward the boundary of a simplex. Moves that
/// shrink the facet count (then the vertex count) win; ties and escapes from
/// local minima are drawn from a seeded generator. Freshly created faces are
/// tabu as the A-side of the next few escape-undoing moves.
inline std::optional<std::vector<std::string>> reduce_to_standard(Complex x, long budget,
                                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> trace;
  std::deque<Simplex> tabu;
  const std::size_t tabu_len = static_cast<std::size_t>(x.dim()) + 2;
  for (long step = 0;; ++step) {
    if (is_standard(x).sphere) return trace;
    if (step >= budget) return std::nullopt;
    std::vector<Move> moves = available_moves(x);
    if (moves.empty()) return std::nullopt;

    auto score = [](const Move& m) { return std::pair{m.facet_delta(), m.vertex_delta()}; };
    const auto best = score(*std::min_element(moves.begin(), moves.end(), [&](const Move& l, const Move& r) {
      return score(l) < score(r);
    }));
    std::vector<const Move*> pool;
    if (best.first < 0) {
      for (const Move& m : moves)
        if (score(m) == best) pool.push_back(&m);
      // Stepping back onto an escape move would undo it; avoid when possible.
      std::vector<const Move*> fresh;
      for (const Move* m : pool)
        if (std::find(tabu.begin(), tabu.end(), m->a) == tabu.end()) fresh.push_back(m);
      if (!fresh.empty()) pool = std::move(fresh);
    } else {
      for (const Move& m : moves)
        if (std::find(tabu.begin(), tabu.end(), m.a) == tabu.end()) pool.push_back(&m);
      if (pool.empty())
        for (const Move& m : moves) pool.push_back(&m);
    }
    const Move chosen = *pool[rng() % pool.size()];
    if (best.first >= 0) {
      tabu.push_back(chosen.b);
      if (tabu.size() > tabu_len) tabu.pop_front();
    }
    trace.push_back(chosen.describe());
    x = apply_move(x, chosen);
  }
}

}  // namespace detail

/// Layered sphere certification: closed pseudomanifold, Euler characteristic,
/// exact tests for d <= 2, otherwise vertex links plus bistellar reduction.
inline Verdict certify_sphere(const Complex& x, long budget = kDefaultBudget, std::uint64_t seed = 0) {
  if (x.empty()) return {Status::Refuted, "empty complex", {}};
  const int d = x.dim();
  if (!pseudomanifold_check(x).closed)
    return {Status::Refuted, "not a closed pseudomanifold", {}};
  const long chi = x.euler_characteristic();
  const long want = (d % 2 == 0) ? 2 : 0;
  if (chi != want)
    return {Status::Refuted,
            "Euler characteristic " + std::to_string(chi) + " ≠ " + std::to_string(want), {}};
  if (d <= 1) return {Status::Certified, "exact: connected closed pseudomanifold of dimension " + std::to_string(d), {"exact-d" + std::to_string(d)}};
  if (d == 2) {
    for (Vertex v : x.vertices()) {
      const Complex lk = link(x, v);
      if (!pseudomanifold_check(lk).closed || lk.euler_characteristic() != 0)
        return {Status::Refuted, "link of " + std::to_string(v) + " is not a single cycle", {}};
    }
    return {Status::Certified, "exact: connected surface with cycle links and χ=2", {"exact-d2"}};
  }
  for (Vertex v : x.vertices()) {
    const Verdict lk = certify_sphere(link(x, v), budget, seed);
    if (lk.refuted()) return {Status::Refuted, "link of " + std::to_string(v) + ": " + lk.reason, {}};
  }
  if (auto trace = detail::reduce_to_standard(x, budget, seed)) {
    const std::size_t n = trace->size();
    return {Status::Certified, "reduced to boundary of simplex in " + std::to_string(n) + " moves",
            std::move(*trace)};
  }
  return {Status::Unknown, "bistellar search budget exhausted", {}};
}

/// A is a combinatorial d-ball iff A ∪ ({w} * ∂A) is a d-sphere for fresh w.
inline Verdict certify_ball(const Complex& x, long budget = kDefaultBudget, std::uint64_t seed = 0) {
  if (x.empty()) return {Status::Refuted, "empty complex", {}};
  if (x.dim() == 0) {
    if (x.num_facets() == 1) return {Status::Certified, "exact: single point", {"exact-d0"}};
    return {Status::Refuted, "0-ball must be a single point", {}};
  }
  const PseudomanifoldStatus pm = pseudomanifold_check(x);
  if (!pm.is_pseudomanifold) return {Status::Refuted, "not a pseudomanifold", {}};
  if (pm.closed) return {Status::Refuted, "boundary is empty", {}};
  const Complex bd = boundary(x);
  const Verdict bv = certify_sphere(bd, budget, seed);
  if (bv.refuted()) return {Status::Refuted, "boundary: " + bv.reason, {}};
  const Simplex::Mask free = ~x.vertex_set().mask();
  if (free == 0) return {Status::Unknown, "no free label for the cone apex", {}};
  const Vertex w = Simplex::from_mask(free).min_vertex();
  const Verdict sv = certify_sphere(unite(x, cone(w, bd)), budget, seed);
  switch (sv.status) {
    case Status::Certified: return {Status::Certified, "coned boundary: " + sv.reason, sv.trace};
    case Status::Refuted: return {Status::Refuted, "coned boundary: " + sv.reason, {}};
    case Status::Unknown: break;
  }
  return {Status::Unknown, "coned boundary: " + sv.reason, {}};
}

/// Ordered facets witnessing a stacked ball: step i glues `facet` along
/// `ridge` with the fresh vertex `apex` (the first step has no ridge).
struct StackingSequence {
  struct Step {
    Simplex facet;
    Simplex ridge;
    Vertex apex = 0;
  };
  std::vector<Step> steps;
};

struct StackedBallCheck {
  bool stacked = false;
  std::optional<StackingSequence> witness;
  std::string refutation;
};

/// Tree dual graph plus f_0 = f_d + d, with a witness built by peeling
/// leaves that own a private vertex (lexicographically last first).
inline StackedBallCheck is_stacked_ball(const Complex& x) {
  StackedBallCheck out;
  if (x.empty()) {
    out.refutation = "empty complex";
    return out;
  }
  const int d = x.dim();
  const long f0 = x.num_vertices();
  const long fd = static_cast<long>(x.num_facets());
  if (d == 0) {
    out.stacked = fd == 1;
    if (out.stacked)
      out.witness = StackingSequence{{{x.facets().front(), Simplex{}, 0}}};
    else
      out.refutation = "a 0-ball is a single point";
    return out;
  }
  const DualGraph g = dual_graph(x);
  if (!g.is_tree()) {
    out.refutation = "dual graph is not a tree";
    return out;
  }
  if (f0 != fd + d) {
    out.refutation = "f_0 = " + std::to_string(f0) + " but f_d + d = " + std::to_string(fd + d);
    return out;
  }

  const std::size_t m = g.nodes.size();
  std::vector<bool> alive(m, true);
  std::vector<int> deg(m);
  for (std::size_t i = 0; i < m; ++i) deg[i] = static_cast<int>(g.adjacency[i].size());
  std::unordered_map<Vertex, int> owners;
  for (const Simplex& f : g.nodes) f.for_each_vertex([&](Vertex v) { ++owners[v]; });

  std::vector<StackingSequence::Step> reversed;
  for (std::size_t remaining = m; remaining > 1; --remaining) {
    std::optional<std::size_t> pick;
    std::size_t parent = 0;
    for (std::size_t i = m; i-- > 0;) {
      if (!alive[i] || deg[i] != 1) continue;
      std::size_t nb = 0;
      for (std::size_t j : g.adjacency[i])
        if (alive[j]) nb = j;
      const Simplex apex = g.nodes[i].minus(g.nodes[nb]);
      if (apex.size() == 1 && owners[apex.min_vertex()] == 1) {
        pick = i;
        parent = nb;
        break;
      }
    }
    if (!pick) {
      out.refutation = "no peelable leaf facet";
      return out;
    }
    const Simplex sigma = g.nodes[*pick];
    const Simplex ridge = sigma & g.nodes[parent];
    const Vertex apex = sigma.minus(ridge).min_vertex();
    reversed.push_back({sigma, ridge, apex});
    alive[*pick] = false;
    --deg[parent];
    sigma.for_each_vertex([&](Vertex v) { --owners[v]; });
  }
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) reversed.push_back({g.nodes[i], Simplex{}, 0});
  StackingSequence seq;
  seq.steps.assign(reversed.rbegin(), reversed.rend());
  out.stacked = true;
  out.witness = std::move(seq);
  return out;
}

/// Recovers a stacked ball B with ∂B = S and V(B) = V(S) by collapsing
/// vertices whose link is the boundary of a simplex, lowest label first.
inline Complex collapse_stacked_sphere_to_ball(const Complex& s) {
  if (s.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "need a sphere of dimension >= 1");
  if (!pseudomanifold_check(s).closed)
    throw Error(ErrorCode::NotStacked, "not a closed pseudomanifold");
  std::vector<Simplex> ball;
  Complex cur = s;
  while (!is_standard(cur).sphere) {
    bool collapsed = false;
    for (Vertex v : cur.vertices()) {
      const Complex lk = link(cur, v);
      if (!is_standard(lk).sphere) continue;
      const Simplex sigma = lk.vertex_set();
      if (sigma.size() != cur.dim() + 1 || cur.has_face(sigma)) continue;
      ball.push_back(sigma.with(v));
      cur = bistellar_move(cur, v, sigma);
      collapsed = true;
      break;
    }
    if (!collapsed) throw Error(ErrorCode::NotStacked, "no collapsible vertex and not standard");
  }
  ball.push_back(cur.vertex_set());
  return Complex::from_simplices(std::move(ball));
}

/// Non-standard, and every clique of the edge graph is a face.
inline bool is_flag(const Complex& s) {
  if (s.empty() || is_standard(s).sphere) return false;
  std::unordered_map<Vertex, Simplex> nbrs;
  for (const Simplex& f : s.facets())
    f.for_each_vertex([&](Vertex v) { nbrs[v] = nbrs[v] | f.without(v); });
  const auto layers = s.faces_by_dim();
  for (std::size_t k = 1; k < layers.size(); ++k) {
    for (const Simplex& face : layers[k]) {
      Simplex common = Simplex::from_mask(~Simplex::Mask{0});
      face.for_each_vertex([&](Vertex v) { common = common & nbrs[v]; });
      bool ok = true;
      common.for_each_vertex([&](Vertex w) {
        if (ok && (k + 1 >= layers.size() || !layers[k + 1].count(face.with(w)))) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace combsphere
