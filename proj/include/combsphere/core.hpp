#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"

namespace combsphere {

namespace detail {

inline void require_vertex(const Complex& x, Vertex v) {
  if (!x.has_vertex(v)) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(v));
}

}  // namespace detail

/// lk_X(v): facets {σ \ v : v ∈ σ}.
inline Complex link(const Complex& x, Vertex v) {
  detail::require_vertex(x, v);
  if (x.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "link of a vertex in a 0-complex is empty");
  std::vector<Simplex> facets;
  for (const Simplex& f : x.facets())
    if (f.contains(v)) facets.push_back(f.without(v));
  return Complex::from_simplices(std::move(facets));
}

/// Link of an arbitrary face; the link of a facet is {∅}, reported as a
/// list holding the empty simplex.
inline std::vector<Simplex> face_link(const Complex& x, Simplex a) {
  std::vector<Simplex> out;
  for (const Simplex& f : x.facets())
    if (a.is_subset_of(f)) out.push_back(f.minus(a));
  std::sort(out.begin(), out.end());
  return out;
}

/// ast_X(v): the faces avoiding v. Rejects inputs where the result is not
/// pure of dimension dim(X).
inline Complex anti_star(const Complex& x, Vertex v) {
  detail::require_vertex(x, v);
  std::vector<Simplex> kept;
  for (const Simplex& f : x.facets())
    if (!f.contains(v)) kept.push_back(f);
  if (kept.empty()) throw Error(ErrorCode::NonPureResult, "every facet contains " + std::to_string(v));
  for (const Simplex& f : x.facets()) {
    if (!f.contains(v)) continue;
    const Simplex rest = f.without(v);
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](Simplex k) { return rest.is_subset_of(k); });
    if (!covered)
      throw Error(ErrorCode::NonPureResult, "face " + rest.to_string() + " is maximal in the anti-star");
  }
  return Complex::from_simplices(std::move(kept));
}

inline Complex join(const Complex& x, const Complex& y) {
  if (!x.vertex_set().disjoint(y.vertex_set()))
    throw Error(ErrorCode::VertexSetsOverlap, "join needs disjoint vertex sets");
  std::vector<Simplex> facets;
  facets.reserve(x.num_facets() * y.num_facets());
  for (const Simplex& a : x.facets())
    for (const Simplex& b : y.facets()) facets.push_back(a | b);
  return Complex::from_simplices(std::move(facets));
}

/// {v} * X, the cone with apex v.
inline Complex cone(Vertex apex, const Complex& x) { return join(closure(Simplex{apex}), x); }

/// X - Y: facets of X not in Y, for a proper pure subcomplex Y of equal dimension.
inline Complex complement(const Complex& x, const Complex& y) {
  if (y.empty() || y.dim() != x.dim())
    throw Error(ErrorCode::NotProperSubcomplex, "dimension mismatch");
  for (const Simplex& f : y.facets())
    if (!x.has_facet(f)) throw Error(ErrorCode::NotProperSubcomplex, f.to_string() + " is not a facet");
  if (y.num_facets() == x.num_facets()) throw Error(ErrorCode::NotProperSubcomplex, "Y equals X");
  std::vector<Simplex> rest;
  for (const Simplex& f : x.facets())
    if (!y.has_facet(f)) rest.push_back(f);
  return Complex::from_simplices(std::move(rest));
}

/// Number of facets containing each ridge.
inline std::map<Simplex, int> ridge_multiplicities(const Complex& x) {
  std::map<Simplex, int> count;
  for (const Simplex& f : x.facets()) f.for_each_ridge([&](Simplex r) { ++count[r]; });
  return count;
}

/// ∂X: ridges lying in exactly one facet. Empty for closed pseudomanifolds.
inline Complex boundary(const Complex& x) {
  if (x.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "boundary needs dimension >= 1");
  std::vector<Simplex> ridges;
  for (const auto& [r, n] : ridge_multiplicities(x)) {
    if (n > 2) throw Error(ErrorCode::RidgeInThreeFacets, "ridge " + r.to_string());
    if (n == 1) ridges.push_back(r);
  }
  return Complex::from_simplices(std::move(ridges));
}

/// Λ(X): facets as nodes, ridge-sharing pairs as edges.
struct DualGraph {
  std::vector<Simplex> nodes;
  std::vector<std::vector<std::size_t>> adjacency;
  std::map<Simplex, std::vector<std::size_t>> ridge_index;

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
  }

  int max_ridge_multiplicity() const {
    std::size_t m = 0;
    for (const auto& [r, owners] : ridge_index) m = std::max(m, owners.size());
    return static_cast<int>(m);
  }

  bool connected() const {
    if (nodes.empty()) return true;
    std::vector<bool> seen(nodes.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j : adjacency[i]) {
        if (!seen[j]) {
          seen[j] = true;
          ++reached;
          todo.push(j);
        }
      }
    }
    return reached == nodes.size();
  }

  bool is_tree() const { return connected() && num_edges() + 1 == nodes.size(); }
};

inline DualGraph dual_graph(const Complex& x) {
  DualGraph g;
  g.nodes = x.facets();
  g.adjacency.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    g.nodes[i].for_each_ridge([&](Simplex r) { g.ridge_index[r].push_back(i); });
  for (const auto& [r, owners] : g.ridge_index) {
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        g.adjacency[owners[a]].push_back(owners[b]);
        g.adjacency[owners[b]].push_back(owners[a]);
      }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

struct PseudomanifoldStatus {
  bool is_pseudomanifold = false;
  bool closed = false;
};

inline PseudomanifoldStatus pseudomanifold_check(const Complex& x) {
  if (x.empty()) return {};
  const DualGraph g = dual_graph(x);
  PseudomanifoldStatus st;
  st.is_pseudomanifold = g.max_ridge_multiplicity() <= 2 && g.connected();
  st.closed = st.is_pseudomanifold &&
              std::all_of(g.ridge_index.begin(), g.ridge_index.end(),
                          [](const auto& kv) { return kv.second.size() == 2; });
  return st;
}

inline long euler_characteristic(const Complex& x) { return x.euler_characteristic(); }

/// True iff every facet of `a` is a face of `x`.
inline bool is_subcomplex(const Complex& a, const Complex& x) {
  return std::all_of(a.facets().begin(), a.facets().end(), [&](Simplex f) { return x.has_face(f); });
}

/// Σ_{u,v}(X) = ({u} * ast_X(u)) ∪ ({v} * X).
inline Complex one_point_suspension(const Complex& x, Vertex u, Vertex v) {
  detail::require_vertex(x, u);
  Simplex::check_label(v);
  if (x.has_vertex(v))
    throw Error(ErrorCode::FreshVertexCollision, "vertex " + std::to_string(v) + " already present");
  if (!pseudomanifold_check(x).closed)
    throw Error(ErrorCode::NotClosedPseudomanifold, "one-point suspension needs a closed pseudomanifold");
  return unite(cone(u, anti_star(x, u)), cone(v, x));
}

/// Vertex collapse v ↦ σ: replaces st_X(v) by the closure of σ when
/// lk_X(v) = ∂σ and σ is not yet a face.
inline Complex bistellar_move(const Complex& x, Vertex v, Simplex sigma) {
  detail::require_vertex(x, v);
  const Complex lk = link(x, v);
  if (sigma.size() != x.dim() + 1 || sigma.contains(v) || !(lk == standard_sphere_on(sigma)))
    throw Error(ErrorCode::LinkNotStandardSphere,
                "link of " + std::to_string(v) + " is not the boundary of " + sigma.to_string());
  if (x.has_face(sigma)) throw Error(ErrorCode::SigmaAlreadyFace, sigma.to_string());
  std::vector<Simplex> facets;
  for (const Simplex& f : x.facets())
    if (!f.contains(v)) facets.push_back(f);
  facets.push_back(sigma);
  return Complex::from_simplices(std::move(facets));
}

/// Whether the bistellar move A∗∂B → ∂A∗B applies to x (a closed pseudomanifold).
inline bool bistellar_move_applies(const Complex& x, Simplex a, Simplex b) {
  if (a.empty() || b.empty() || !a.disjoint(b)) return false;
  if (a.size() + b.size() != x.dim() + 2) return false;
  if (x.has_face(b)) return false;
  const std::vector<Simplex> lk = face_link(x, a);
  if (static_cast<int>(lk.size()) != b.size()) return false;
  std::vector<Simplex> expected;
  b.for_each_vertex([&](Vertex w) { expected.push_back(b.without(w)); });
  std::sort(expected.begin(), expected.end());
  return lk == expected;
}

/// Replaces closure(A) ∗ ∂B by ∂A ∗ closure(B).
inline Complex generalized_bistellar_move(const Complex& x, Simplex a, Simplex b) {
  if (!bistellar_move_applies(x, a, b))
    throw Error(ErrorCode::MovePreconditionFailed,
                "A=[" + a.to_string() + "] B=[" + b.to_string() + "]");
  if (b.size() == 1) Simplex::check_label(b.min_vertex());
  std::vector<Simplex> facets;
  for (const Simplex& f : x.facets())
    if (!a.is_subset_of(f)) facets.push_back(f);
  a.for_each_vertex([&](Vertex w) { facets.push_back(a.without(w) | b); });
  return Complex::from_simplices(std::move(facets));
}

}  // namespace combsphere
