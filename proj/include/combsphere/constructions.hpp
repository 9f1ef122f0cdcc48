#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recognition.hpp"

namespace combsphere {

/// A sphere on the input's vertex set that contains the input.
struct CompletionResult {
  Complex sphere;
  bool embedding_check = false;
  std::vector<std::string> trace;
  /// Stacked (d+1)-ball whose boundary is `sphere` (stacked completions only).
  std::optional<Complex> witness_ball;
  /// Facets glued on in order (disc completion only).
  std::vector<Simplex> added;
};

/// Free choices default to the smallest label. `trust` skips re-certifying
/// inputs; budget and seed feed the sphere certifier.
struct CompletionOptions {
  bool trust = false;
  long budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

namespace detail {

inline CompletionResult finish(const Complex& input, Complex sphere, std::vector<std::string> trace) {
  if (sphere.vertex_set() != input.vertex_set())
    throw Error(ErrorCode::IntermediateClaimFailed, "vertex set changed");
  CompletionResult r;
  r.embedding_check = is_subcomplex(input, sphere);
  if (!r.embedding_check) throw Error(ErrorCode::IntermediateClaimFailed, "input not contained in output");
  r.sphere = std::move(sphere);
  r.trace = std::move(trace);
  return r;
}

inline void require_sphere(const Complex& s, const CompletionOptions& opt, ErrorCode code) {
  if (opt.trust) return;
  const Verdict v = certify_sphere(s, opt.budget, opt.seed);
  if (!v.certified()) throw Error(code, "input sphere not certified: " + v.reason);
}

inline std::string vstr(Vertex v) { return std::to_string(v); }

/// Vertex v whose link in s is the boundary of a simplex σ with |σ| = dim(s)+1.
inline std::optional<Simplex> standard_link(const Complex& s, Vertex v) {
  const Complex lk = link(s, v);
  if (!is_standard(lk).sphere || lk.num_vertices() != s.dim() + 1) return std::nullopt;
  return lk.vertex_set();
}

}  // namespace detail

/// S = S_1 * ... * S_m; returns B_1 ∪ B_2 with B_i the join where factor i is
/// replaced by the ball D_i = {v_i} * ast(S_i, v_i).
inline CompletionResult complete_join(const Complex& s, const std::vector<Complex>& factors,
                                      const std::vector<Vertex>& v_choices = {},
                                      const CompletionOptions& opt = {}) {
  if (factors.size() < 2) throw Error(ErrorCode::FactorJoinMismatch, "need at least two factors");
  if (!v_choices.empty() && v_choices.size() != factors.size())
    throw Error(ErrorCode::FactorJoinMismatch, "one vertex choice per factor");
  Complex joined = factors.front();
  try {
    for (std::size_t i = 1; i < factors.size(); ++i) joined = join(joined, factors[i]);
  } catch (const Error& e) {
    throw Error(ErrorCode::FactorJoinMismatch, e.what());
  }
  if (!(joined == s)) throw Error(ErrorCode::FactorJoinMismatch, "factors do not join to the input");
  for (const Complex& f : factors) detail::require_sphere(f, opt, ErrorCode::FactorNotSphere);

  std::vector<Complex> balls;
  std::vector<std::string> trace;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Vertex v = v_choices.empty() ? factors[i].vertex_set().min_vertex() : v_choices[i];
    balls.push_back(cone(v, anti_star(factors[i], v)));
    trace.push_back("factor " + std::to_string(i + 1) + ": D = {" + detail::vstr(v) + "} * ast(" +
                    detail::vstr(v) + ")");
  }
  auto product = [&](std::size_t replaced) {
    Complex acc = replaced == 0 ? balls[0] : factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = join(acc, i == replaced ? balls[i] : factors[i]);
    return acc;
  };
  const Complex b1 = product(0);
  const Complex b2 = product(1);
  trace.push_back("B1 = D1 * S2 * ... (" + std::to_string(b1.num_facets()) + " facets)");
  trace.push_back("B2 = S1 * D2 * ... (" + std::to_string(b2.num_facets()) + " facets)");
  return detail::finish(s, unite(b1, b2), std::move(trace));
}

/// Collapse a degree-d vertex v ↦ σ, then one-point suspend the result at
/// its smallest vertex u with v as the new apex.
inline CompletionResult complete_degree_d(const Complex& s, std::optional<Vertex> vertex = std::nullopt,
                                          const CompletionOptions& opt = {}) {
  if (s.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "need a sphere of dimension >= 1");
  const int d = s.dim() + 1;
  if (s.num_vertices() < d + 2) throw Error(ErrorCode::TooFewVertices, "need n >= d+2");
  detail::require_sphere(s, opt, ErrorCode::NotSphere);

  std::optional<Vertex> v;
  std::optional<Simplex> sigma;
  if (vertex) {
    detail::require_vertex(s, *vertex);
    if (degree(s, *vertex) == d) sigma = detail::standard_link(s, *vertex);
    if (!sigma) throw Error(ErrorCode::NoDegreeDVertex, "vertex " + detail::vstr(*vertex) + " has degree != d");
    v = vertex;
  } else {
    for (Vertex w : s.vertices()) {
      if (degree(s, w) != d) continue;
      if ((sigma = detail::standard_link(s, w))) {
        v = w;
        break;
      }
    }
    if (!v) throw Error(ErrorCode::NoDegreeDVertex, "no vertex of degree " + std::to_string(d));
  }
  if (s.has_face(*sigma)) throw Error(ErrorCode::IntermediateClaimFailed, "σ is already a face");

  const Complex reduced = bistellar_move(s, *v, *sigma);
  const Vertex u = reduced.vertex_set().min_vertex();
  std::vector<std::string> trace{
      "collapse v=" + detail::vstr(*v) + " with σ=" + sigma->to_string(),
      "one-point suspension (u=" + detail::vstr(u) + ", v=" + detail::vstr(*v) + ")"};
  return detail::finish(s, one_point_suspension(reduced, u, *v), std::move(trace));
}

/// Flag spheres: S_2 = ast(S, v) ∪ ({u} * ast(L, u)) with L = lk(S, v); the
/// result is Σ_{u,v}(S_2).
inline CompletionResult complete_flag(const Complex& s, std::optional<Vertex> vertex = std::nullopt,
                                      std::optional<Vertex> link_vertex = std::nullopt,
                                      const CompletionOptions& opt = {}) {
  detail::require_sphere(s, opt, ErrorCode::NotSphere);
  if (!is_flag(s)) throw Error(ErrorCode::NotFlag, "input is not a flag sphere");
  const Vertex v = vertex.value_or(s.vertex_set().min_vertex());
  detail::require_vertex(s, v);
  const Complex lk = link(s, v);
  const Vertex u = link_vertex.value_or(lk.vertex_set().min_vertex());
  if (!lk.has_vertex(u))
    throw Error(ErrorCode::VertexNotPresent, "vertex " + detail::vstr(u) + " not in link of " + detail::vstr(v));

  const Complex d2 = anti_star(s, v);
  const Complex d3 = cone(u, anti_star(lk, u));
  if (common_faces(d2, d3) != lk.facets())
    throw Error(ErrorCode::IntermediateClaimFailed, "D2 ∩ D3 differs from the link");
  const Complex s2 = unite(d2, d3);
  std::vector<std::string> trace{"v=" + detail::vstr(v) + ", u=" + detail::vstr(u),
                                 "D2 ∩ D3 = lk(v) verified"};
  if (!opt.trust) {
    const Verdict sv = certify_sphere(s2, opt.budget, opt.seed);
    if (!sv.certified()) throw Error(ErrorCode::IntermediateClaimFailed, "S2 not certified: " + sv.reason);
    trace.push_back("S2 certified: " + sv.reason);
  }
  trace.push_back("one-point suspension (u=" + detail::vstr(u) + ", v=" + detail::vstr(v) + ")");
  return detail::finish(s, one_point_suspension(s2, u, v), std::move(trace));
}

/// Stacked d-ball B = C ∪ closure(σ_m): S = ∂({u} * C) where u is the apex of
/// the last stacking step.
inline CompletionResult complete_stacked_ball(const Complex& b) {
  const StackedBallCheck check = is_stacked_ball(b);
  if (!check.stacked) throw Error(ErrorCode::NotStackedBall, check.refutation);
  const int d = b.dim();
  if (d < 2) throw Error(ErrorCode::DimensionTooLow, "need d >= 2");
  if (b.num_vertices() < d + 2) throw Error(ErrorCode::TooFewVertices, "need n >= d+2");

  const auto& last = check.witness->steps.back();
  std::vector<Simplex> rest;
  for (const Simplex& f : b.facets())
    if (f != last.facet) rest.push_back(f);
  const Complex witness = cone(last.apex, Complex::from_simplices(std::move(rest)));
  const long f0 = witness.num_vertices();
  const long ftop = static_cast<long>(witness.num_facets());
  if (f0 != ftop + witness.dim())
    throw Error(ErrorCode::IntermediateClaimFailed, "witness ball violates f_0 = f_top + dim");
  std::vector<std::string> trace{"peel σ=" + last.facet.to_string() + " with apex u=" +
                                     detail::vstr(last.apex),
                                 "S = ∂({u} * C)"};
  CompletionResult r = detail::finish(b, boundary(witness), std::move(trace));
  r.witness_ball = witness;
  return r;
}

/// Stacked (d-1)-sphere S: recover the stacked ball with boundary S, then
/// complete that ball.
inline CompletionResult complete_stacked_sphere(const Complex& s) {
  if (s.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "need a sphere of dimension >= 1");
  const int d = s.dim() + 1;
  if (s.num_vertices() < d + 2) throw Error(ErrorCode::TooFewVertices, "need n >= d+2");
  const Complex ball = collapse_stacked_sphere_to_ball(s);
  CompletionResult r = complete_stacked_ball(ball);
  r.trace.insert(r.trace.begin(), "stacked ball with ∂B = S (" + std::to_string(ball.num_facets()) + " facets)");
  if (!is_subcomplex(s, r.sphere)) throw Error(ErrorCode::IntermediateClaimFailed, "S not contained");
  return r;
}

/// n-vertex stacked spheres X ⊂ ... ⊂ S^{n-2}_n.
inline std::vector<Complex> sphere_chain(const Complex& x) {
  std::vector<Complex> chain{x};
  const int n = x.num_vertices();
  while (chain.back().dim() < n - 2) {
    Complex next = complete_stacked_sphere(chain.back()).sphere;
    if (!is_subcomplex(chain.back(), next)) throw Error(ErrorCode::IntermediateClaimFailed, "chain broken");
    chain.push_back(std::move(next));
  }
  if (!is_standard(chain.back()).sphere)
    throw Error(ErrorCode::IntermediateClaimFailed, "chain does not end at the boundary of a simplex");
  return chain;
}

/// Ball with a degree-d vertex u: S = B ∪ ({u} * ast(∂B, u)).
inline CompletionResult complete_ball_degree_d(const Complex& b, std::optional<Vertex> vertex = std::nullopt,
                                               const CompletionOptions& opt = {}) {
  const int d = b.dim();
  if (d < 1) throw Error(ErrorCode::DimensionTooLow, "need a ball of dimension >= 1");
  if (b.num_vertices() < d + 2) throw Error(ErrorCode::TooFewVertices, "need n >= d+2");
  if (!opt.trust) {
    const Verdict bv = certify_ball(b, opt.budget, opt.seed);
    if (!bv.certified()) throw Error(ErrorCode::NotBall, "input ball not certified: " + bv.reason);
  }
  Vertex u = 0;
  if (vertex) {
    detail::require_vertex(b, *vertex);
    if (degree(b, *vertex) != d)
      throw Error(ErrorCode::NoDegreeDVertex, "vertex " + detail::vstr(*vertex) + " has degree != d");
    u = *vertex;
  } else {
    for (Vertex w : b.vertices())
      if (degree(b, w) == d) {
        u = w;
        break;
      }
    if (u == 0) throw Error(ErrorCode::NoDegreeDVertex, "no vertex of degree " + std::to_string(d));
  }
  const Complex lk = link(b, u);
  if (lk.num_facets() != 1) throw Error(ErrorCode::IntermediateClaimFailed, "link of u is not a simplex");
  const Simplex tau = lk.facets().front();
  const Complex m = boundary(b);
  std::vector<Simplex> expected;
  tau.for_each_vertex([&](Vertex w) { expected.push_back(tau.without(w)); });
  std::sort(expected.begin(), expected.end());
  if (face_link(m, Simplex{u}) != expected)
    throw Error(ErrorCode::IntermediateClaimFailed, "link of u in ∂B is not ∂τ");
  const Complex c = cone(u, anti_star(m, u));
  if (common_faces(b, c) != m.facets()) throw Error(ErrorCode::IntermediateClaimFailed, "B ∩ C differs from ∂B");
  std::vector<std::string> trace{"u=" + detail::vstr(u) + ", τ=" + tau.to_string(), "B ∩ C = ∂B verified",
                                 "S = B ∪ ({u} * ast(∂B, u))"};
  return detail::finish(b, unite(b, c), std::move(trace));
}

/// Fills ears along the boundary cycle until it is a triangle, then caps it.
inline CompletionResult complete_disc(const Complex& b, const CompletionOptions& opt = {}) {
  if (b.dim() != 2) throw Error(ErrorCode::NotDisc, "not 2-dimensional");
  if (b.num_vertices() < 4) throw Error(ErrorCode::TooFewVertices, "need n >= 4");
  if (!opt.trust) {
    const Verdict bv = certify_ball(b, opt.budget, opt.seed);
    if (!bv.certified()) throw Error(ErrorCode::NotDisc, bv.reason);
  }
  Complex cur = b;
  std::vector<std::string> trace;
  std::vector<Simplex> added;
  for (;;) {
    const Complex bd = boundary(cur);
    const int m = bd.num_vertices();
    if (static_cast<std::size_t>(m) != bd.num_facets() || !pseudomanifold_check(bd).closed)
      throw Error(ErrorCode::IntermediateClaimFailed, "boundary is not a single cycle");
    if (m == 3) {
      const Simplex alpha = bd.vertex_set();
      if (cur.has_face(alpha)) throw Error(ErrorCode::IntermediateClaimFailed, "cap is already a face");
      trace.push_back("cap [" + alpha.to_string() + "]");
      added.push_back(alpha);
      cur = unite(cur, closure(alpha));
      break;
    }
    // Walk the cycle from its smallest vertex toward the smaller neighbour.
    std::unordered_map<Vertex, std::vector<Vertex>> nbr;
    for (const Simplex& e : bd.facets()) {
      const auto ends = e.vertices();
      nbr[ends[0]].push_back(ends[1]);
      nbr[ends[1]].push_back(ends[0]);
    }
    std::vector<Vertex> cycle{bd.vertex_set().min_vertex()};
    Vertex prev = cycle.front();
    Vertex next = std::min(nbr[prev][0], nbr[prev][1]);
    while (next != cycle.front()) {
      cycle.push_back(next);
      const auto& ns = nbr[next];
      const Vertex after = ns[0] == prev ? ns[1] : ns[0];
      prev = next;
      next = after;
    }
    bool filled = false;
    for (int i = 0; i < m && !filled; ++i) {
      const Vertex a = cycle[(i + m - 1) % m];
      const Vertex c = cycle[(i + 1) % m];
      if (cur.has_face(Simplex{a, c})) continue;
      const Simplex ear{a, cycle[i], c};
      trace.push_back("ear [" + ear.to_string() + "] boundary " + std::to_string(m) + "->" +
                      std::to_string(m - 1));
      added.push_back(ear);
      cur = unite(cur, closure(ear));
      filled = true;
    }
    if (!filled) throw Error(ErrorCode::IntermediateClaimFailed, "no ear position available");
  }
  CompletionResult r = detail::finish(b, std::move(cur), std::move(trace));
  r.added = std::move(added);
  return r;
}

}  // namespace combsphere
