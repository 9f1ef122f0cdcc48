#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"

namespace combsphere {

using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Labeled points with exact rational coordinates in R^d.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  explicit PointConfiguration(int dim) : dim_(dim) {}

  void add(Vertex label, Point p) {
    Simplex::check_label(label);
    if (static_cast<int>(p.size()) != dim_)
      throw Error(ErrorCode::TypeMismatch, "point " + std::to_string(label) + " has " +
                                               std::to_string(p.size()) + " coordinates, expected " +
                                               std::to_string(dim_));
    if (points_.count(label)) throw Error(ErrorCode::TypeMismatch, "duplicate label " + std::to_string(label));
    points_.emplace(label, std::move(p));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::map<Vertex, Point>& points() const { return points_; }
  const Point& at(Vertex label) const {
    auto it = points_.find(label);
    if (it == points_.end()) throw Error(ErrorCode::VertexNotPresent, "no point " + std::to_string(label));
    return it->second;
  }
  Point& at(Vertex label) { return const_cast<Point&>(std::as_const(*this).at(label)); }

  std::vector<Vertex> labels() const {
    std::vector<Vertex> out;
    for (const auto& [l, p] : points_) out.push_back(l);
    return out;
  }

  PointConfiguration without(Vertex label) const {
    PointConfiguration out = *this;
    out.points_.erase(label);
    return out;
  }

  bool operator==(const PointConfiguration&) const = default;

 private:
  int dim_ = 0;
  std::map<Vertex, Point> points_;
};

namespace geom {

/// Exact determinant by fraction-based Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Sign-carrying volume of the simplex on d+1 points in R^d.
inline Rational orientation(std::span<const Point* const> pts) {
  const std::size_t d = pts.size() - 1;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = (*pts[i + 1])[j] - (*pts[0])[j];
  return determinant(std::move(m));
}

inline Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Hyperplane {
  Point normal;
  Rational offset;
  Rational eval(const Point& p) const { return dot(normal, p) - offset; }
};

/// Hyperplane through d points in R^d, normal from cofactor expansion.
inline std::optional<Hyperplane> hyperplane_through(std::span<const Point* const> pts) {
  const std::size_t d = pts.front()->size();
  std::vector<Point> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = (*pts[i])[j] - (*pts[0])[j];
    rows.push_back(std::move(r));
  }
  Hyperplane h;
  h.normal.assign(d, 0);
  bool nonzero = false;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (const Point& r : rows) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < d; ++c)
        if (c != j) row.push_back(r[c]);
      minor.push_back(std::move(row));
    }
    Rational cof = minor.empty() ? Rational(1) : determinant(std::move(minor));
    if (j % 2 == 1) cof = -cof;
    if (cof != 0) nonzero = true;
    h.normal[j] = cof;
  }
  if (!nonzero) return std::nullopt;
  h.offset = dot(h.normal, *pts[0]);
  return h;
}

/// Scales so the first non-zero normal entry has absolute value 1.
inline Hyperplane normalized(Hyperplane h) {
  Rational lead = 0;
  for (const Rational& c : h.normal)
    if (c != 0) {
      lead = abs(c);
      break;
    }
  for (Rational& c : h.normal) c /= lead;
  h.offset /= lead;
  return h;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace geom

/// A hull facet with its outward supporting functional: normal·x <= offset
/// for every point, with equality exactly on `vertices`.
struct HullFacet {
  Simplex vertices;
  Point normal;
  Rational offset;
};

struct Hull {
  int dim = 0;
  std::vector<HullFacet> facets;

  bool simplicial() const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const HullFacet& f) { return f.vertices.size() == dim; });
  }

  /// The boundary sphere; requires every facet to be a simplex.
  Complex boundary_complex() const {
    if (!simplicial()) throw Error(ErrorCode::NotSimplicial, "a hull facet holds more than d points");
    std::vector<Simplex> fs;
    for (const HullFacet& f : facets) fs.push_back(f.vertices);
    return Complex::from_simplices(std::move(fs));
  }
};

/// True iff no d+1 of the points lie on a common hyperplane.
inline bool general_position_check(const PointConfiguration& pc) {
  const std::size_t d = static_cast<std::size_t>(pc.dim());
  if (pc.size() < d + 1) throw Error(ErrorCode::TooFewPoints, "need at least d+1 points");
  std::vector<const Point*> pts;
  for (const auto& [l, p] : pc.points()) pts.push_back(&p);
  bool ok = true;
  geom::for_each_combination(pts.size(), d + 1, [&](std::span<const std::size_t> idx) {
    std::vector<const Point*> sub;
    for (std::size_t i : idx) sub.push_back(pts[i]);
    if (geom::orientation(sub) == 0) ok = false;
    return ok;
  });
  return ok;
}

/// Incremental beneath-beyond hull with exact predicates. `order` fixes the
/// insertion order (defaults to ascending labels).
inline Hull convex_hull(const PointConfiguration& pc, std::span<const Vertex> order = {}) {
  const std::size_t d = static_cast<std::size_t>(pc.dim());
  if (d < 1) throw Error(ErrorCode::DegenerateSpan, "dimension must be positive");
  std::vector<Vertex> seq = order.empty() ? pc.labels() : std::vector<Vertex>(order.begin(), order.end());
  if (seq.size() != pc.size()) throw Error(ErrorCode::TypeMismatch, "insertion order must list every point");

  // Initial simplex: greedy affinely independent scan (row-echelon basis).
  std::vector<Vertex> base;
  std::vector<Point> echelon;
  std::vector<std::size_t> pivots;
  for (Vertex l : seq) {
    if (base.size() == d + 1) break;
    if (base.empty()) {
      base.push_back(l);
      continue;
    }
    Point r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = pc.at(l)[j] - pc.at(base.front())[j];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (r[pivots[k]] == 0) continue;
      const Rational f = r[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t j = 0; j < d; ++j) r[j] -= f * echelon[k][j];
    }
    const auto nz = std::find_if(r.begin(), r.end(), [](const Rational& c) { return c != 0; });
    if (nz == r.end()) continue;
    pivots.push_back(static_cast<std::size_t>(nz - r.begin()));
    echelon.push_back(std::move(r));
    base.push_back(l);
  }
  if (base.size() != d + 1) throw Error(ErrorCode::DegenerateSpan, "points do not affinely span R^d");

  Point interior(d, 0);
  for (Vertex l : base)
    for (std::size_t j = 0; j < d; ++j) interior[j] += pc.at(l)[j];
  for (Rational& c : interior) c /= static_cast<long>(d + 1);

  struct Working {
    Simplex verts;
    geom::Hyperplane plane;
  };
  auto make_facet = [&](Simplex verts) {
    std::vector<const Point*> pts;
    verts.for_each_vertex([&](Vertex l) { pts.push_back(&pc.at(l)); });
    auto h = geom::hyperplane_through(pts);
    if (!h) throw Error(ErrorCode::DegenerateSpan, "flat facet " + verts.to_string());
    if (h->eval(interior) > 0) {
      for (Rational& c : h->normal) c = -c;
      h->offset = -h->offset;
    }
    return Working{verts, std::move(*h)};
  };

  Simplex base_set;
  for (Vertex l : base) base_set = base_set.with(l);
  std::vector<Working> facets;
  for (Vertex l : base) facets.push_back(make_facet(base_set.without(l)));

  for (Vertex l : seq) {
    if (base_set.contains(l)) continue;
    const Point& p = pc.at(l);
    const bool beyond_any =
        std::any_of(facets.begin(), facets.end(), [&](const Working& f) { return f.plane.eval(p) > 0; });
    if (!beyond_any) continue;
    std::vector<Working> kept;
    std::map<Simplex, int> ridge_count;
    for (Working& f : facets) {
      if (f.plane.eval(p) > 0) {
        f.verts.for_each_ridge([&](Simplex r) { ++ridge_count[r]; });
      } else {
        kept.push_back(std::move(f));
      }
    }
    for (const auto& [r, c] : ridge_count)
      if (c == 1) kept.push_back(make_facet(r.with(l)));
    facets = std::move(kept);
  }

  // Merge coplanar pieces into one facet per supporting hyperplane.
  std::map<std::vector<std::string>, geom::Hyperplane> planes;
  for (const Working& f : facets) {
    geom::Hyperplane h = geom::normalized(f.plane);
    std::vector<std::string> key;
    for (const Rational& c : h.normal) key.push_back(c.get_str());
    key.push_back(h.offset.get_str());
    planes.emplace(std::move(key), std::move(h));
  }
  Hull hull;
  hull.dim = static_cast<int>(d);
  for (auto& [key, h] : planes) {
    HullFacet hf;
    for (const auto& [lbl, pt] : pc.points())
      if (h.eval(pt) == 0) hf.vertices = hf.vertices.with(lbl);
    hf.normal = std::move(h.normal);
    hf.offset = std::move(h.offset);
    hull.facets.push_back(std::move(hf));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const HullFacet& a, const HullFacet& b) { return a.vertices < b.vertices; });
  return hull;
}

namespace detail {

/// Simplicial hulls must reproduce the type exactly; a non-simplicial hull
/// matches when the type refines it on the same vertex set.
inline bool hull_matches(const Hull& hull, const Complex& type) {
  if (hull.simplicial()) return hull.boundary_complex() == type;
  Simplex verts;
  for (const HullFacet& f : hull.facets) verts = verts | f.vertices;
  if (verts != type.vertex_set()) return false;
  return std::all_of(type.facets().begin(), type.facets().end(), [&](Simplex t) {
    return std::any_of(hull.facets.begin(), hull.facets.end(),
                       [&](const HullFacet& f) { return t.is_subset_of(f.vertices); });
  });
}

}  // namespace detail

inline constexpr int kPerturbationAttempts = 64;

/// Moves points one at a time, keeping the first facet of `type` fixed, until
/// no d+1 points share a hyperplane. Attempt 0 is the zero displacement;
/// attempt k draws each coordinate shift from [-2^8, 2^8] / 2^(8+k).
inline PointConfiguration perturb_to_general_position(const PointConfiguration& pc, const Complex& type,
                                                      std::uint64_t seed = 0) {
  const std::size_t d = static_cast<std::size_t>(pc.dim());
  if (pc.size() < d + 1) throw Error(ErrorCode::TooFewPoints, "need at least d+1 points");
  if (type.empty() || static_cast<std::size_t>(type.dim()) + 1 != d)
    throw Error(ErrorCode::TypeMismatch, "type must be a (d-1)-complex");
  if (!detail::hull_matches(convex_hull(pc), type))
    throw Error(ErrorCode::TypeMismatch, "hull does not match the combinatorial type");

  std::mt19937_64 rng(seed);
  PointConfiguration out = pc;
  const Simplex fixed = type.facets().front();
  std::vector<Vertex> prefix = fixed.vertices();
  for (Vertex l : pc.labels()) {
    if (fixed.contains(l)) continue;
    const Point original = pc.at(l);
    bool accepted = false;
    for (int attempt = 0; attempt < kPerturbationAttempts && !accepted; ++attempt) {
      Point cand = original;
      if (attempt > 0) {
        mpz_class den = 1;
        den <<= static_cast<unsigned>(8 + attempt);
        for (Rational& c : cand) {
          const long num = static_cast<long>(rng() % 513) - 256;
          c += Rational(mpz_class(num), den);
        }
        for (Rational& c : cand) c.canonicalize();
      }
      bool general = true;
      std::vector<const Point*> pts;
      for (Vertex q : prefix) pts.push_back(&out.at(q));
      geom::for_each_combination(pts.size(), d, [&](std::span<const std::size_t> idx) {
        std::vector<const Point*> sub{&cand};
        for (std::size_t i : idx) sub.push_back(pts[i]);
        if (geom::orientation(sub) == 0) general = false;
        return general;
      });
      if (!general) continue;
      Point saved = out.at(l);
      out.at(l) = cand;
      if (detail::hull_matches(convex_hull(out), type)) {
        accepted = true;
      } else {
        out.at(l) = std::move(saved);
      }
    }
    if (!accepted)
      throw Error(ErrorCode::PerturbationBudgetExhausted, "could not move point " + std::to_string(l));
    prefix.push_back(l);
  }
  return out;
}

struct PolytopalCompletion {
  CompletionResult result;
  /// Coordinates realizing the reduced sphere (all points except v).
  PointConfiguration witness;
  Complex reduced_sphere;
};

/// S = ∂conv(P). Drops v, takes S~ = ∂conv(P \ v) and returns Σ_{u,v}(S~)
/// with u the smallest vertex of S~.
inline PolytopalCompletion polytopal_complete(const PointConfiguration& pc, Vertex v) {
  const std::size_t d = static_cast<std::size_t>(pc.dim());
  if (pc.size() < d + 2) throw Error(ErrorCode::TooFewVertices, "need n >= d+2");
  if (!pc.points().count(v)) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(v));
  if (!general_position_check(pc)) throw Error(ErrorCode::NotGeneralPosition, "perturb the points first");
  const Complex s = convex_hull(pc).boundary_complex();
  if (static_cast<std::size_t>(s.num_vertices()) != pc.size())
    throw Error(ErrorCode::TypeMismatch, "some point is not a vertex of the hull");

  PointConfiguration reduced = pc.without(v);
  const Complex reduced_sphere = convex_hull(reduced).boundary_complex();
  if (!is_subcomplex(anti_star(s, v), reduced_sphere))
    throw Error(ErrorCode::IntermediateClaimFailed, "ast(S, v) is not contained in ∂conv(P \\ v)");
  const Vertex u = reduced_sphere.vertex_set().min_vertex();
  std::vector<std::string> trace{"S~ = ∂conv(P \\ " + std::to_string(v) + ") (" +
                                     std::to_string(reduced_sphere.num_facets()) + " facets)",
                                 "ast(S, " + std::to_string(v) + ") ⊂ S~ verified",
                                 "one-point suspension (u=" + std::to_string(u) + ", v=" + std::to_string(v) + ")"};
  PolytopalCompletion out{detail::finish(s, one_point_suspension(reduced_sphere, u, v), std::move(trace)),
                          std::move(reduced), reduced_sphere};
  return out;
}

}  // namespace combsphere
