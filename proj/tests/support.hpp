#pragma once

// Fixtures, random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls the code path it is used to check.

#include <combsphere/combsphere.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace combsphere::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Möbius–Kühne 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Complex torus7() {
  std::vector<std::vector<Vertex>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    f.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return from_facets(f);
}

inline Complex relabel(const Complex& x, const std::vector<Vertex>& perm) {
  std::vector<Simplex> out;
  for (const Simplex& f : x.facets()) {
    Simplex g;
    f.for_each_vertex([&](Vertex v) { g = g.with(perm[v]); });
    out.push_back(g);
  }
  return Complex::from_simplices(std::move(out));
}

/// Random permutation of the labels 1..n (index 0 unused).
inline std::vector<Vertex> random_perm(Rng& rng, int n) {
  std::vector<Vertex> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

/// Random stacked d-ball with m facets on labels 1..m+d: each new facet is
/// glued to a boundary ridge with a fresh apex.
inline Complex random_stacked_ball(Rng& rng, int d, int m) {
  std::vector<Simplex> facets{simplex_range(1, d + 1)};
  std::map<Simplex, int> ridge_count;
  facets.front().for_each_ridge([&](Simplex r) { ++ridge_count[r]; });
  for (int i = 1; i < m; ++i) {
    std::vector<Simplex> free;
    for (const auto& [r, c] : ridge_count)
      if (c == 1) free.push_back(r);
    const Simplex tau = free[rng() % free.size()];
    const Simplex sigma = tau.with(d + 1 + i);
    facets.push_back(sigma);
    sigma.for_each_ridge([&](Simplex r) { ++ridge_count[r]; });
  }
  return Complex::from_simplices(std::move(facets));
}

/// Random disc on n vertices from a triangle by random ear additions:
/// either a new triangle on a boundary edge with a fresh vertex, or an ear
/// fill across a boundary vertex whose neighbours are not adjacent.
inline Complex random_disc(Rng& rng, int n) {
  std::vector<Simplex> tris{Simplex{1, 2, 3}};
  int next = 4;
  auto edge_exists = [&](Vertex a, Vertex b) {
    const Simplex e{a, b};
    return std::any_of(tris.begin(), tris.end(), [&](Simplex t) { return e.is_subset_of(t); });
  };
  while (next <= n) {
    std::map<Simplex, int> count;
    for (const Simplex& t : tris) t.for_each_ridge([&](Simplex r) { ++count[r]; });
    std::vector<Simplex> bd;
    for (const auto& [e, c] : count)
      if (c == 1) bd.push_back(e);
    const bool try_ear = bd.size() >= 4 && uniform(rng, 0, 2) == 0;
    if (try_ear) {
      std::map<Vertex, std::vector<Vertex>> nb;
      for (const Simplex& e : bd) {
        auto vs = e.vertices();
        nb[vs[0]].push_back(vs[1]);
        nb[vs[1]].push_back(vs[0]);
      }
      std::vector<Simplex> ears;
      for (const auto& [v, ns] : nb)
        if (!edge_exists(ns[0], ns[1])) ears.push_back(Simplex{ns[0], v, ns[1]});
      if (!ears.empty()) {
        tris.push_back(ears[rng() % ears.size()]);
        continue;
      }
    }
    tris.push_back(bd[rng() % bd.size()].with(next++));
  }
  return Complex::from_simplices(std::move(tris));
}

/// Stellar subdivision of the edge {a, b} with new vertex w.
inline Complex subdivide_edge(const Complex& x, Vertex a, Vertex b, Vertex w) {
  const Simplex e{a, b};
  std::vector<Simplex> out;
  for (const Simplex& f : x.facets()) {
    if (e.is_subset_of(f)) {
      out.push_back(f.without(b).with(w));
      out.push_back(f.without(a).with(w));
    } else {
      out.push_back(f);
    }
  }
  return Complex::from_simplices(std::move(out));
}

/// Flag sphere grown from a cross-polytope boundary by random edge subdivisions.
inline Complex random_flag_sphere(Rng& rng, int k, int n) {
  Complex s = catalog::cross_polytope(k);
  for (Vertex w = 2 * k + 1; w <= n; ++w) {
    std::set<Simplex> edges;
    for (const Simplex& f : s.facets())
      f.for_each_face([&](Simplex e) {
        if (e.size() == 2) edges.insert(e);
      });
    auto it = edges.begin();
    std::advance(it, rng() % edges.size());
    const auto ends = it->vertices();
    s = subdivide_edge(s, ends[0], ends[1], w);
  }
  return s;
}

/// Faces by brute force over every vertex subset.
inline std::vector<long> brute_f_vector(const Complex& x) {
  const std::vector<Vertex> vs = x.vertices();
  std::vector<long> f(x.dim() + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << vs.size();
  for (std::uint64_t sub = 1; sub < total; ++sub) {
    Simplex s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (sub >> i & 1U) s = s.with(vs[i]);
    if (std::any_of(x.facets().begin(), x.facets().end(), [&](Simplex g) { return s.is_subset_of(g); }))
      ++f[s.dim()];
  }
  return f;
}

/// Facets of the cyclic polytope C(n, d) by Gale's evenness condition: a
/// d-subset S is a facet iff every pair i < j outside S is separated by an
/// even number of elements of S.
inline std::set<std::vector<int>> gale_facets(int n, int d) {
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask >> i & 1U) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if (mask >> j & 1U) continue;
        int between = 0;
        for (int k = i + 1; k < j; ++k) between += (mask >> k) & 1U;
        if (between % 2 != 0) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) f.push_back(i + 1);
    out.insert(f);
  }
  return out;
}

/// Unrolls the stacked-ball definition: search all facet orders for one where
/// every new facet meets the union so far in exactly the closure of one of
/// its ridges, that ridge lying in a single earlier facet.
inline bool brute_force_stacked(const std::vector<Simplex>& facets) {
  const std::size_t m = facets.size();
  if (m == 0) return false;
  std::vector<bool> used(m, false);
  std::vector<Simplex> placed;
  auto faces_of = [](Simplex s) {
    std::set<Simplex> out;
    s.for_each_face([&](Simplex f) { out.insert(f); });
    return out;
  };
  std::function<bool()> dfs = [&]() -> bool {
    if (placed.size() == m) return true;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      const Simplex sigma = facets[i];
      bool ok = placed.empty();
      if (!ok) {
        std::set<Simplex> shared;
        for (Simplex f : faces_of(sigma))
          for (Simplex g : placed)
            if (f.is_subset_of(g)) {
              shared.insert(f);
              break;
            }
        sigma.for_each_ridge([&](Simplex tau) {
          if (ok || shared != faces_of(tau)) return;
          const auto owners = std::count_if(placed.begin(), placed.end(), [&](Simplex g) { return tau.is_subset_of(g); });
          ok = owners == 1;
        });
      }
      if (!ok) continue;
      used[i] = true;
      placed.push_back(sigma);
      if (dfs()) return true;
      placed.pop_back();
      used[i] = false;
    }
    return false;
  };
  return dfs();
}

}  // namespace combsphere::testing
