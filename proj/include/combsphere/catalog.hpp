#pragma once

#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "polytopal.hpp"

namespace combsphere::catalog {

struct NamedExample {
  std::string name;
  std::optional<Complex> complex;
  std::optional<PointConfiguration> points;
  std::string provenance;
  /// Facets in the order the source lists them (empty for generated entries).
  std::vector<std::vector<Vertex>> source_facets;
  std::vector<std::pair<std::string, std::string>> expected_properties;
};

namespace data {

// Grünbaum–Sreedharan 8-vertex neighbourly non-polytopal 3-sphere.
inline const std::vector<std::vector<Vertex>> kM38 = {
    {1, 2, 3, 4}, {1, 2, 3, 7}, {1, 2, 6, 7}, {1, 3, 4, 7}, {1, 5, 6, 7}, {2, 3, 4, 5}, {2, 3, 6, 7},
    {3, 4, 5, 6}, {3, 4, 6, 7}, {4, 5, 6, 7}, {1, 2, 4, 8}, {1, 2, 6, 8}, {1, 4, 7, 8}, {1, 5, 6, 8},
    {1, 5, 7, 8}, {2, 3, 5, 8}, {2, 3, 6, 8}, {2, 4, 5, 8}, {3, 5, 6, 8}, {4, 5, 7, 8}};

// Barnette's 8-vertex non-neighbourly non-polytopal 3-sphere.
inline const std::vector<std::vector<Vertex>> kBarnette = {
    {2, 4, 5, 8}, {2, 3, 5, 8}, {1, 3, 6, 8}, {1, 4, 6, 8}, {2, 4, 5, 7}, {2, 3, 6, 7}, {1, 3, 6, 7},
    {1, 4, 5, 7}, {1, 2, 4, 8}, {1, 2, 3, 8}, {1, 3, 4, 7}, {2, 3, 4, 7}, {1, 2, 3, 4}, {2, 5, 6, 7},
    {1, 5, 6, 7}, {1, 4, 5, 6}, {4, 5, 6, 8}, {3, 5, 6, 8}, {2, 3, 5, 6}};

// 3-ball with the same boundary as the anti-star of 8 in M38.
inline const std::vector<std::vector<Vertex>> kBallC = {{1, 2, 4, 5}, {1, 2, 5, 6}, {1, 4, 5, 7}, {2, 3, 5, 6}};

}  // namespace data

inline Complex standard_sphere(int d) {
  if (d < 0 || d + 2 > kMaxVertex) throw Error(ErrorCode::UnknownName, "standard_sphere needs 0 <= d <= 62");
  return standard_sphere_on(simplex_range(1, d + 2));
}

inline Complex standard_ball(int d) {
  if (d < 0 || d + 1 > kMaxVertex) throw Error(ErrorCode::UnknownName, "standard_ball needs 0 <= d <= 63");
  return closure(simplex_range(1, d + 1));
}

inline Complex cycle(int n) {
  if (n < 3 || n > kMaxVertex) throw Error(ErrorCode::UnknownName, "cycle needs 3 <= n <= 64");
  std::vector<Simplex> edges;
  for (Vertex i = 1; i <= n; ++i) edges.push_back(Simplex{i, i % n + 1});
  return Complex::from_simplices(std::move(edges));
}

/// Boundary of the k-dimensional cross-polytope: the join of k copies of S^0
/// on the pairs {1,2}, {3,4}, ...
inline Complex cross_polytope(int k) {
  if (k < 1 || 2 * k > kMaxVertex) throw Error(ErrorCode::UnknownName, "cross_polytope needs 1 <= k <= 32");
  Complex acc = Complex::from_simplices({Simplex{1}, Simplex{2}});
  for (int i = 1; i < k; ++i)
    acc = join(acc, Complex::from_simplices({Simplex{2 * i + 1}, Simplex{2 * i + 2}}));
  return acc;
}

/// Points (t, t^2, ..., t^d) for t = 1..n on the moment curve.
inline PointConfiguration cyclic_polytope_points(int n, int d) {
  if (d < 1 || n < d + 1 || n > kMaxVertex) throw Error(ErrorCode::UnknownName, "cyclic_polytope_points(n,d) needs n > d >= 1");
  PointConfiguration pc(d);
  for (int t = 1; t <= n; ++t) {
    Point p;
    Rational power = 1;
    for (int j = 0; j < d; ++j) {
      power *= t;
      p.push_back(power);
    }
    pc.add(t, std::move(p));
  }
  return pc;
}

inline Complex gs_m38() { return from_facets(data::kM38); }
inline Complex gs_ball_C() { return from_facets(data::kBallC); }
inline Complex gs_ball_D() { return anti_star(gs_m38(), 8); }
inline Complex gs_s37() { return unite(gs_ball_C(), gs_ball_D()); }
inline Complex gs_s48() { return one_point_suspension(gs_s37(), 7, 8); }
inline Complex barnette() { return from_facets(data::kBarnette); }
inline Complex barnette_join() {
  const Complex s0 = from_facets({{7}, {8}});
  const Complex tri1 = from_facets({{1, 2}, {2, 5}, {1, 5}});
  const Complex tri2 = from_facets({{3, 4}, {4, 6}, {3, 6}});
  return join(join(s0, tri1), tri2);
}
inline Complex example43_ball() { return unite(gs_ball_D(), closure(Simplex{1, 2, 4, 8})); }

inline std::vector<std::string> names() {
  return {"gs_m38",       "gs_ball_C",          "gs_ball_D", "gs_s37",          "gs_s48",
          "barnette",     "barnette_join",      "example43_ball", "octahedron", "standard_sphere(d)",
          "standard_ball(d)", "cross_polytope(k)", "cycle(n)", "cyclic_polytope_points(n,d)"};
}

inline NamedExample get(const std::string& name) {
  NamedExample ex;
  ex.name = name;
  if (name == "gs_m38") {
    ex.complex = gs_m38();
    ex.source_facets = data::kM38;
    ex.provenance = "Grünbaum & Sreedharan (1967): 8-vertex neighbourly non-polytopal 3-sphere";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "8"}, {"facets", "20"}, {"sphere", "true"},
                              {"neighbourly", "true"}};
  } else if (name == "gs_ball_C") {
    ex.complex = gs_ball_C();
    ex.source_facets = data::kBallC;
    ex.provenance = "3-ball on 7 vertices whose boundary is the link of 8 in gs_m38";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "7"}, {"facets", "4"}, {"ball", "true"}};
  } else if (name == "gs_ball_D") {
    ex.complex = gs_ball_D();
    ex.provenance = "anti-star of vertex 8 in gs_m38";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "7"}, {"facets", "10"}, {"ball", "true"}};
  } else if (name == "gs_s37") {
    ex.complex = gs_s37();
    ex.provenance = "gs_ball_C ∪ gs_ball_D, a 7-vertex 3-sphere";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "7"}, {"facets", "14"}, {"sphere", "true"}};
  } else if (name == "gs_s48") {
    ex.complex = gs_s48();
    ex.provenance = "one-point suspension of gs_s37 at 7 with new vertex 8; contains gs_m38";
    ex.expected_properties = {{"dim", "4"}, {"vertices", "8"}, {"sphere", "true"}, {"contains", "gs_m38"}};
  } else if (name == "barnette") {
    ex.complex = barnette();
    ex.source_facets = data::kBarnette;
    ex.provenance = "Barnette (1970): 8-vertex non-neighbourly non-polytopal 3-sphere";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "8"}, {"facets", "19"}, {"sphere", "true"}};
  } else if (name == "barnette_join") {
    ex.complex = barnette_join();
    ex.provenance = "S^0({7,8}) * S^1({1,2,5}) * S^1({3,4,6}); contains barnette";
    ex.expected_properties = {{"dim", "4"}, {"vertices", "8"}, {"facets", "18"}, {"contains", "barnette"}};
  } else if (name == "example43_ball") {
    ex.complex = example43_ball();
    ex.provenance = "gs_ball_D ∪ closure(1248); its degree-3 vertex 8 completes to gs_m38";
    ex.expected_properties = {{"dim", "3"}, {"vertices", "8"}, {"facets", "11"}, {"ball", "true"}};
  } else if (name == "octahedron") {
    ex.complex = cross_polytope(3);
    ex.provenance = "boundary of the 3-dimensional cross-polytope on pairs {1,2},{3,4},{5,6}";
    ex.expected_properties = {{"dim", "2"}, {"vertices", "6"}, {"facets", "8"}, {"flag", "true"}};
  } else {
    static const std::regex call(R"(([a-z_]+)\((\d+)(?:,(\d+))?\))");
    std::smatch m;
    if (!std::regex_match(name, m, call)) throw Error(ErrorCode::UnknownName, name);
    const std::string fn = m[1];
    const int a = std::stoi(m[2]);
    const bool two = m[3].matched;
    const int b = two ? std::stoi(m[3]) : 0;
    if (fn == "standard_sphere" && !two) {
      ex.complex = standard_sphere(a);
      ex.provenance = "boundary of the simplex on 1..d+2";
    } else if (fn == "standard_ball" && !two) {
      ex.complex = standard_ball(a);
      ex.provenance = "closure of the simplex on 1..d+1";
    } else if (fn == "cross_polytope" && !two) {
      ex.complex = cross_polytope(a);
      ex.provenance = "boundary of the k-dimensional cross-polytope";
    } else if (fn == "cycle" && !two) {
      ex.complex = cycle(a);
      ex.provenance = "n-cycle 1-2-...-n-1";
    } else if (fn == "cyclic_polytope_points" && two) {
      ex.points = cyclic_polytope_points(a, b);
      ex.provenance = "moment-curve points t = 1..n";
    } else {
      throw Error(ErrorCode::UnknownName, name);
    }
  }
  return ex;
}

}  // namespace combsphere::catalog
