#include <gtest/gtest.h>

#include "support.hpp"

using namespace combsphere;
namespace t = combsphere::testing;

namespace {

Complex octahedron() { return catalog::cross_polytope(3); }
Complex s2_4() { return catalog::standard_sphere(2); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

/// Generating polynomial 1 + sum_j f_j t^{j+1}, coefficients by degree.
std::vector<long> f_poly(const Complex& x) {
  std::vector<long> p{1};
  for (long f : x.f_vector()) p.push_back(f);
  return p;
}

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST(Simplex, RejectsBadLabels) {
  EXPECT_EQ(code_of([] { Simplex{0}; }), ErrorCode::LabelOutOfRange);
  EXPECT_EQ(code_of([] { Simplex{65}; }), ErrorCode::LabelOutOfRange);
  EXPECT_EQ(code_of([] { Simplex{3, 3}; }), ErrorCode::DuplicateVertexInFacet);
  EXPECT_EQ(Simplex{64}.min_vertex(), 64);
}

TEST(Simplex, LexicographicOrder) {
  EXPECT_LT((Simplex{1, 2, 3}), (Simplex{1, 2, 4}));
  EXPECT_LT((Simplex{1, 3, 4}), (Simplex{2, 3, 4}));
  EXPECT_LT((Simplex{1, 2}), (Simplex{1, 2, 3}));
}

TEST(FromFacets, KnownCases) {
  const Complex x = from_facets({{1, 2, 3}, {1, 3, 4}});
  EXPECT_EQ(x.dim(), 2);
  EXPECT_EQ(x.f_vector(), (std::vector<long>{4, 5, 2}));
  const Complex pt = from_facets({{1}});
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(pt.f_vector(), (std::vector<long>{1}));
  EXPECT_EQ(code_of([] { from_facets({{1, 2}, {1, 2, 3}}); }), ErrorCode::NonPure);
  EXPECT_EQ(code_of([] { from_facets({}); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { from_facets({{1, 1, 2}}); }), ErrorCode::DuplicateVertexInFacet);
  EXPECT_EQ(code_of([] { from_facets({{0, 1}}); }), ErrorCode::LabelOutOfRange);
}

TEST(FromFacets, CanonicalizationIsIdempotent) {
  t::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Complex x = t::random_stacked_ball(rng, 1 + i % 4, 1 + i % 7);
    EXPECT_EQ(from_facets(facet_lists(x)), x);
  }
  EXPECT_EQ(from_facets({{3, 2, 1}, {1, 2, 3}}).num_facets(), 1U);
}

TEST(FVector, MatchesBruteForce) {
  t::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Complex x = t::random_stacked_ball(rng, 1 + i % 3, 2 + i % 5);
    EXPECT_EQ(x.f_vector(), t::brute_f_vector(x));
  }
  EXPECT_EQ(catalog::gs_m38().f_vector(), t::brute_f_vector(catalog::gs_m38()));
}

TEST(Link, KnownCases) {
  const Complex lk8 = link(catalog::gs_m38(), 8);
  EXPECT_EQ(lk8, from_facets({{1, 5, 7}, {1, 5, 6}, {3, 5, 6}, {2, 3, 5}, {2, 4, 5},
                              {4, 5, 7}, {1, 4, 7}, {1, 2, 4}, {1, 2, 6}, {2, 3, 6}}));
  EXPECT_EQ(link(s2_4(), 1), standard_sphere_on(Simplex{2, 3, 4}));
  EXPECT_EQ(link(catalog::cycle(4), 2), from_facets({{1}, {3}}));
  EXPECT_EQ(code_of([] { link(catalog::cycle(4), 9); }), ErrorCode::VertexNotPresent);
}

TEST(AntiStar, KnownCases) {
  EXPECT_EQ(anti_star(s2_4(), 4), from_facets({{1, 2, 3}}));
  const Complex m = catalog::gs_m38();
  const Complex d = anti_star(m, 8);
  EXPECT_EQ(d.num_facets(), 10U);
  for (const Simplex& f : d.facets()) {
    EXPECT_FALSE(f.contains(8));
    EXPECT_TRUE(m.has_facet(f));
  }
  EXPECT_EQ(anti_star(octahedron(), 1), from_facets({{2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}}));
}

TEST(AntiStar, NonPureResultRejected) {
  // Vertex 2 lies in every facet of the cone, so nothing survives.
  EXPECT_EQ(code_of([] { anti_star(from_facets({{1, 2}, {2, 3}}), 2); }), ErrorCode::NonPureResult);
  // Removing 3 leaves edge 12 plus the uncovered vertex 4.
  EXPECT_EQ(code_of([] { anti_star(from_facets({{1, 2}, {3, 4}}), 3); }), ErrorCode::NonPureResult);
}

TEST(StarAntiStar, ReconstructsComplex) {
  t::Rng rng(3);
  std::vector<Complex> xs{catalog::gs_m38(), octahedron(), catalog::barnette(), t::torus7()};
  for (int i = 0; i < 10; ++i) xs.push_back(t::random_flag_sphere(rng, 3, 8));
  for (const Complex& x : xs) {
    for (Vertex v : x.vertices()) {
      const Complex st = cone(v, link(x, v));
      const Complex ast = anti_star(x, v);
      EXPECT_EQ(unite(st, ast), x);
      // st ∩ ast = lk as complexes.
      EXPECT_EQ(common_faces(st, ast), link(x, v).facets());
    }
  }
}

TEST(Join, KnownCases) {
  const Complex s0a = from_facets({{1}, {2}});
  const Complex s0b = from_facets({{3}, {4}});
  EXPECT_EQ(join(s0a, s0b), from_facets({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  const Complex bj = catalog::barnette_join();
  EXPECT_EQ(bj.num_vertices(), 8);
  EXPECT_EQ(bj.dim(), 4);
  EXPECT_EQ(bj.num_facets(), 18U);
  const Complex c = cone(9, catalog::cycle(3));
  EXPECT_EQ(c.num_facets(), 3U);
  EXPECT_TRUE(pseudomanifold_check(c).is_pseudomanifold);
  EXPECT_FALSE(pseudomanifold_check(c).closed);
  EXPECT_EQ(code_of([&] { join(s0a, s0a); }), ErrorCode::VertexSetsOverlap);
}

TEST(Join, GeneratingPolynomialIdentity) {
  t::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Complex a = t::random_stacked_ball(rng, 1 + i % 3, 1 + i % 3);
    Complex b = t::random_stacked_ball(rng, 1 + (i / 3) % 2, 1 + i % 2);
    std::vector<Vertex> shift(65);
    for (int k = 1; k + 20 <= 64; ++k) shift[k] = k + 20;
    b = t::relabel(b, shift);
    EXPECT_EQ(f_poly(join(a, b)), multiply(f_poly(a), f_poly(b)));
  }
}

TEST(Complement, KnownCases) {
  EXPECT_EQ(complement(s2_4(), from_facets({{1, 2, 3}})), from_facets({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  const Complex m = catalog::gs_m38();
  EXPECT_EQ(complement(m, cone(8, link(m, 8))), anti_star(m, 8));
  EXPECT_EQ(code_of([&] { complement(m, m); }), ErrorCode::NotProperSubcomplex);
  EXPECT_EQ(code_of([&] { complement(s2_4(), from_facets({{1, 2, 5}})); }), ErrorCode::NotProperSubcomplex);
}

TEST(Boundary, KnownCases) {
  EXPECT_EQ(boundary(from_facets({{1, 2, 3}, {1, 3, 4}})), from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_TRUE(boundary(s2_4()).empty());
  EXPECT_EQ(boundary(catalog::standard_ball(3)), s2_4());
  EXPECT_EQ(code_of([] { boundary(from_facets({{1, 2}, {1, 3}, {1, 4}})); }), ErrorCode::RidgeInThreeFacets);
  EXPECT_EQ(code_of([] { boundary(from_facets({{1}, {2}})); }), ErrorCode::DimensionTooLow);
}

TEST(Boundary, OfStackedBallIsClosed) {
  t::Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const Complex b = t::random_stacked_ball(rng, 2 + i % 4, 1 + i % 9);
    const Complex bd = boundary(b);
    for (const auto& [r, n] : ridge_multiplicities(bd)) EXPECT_EQ(n, 2);
    EXPECT_TRUE(pseudomanifold_check(bd).closed);
  }
}

TEST(DualGraph, KnownCases) {
  const DualGraph path = dual_graph(from_facets({{1, 2, 3}, {1, 3, 4}}));
  EXPECT_EQ(path.nodes.size(), 2U);
  EXPECT_EQ(path.num_edges(), 1U);
  EXPECT_TRUE(path.is_tree());
  const DualGraph k4 = dual_graph(s2_4());
  EXPECT_EQ(k4.num_edges(), 6U);
  EXPECT_FALSE(k4.is_tree());
  const DualGraph g = dual_graph(catalog::gs_m38());
  EXPECT_EQ(g.nodes.size(), 20U);
  EXPECT_TRUE(g.connected());
  for (const auto& adj : g.adjacency) EXPECT_EQ(adj.size(), 4U);
}

TEST(DualGraph, DegreeBoundedByDimension) {
  t::Rng rng(29);
  for (int i = 0; i < 30; ++i) {
    const int d = 2 + i % 3;
    const Complex b = t::random_stacked_ball(rng, d, 2 + i % 6);
    ASSERT_TRUE(pseudomanifold_check(b).is_pseudomanifold);
    for (const auto& adj : dual_graph(b).adjacency) EXPECT_LE(adj.size(), static_cast<std::size_t>(d + 1));
    for (const auto& adj : dual_graph(boundary(b)).adjacency) EXPECT_EQ(adj.size(), static_cast<std::size_t>(d));
  }
}

TEST(Pseudomanifold, KnownCases) {
  const auto m = pseudomanifold_check(catalog::gs_m38());
  EXPECT_TRUE(m.is_pseudomanifold);
  EXPECT_TRUE(m.closed);
  const auto disc = pseudomanifold_check(from_facets({{1, 2, 3}, {1, 3, 4}}));
  EXPECT_TRUE(disc.is_pseudomanifold);
  EXPECT_FALSE(disc.closed);
  EXPECT_FALSE(pseudomanifold_check(from_facets({{1, 2, 3}, {1, 4, 5}})).is_pseudomanifold);
}

TEST(EulerCharacteristic, KnownCases) {
  EXPECT_EQ(euler_characteristic(s2_4()), 2);
  EXPECT_EQ(euler_characteristic(catalog::cycle(5)), 0);
  EXPECT_EQ(euler_characteristic(catalog::gs_m38()), 0);
  EXPECT_EQ(catalog::gs_m38().f_vector(), (std::vector<long>{8, 28, 40, 20}));
  EXPECT_EQ(euler_characteristic(t::torus7()), 0);
}

TEST(Subcomplex, KnownCases) {
  EXPECT_TRUE(is_subcomplex(catalog::gs_m38(), one_point_suspension(catalog::gs_s37(), 7, 8)));
  EXPECT_TRUE(is_subcomplex(octahedron(), octahedron()));
  EXPECT_FALSE(is_subcomplex(s2_4(), catalog::cycle(4)));
  EXPECT_TRUE(is_subcomplex(catalog::cycle(3), s2_4()));
}

TEST(OnePointSuspension, KnownCases) {
  EXPECT_EQ(one_point_suspension(from_facets({{1}, {2}}), 1, 3), from_facets({{1, 2}, {1, 3}, {2, 3}}));
  for (int d = 0; d <= 3; ++d) {
    const Complex s = catalog::standard_sphere(d);
    const Vertex fresh = d + 3;
    EXPECT_EQ(one_point_suspension(s, 1, fresh), standard_sphere_on(simplex_range(1, d + 3)));
  }
  const Complex s37 = catalog::gs_s37();
  const Complex s48 = one_point_suspension(s37, 7, 8);
  EXPECT_EQ(s48.num_vertices(), 8);
  EXPECT_EQ(s48.num_facets(), anti_star(s37, 7).num_facets() + s37.num_facets());
}

TEST(OnePointSuspension, Errors) {
  const Complex s = s2_4();
  EXPECT_EQ(code_of([&] { one_point_suspension(s, 9, 10); }), ErrorCode::VertexNotPresent);
  EXPECT_EQ(code_of([&] { one_point_suspension(s, 1, 2); }), ErrorCode::FreshVertexCollision);
  EXPECT_EQ(code_of([] { one_point_suspension(from_facets({{1, 2, 3}, {1, 3, 4}}), 1, 5); }),
            ErrorCode::NotClosedPseudomanifold);
}

TEST(OnePointSuspension, EulerIdentity) {
  t::Rng rng(31);
  std::vector<Complex> xs{t::torus7(), catalog::gs_m38(), catalog::barnette(), octahedron(), catalog::cycle(7)};
  for (int i = 0; i < 15; ++i) xs.push_back(boundary(t::random_stacked_ball(rng, 2 + i % 3, 1 + i % 5)));
  for (const Complex& x : xs) {
    const Vertex fresh = 64;
    for (Vertex u : x.vertices()) {
      const Complex sx = one_point_suspension(x, u, fresh);
      EXPECT_EQ(euler_characteristic(sx), 2 - euler_characteristic(x));
      EXPECT_TRUE(pseudomanifold_check(sx).closed);
    }
  }
}

TEST(OnePointSuspension, PreservesSubcomplexes) {
  const Complex x = catalog::gs_s48();
  const Complex m = catalog::gs_m38();
  // M38 sits inside S48 and shares vertex 1.
  EXPECT_TRUE(is_subcomplex(one_point_suspension(m, 1, 9), one_point_suspension(x, 1, 9)));
  EXPECT_TRUE(is_subcomplex(one_point_suspension(catalog::cycle(3), 1, 9),
                            one_point_suspension(link(catalog::standard_sphere(3), 5), 1, 9)));
}

TEST(BistellarMove, KnownCases) {
  EXPECT_EQ(bistellar_move(catalog::cycle(4), 4, Simplex{1, 3}), from_facets({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(code_of([] { bistellar_move(catalog::standard_sphere(2), 1, Simplex{2, 3, 4}); }),
            ErrorCode::SigmaAlreadyFace);
  EXPECT_EQ(code_of([] { bistellar_move(catalog::cross_polytope(3), 1, Simplex{3, 4, 5}); }),
            ErrorCode::LinkNotStandardSphere);
}

TEST(GeneralizedBistellarMove, KnownCasesAndInvolution) {
  const Complex s = s2_4();
  const Complex sub = generalized_bistellar_move(s, Simplex{1, 2, 3}, Simplex{5});
  EXPECT_EQ(sub.num_vertices(), 5);
  EXPECT_EQ(sub.num_facets(), 6U);
  EXPECT_EQ(generalized_bistellar_move(sub, Simplex{5}, Simplex{1, 2, 3}), s);
  EXPECT_EQ(code_of([] { generalized_bistellar_move(catalog::cross_polytope(3), Simplex{1, 3}, Simplex{2, 4}); }),
            ErrorCode::MovePreconditionFailed);
  EXPECT_EQ(code_of([] { generalized_bistellar_move(catalog::cross_polytope(3), Simplex{1, 2}, Simplex{3}); }),
            ErrorCode::MovePreconditionFailed);
}

TEST(GeneralizedBistellarMove, EveryApplicableMoveIsAnInvolution) {
  for (const Complex& x : {catalog::gs_m38(), catalog::barnette(), octahedron()}) {
    int applied = 0;
    for (const Simplex& f : x.facets()) {
      f.for_each_face([&](Simplex a) {
        const std::vector<Simplex> lk = face_link(x, a);
        Simplex rest;
        for (const Simplex& g : lk) rest = rest | g;
        if (lk.size() != static_cast<std::size_t>(rest.size()) || rest.empty()) return;
        if (!bistellar_move_applies(x, a, rest)) return;
        const Complex y = generalized_bistellar_move(x, a, rest);
        EXPECT_EQ(generalized_bistellar_move(y, rest, a), x);
        ++applied;
      });
    }
    EXPECT_GT(applied, 0);
  }
}
