#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hsp/catalog.hpp"
#include "hsp/curvature.hpp"
#include "hsp/errors.hpp"
#include "hsp/faces.hpp"
#include "support.hpp"

using namespace hsp;

namespace {

using Normals = std::set<std::vector<long>>;

Normals marked_normals(const MarkedFaceCensus& c, int dim) {
  Normals out;
  for (const auto& e : c.marked())
    if (e.face.dim == dim) out.insert(e.face.normal);
  return out;
}

const CensusEntry& entry_with_normal(const MarkedFaceCensus& c, const std::vector<long>& normal) {
  for (const auto& e : c.entries)
    if (e.face.normal == normal) return e;
  throw std::out_of_range("no face with that normal");
}

// Term with true exponents in the chart variables.
void add_true(LaurentPoly& p, const Rat& c, std::vector<long> exps) {
  for (auto& x : exps) x = -x;
  p.add_term(exps, c);
}

Point pt(std::initializer_list<long> v) { return Point(v); }

ChartSubstitution quintic_chart() {
  return chart_from_weight_basis({pt({0, -1, 1, 0, 1}), pt({-1, 1, -1, 1, 0}), pt({2, 0, -1, 0, -1}), pt({0, 0, 0, 1, 0}),
                                  pt({0, 0, 0, 0, 1})},
                                 {-1, make_rat(2, 3), 3, 1, 1}, {"z0", "z1", "z2", "y1", "y2"}, 0, {3, 4});
}

}  // namespace

TEST(Census, KaehlerMarkedCounts) {
  const std::vector<std::size_t> want{0, 0, 3, 13, 40};
  for (int d = 2; d <= 6; ++d) {
    MarkedFaceCensus c = census(kaehler_b2_polytope(d));
    EXPECT_EQ(c.marked_total(), want[static_cast<std::size_t>(d - 2)]) << d;
    for (const auto& e : c.entries) {
      EXPECT_EQ(e.marked, !e.test1 && !e.test2);
      EXPECT_GE(e.face.dim, 1);
      EXPECT_LT(e.face.dim, d - 1);
    }
  }
}

TEST(Census, OctahedralFaces) {
  auto test2_faces = [](int d) {
    std::vector<Face> out;
    for (const auto& e : census(kaehler_b2_polytope(d)).entries)
      if (e.test2) out.push_back(e.face);
    return out;
  };
  for (int d : {4, 6}) EXPECT_EQ(test2_faces(d).size(), static_cast<std::size_t>(d / 2)) << d;
  // Both edges through the midpoints e_2 and e_3 pass test 2; otherwise they would be marked.
  auto three = test2_faces(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].points, (std::vector<Point>{{-1, 1, 1}, {1, 1, -1}}));
  EXPECT_EQ(three[1].points, (std::vector<Point>{{-1, 1, 1}, {1, -1, 1}}));
  // One face centred at each e_i with i > d/2.
  for (int d = 3; d <= 6; ++d) {
    std::set<Point> centres;
    for (const auto& f : test2_faces(d)) {
      Point sum(static_cast<std::size_t>(d), 0);
      for (const auto& v : f.points)
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += v[j];
      for (auto& x : sum) x /= static_cast<long>(f.points.size());
      centres.insert(sum);
    }
    std::set<Point> want;
    for (int i = d / 2 + 1; i <= d; ++i) want.insert(unit_vector(static_cast<std::size_t>(d), static_cast<std::size_t>(i - 1)));
    EXPECT_EQ(centres, want) << d;
  }
}

TEST(Census, NoMarkedVerticesOrEdges) {
  for (int d = 3; d <= 6; ++d) {
    MarkedFaceCensus c = census(kaehler_b2_polytope(d));
    EXPECT_TRUE(c.applicable);
    for (const auto& e : c.marked()) EXPECT_GE(e.face.dim, 2) << d;
  }
}

TEST(Census, PerDimensionCounts) {
  auto per = census(kaehler_b2_polytope(6)).marked_per_dim();
  per.resize(5, 0);
  EXPECT_EQ(per, (std::vector<std::size_t>{0, 0, 15, 13, 12}));
  per = census(kaehler_b2_polytope(5)).marked_per_dim();
  per.resize(4, 0);
  EXPECT_EQ(per, (std::vector<std::size_t>{0, 0, 7, 6}));
}

TEST(Census, FourDimensionalShapes) {
  MarkedFaceCensus c = census(kaehler_b2_polytope(4));
  std::multiset<std::size_t> sizes;
  for (const auto& e : c.marked()) {
    EXPECT_EQ(e.face.dim, 2);
    sizes.insert(e.face.points.size());
  }
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{4, 4, 5}));
}

TEST(Census, NotApplicableOffWeightForm) {
  MarkedFaceCensus c = census(LatticePolytope::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, -1, -1}}));
  EXPECT_FALSE(c.applicable);
  EXPECT_EQ(c.marked_total(), 0u);
}

TEST(Census, SixDimensionalFacets) {
  const Normals simplices{{1, 2, 2, 1, 2, 1}, {1, 2, 3, 2, 3, 2}, {1, 2, 1, 1, 2, 1}, {1, 1, 1, 2, 2, 1},
                          {2, 2, 1, 1, 1, 1}, {3, 2, 3, 4, 1, 2}, {1, 1, 1, 2, 1, 2}, {1, 1, 2, 2, 1, 1},
                          {1, 1, 2, 2, 1, 2}, {2, 1, 1, 1, 1, 2}, {3, 2, 5, 4, 3, 6}, {1, 1, 2, 1, 1, 2},
                          {2, 2, 3, 1, 1, 3}, {5, 2, 3, 4, 5, 6}, {2, 1, 1, 1, 2, 2}, {5, 4, 3, 2, 7, 6}};
  const Normals pyramids{{3, 4, 1, 2, 5, 2}, {1, 2, 3, 4, 5, 4}, {5, 2, 3, 4, 1, 6}, {1, 2, 3, 2, 1, 2},
                         {3, 2, 1, 2, 1, 2}, {1, 2, 3, 4, 3, 4}, {3, 2, 1, 4, 3, 2}, {1, 2, 3, 2, 3, 4}};
  const Normals marked{{1, 2, 3, 4, 5, 6}, {3, 2, 1, 4, 1, 2}, {1, 2, 3, 4, 3, 2}, {1, 2, 1, 2, 3, 2},
                       {1, 2, 1, 2, 1, 2}, {1, 2, 1, 0, 1, 2}, {2, 1, 1, 2, 0, 2}, {1, 2, 2, 1, 0, 1},
                       {1, 1, 0, 1, 1, 0}, {1, 0, 1, 0, 1, 0}, {1, 2, 1, 2, 1, 0}, {1, 2, 3, 2, 1, 0}};
  LatticePolytope p = kaehler_b2_polytope(6);
  MarkedFaceCensus c = census(p);
  Normals got_simplices, got_pyramids, got_marked;
  for (const auto& e : c.entries) {
    if (e.face.dim != 4) continue;
    if (e.face.points.size() == 5) got_simplices.insert(e.face.normal);
    else if (e.marked) got_marked.insert(e.face.normal);
    else got_pyramids.insert(e.face.normal);
  }
  EXPECT_EQ(p.facets().size(), 36u);
  EXPECT_EQ(got_simplices, simplices);
  EXPECT_EQ(got_pyramids, pyramids);
  EXPECT_EQ(got_marked, marked);
  const Normals three{{1, 2, 1, 2, 1, 1}, {1, 2, 1, 1, 1, 2}, {5, 3, 2, 6, 1, 4}, {4, 3, 1, 5, 2, 2}, {7, 3, 4, 6, 1, 8},
                      {4, 5, 1, 3, 6, 2}, {1, 2, 3, 4, 5, 5}, {2, 4, 5, 3, 1, 1}, {2, 4, 3, 1, 1, 3}, {1, 2, 2, 2, 1, 0},
                      {1, 1, 2, 1, 1, 0}, {2, 1, 1, 1, 2, 0}, {2, 3, 1, 3, 2, 0}};
  EXPECT_EQ(marked_normals(c, 3), three);
}

TEST(Singularity, SixDimensionalParallelograms) {
  HomSpaceData data = catalog_entry("e8_t1_a4_a2_a1");
  LatticePolytope p = weight_polytope(data);
  ASSERT_EQ(p, kaehler_b2_polytope(6));
  LaurentPoly s = scalar_curvature(data);
  MarkedFaceCensus c = census(p);
  const std::vector<std::vector<long>> singular{{5, 5, 2, 7, 3, 2}, {3, 6, 8, 5, 2, 3},    {5, 5, 2, 3, 7, 2},
                                                {3, 6, 7, 10, 13, 12}, {3, 4, 6, 3, 2, 1}, {3, 6, 6, 5, 2, 1}};
  const std::vector<std::vector<long>> nonsingular{{3, 6, 7, 8, 5, 2}, {8, 3, 5, 6, 2, 8},    {5, 7, 2, 3, 7, 4},
                                                   {3, 6, 7, 6, 9, 12}, {7, 5, 2, 9, 5, 4},   {5, 7, 2, 5, 9, 4},
                                                   {3, 4, 7, 8, 11, 10}, {3, 2, 1, 3, 1, 2}, {1, 2, 3, 4, 4, 4}};
  for (const auto& n : singular) {
    const auto& e = entry_with_normal(c, n);
    ASSERT_TRUE(e.marked);
    ASSERT_EQ(e.face.points.size(), 4u);
    EXPECT_EQ(parallelogram_singular(s, e.face).verdict, Verdict::Singular) << ::testing::PrintToString(n);
  }
  for (const auto& n : nonsingular) {
    const auto& e = entry_with_normal(c, n);
    ASSERT_TRUE(e.marked);
    ASSERT_EQ(e.face.points.size(), 4u);
    EXPECT_EQ(parallelogram_singular(s, e.face).verdict, Verdict::Nonsingular) << ::testing::PrintToString(n);
  }
  std::size_t nonsingular_total = 0;
  for (const auto& e : c.marked())
    if (face_singularity(s, e.face).verdict == Verdict::Nonsingular) ++nonsingular_total;
  EXPECT_EQ(nonsingular_total, 9u);
  EXPECT_EQ(c.marked_total() - nonsingular_total, 31u);
}

TEST(Singularity, QuinticParallelogram) {
  HomSpaceData data = catalog_entry("e8_t1_a3_a4");
  LatticePolytope p = weight_polytope(data);
  ASSERT_EQ(p, kaehler_b2_polytope(5));
  LaurentPoly s = scalar_curvature(data);
  MarkedFaceCensus c = census(p);
  const auto& e = entry_with_normal(c, {2, 4, 3, 1, 1});
  ASSERT_TRUE(e.marked);
  EXPECT_EQ(e.face.points, (std::vector<Point>{{-1, 0, 0, 1, 1}, {0, -1, 1, 0, 1}, {1, 0, -1, 1, 0}, {2, -1, 0, 0, 0}}));
  LaurentPoly sp = restrict_to_face(s, e.face);
  EXPECT_EQ(sp.size(), 4u);
  SingularityResult r = parallelogram_singular(s, e.face);
  EXPECT_EQ(r.verdict, Verdict::Singular);
  EXPECT_EQ(r.detail, "a0*a12 = 2, a1*a2 = 2");

  EXPECT_EQ(marked_normals(c, 3),
            (Normals{{1, 2, 3, 4, 5}, {1, 2, 1, 2, 1}, {2, 1, 1, 2, 0}, {1, 0, 1, 0, 1}, {1, 2, 2, 1, 0}, {1, 2, 1, 0, 1}}));
  EXPECT_EQ(marked_normals(c, 2),
            (Normals{{2, 4, 3, 1, 1}, {1, 1, 2, 2, 3}, {1, 2, 3, 4, 4}, {1, 2, 2, 3, 4}, {2, 4, 5, 3, 1}, {5, 3, 2, 6, 1}, {3, 1, 2, 2, 1}}));
  for (const auto& m : c.marked()) {
    if (m.face.normal == std::vector<long>{2, 4, 3, 1, 1}) continue;
    const Verdict v = face_singularity(s, m.face).verdict;
    EXPECT_EQ(v, m.face.dim == 2 ? Verdict::Nonsingular : Verdict::NeedsMoreData) << ::testing::PrintToString(m.face.normal);
  }
}

TEST(Singularity, CurveTests) {
  auto poly = [](const std::vector<std::pair<std::pair<long, long>, Rat>>& terms) {
    LaurentPoly p(3);
    for (const auto& [e, c] : terms) p.add_term({e.first, e.second, 1 - e.first - e.second}, c);
    return p;
  };
  // (1 - t)^2 along a segment.
  LaurentPoly seg = poly({{{0, 0}, 1}, {{1, 0}, -2}, {{2, 0}, 1}});
  EXPECT_EQ(curve_singular(seg, newton_polytope(seg).whole()).verdict, Verdict::Singular);
  seg = poly({{{0, 0}, 1}, {{1, 0}, -3}, {{2, 0}, 1}});
  EXPECT_EQ(curve_singular(seg, newton_polytope(seg).whole()).verdict, Verdict::Nonsingular);
  // t^2 (1 - t) has its double root at t = 0, outside the torus.
  seg = poly({{{2, 0}, 1}, {{3, 0}, -1}});
  EXPECT_EQ(curve_singular(seg, newton_polytope(seg).whole()).verdict, Verdict::Nonsingular);

  // A node at (1, 1): (u-1)^2 - (v-1)^2 + (u-1)^3.
  LaurentPoly nodal = poly({{{3, 0}, 1}, {{2, 0}, -2}, {{1, 0}, 1}, {{0, 2}, -1}, {{0, 1}, 2}, {{0, 0}, -1}});
  EXPECT_EQ(curve_singular(nodal, newton_polytope(nodal).whole()).verdict, Verdict::Singular);
  LaurentPoly smooth = poly({{{3, 0}, 1}, {{2, 0}, -2}, {{1, 0}, 1}, {{0, 2}, -1}, {{0, 1}, 2}, {{0, 0}, -2}});
  EXPECT_EQ(curve_singular(smooth, newton_polytope(smooth).whole()).verdict, Verdict::Nonsingular);

  // The four-term rule agrees with the elimination on parallelograms.
  for (const Rat& a12 : {Rat(6), Rat(7), make_rat(-3, 2)}) {
    LaurentPoly par = poly({{{0, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 4}, {{1, 1}, a12}});
    const Face f = newton_polytope(par).whole();
    EXPECT_EQ(parallelogram_singular(par, f).verdict, curve_singular(par, f).verdict) << a12;
  }
  LaurentPoly tri = poly({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_THROW(parallelogram_singular(tri, newton_polytope(tri).whole()), DegenerateError);
}

TEST(Census, InvariantUnderIndexPermutations) {
  for (int d : {4, 5}) {
    LatticePolytope p = kaehler_b2_polytope(d);
    MarkedFaceCensus base = census(p);
    std::vector<std::size_t> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(perm.begin(), perm.end(), hsp::testing::rng());
      auto apply = [&](const std::vector<long>& v) {
        std::vector<long> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[perm[i]] = v[i];
        return w;
      };
      std::vector<Point> pts;
      for (const auto& v : p.vertices()) pts.push_back(apply(v));
      MarkedFaceCensus c = census(LatticePolytope::hull(pts));
      EXPECT_EQ(c.marked_per_dim(), base.marked_per_dim());
      std::set<std::pair<std::vector<long>, bool>> want, got;
      for (const auto& e : base.entries) want.insert({apply(e.face.normal), e.test1 || e.test2});
      for (const auto& e : c.entries) got.insert({e.face.normal, e.test1 || e.test2});
      EXPECT_EQ(got, want);
    }
  }
}

TEST(Chart, QuinticSubstitution) {
  ChartSubstitution chart = quintic_chart();
  EXPECT_EQ(chart.map.scalars[0], make_rat(-3, 2));
  EXPECT_EQ(chart.map.exponents[0], (std::vector<long>{1, 1, 0, -1, -1}));
  EXPECT_EQ(chart.map.scalars[1], make_rat(-3, 4));
  EXPECT_EQ(chart.map.exponents[1], (std::vector<long>{3, 2, 1, -2, -2}));
  EXPECT_EQ(chart.map.scalars[2], make_rat(3, 4));
  EXPECT_EQ(chart.map.exponents[2], (std::vector<long>{2, 2, 1, -2, -1}));
  EXPECT_EQ(chart.map.exponents[3], (std::vector<long>{0, 0, 0, -1, 0}));
  EXPECT_EQ(chart.map.exponents[4], (std::vector<long>{0, 0, 0, 0, -1}));

  HomSpaceData data = catalog_entry("e8_t1_a3_a4");
  LaurentPoly s = scalar_curvature(data);
  const ChartSubstitution derived = parallelogram_chart(s, pt({0, -1, 1, 0, 1}), pt({-1, 0, 0, 1, 1}), pt({2, -1, 0, 0, 0}),
                                                        {pt({0, 0, 0, 1, 0}), pt({0, 0, 0, 0, 1})},
                                                        {"z0", "z1", "z2", "y1", "y2"});
  EXPECT_EQ(derived.kappa, chart.kappa);
  EXPECT_EQ(derived.basis, chart.basis);

  EXPECT_THROW(chart_from_weight_basis({pt({2, 0}), pt({0, 1})}, {1, 1}, {"a", "b"}, 0, {}), DegenerateError);
  EXPECT_THROW(chart_from_weight_basis({pt({1, 0}), pt({0, 1})}, {0, 1}, {"a", "b"}, 0, {}), DegenerateError);
}

TEST(Chart, LocalizedScalarCurvature) {
  ChartSubstitution chart = quintic_chart();
  LaurentPoly s = localize(scalar_curvature(catalog_entry("e8_t1_a3_a4")), chart);
  LaurentPoly want(5);
  add_true(want, make_rat(-16, 9), {-6, -4, -2, 3, 4});
  add_true(want, make_rat(16, 9), {-5, -4, -2, 4, 2});
  add_true(want, make_rat(-32, 3), {-4, -3, -2, 3, 2});
  add_true(want, make_rat(16, 9), {-3, -3, -1, 2, 2});
  add_true(want, -32, {-3, -2, -1, 2, 2});
  add_true(want, make_rat(80, 3), {-2, -2, -1, 2, 1});
  add_true(want, make_rat(-8, 3), {-2, -1, 0, 1, 2});
  add_true(want, 4, {-1, -1, -1, 2, 0});
  add_true(want, make_rat(4, 9), {-1, -1, 0, 2, 0});
  add_true(want, make_rat(-80, 3), {-1, -1, 0, 1, 1});
  add_true(want, 1, {-1, 0, 0, 0, 2});
  add_true(want, make_rat(4, 9), {-1, -1, 0, 0, 2});
  add_true(want, 8, {0, 0, 0, 1, 0});
  add_true(want, make_rat(-8, 3), {0, -1, 0, 1, 0});
  add_true(want, 4, {0, 0, 0, 0, 1});
  add_true(want, 1, {1, 1, 0, 0, 0});
  add_true(want, 1, {1, 1, 1, 0, 0});
  add_true(want, 1, {1, 0, 0, 0, 0});
  add_true(want, 1, {1, 0, 1, 0, 0});
  EXPECT_EQ(s.size(), 19u);
  EXPECT_EQ(s, want) << s.to_string(chart.names);
}

TEST(Chart, LinearTruncations) {
  ChartSubstitution chart = quintic_chart();
  LaurentPoly s = scalar_curvature(catalog_entry("e8_t1_a3_a4"));
  const Rat e = make_rat(8, 3);
  LaurentPoly t0(5), t1(5), t2(5), t3(5), t4(5), t5(5);
  for (auto* p : {&t0}) {
    add_true(*p, 1, {1, 0, 0, 0, 0});
    add_true(*p, 1, {1, 1, 0, 0, 0});
    add_true(*p, 1, {1, 0, 1, 0, 0});
    add_true(*p, 1, {1, 1, 1, 0, 0});
    add_true(*p, 8, {0, 0, 0, 1, 0});
    add_true(*p, -e, {0, -1, 0, 1, 0});
    add_true(*p, 4, {0, 0, 0, 0, 1});
  }
  add_true(t1, 1, {1, 1, 0, 0, 0});
  add_true(t1, -2, {1, 0, 1, 0, 0});
  add_true(t1, -1, {1, 1, 1, 0, 0});
  add_true(t1, e, {0, -1, 0, 1, 0});
  add_true(t2, 1, {1, 0, 0, 0, 0});
  add_true(t2, 1, {1, 0, 1, 0, 0});
  add_true(t2, -e, {0, -1, 0, 1, 0});
  add_true(t3, -1, {1, 0, 0, 0, 0});
  add_true(t3, 1, {1, 1, 1, 0, 0});
  add_true(t3, e, {0, -1, 0, 1, 0});
  add_true(t4, -1, {1, 1, 0, 0, 0});
  add_true(t4, -1, {1, 1, 1, 0, 0});
  add_true(t4, -8, {0, 0, 0, 1, 0});
  add_true(t5, -1, {1, 0, 0, 0, 0});
  add_true(t5, -1, {1, 1, 0, 0, 0});
  add_true(t5, -4, {0, 0, 0, 0, 1});
  EXPECT_EQ(truncate_boundary(localize(s, chart), chart, 1), t0);
  const std::vector<LaurentPoly> want{t1, t2, t3, t4, t5};
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(truncate_boundary(localize(grad_component(s, i), chart), chart, 1), want[i]) << "s_" << i + 1;

  LaurentPoly negative(5);
  add_true(negative, 1, {0, 0, 0, -1, 0});
  EXPECT_THROW(truncate_boundary(negative, chart, 1), DegenerateError);
}

TEST(Chart, BoundaryJacobian) {
  HomSpaceData data = catalog_entry("e8_t1_a3_a4");
  BoundaryJacobian jac = boundary_jacobian(data, quintic_chart(), {1, -1, -1, 0, 0});
  const Rat e = make_rat(8, 3);
  EXPECT_EQ(jac.rows, (std::vector<std::vector<Rat>>{
                          {2, 0, -1, 0, -1}, {-1, 1, -1, 1, 0}, {-e, e, -e, -8, 0}, {0, 0, 0, 0, -4}}));
  EXPECT_EQ(jac.cofactors, (std::vector<Rat>{make_rat(128, 3), 128, make_rat(256, 3), 0, 0}));
  EXPECT_EQ(format_linear_form(jac.cofactors), "128/3*d1 + 128*d2 + 256/3*d3");
  Rat det = 0;
  for (std::size_t i = 0; i < 5; ++i) det += jac.cofactors[i] * Rat(data.dims[i]);
  EXPECT_GT(det, 0);
  EXPECT_THROW(boundary_jacobian(data, quintic_chart(), {0, -1, -1, 0, 0}), DegenerateError);
}

TEST(Chart, LinearFormFormatting) {
  EXPECT_EQ(format_linear_form({0, 0}), "0");
  EXPECT_EQ(format_linear_form({-1, 0, make_rat(-1, 2)}), "-d1 - 1/2*d3");
  EXPECT_EQ(format_linear_form({1, 1}, "m"), "m1 + m2");
}
