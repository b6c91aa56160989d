#include <gtest/gtest.h>

#include "hsp/catalog.hpp"
#include "hsp/curvature.hpp"
#include "hsp/errors.hpp"
#include "hsp/infinity.hpp"
#include "hsp/solver.hpp"
#include "support.hpp"

using namespace hsp;
using hsp::testing::random_positive;

namespace {

HomSpaceData wang_ziller_instance(const Rat& b1, const Rat& b2, const Rat& t113, const Rat& t223) {
  HomSpaceData d = catalog_entry("wang_ziller_killing");
  d.b[0] = b1;
  d.b[1] = b2;
  d.triples[{0, 0, 2}] = t113;
  d.triples[{1, 1, 2}] = t223;
  return d;
}

HomSpaceData no_real_instance() {
  return parse_homspace(R"({"schema": "homspace/v1", "name": "complex_pair", "d": 2, "dims": [1, 1], "b": ["1/2", "1/2"],
    "triples": [{"ijk": [1, 2, 2], "value": "1/4"}], "complement": "other"})");
}

void expect_consistent(const SolutionSet& s, const std::string& name) {
  EXPECT_LE(s.positive_count, s.real_count) << name;
  EXPECT_LE(s.real_count, s.distinct_complex_count) << name;
  EXPECT_EQ(s.real_solutions.size(), s.real_count) << name;
}

Rat mid(const std::pair<Rat, Rat>& iv) { return (iv.first + iv.second) / 2; }

}  // namespace

TEST(Dehomogenize, ClearsToPolynomials) {
  auto sys = dehomogenize(einstein_system(catalog_entry("su3_t2")));
  EXPECT_EQ(sys.vars, 2u);
  ASSERT_EQ(sys.polys.size(), 2u);
  for (const auto& p : sys.polys) {
    EXPECT_EQ(p.num_vars(), 2u);
    for (const auto& [a, c] : p.terms())
      for (long x : a) EXPECT_LE(x, 0);
    EXPECT_GE(total_degree(as_bivariate(p)), 1);
  }
  auto lin = dehomogenize(einstein_system(catalog_entry("product_2")));
  EXPECT_EQ(as_univariate(lin.polys[0]).degree(), 1);
}

TEST(Dehomogenize, KeepsTorusValues) {
  for (const char* name : {"su3_t2", "wang_ziller_killing", "wang_ziller_q"}) {
    auto f = einstein_system(catalog_entry(name));
    auto sys = dehomogenize(f);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rat> x{random_positive(9, 5), random_positive(9, 5), 1};
      for (std::size_t i = 0; i < f.size(); ++i) {
        Rat factor = 1;
        for (std::size_t j = 0; j < 2; ++j)
          for (long t = 0; t < sys.cleared[i][j]; ++t) factor *= x[j];
        EXPECT_EQ(sys.polys[i].evaluate({x[0], x[1]}), f[i].evaluate(x) * factor) << name;
      }
    }
  }
  EXPECT_THROW(dehomogenize({LaurentPoly(2)}), DegenerateError);
}

TEST(Solve, ProductCase) {
  SolutionSet s = solve(catalog_entry("product_2"));
  EXPECT_EQ(s.distinct_complex_count, 1u);
  EXPECT_EQ(s.positive_count, 1u);
  EXPECT_EQ(solve(catalog_entry("product_3")).distinct_complex_count, 1u);
}

TEST(Solve, FlagManifold) {
  SolutionSet s = solve(catalog_entry("su3_t2"));
  EXPECT_EQ(s.distinct_complex_count, 4u);
  EXPECT_EQ(s.real_count, 4u);
  EXPECT_EQ(s.positive_count, 4u);
  expect_consistent(s, "su3_t2");
  // The Kaehler-Einstein metrics (1,1,2) up to permutation and the normal metric.
  const std::vector<std::vector<Rat>> known{{make_rat(1, 2), make_rat(1, 2), 1}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}};
  for (const auto& point : known) {
    const bool found = std::any_of(s.real_solutions.begin(), s.real_solutions.end(), [&](const Solution& sol) {
      for (std::size_t i = 0; i < 3; ++i)
        if (point[i] < sol.box[i].first || point[i] > sol.box[i].second) return false;
      return true;
    });
    EXPECT_TRUE(found);
  }
}

TEST(Solve, WangZillerFixtures) {
  for (const char* name : {"wang_ziller_killing", "wang_ziller_q"}) {
    SolutionSet s = solve(catalog_entry(name));
    EXPECT_EQ(s.distinct_complex_count, 3u) << name;
    EXPECT_EQ(s.positive_count, 1u) << name;
    expect_consistent(s, name);
  }
}

TEST(Solve, RandomWangZillerInstances) {
  int generic = 0;
  for (int trial = 0; trial < 8; ++trial) {
    HomSpaceData d = wang_ziller_instance(random_positive(9, 4), random_positive(9, 4), random_positive(5, 8), random_positive(5, 8));
    SolutionSet s = count_complex(d);
    if (!s.generic) continue;
    ++generic;
    EXPECT_EQ(s.distinct_complex_count, 3u) << to_json(d);
    EXPECT_EQ(bound_report(d, &s).nu, 3);
  }
  EXPECT_GE(generic, 6);
}

TEST(Solve, JordanTwo) {
  HomSpaceData j = jordan_space(2);
  SolutionSet s = solve(j);
  EXPECT_EQ(s.distinct_complex_count, 1u);
  BoundReport b = bound_report(j, &s);
  EXPECT_EQ(b.nu, 4);
  EXPECT_EQ(b.nu - Int(static_cast<long>(flat_complex(j).maximal_flats.size())), 1);
  EXPECT_EQ(b.infinity_note, "nu - epsilon = 3 solution(s) escape to infinity");
}

TEST(Solve, NoRealSolutions) {
  SolutionSet s = solve(no_real_instance());
  EXPECT_EQ(s.distinct_complex_count, 2u);
  EXPECT_EQ(s.real_count, 0u);
  EXPECT_EQ(s.positive_count, 0u);
  ASSERT_EQ(s.eliminant.degree(), 2);
  const Rat a = s.eliminant.coeff(2), b = s.eliminant.coeff(1), c = s.eliminant.coeff(0);
  EXPECT_LT(b * b - 4 * a * c, 0);
}

TEST(Solve, ScalingInvariance) {
  for (const char* name : {"su3_t2", "wang_ziller_killing", "sphere_u"}) {
    HomSpaceData d = catalog_entry(name);
    const SolutionSet base = solve(d);
    for (const Rat& k : {make_rat(3, 7), Rat(5)}) {
      HomSpaceData scaled = d;
      for (auto& b : scaled.b) b *= k;
      for (auto& [key, v] : scaled.triples) v *= k;
      const SolutionSet s = solve(scaled);
      EXPECT_EQ(s.distinct_complex_count, base.distinct_complex_count) << name;
      EXPECT_EQ(s.real_count, base.real_count) << name;
      EXPECT_EQ(s.positive_count, base.positive_count) << name;
    }
  }
}

TEST(Solve, PerturbationStability) {
  HomSpaceData d = catalog_entry("wang_ziller_killing");
  for (int trial = 0; trial < 6; ++trial) {
    HomSpaceData p = d;
    for (auto& b : p.b)
      if (b != 0) b += make_rat(hsp::testing::uniform(-5, 5), 1000);
    for (auto& [key, v] : p.triples) v += make_rat(hsp::testing::uniform(-5, 5), 1000);
    EXPECT_EQ(count_complex(p).distinct_complex_count, 3u);
  }
}

TEST(Solve, ResidualsAreCertified) {
  for (const char* name : {"su3_t2", "wang_ziller_killing", "wang_ziller_q", "sphere_u", "product_3"}) {
    HomSpaceData d = catalog_entry(name);
    SolutionSet s = solve(d);
    auto f = einstein_system(d);
    for (const auto& sol : s.real_solutions) {
      ASSERT_EQ(sol.residual_bounds.size(), f.size()) << name;
      ASSERT_EQ(sol.box.back(), std::make_pair(Rat(1), Rat(1))) << name;
      for (std::size_t i = 0; i + 1 < sol.box.size(); ++i) {
        EXPECT_LE(sol.box[i].first, sol.box[i].second);
        EXPECT_LE(sol.box[i].second - sol.box[i].first, make_rat(1, 1L << 30)) << name;
      }
      for (const auto& r : sol.residual_bounds) {
        EXPECT_GE(r, 0);
        EXPECT_LT(r, make_rat(1, 1L << 20)) << name;
      }
      if (sol.positive) {
        std::vector<Rat> x;
        for (const auto& iv : sol.box) x.push_back(mid(iv));
        auto r = ricci_components(d, x);
        for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(abs(r[i] - r[0]), make_rat(1, 1L << 20)) << name;
      }
    }
  }
}

TEST(Solve, UnsupportedDimension) {
  EXPECT_THROW(solve(catalog_entry("e8_t1_a3_a4")), UnsupportedError);
  EXPECT_THROW(count_complex(catalog_entry("product_4")), UnsupportedError);
}

TEST(Solve, CountsNeverExceedNu) {
  for (const char* name : {"su3_t2", "wang_ziller_killing", "wang_ziller_q", "sphere_u", "product_2", "product_3", "jordan_2"}) {
    HomSpaceData d = catalog_entry(name);
    SolutionSet s = solve(d);
    BoundReport b = bound_report(d, &s);
    EXPECT_TRUE(b.epsilon_le_nu) << name;
    EXPECT_LE(Int(static_cast<long>(s.distinct_complex_count)), b.nu) << name;
    EXPECT_TRUE(b.violations.empty()) << name;
  }
}

TEST(Delannoy, SeriesAndLegendre) {
  const std::vector<long> want{1, 3, 13, 63, 321, 1683};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(delannoy(n), want[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(delannoy(n), legendre_at_3(n)) << n;
  EXPECT_EQ(delannoy(1), 3);
}

TEST(Bounds, Annotations) {
  BoundReport e8 = bound_report(catalog_entry("e8_t1_a3_a4"));
  EXPECT_EQ(e8.nu, 82);
  EXPECT_EQ(e8.epsilon_annotation, 81);
  EXPECT_EQ(e8.infinity_note, "nu - epsilon = 1 solution(s) escape to infinity");
  EXPECT_EQ(e8.delannoy_bound, 321);
  EXPECT_EQ(e8.six_power, 1296);
  EXPECT_TRUE(e8.nu_le_delannoy);

  BoundReport j3 = bound_report(jordan_space(3));
  EXPECT_EQ(j3.nu, 23);
  EXPECT_EQ(j3.epsilon_annotation, 19);
  EXPECT_EQ(flat_complex(jordan_space(3)).maximal_flats.size(), 4u);

  BoundReport k4 = make_bound_report(normalized_volume(kaehler_b2_polytope(4)), 4, std::nullopt, std::nullopt, "");
  EXPECT_EQ(k4.nu, 20);
  EXPECT_EQ(k4.delannoy_bound, 63);
  EXPECT_LT(3 * k4.nu, k4.delannoy_bound);

  BoundReport su3 = bound_report(catalog_entry("su3_t2"));
  EXPECT_EQ(su3.nu, 4);
  BoundReport bad = make_bound_report(5, 3, 7, std::nullopt, "");
  EXPECT_FALSE(bad.epsilon_le_nu);
  EXPECT_FALSE(bad.violations.empty());
  EXPECT_EQ(make_bound_report(4, 3, 4, std::nullopt, "").infinity_note,
            "nu = epsilon: all solutions are isolated and none lie at infinity");
}
