#include <gtest/gtest.h>

#include <algorithm>

#include "hsp/catalog.hpp"
#include "hsp/errors.hpp"
#include "hsp/infinity.hpp"

using namespace hsp;

namespace {

using Flats = std::vector<std::vector<int>>;

// Maximal flats straight from the definition, by subset enumeration.
Flats brute_force_flats(const HomSpaceData& data) {
  const int d = data.d;
  auto flat = [&](unsigned mask) {
    for (int i = 0; i < d; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (data.h_nontrivial.count(i) || data.central.count(i)) return false;
      for (int j = i; j < d; ++j) {
        if (!(mask >> j & 1u)) continue;
        if (data.bracket_meets_h.count({i, j})) return false;
        for (int k = 0; k < d; ++k)
          if (data.triple(i, j, k) != 0) return false;
      }
    }
    return true;
  };
  std::vector<unsigned> flats;
  for (unsigned m = 1; m < (1u << d); ++m)
    if (flat(m)) flats.push_back(m);
  Flats out;
  for (unsigned m : flats) {
    bool maximal = std::none_of(flats.begin(), flats.end(), [&](unsigned o) { return o != m && (o & m) == m; });
    if (!maximal) continue;
    std::vector<int> s;
    for (int i = 0; i < d; ++i)
      if (m >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomSpaceData> small_fixtures() {
  std::vector<HomSpaceData> out;
  for (const auto& name : catalog_names())
    if (name != "jordan_5" && name != "jordan_7") out.push_back(catalog_entry(name));
  return out;
}

bool disjoint(const Flats& flats) {
  std::vector<int> all;
  for (const auto& f : flats) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

FlatComplex complex_of(int d, Flats flats) {
  FlatComplex t;
  t.d = d;
  t.maximal_flats = std::move(flats);
  return t;
}

}  // namespace

TEST(FlatComplex, MatchesTheDefinition) {
  for (const auto& data : small_fixtures()) {
    if (data.d > 12) continue;
    EXPECT_EQ(flat_complex(data).maximal_flats, brute_force_flats(data)) << data.name;
  }
}

TEST(FlatComplex, DownwardClosed) {
  for (const auto& data : small_fixtures()) {
    FlatComplex t = flat_complex(data);
    for (const auto& f : t.maximal_flats)
      for (unsigned m = 1; m < (1u << f.size()); ++m) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (m >> i & 1u) sub.push_back(f[i]);
        EXPECT_TRUE(t.is_flat(sub));
      }
    for (std::size_t a = 0; a < t.maximal_flats.size(); ++a)
      for (std::size_t b = 0; b < t.maximal_flats.size(); ++b) {
        if (a == b) continue;
        const auto& x = t.maximal_flats[a];
        const auto& y = t.maximal_flats[b];
        EXPECT_FALSE(std::includes(y.begin(), y.end(), x.begin(), x.end())) << data.name;
      }
  }
}

TEST(FlatComplex, EqualRankHasNoFlats) {
  EXPECT_TRUE(flat_complex(catalog_entry("su3_t2")).maximal_flats.empty());
  int checked = 0;
  for (const auto& data : small_fixtures()) {
    std::string expected = data.expected_json;
    expected.erase(std::remove(expected.begin(), expected.end(), ' '), expected.end());
    if (data.complement != Complement::KillingOrthogonal || expected.find("\"connected_group\":true") == std::string::npos)
      continue;
    EXPECT_TRUE(flat_complex(data).maximal_flats.empty()) << data.name;
    ++checked;
  }
  EXPECT_GE(checked, 4);
}

TEST(FlatComplex, JordanSpacesAreDisjointSimplices) {
  for (int p : {2, 3, 5}) {
    FlatComplex t = flat_complex(jordan_space(p));
    ASSERT_EQ(t.maximal_flats.size(), static_cast<std::size_t>(p + 1)) << p;
    const std::size_t size = static_cast<std::size_t>(std::max(0, (p - 3) / 2)) + 1;
    for (const auto& f : t.maximal_flats) EXPECT_EQ(f.size(), size) << p;
    EXPECT_TRUE(disjoint(t.maximal_flats)) << p;
  }
}

TEST(FlatComplex, JordanProductsAreCompleteBipartite) {
  for (int p : {2, 3})
    for (int q : {2, 3}) {
      HomSpaceData data = jordan_product(p, q);
      const int left = jordan_space(p).d;
      FlatComplex t = flat_complex(data);
      EXPECT_EQ(t.maximal_flats.size(), static_cast<std::size_t>((p + 1) * (q + 1)));
      Flats want;
      for (const auto& a : flat_complex(jordan_space(p)).maximal_flats)
        for (const auto& b : flat_complex(jordan_space(q)).maximal_flats) want.push_back({a[0], b[0] + left});
      std::sort(want.begin(), want.end());
      EXPECT_EQ(t.maximal_flats, want) << p << "x" << q;
    }
}

TEST(FlatComplex, HullsLieOnTheBoundary) {
  for (const auto& data : small_fixtures()) {
    FlatComplex t = flat_complex(data);
    if (t.maximal_flats.empty()) continue;
    LatticePolytope delta = weight_polytope(data);
    for (const auto& f : t.maximal_flats) {
      std::vector<Rat> centre(static_cast<std::size_t>(data.d), 0);
      for (int i : f) centre[static_cast<std::size_t>(i)] = Rat(1) / Rat(static_cast<long>(f.size()));
      EXPECT_TRUE(delta.contains(centre)) << data.name;
      const bool on_facet = std::any_of(delta.facets().begin(), delta.facets().end(), [&](const Facet& fa) {
        Rat v = 0;
        for (std::size_t i = 0; i < centre.size(); ++i) v += Rat(fa.normal[i]) * centre[i];
        return v == fa.offset;
      });
      EXPECT_TRUE(on_facet) << data.name;
    }
  }
}

TEST(VertexCriterion, AgreesWithGeometry) {
  for (const auto& data : small_fixtures()) {
    FlatComplex t = flat_complex(data);
    if (t.maximal_flats.empty()) continue;
    LatticePolytope delta = weight_polytope(data);
    for (int j = 0; j < data.d; ++j) {
      if (!t.is_flat({j})) continue;
      const Point ej = unit_vector(static_cast<std::size_t>(data.d), static_cast<std::size_t>(j));
      const bool vertex = std::find(delta.vertices().begin(), delta.vertices().end(), ej) != delta.vertices().end();
      EXPECT_EQ(flat_vertex_criterion(data, j), vertex) << data.name << " j = " << j;
    }
  }
}

TEST(VertexCriterion, Examples) {
  EXPECT_TRUE(flat_vertex_criterion(catalog_entry("sphere_u"), 0));
  EXPECT_FALSE(flat_vertex_criterion(jordan_space(2), 0));
  HomSpaceData d = parse_homspace(R"({"schema": "homspace/v1", "name": "t", "d": 2, "dims": [3, 5], "b": ["1", "2"],
    "triples": [{"ijk": [1, 1, 2], "value": "7"}], "complement": "other"})");
  EXPECT_THROW(flat_vertex_criterion(d, 0), DegenerateError);
}

TEST(DeltaMin, Sphere) {
  LatticePolytope delta = LatticePolytope::hull({{-1, 2}, {1, 0}});
  FlatComplex t = complex_of(2, {{0}});
  LatticePolytope m = delta_min(delta, t);
  EXPECT_EQ(m.vertices(), (std::vector<Point>{{-1, 2}, {0, 1}}));
  EXPECT_FALSE(is_admissible(delta, t));
  EXPECT_TRUE(is_admissible(m, t));
  auto bad = t_dimension_violations(delta, t);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].face.points, (std::vector<Point>{{1, 0}}));
  EXPECT_TRUE(t_dimension_violations(m, t).empty());
  HomSpaceData sphere = catalog_entry("sphere_u");
  EXPECT_EQ(flat_complex(sphere).maximal_flats, (Flats{{0}}));
  EXPECT_EQ(delta_min(weight_polytope(sphere), flat_complex(sphere)), m);
}

TEST(DeltaMin, WangZillerTrapezoid) {
  LatticePolytope triangle = LatticePolytope::hull({{2, 0, -1}, {0, 2, -1}, {0, 0, 1}});
  LatticePolytope m = delta_min(triangle, complex_of(3, {{2}}));
  EXPECT_EQ(m.vertices(), (std::vector<Point>{{0, 1, 0}, {0, 2, -1}, {1, 0, 0}, {2, 0, -1}}));
  EXPECT_EQ(normalized_volume(m), 3);
  EXPECT_EQ(normalized_volume(triangle), 4);
}

TEST(DeltaMin, OctahedronToTetrahedron) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    pts.push_back(unit_vector(4, i));
    Point delta = unit_vector(4, 3);
    delta[3] = 2;
    delta[i] = -1;
    pts.push_back(delta);
  }
  LatticePolytope octahedron = LatticePolytope::hull(pts);
  ASSERT_EQ(octahedron.facets().size(), 8u);
  LatticePolytope m = delta_min(octahedron, complex_of(4, {{0}, {1}, {2}}));
  EXPECT_EQ(m.vertices(), (std::vector<Point>{{-1, 0, 0, 2}, {0, -1, 0, 2}, {0, 0, -1, 2}, {0, 0, 0, 1}}));
  EXPECT_EQ(normalized_volume(m), 1);
}

TEST(DeltaMin, ContainedInDelta) {
  for (const auto& data : small_fixtures()) {
    LatticePolytope delta = weight_polytope(data);
    LatticePolytope m = delta_min(delta, flat_complex(data), data.central);
    EXPECT_TRUE(delta.contains_polytope(m)) << data.name;
    EXPECT_TRUE(is_admissible(m, flat_complex(data))) << data.name;
  }
  EXPECT_THROW(delta_min(LatticePolytope::hull({{1, 0}}), complex_of(2, {{0, 1}})), DegenerateError);
}

TEST(B2, Exponents) {
  EXPECT_EQ(b2_exponent(kaehler_b2_polytope(4)).exponent, 1);
  EXPECT_EQ(b2_exponent(LatticePolytope::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).exponent, 0);
  EXPECT_EQ(b2_exponent(weight_polytope(jordan_space(3))).exponent, 0);
  EXPECT_EQ(*b2_exponent(LatticePolytope::hull({{1, 0}, {-2, 3}})).index, 3);
  EXPECT_FALSE(b2_exponent(LatticePolytope::hull({{1, 0}, {-2, 3}})).exponent);
  for (int d = 2; d <= 6; ++d) {
    LatticePolytope k = kaehler_b2_polytope(d);
    auto b2 = b2_exponent(k);
    ASSERT_TRUE(b2.exponent);
    Int nu = normalized_volume(k);
    EXPECT_EQ(nu % (Int(1) << *b2.exponent), 0) << d;
  }
}

TEST(FlatComplex, JsonRoundTrip) {
  FlatComplex t = flat_complex(jordan_product(2, 3));
  FlatComplex back = flat_complex_from_json(to_json(t), t.d);
  EXPECT_EQ(back.maximal_flats, t.maximal_flats);
  try {
    flat_complex_from_json(R"({"maximal_flats": [[1, 9]]})", 4);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.pointer, "/maximal_flats/0/1");
  }
}
