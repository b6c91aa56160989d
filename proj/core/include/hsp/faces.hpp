#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsp/homspace.hpp"
#include "hsp/laurent.hpp"
#include "hsp/polytope.hpp"

namespace hsp {

// Test 1: the face is a pyramid over a base with some apex a such that
// every e_i on the face equals a or lies in the affine span of the base.
bool test1_pyramid(const LatticePolytope& delta, const Face& face);

// Test 2: the face is a cross-polytope centred at some e_i, and no other
// e_j lies on it.
bool test2_octahedron(const LatticePolytope& delta, const Face& face);

struct CensusEntry {
  Face face;
  bool test1 = false;
  bool test2 = false;
  bool marked = false;
};

// Faces of dimension 1 .. dim-1 with both tests evaluated.  The tests only
// apply when every vertex has the form e_i + e_j - e_k with k not in {i, j};
// otherwise nothing is marked and `applicable` is false.
struct MarkedFaceCensus {
  bool applicable = true;
  std::vector<CensusEntry> entries;  // sorted by (dim, normal)

  std::vector<std::size_t> marked_per_dim() const;  // index = dimension
  std::size_t marked_total() const;
  std::vector<CensusEntry> marked() const;
};

MarkedFaceCensus census(const LatticePolytope& delta);

enum class Verdict { Singular, Nonsingular, NeedsMoreData };
std::string to_string(Verdict v);

struct SingularityResult {
  Verdict verdict = Verdict::NeedsMoreData;
  std::string method;
  std::string detail;
};

// Four-term parallelogram rule a0 * a12 = a1 * a2; falls back to
// curve_singular when the restriction has extra terms.  Throws
// DegenerateError when the face is not a parallelogram.
SingularityResult parallelogram_singular(const LaurentPoly& s, const Face& face);

// Exact test for a singular point of {s_face = 0} in the torus, for a
// 2-dimensional face.
SingularityResult curve_singular(const LaurentPoly& s, const Face& face);

// Dispatch by face shape; faces of dimension 3 or more need more data.
SingularityResult face_singularity(const LaurentPoly& s, const Face& face);

// Monomial chart around a boundary stratum.  New variable j equals
// kappa[j] * x^{-basis[j]}; `map` expresses each x_i in the new variables.
struct ChartSubstitution {
  std::vector<std::string> names;
  std::vector<Point> basis;
  std::vector<Rat> kappa;
  MonomialMap map;
  std::size_t scale_var = 0;
  std::set<std::size_t> boundary_vars;
};

// Throws DegenerateError unless the basis is unimodular.
ChartSubstitution chart_from_weight_basis(const std::vector<Point>& basis, const std::vector<Rat>& kappa,
                                          const std::vector<std::string>& names, std::size_t scale_var,
                                          const std::set<std::size_t>& boundary_vars);

// Chart normalising s on a parallelogram v0, v1, v2, v1 + v2 - v0 so that
// its restriction becomes z0 (1 + z1)(1 + z2) times coefficient ratios; the
// `extra` weights complete the basis and become boundary variables.
ChartSubstitution parallelogram_chart(const LaurentPoly& s, const Point& v0, const Point& v1, const Point& v2,
                                      const std::vector<Point>& extra, const std::vector<std::string>& names);

LaurentPoly localize(const LaurentPoly& p, const ChartSubstitution& chart);

// Terms of total degree <= max_degree in the boundary variables.  Throws
// DegenerateError if a boundary variable occurs with a negative power.
LaurentPoly truncate_boundary(const LaurentPoly& p, const ChartSubstitution& chart, long max_degree);

// Jacobian of (s_1, ..., s_d) in the chart variables other than the scale
// variable, at a point of the boundary stratum, bordered by a symbolic row
// (d_1, ..., d_d).  The determinant is sum_i cofactors[i] * d_i.
struct BoundaryJacobian {
  std::vector<std::vector<Rat>> rows;  // one row per chart variable, columns s_1..s_d
  std::vector<Rat> cofactors;
};

BoundaryJacobian boundary_jacobian(const HomSpaceData& data, const ChartSubstitution& chart,
                                   const std::vector<Rat>& point);

// "c1*d1 + c2*d2 ..." with zero terms dropped.
std::string format_linear_form(const std::vector<Rat>& coeffs, const std::string& var = "d");

}  // namespace hsp
