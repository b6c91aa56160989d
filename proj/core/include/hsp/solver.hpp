#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsp/bivariate.hpp"
#include "hsp/homspace.hpp"
#include "hsp/laurent.hpp"

namespace hsp {

// The Einstein system with x_d = 1, each equation multiplied by the
// monomial that makes every true exponent nonnegative with minimum zero.
struct DehomogenizedSystem {
  std::size_t vars = 0;                      // d - 1
  std::vector<LaurentPoly> polys;            // weight convention
  std::vector<std::vector<long>> cleared;    // true exponents multiplied in
};

// Throws DegenerateError for an inhomogeneous or zero equation.
DehomogenizedSystem dehomogenize(const std::vector<LaurentPoly>& system);

UniPoly as_univariate(const LaurentPoly& p);
Poly2 as_bivariate(const LaurentPoly& p);

using Box = std::vector<std::pair<Rat, Rat>>;

struct Solution {
  Box box;                   // closed box with dyadic ends, x_d = [1, 1]
  bool positive = false;
  std::vector<Rat> residual_bounds;  // |cleared f_i| over the box
};

struct SolutionSet {
  int d = 0;
  std::size_t distinct_complex_count = 0;
  std::size_t real_count = 0;
  std::size_t positive_count = 0;
  std::size_t multiplicity_excess = 0;  // torus eliminant degree minus distinct count
  bool generic = true;
  bool refined = false;
  UniPoly eliminant;  // squarefree, torus roots only
  std::optional<BivariateParam> param;
  std::vector<Solution> real_solutions;
  std::vector<std::string> notes;
};

// Distinct torus solutions modulo scaling.  Throws UnsupportedError for
// d > 3 and DegenerateError when the solution set is not finite.
SolutionSet count_complex(const HomSpaceData& data);

// Real and positive counts plus certified boxes for the real solutions.
void real_positive(const HomSpaceData& data, SolutionSet& set);

SolutionSet solve(const HomSpaceData& data);

Int delannoy(int n);
Int legendre_at_3(int n);

struct BoundReport {
  int d = 0;
  Int nu;
  std::optional<std::size_t> epsilon_computed;
  std::optional<long> epsilon_annotation;
  std::string epsilon_source;
  Int delannoy_bound;  // P_{d-1}(3)
  Int six_power;       // 6^{d-1}
  bool epsilon_le_nu = true;
  bool nu_le_delannoy = true;
  bool nu_lt_six_power = true;
  std::string infinity_note;
  std::vector<std::string> violations;
};

BoundReport make_bound_report(const Int& nu, int d, std::optional<std::size_t> computed,
                              std::optional<long> annotation, const std::string& source);

// nu from the minimal polytope, epsilon from `solutions` when given and
// from the annotation block otherwise.
BoundReport bound_report(const HomSpaceData& data, const SolutionSet* solutions = nullptr);

}  // namespace hsp
