#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hsp/unipoly.hpp"

namespace hsp {

// Polynomial in y whose coefficients are polynomials in x, ascending in y.
struct BiPoly {
  std::vector<UniPoly> coeffs;

  int degree_y() const;
  bool is_zero() const { return degree_y() < 0; }
  void trim();
};

// Sylvester resultant with respect to y.  Throws DegenerateError when both
// inputs are constant in y.
UniPoly resultant(const BiPoly& p, const BiPoly& q);

// j-th subresultant polynomial (degree <= j in y).  Requires
// j < min(deg_y p, deg_y q).
BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j);

// Sparse polynomial in two variables: (deg_x, deg_y) -> coefficient.
using Poly2 = std::map<std::pair<int, int>, Rat>;

int total_degree(const Poly2& p);
Rat evaluate(const Poly2& p, const Rat& x, const Rat& y);
Poly2 partial_x(const Poly2& p);
Poly2 partial_y(const Poly2& p);

// p(t - c*y, y) as a polynomial in y over Q[t].
BiPoly shear(const Poly2& p, const Rat& c);

// Rational parametrisation of the isolated common zeros of two bivariate
// polynomials.  Each root t of `eliminant` gives one zero
//   y = -s0(t)/s1(t),  x = (t*s1(t) + c*s0(t))/s1(t)
// and distinct roots give distinct zeros.
struct BivariateParam {
  Rat c;
  UniPoly eliminant;  // resultant after shearing, with multiplicities
  UniPoly eliminant_sqfree;
  UniPoly s0;
  UniPoly s1;
  bool empty = false;  // no common zeros at all
  std::size_t dropped_axis_fibers = 0;

  UniPoly x_numerator() const;  // t*s1 + c*s0
};

// Throws DegenerateError when the zero set is not finite or no separating
// shear is found among the candidates tried.  With `torus_only`, a single
// rational fiber holding only zeros on the axes x*y = 0 may be unseparated;
// it is removed from both eliminants and counted in dropped_axis_fibers.
BivariateParam parametrize_common_zeros(const Poly2& p, const Poly2& q, bool torus_only = false);

// H(x(t), y(t)) * s1(t)^deg H, a polynomial in t.
UniPoly pullback(const BivariateParam& param, const Poly2& h);

}  // namespace hsp
