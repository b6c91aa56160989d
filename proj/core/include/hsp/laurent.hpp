#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hsp/polytope.hpp"
#include "hsp/rational.hpp"

namespace hsp {

// Sparse Laurent polynomial over Q in the weight convention: the exponent
// vector a stands for the monomial x_1^{-a_1} ... x_n^{-a_n}.  Zero
// coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<long>;

  explicit LaurentPoly(std::size_t num_vars = 0) : n_(num_vars) {}
  static LaurentPoly monomial(const Exponent& weight, const Rat& c);

  std::size_t num_vars() const { return n_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& weight, const Rat& c);
  Rat coeff(const Exponent& weight) const;
  std::vector<Point> support() const;

  // Zero coordinates are allowed where the monomials do not divide by them.
  Rat evaluate(const std::vector<Rat>& x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { return a *= s; }
  friend LaurentPoly operator*(const Rat& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Human-readable form in true exponents, e.g. "1/2*x1^-1 - 3*x2*x3^-2".
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check(const Exponent& a) const;
  std::size_t n_;
  std::map<Exponent, Rat> terms_;
};

// d/dx_i in the weight convention.
LaurentPoly partial(const LaurentPoly& p, std::size_t i);
// x_i d/dx_i: each coefficient is multiplied by -a_i.
LaurentPoly grad_component(const LaurentPoly& p, std::size_t i);

LatticePolytope newton_polytope(const LaurentPoly& p);
// Terms whose exponent lies on the face.  The support of p must lie in the
// polytope the face was taken from.
LaurentPoly restrict_to_face(const LaurentPoly& p, const Face& face);

// x_i -> scalars[i] * w^{exponents[i]}, exponents given as true exponents
// in the target variables w.
struct MonomialMap {
  std::size_t target_vars = 0;
  std::vector<Rat> scalars;
  std::vector<std::vector<long>> exponents;
};

LaurentPoly monomial_substitute(const LaurentPoly& p, const MonomialMap& map);

// {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}, exponents in
// the weight convention, terms sorted by exponent.
std::string to_json(const LaurentPoly& p, const std::vector<std::string>& names = {});
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace hsp
