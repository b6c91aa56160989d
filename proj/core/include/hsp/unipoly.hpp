#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsp/rational.hpp"

namespace hsp {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// The coefficient vector never carries trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  const Rat& leading() const;
  const std::vector<Rat>& coefficients() const { return c_; }

  Rat operator()(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // p(x) -> p(x + a)
  UniPoly shift(const Rat& a) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Euclidean division; throws DegenerateError when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// a / b when b divides a; throws DegenerateError otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);
// Monic squarefree part p / gcd(p, p').  Throws DegenerateError on zero.
UniPoly squarefree(const UniPoly& p);

// Resultant of two univariate polynomials by the Euclidean remainder
// sequence.  Independent of the Sylvester construction.
Rat resultant_euclid(const UniPoly& a, const UniPoly& b);

struct RealBound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rat value;

  static RealBound neg_inf() { return {Kind::NegInf, 0}; }
  static RealBound pos_inf() { return {Kind::PosInf, 0}; }
  static RealBound at(const Rat& v) { return {Kind::Finite, v}; }
};

// Number of distinct real roots in (lo, hi].  Throws DegenerateError when p
// is zero.
std::size_t sturm_count(const UniPoly& p, const RealBound& lo, const RealBound& hi);

// Power of two strictly above the modulus of every complex root.
Rat root_bound(const UniPoly& p);

// Disjoint half-open intervals (a, b], each holding exactly one real root of
// p, sorted, with b - a <= max_width.  Endpoints are dyadic.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p, const Rat& max_width);

// Shrinks (a, b] around the unique root of squarefree f it holds.
void refine_root(const UniPoly& f_sqfree, Rat& a, Rat& b, const Rat& max_width);

// Sign of g at the unique root of squarefree f in (a, b].  The interval is
// refined in place as needed.
int sign_at_root(const UniPoly& g, const UniPoly& f_sqfree, Rat& a, Rat& b);

}  // namespace hsp
