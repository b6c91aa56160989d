#include "hsp/bivariate.hpp"

#include <algorithm>

#include "hsp/errors.hpp"

namespace hsp {

int BiPoly::degree_y() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (!coeffs[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

void BiPoly::trim() { coeffs.resize(static_cast<std::size_t>(degree_y() + 1)); }

namespace {

using PolyMatrix = std::vector<std::vector<UniPoly>>;

// Bareiss elimination over Q[x]; every division is exact.
UniPoly det_poly(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

UniPoly power(const UniPoly& p, int e) {
  UniPoly r = UniPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Rat binomial(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace

UniPoly resultant(const BiPoly& p, const BiPoly& q) {
  const int m = p.degree_y(), n = q.degree_y();
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) throw DegenerateError("resultant of two polynomials constant in y");
  if (m == 0) return power(p.coeffs[0], n);
  if (n == 0) return power(q.coeffs[0], m);
  const auto N = static_cast<std::size_t>(m + n);
  PolyMatrix s(N, std::vector<UniPoly>(N));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = p.coeffs[static_cast<std::size_t>(i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = q.coeffs[static_cast<std::size_t>(i)];
  return det_poly(std::move(s));
}

BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j) {
  const int m = p.degree_y(), n = q.degree_y();
  if (j < 0 || j >= std::min(m, n)) throw DimensionError("subresultant index out of range");
  const int width = m + n - j;
  const int rows = m + n - 2 * j;
  PolyMatrix full(static_cast<std::size_t>(rows), std::vector<UniPoly>(static_cast<std::size_t>(width)));
  for (int r = 0; r < n - j; ++r)
    for (int i = 0; i <= m; ++i) full[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = p.coeffs[static_cast<std::size_t>(i)];
  for (int r = 0; r < m - j; ++r)
    for (int i = 0; i <= n; ++i)
      full[static_cast<std::size_t>(n - j + r)][static_cast<std::size_t>(r + n - i)] = q.coeffs[static_cast<std::size_t>(i)];
  BiPoly out;
  out.coeffs.resize(static_cast<std::size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) {
    PolyMatrix sub(static_cast<std::size_t>(rows), std::vector<UniPoly>(static_cast<std::size_t>(rows)));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c + 1 < rows; ++c) sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = full[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(rows - 1)] = full[static_cast<std::size_t>(r)][static_cast<std::size_t>(width - 1 - i)];
    }
    out.coeffs[static_cast<std::size_t>(i)] = det_poly(std::move(sub));
  }
  out.trim();
  return out;
}

int total_degree(const Poly2& p) {
  int d = -1;
  for (const auto& [e, c] : p)
    if (c != 0) d = std::max(d, e.first + e.second);
  return d;
}

Rat evaluate(const Poly2& p, const Rat& x, const Rat& y) {
  Rat acc = 0;
  for (const auto& [e, c] : p) {
    Rat term = c;
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int i = 0; i < e.second; ++i) term *= y;
    acc += term;
  }
  return acc;
}

Poly2 partial_x(const Poly2& p) {
  Poly2 d;
  for (const auto& [e, c] : p)
    if (e.first > 0 && c != 0) d[{e.first - 1, e.second}] += c * e.first;
  return d;
}

Poly2 partial_y(const Poly2& p) {
  Poly2 d;
  for (const auto& [e, c] : p)
    if (e.second > 0 && c != 0) d[{e.first, e.second - 1}] += c * e.second;
  return d;
}

BiPoly shear(const Poly2& p, const Rat& c) {
  BiPoly out;
  out.coeffs.resize(static_cast<std::size_t>(std::max(total_degree(p), 0)) + 1);
  for (const auto& [e, coef] : p) {
    if (coef == 0) continue;
    const auto [a, b] = e;
    Rat negc_pow = 1;
    for (int k = 0; k <= a; ++k) {
      Rat f = coef * binomial(a, k) * negc_pow;
      out.coeffs[static_cast<std::size_t>(k + b)] += UniPoly::monomial(f, a - k);
      negc_pow *= -c;
    }
  }
  out.trim();
  return out;
}

UniPoly BivariateParam::x_numerator() const { return UniPoly::x() * s1 + c * s0; }

namespace {

Rat top_form_at(const Poly2& p, const Rat& c) {
  const int d = total_degree(p);
  Rat acc = 0;
  for (const auto& [e, coef] : p) {
    if (e.first + e.second != d) continue;
    Rat term = coef;
    for (int i = 0; i < e.first; ++i) term *= -c;
    acc += term;
  }
  return acc;
}

const std::vector<Rat>& shear_candidates() {
  static const std::vector<Rat> values = [] {
    std::vector<Rat> v;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3},
                                                        {4, 1}, {5, 1}, {5, 2}, {7, 1}, {7, 3}, {11, 1}, {13, 5}}) {
      v.push_back(make_rat(n, d));
      v.push_back(make_rat(-n, d));
    }
    return v;
  }();
  return values;
}

}  // namespace

namespace {

UniPoly fiber(const BiPoly& p, const Rat& t0) {
  std::vector<Rat> c;
  for (const auto& k : p.coeffs) c.push_back(k(t0));
  return UniPoly(c);
}

// Whether every common zero on the sheared line t = t0 has x = 0 or y = 0.
bool axis_only_fiber(const BiPoly& pc, const BiPoly& qc, const Rat& c, const Rat& t0) {
  UniPoly g = gcd(fiber(pc, t0), fiber(qc, t0));
  if (g.is_zero()) return false;
  if (g.degree() <= 0) return true;
  UniPoly allowed = UniPoly::x() * UniPoly({-t0 / c, Rat(1)});
  return divmod(allowed, squarefree(g)).second.is_zero();
}

}  // namespace

BivariateParam parametrize_common_zeros(const Poly2& p, const Poly2& q, bool torus_only) {
  const int dp = total_degree(p), dq = total_degree(q);
  if (dp < 0 || dq < 0) throw DegenerateError("zero polynomial in a bivariate system");
  BivariateParam param;
  if (dp == 0 || dq == 0) {
    param.empty = true;
    return param;
  }
  for (const Rat& c : shear_candidates()) {
    if (top_form_at(p, c) == 0 || top_form_at(q, c) == 0) continue;
    BiPoly pc = shear(p, c), qc = shear(q, c);
    UniPoly r = resultant(pc, qc);
    if (r.is_zero()) throw DegenerateError("common component: solutions are not isolated");
    param.c = c;
    param.eliminant = r;
    if (r.degree() == 0) {
      param.empty = true;
      return param;
    }
    param.eliminant_sqfree = squarefree(r);
    const BiPoly* linear = pc.degree_y() == 1 ? &pc : (qc.degree_y() == 1 ? &qc : nullptr);
    if (linear) {
      param.s0 = linear->coeffs[0];
      param.s1 = linear->coeffs[1];
    } else {
      BiPoly s = subresultant(pc, qc, 1);
      param.s0 = s.coeffs.size() > 0 ? s.coeffs[0] : UniPoly{};
      param.s1 = s.coeffs.size() > 1 ? s.coeffs[1] : UniPoly{};
    }
    if (param.s1.is_zero()) continue;
    UniPoly bad = gcd(param.eliminant_sqfree, param.s1);
    if (bad.degree() == 0) return param;
    if (!torus_only || bad.degree() != 1) continue;
    const Rat t0 = -bad.coeff(0) / bad.coeff(1);
    if (!axis_only_fiber(pc, qc, c, t0)) continue;
    param.eliminant_sqfree = exact_div(param.eliminant_sqfree, bad);
    while (divmod(param.eliminant, bad).second.is_zero() && param.eliminant.degree() > 0)
      param.eliminant = exact_div(param.eliminant, bad);
    param.dropped_axis_fibers = 1;
    if (param.eliminant_sqfree.degree() == 0) param.empty = true;
    return param;
  }
  throw DegenerateError("no separating linear projection found");
}

UniPoly pullback(const BivariateParam& param, const Poly2& h) {
  const int d = total_degree(h);
  if (d < 0) return {};
  const UniPoly xn = param.x_numerator();
  const UniPoly yn = -param.s0;
  UniPoly acc;
  for (const auto& [e, coef] : h) {
    if (coef == 0) continue;
    acc += coef * (power(xn, e.first) * power(yn, e.second) * power(param.s1, d - e.first - e.second));
  }
  return acc;
}

}  // namespace hsp
