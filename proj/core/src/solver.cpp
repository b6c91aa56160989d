#include "hsp/solver.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "hsp/curvature.hpp"
#include "hsp/errors.hpp"
#include "hsp/infinity.hpp"
#include "hsp/parallel.hpp"
#include "hsp/unipoly.hpp"

namespace hsp {

DehomogenizedSystem dehomogenize(const std::vector<LaurentPoly>& system) {
  DehomogenizedSystem out;
  if (system.empty()) return out;
  const std::size_t d = system.front().num_vars();
  if (d == 0) throw DimensionError("system has no variables");
  out.vars = d - 1;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const LaurentPoly& f = system[i];
    if (f.num_vars() != d) throw DimensionError("equations have different numbers of variables");
    if (f.is_zero()) throw DegenerateError("equation " + std::to_string(i + 1) + " vanishes identically");
    std::optional<long> degree;
    std::vector<long> top(d - 1, std::numeric_limits<long>::min());
    for (const auto& [a, c] : f.terms()) {
      long sum = 0;
      for (long v : a) sum += v;
      if (degree && *degree != sum) throw DegenerateError("equation " + std::to_string(i + 1) + " is not homogeneous");
      degree = sum;
      for (std::size_t j = 0; j + 1 < d; ++j) top[j] = std::max(top[j], a[j]);
    }
    LaurentPoly g(d - 1);
    for (const auto& [a, c] : f.terms()) {
      std::vector<long> w(d - 1);
      for (std::size_t j = 0; j + 1 < d; ++j) w[j] = a[j] - top[j];
      g.add_term(w, c);
    }
    out.polys.push_back(std::move(g));
    out.cleared.push_back(top);
  }
  return out;
}

UniPoly as_univariate(const LaurentPoly& p) {
  if (p.num_vars() != 1) throw DimensionError("expected a polynomial in one variable");
  std::vector<Rat> c;
  for (const auto& [a, v] : p.terms()) {
    if (a[0] > 0) throw DegenerateError("negative power in a cleared polynomial");
    auto k = static_cast<std::size_t>(-a[0]);
    if (c.size() <= k) c.resize(k + 1, Rat(0));
    c[k] += v;
  }
  return UniPoly(c);
}

Poly2 as_bivariate(const LaurentPoly& p) {
  if (p.num_vars() != 2) throw DimensionError("expected a polynomial in two variables");
  Poly2 out;
  for (const auto& [a, v] : p.terms()) {
    if (a[0] > 0 || a[1] > 0) throw DegenerateError("negative power in a cleared polynomial");
    out[{static_cast<int>(-a[0]), static_cast<int>(-a[1])}] += v;
  }
  return out;
}

namespace {

struct Interval {
  Rat lo, hi;
};

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

bool contains_zero(const Interval& a) { return a.lo <= 0 && a.hi >= 0; }

Interval operator/(const Interval& a, const Interval& b) { return a * Interval{1 / b.hi, 1 / b.lo}; }

Interval eval(const UniPoly& p, const Interval& t) {
  Interval acc{0, 0};
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + Interval{*it, *it};
  return acc;
}

Interval eval(const LaurentPoly& p, const Box& box) {
  Interval acc{0, 0};
  for (const auto& [a, c] : p.terms()) {
    Interval term{c, c};
    for (std::size_t j = 0; j < a.size(); ++j) {
      Interval x{box[j].first, box[j].second};
      for (long e = 0; e < -a[j]; ++e) term = term * x;
    }
    acc = acc + term;
  }
  return acc;
}

constexpr unsigned kBoxBits = 48;

std::pair<Rat, Rat> outward(const Interval& a) { return {dyadic_floor(a.lo, kBoxBits), dyadic_ceil(a.hi, kBoxBits)}; }

Rat power_of_two(int e) {
  Rat r = 1;
  for (int i = 0; i < std::abs(e); ++i) r = e > 0 ? Rat(r * 2) : Rat(r / 2);
  return r;
}

UniPoly strip_zero_roots(UniPoly p) {
  while (p.degree() > 0 && p.coeff(0) == 0) p = exact_div(p, UniPoly::x());
  return p;
}

void add_residuals(const DehomogenizedSystem& sys, Solution& sol) {
  Box inner(sol.box.begin(), sol.box.end() - 1);
  for (const auto& f : sys.polys) {
    Interval v = eval(f, inner);
    sol.residual_bounds.push_back(std::max(abs(v.lo), abs(v.hi)));
  }
}

}  // namespace

SolutionSet count_complex(const HomSpaceData& data) {
  SolutionSet set;
  set.d = data.d;
  if (data.d > 3) throw UnsupportedError("solving is implemented for d <= 3 only");
  if (data.d == 1) {
    set.distinct_complex_count = 1;
    set.eliminant = UniPoly::x();
    return set;
  }
  const DehomogenizedSystem sys = dehomogenize(einstein_system(data));
  if (data.d == 2) {
    UniPoly g = strip_zero_roots(as_univariate(sys.polys[0]));
    if (g.degree() <= 0) {
      set.eliminant = UniPoly::constant(1);
      return set;
    }
    set.eliminant = strip_zero_roots(squarefree(g));
    set.distinct_complex_count = static_cast<std::size_t>(set.eliminant.degree());
    set.multiplicity_excess = static_cast<std::size_t>(g.degree() - set.eliminant.degree());
  } else {
    BivariateParam param;
    try {
      param = parametrize_common_zeros(as_bivariate(sys.polys[0]), as_bivariate(sys.polys[1]), true);
    } catch (const DegenerateError& e) {
      throw DegenerateError(std::string("elimination failed: ") + e.what());
    }
    set.param = param;
    if (param.dropped_axis_fibers > 0) set.notes.push_back("an unseparated fiber of zeros on the coordinate axes was discarded");
    if (param.empty) {
      set.eliminant = UniPoly::constant(1);
      return set;
    }
    UniPoly t = param.eliminant_sqfree;
    t = exact_div(t, gcd(t, param.s0));
    t = exact_div(t, gcd(t, param.x_numerator()));
    const UniPoly boundary = exact_div(param.eliminant_sqfree, t);
    UniPoly full = param.eliminant;
    for (UniPoly h = gcd(full, boundary); h.degree() > 0; h = gcd(full, boundary)) full = exact_div(full, h);
    set.eliminant = t.monic();
    set.distinct_complex_count = static_cast<std::size_t>(std::max(t.degree(), 0));
    set.multiplicity_excess = static_cast<std::size_t>(std::max(full.degree() - std::max(t.degree(), 0), 0));
    if (boundary.degree() > 0)
      set.notes.push_back(std::to_string(boundary.degree()) + " common zero(s) on the coordinate axes discarded");
  }
  if (set.multiplicity_excess > 0) {
    set.generic = false;
    set.notes.push_back("eliminant has repeated torus roots; distinct count may undercount multiplicities");
  }
  return set;
}

void real_positive(const HomSpaceData& data, SolutionSet& set) {
  set.refined = true;
  set.real_solutions.clear();
  if (data.d == 1) {
    set.real_count = set.positive_count = 1;
    set.real_solutions.push_back({{{Rat(1), Rat(1)}}, true, {}});
    return;
  }
  if (set.distinct_complex_count == 0) {
    set.real_count = set.positive_count = 0;
    return;
  }
  const DehomogenizedSystem sys = dehomogenize(einstein_system(data));
  const UniPoly& t = set.eliminant;
  set.real_count = sturm_count(t, RealBound::neg_inf(), RealBound::pos_inf());
  auto roots = isolate_real_roots(t, power_of_two(-60));
  std::vector<Solution> sols(roots.size());

  parallel_for(roots.size(), [&](std::size_t r) {
    Rat a = roots[r].first, b = roots[r].second;
    Solution& sol = sols[r];
    if (data.d == 2) {
      int sx = sign_at_root(UniPoly::x(), t, a, b);
      sol.positive = sx > 0;
      sol.box = {outward({a, b}), {Rat(1), Rat(1)}};
    } else {
      const BivariateParam& p = *set.param;
      const UniPoly xnum = p.x_numerator();
      Rat a1 = a, b1 = b;
      int s1 = sign_at_root(p.s1, t, a1, b1);
      int s0 = sign_at_root(p.s0, t, a1, b1);
      int sxn = sign_at_root(xnum, t, a1, b1);
      sol.positive = (sxn * s1 > 0) && (-s0 * s1 > 0);
      Rat width = power_of_two(-64);
      Interval den{0, 0};
      for (;;) {
        refine_root(t, a, b, width);
        den = eval(p.s1, {a, b});
        if (!contains_zero(den)) break;
        width /= 1024;
      }
      Interval x = eval(xnum, {a, b}) / den;
      Interval y = eval(p.s0, {a, b}) / den;
      y = Interval{-y.hi, -y.lo};
      sol.box = {outward(x), outward(y), {Rat(1), Rat(1)}};
    }
    add_residuals(sys, sol);
  });
  set.real_solutions = std::move(sols);
  set.positive_count = static_cast<std::size_t>(
      std::count_if(set.real_solutions.begin(), set.real_solutions.end(), [](const Solution& s) { return s.positive; }));
}

SolutionSet solve(const HomSpaceData& data) {
  SolutionSet set = count_complex(data);
  real_positive(data, set);
  return set;
}

Int delannoy(int n) {
  if (n < 0) throw DimensionError("delannoy needs n >= 0");
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Int>> t(size, std::vector<Int>(size, Int(1)));
  for (std::size_t i = 1; i < size; ++i)
    for (std::size_t j = 1; j < size; ++j) t[i][j] = t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1];
  return t[size - 1][size - 1];
}

Int legendre_at_3(int n) {
  if (n < 0) throw DimensionError("legendre_at_3 needs n >= 0");
  Int prev = 1, cur = 3;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    // (k + 1) P_{k+1} = 3 (2k + 1) P_k - k P_{k-1}
    Int next = (3 * (2 * k + 1) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

BoundReport make_bound_report(const Int& nu, int d, std::optional<std::size_t> computed,
                              std::optional<long> annotation, const std::string& source) {
  BoundReport r;
  r.d = d;
  r.nu = nu;
  r.epsilon_computed = computed;
  r.epsilon_annotation = annotation;
  r.epsilon_source = source;
  r.delannoy_bound = delannoy(d - 1);
  r.six_power = 1;
  for (int i = 1; i < d; ++i) r.six_power *= 6;
  r.nu_le_delannoy = nu <= r.delannoy_bound;
  r.nu_lt_six_power = nu < r.six_power;
  if (!r.nu_le_delannoy) r.violations.push_back("nu exceeds the central Delannoy number");
  if (!r.nu_lt_six_power) r.violations.push_back("nu is not below 6^(d-1)");
  std::optional<Int> eps;
  if (computed) eps = Int(static_cast<unsigned long>(*computed));
  else if (annotation) eps = Int(*annotation);
  if (eps) {
    r.epsilon_le_nu = *eps <= nu;
    if (!r.epsilon_le_nu) r.violations.push_back("epsilon exceeds nu");
    else if (*eps < nu)
      r.infinity_note = "nu - epsilon = " + to_string(Int(nu - *eps)) + " solution(s) escape to infinity";
    else
      r.infinity_note = "nu = epsilon: all solutions are isolated and none lie at infinity";
  }
  return r;
}

BoundReport bound_report(const HomSpaceData& data, const SolutionSet* solutions) {
  const LatticePolytope delta = weight_polytope(data);
  const LatticePolytope dmin = delta_min(delta, flat_complex(data), data.central);
  std::optional<long> annotation;
  std::string source;
  if (!data.expected_json.empty()) {
    auto j = nlohmann::json::parse(data.expected_json);
    if (j.contains("epsilon") && j["epsilon"].is_number_integer()) annotation = j["epsilon"].get<long>();
    if (j.contains("epsilon_source") && j["epsilon_source"].is_string()) source = j["epsilon_source"].get<std::string>();
  }
  std::optional<std::size_t> computed;
  if (solutions) computed = solutions->distinct_complex_count;
  return make_bound_report(normalized_volume(dmin), data.d, computed, annotation, source);
}

}  // namespace hsp
