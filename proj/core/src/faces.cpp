#include "hsp/faces.hpp"

#include <algorithm>
#include <sstream>

#include "hsp/bivariate.hpp"
#include "hsp/curvature.hpp"
#include "hsp/errors.hpp"
#include "hsp/matrix.hpp"
#include "hsp/parallel.hpp"

namespace hsp {

bool test1_pyramid(const LatticePolytope& delta, const Face& face) {
  if (face.dim < 1) throw DimensionError("test 1 needs a face of dimension at least 1");
  const std::size_t d = delta.ambient_dim();
  std::vector<Point> units;
  for (std::size_t i = 0; i < d; ++i) {
    Point e = unit_vector(d, i);
    if (delta.on_face(face, e)) units.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < face.points.size(); ++a) {
    std::vector<Point> base;
    for (std::size_t k = 0; k < face.points.size(); ++k)
      if (k != a) base.push_back(face.points[k]);
    if (affine_dimension(base) != face.dim - 1) continue;
    bool ok = std::all_of(units.begin(), units.end(),
                          [&](const Point& e) { return e == face.points[a] || in_affine_span(base, e); });
    if (ok) return true;
  }
  return false;
}

bool test2_octahedron(const LatticePolytope& delta, const Face& face) {
  auto centre = is_cross_polytope(face);
  if (!centre) return false;
  const std::size_t d = delta.ambient_dim();
  int hub = -1;
  for (std::size_t i = 0; i < d; ++i) {
    const Rat& c = (*centre)[i];
    if (c == 1 && hub < 0) hub = static_cast<int>(i);
    else if (c != 0) return false;
  }
  if (hub < 0) return false;
  for (std::size_t j = 0; j < d; ++j)
    if (static_cast<int>(j) != hub && delta.on_face(face, unit_vector(d, j))) return false;
  return true;
}

namespace {

bool has_weight_form(const Point& v) {
  int neg = 0;
  long pos = 0;
  for (long x : v) {
    if (x == -1) ++neg;
    else if (x < -1) return false;
    else pos += x;
  }
  return neg == 1 && pos == 2;
}

}  // namespace

std::vector<std::size_t> MarkedFaceCensus::marked_per_dim() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries) {
    if (out.size() <= static_cast<std::size_t>(e.face.dim)) out.resize(static_cast<std::size_t>(e.face.dim) + 1, 0);
    if (e.marked) ++out[static_cast<std::size_t>(e.face.dim)];
  }
  return out;
}

std::size_t MarkedFaceCensus::marked_total() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CensusEntry& e) { return e.marked; }));
}

std::vector<CensusEntry> MarkedFaceCensus::marked() const {
  std::vector<CensusEntry> out;
  for (const auto& e : entries)
    if (e.marked) out.push_back(e);
  return out;
}

MarkedFaceCensus census(const LatticePolytope& delta) {
  MarkedFaceCensus out;
  out.applicable = std::all_of(delta.vertices().begin(), delta.vertices().end(), has_weight_form);
  delta.face_lattice();
  for (int k = 1; k < delta.dim(); ++k)
    for (auto& f : delta.faces(k)) out.entries.push_back({std::move(f), false, false, false});
  parallel_for(out.entries.size(), [&](std::size_t i) {
    auto& e = out.entries[i];
    e.test1 = test1_pyramid(delta, e.face);
    e.test2 = test2_octahedron(delta, e.face);
    e.marked = out.applicable && !e.test1 && !e.test2;
  });
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return std::tie(a.face.dim, a.face.normal) < std::tie(b.face.dim, b.face.normal);
  });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Singular: return "singular";
    case Verdict::Nonsingular: return "nonsingular";
    case Verdict::NeedsMoreData: return "needs_more_data";
  }
  return "needs_more_data";
}

namespace {

// Echelon basis of the integer lattice spanned by `rows`.
std::vector<std::vector<Int>> lattice_basis(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    while (true) {
      std::size_t p = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (p == rows.size() || abs(rows[i][col]) < abs(rows[p][col]))) p = i;
      if (p == rows.size()) break;
      std::swap(rows[r], rows[p]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::vector<long> lattice_coords(const std::vector<std::vector<Int>>& basis, const Point& v) {
  std::vector<Int> rest(v.begin(), v.end());
  std::vector<long> k;
  for (const auto& row : basis) {
    std::size_t piv = 0;
    while (row[piv] == 0) ++piv;
    if (rest[piv] % row[piv] != 0) throw std::logic_error("point outside the generated lattice");
    Int c = rest[piv] / row[piv];
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * row[j];
    k.push_back(to_long(c));
  }
  return k;
}

SingularityResult result(Verdict v, std::string method, std::string detail) {
  return {v, std::move(method), std::move(detail)};
}

}  // namespace

SingularityResult curve_singular(const LaurentPoly& s, const Face& face) {
  if (face.dim != 1 && face.dim != 2) throw DimensionError("curve test needs a face of dimension 1 or 2");
  const LaurentPoly sf = restrict_to_face(s, face);
  const std::string method = "torus elimination";
  if (sf.is_zero()) return result(Verdict::NeedsMoreData, method, "s has no terms on this face");
  if (sf.size() == 1) return result(Verdict::Nonsingular, method, "restriction is a single monomial");

  const auto support = sf.support();
  std::vector<std::vector<Int>> diffs;
  for (const auto& a : support) {
    std::vector<Int> row;
    for (std::size_t j = 0; j < a.size(); ++j) row.emplace_back(a[j] - support.front()[j]);
    diffs.push_back(std::move(row));
  }
  const auto basis = lattice_basis(diffs);
  std::vector<std::pair<std::vector<long>, Rat>> terms;
  for (const auto& [a, c] : sf.terms()) {
    Point diff(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) diff[j] = a[j] - support.front()[j];
    terms.emplace_back(lattice_coords(basis, diff), c);
  }
  std::vector<long> lo(basis.size(), 0);
  for (const auto& [k, c] : terms)
    for (std::size_t t = 0; t < k.size(); ++t) lo[t] = std::min(lo[t], k[t]);

  if (basis.size() == 1) {
    std::vector<Rat> coeffs;
    for (const auto& [k, c] : terms) {
      auto e = static_cast<std::size_t>(k[0] - lo[0]);
      if (coeffs.size() <= e) coeffs.resize(e + 1, Rat(0));
      coeffs[e] += c;
    }
    UniPoly g(coeffs);
    UniPoly common = gcd(g, g.derivative());
    while (common.degree() > 0 && common.coeff(0) == 0) common = exact_div(common, UniPoly::x());
    if (common.degree() > 0) return result(Verdict::Singular, method, "repeated nonzero root along the face");
    return result(Verdict::Nonsingular, method, "all roots along the face are simple");
  }

  Poly2 g;
  for (const auto& [k, c] : terms) g[{static_cast<int>(k[0] - lo[0]), static_cast<int>(k[1] - lo[1])}] += c;
  const Poly2 gu = partial_x(g), gv = partial_y(g);
  BivariateParam param;
  try {
    param = parametrize_common_zeros(gu, gv);
  } catch (const DegenerateError& e) {
    return result(Verdict::NeedsMoreData, method, e.what());
  }
  if (param.empty) return result(Verdict::Nonsingular, method, "gradient has no zeros");
  UniPoly common = gcd(param.eliminant_sqfree, pullback(param, g));
  if (common.degree() > 0) common = exact_div(common, gcd(common, param.s0));
  if (common.degree() > 0) common = exact_div(common, gcd(common, param.x_numerator()));
  if (common.degree() > 0)
    return result(Verdict::Singular, method, std::to_string(common.degree()) + " singular point(s) in the torus");
  return result(Verdict::Nonsingular, method, "no singular point in the torus");
}

SingularityResult parallelogram_singular(const LaurentPoly& s, const Face& face) {
  if (face.dim != 2 || face.points.size() != 4) throw DegenerateError("face is not a parallelogram");
  const auto& p = face.points;
  auto sum = [](const Point& a, const Point& b) {
    Point c(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] + b[j];
    return c;
  };
  int partner = -1;
  for (int k = 1; k < 4; ++k) {
    std::vector<int> rest;
    for (int m = 1; m < 4; ++m)
      if (m != k) rest.push_back(m);
    if (sum(p[0], p[static_cast<std::size_t>(k)]) == sum(p[static_cast<std::size_t>(rest[0])], p[static_cast<std::size_t>(rest[1])])) partner = k;
  }
  if (partner < 0) throw DegenerateError("face is not a parallelogram");
  std::vector<int> side;
  for (int m = 1; m < 4; ++m)
    if (m != partner) side.push_back(m);

  const LaurentPoly sf = restrict_to_face(s, face);
  if (sf.size() == 4 && std::all_of(p.begin(), p.end(), [&](const Point& v) { return sf.coeff(v) != 0; })) {
    Rat a0 = sf.coeff(p[0]), a12 = sf.coeff(p[static_cast<std::size_t>(partner)]);
    Rat a1 = sf.coeff(p[static_cast<std::size_t>(side[0])]), a2 = sf.coeff(p[static_cast<std::size_t>(side[1])]);
    std::string detail = "a0*a12 = " + to_string(a0 * a12) + ", a1*a2 = " + to_string(a1 * a2);
    return result(a0 * a12 == a1 * a2 ? Verdict::Singular : Verdict::Nonsingular, "parallelogram", detail);
  }
  return curve_singular(s, face);
}

SingularityResult face_singularity(const LaurentPoly& s, const Face& face) {
  if (face.dim == 2 && face.points.size() == 4) {
    try {
      return parallelogram_singular(s, face);
    } catch (const DegenerateError&) {
    }
  }
  if (face.dim == 1 || face.dim == 2) return curve_singular(s, face);
  return result(Verdict::NeedsMoreData, "none", "faces of dimension " + std::to_string(face.dim) + " are not analysed");
}

ChartSubstitution chart_from_weight_basis(const std::vector<Point>& basis, const std::vector<Rat>& kappa,
                                          const std::vector<std::string>& names, std::size_t scale_var,
                                          const std::set<std::size_t>& boundary_vars) {
  const std::size_t d = basis.size();
  if (d == 0 || kappa.size() != d || names.size() != d) throw DimensionError("chart needs d basis vectors, scalars and names");
  for (const auto& b : basis)
    if (b.size() != d) throw DimensionError("chart basis vectors must have length d");
  for (const auto& k : kappa)
    if (k == 0) throw DegenerateError("chart scalars must be nonzero");
  if (scale_var >= d) throw DimensionError("scale variable out of range");
  RatMatrix B(d, d);  // columns are the basis vectors
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) B(i, j) = basis[j][i];
  Rat det_b = det(B);
  if (det_b != 1 && det_b != -1) throw DegenerateError("chart basis is not unimodular");

  ChartSubstitution chart;
  chart.names = names;
  chart.basis = basis;
  chart.kappa = kappa;
  chart.scale_var = scale_var;
  chart.boundary_vars = boundary_vars;
  chart.map.target_vars = d;
  RatMatrix inv = *inverse(B);
  for (std::size_t i = 0; i < d; ++i) {
    // -e_i = sum_j n_j basis[j]
    std::vector<long> n(d);
    Rat scalar = 1;
    for (std::size_t j = 0; j < d; ++j) {
      Rat nj = -inv(j, i);
      n[j] = to_long(nj.get_num());
      for (long t = 0; t < std::abs(n[j]); ++t) scalar = n[j] > 0 ? Rat(scalar / kappa[j]) : Rat(scalar * kappa[j]);
    }
    chart.map.exponents.push_back(std::move(n));
    chart.map.scalars.push_back(scalar);
  }
  return chart;
}

ChartSubstitution parallelogram_chart(const LaurentPoly& s, const Point& v0, const Point& v1, const Point& v2,
                                      const std::vector<Point>& extra, const std::vector<std::string>& names) {
  const Rat c0 = s.coeff(v0), c1 = s.coeff(v1), c2 = s.coeff(v2);
  if (c0 == 0 || c1 == 0 || c2 == 0) throw DegenerateError("parallelogram vertices must carry nonzero coefficients");
  std::vector<Point> basis{v0, v1, v2};
  for (std::size_t j = 0; j < v0.size(); ++j) {
    basis[1][j] -= v0[j];
    basis[2][j] -= v0[j];
  }
  std::vector<Rat> kappa{c0, c1 / c0, c2 / c0};
  std::set<std::size_t> boundary;
  for (const auto& e : extra) {
    boundary.insert(basis.size());
    basis.push_back(e);
    kappa.emplace_back(1);
  }
  return chart_from_weight_basis(basis, kappa, names, 0, boundary);
}

LaurentPoly localize(const LaurentPoly& p, const ChartSubstitution& chart) { return monomial_substitute(p, chart.map); }

LaurentPoly truncate_boundary(const LaurentPoly& p, const ChartSubstitution& chart, long max_degree) {
  LaurentPoly out(p.num_vars());
  for (const auto& [a, c] : p.terms()) {
    long deg = 0;
    for (auto j : chart.boundary_vars) {
      if (-a[j] < 0) throw DegenerateError("negative power of boundary variable " + chart.names[j]);
      deg += -a[j];
    }
    if (deg <= max_degree) out.add_term(a, c);
  }
  return out;
}

BoundaryJacobian boundary_jacobian(const HomSpaceData& data, const ChartSubstitution& chart,
                                   const std::vector<Rat>& point) {
  const auto d = static_cast<std::size_t>(data.d);
  if (chart.names.size() != d || point.size() != d) throw DimensionError("chart and data dimensions differ");
  for (std::size_t j = 0; j < d; ++j)
    if (!chart.boundary_vars.count(j) && point[j] == 0)
      throw DegenerateError("chart variable " + chart.names[j] + " must be nonzero");
  const LaurentPoly s = scalar_curvature(data);
  std::vector<LaurentPoly> local;
  for (std::size_t i = 0; i < d; ++i) local.push_back(localize(grad_component(s, i), chart));

  BoundaryJacobian jac;
  for (std::size_t k = 0; k < d; ++k) {
    if (k == chart.scale_var) continue;
    std::vector<Rat> row;
    for (std::size_t i = 0; i < d; ++i) row.push_back(partial(local[i], k).evaluate(point));
    jac.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (d == 1) {
      jac.cofactors.emplace_back(1);
      break;
    }
    RatMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == i) continue;
        minor(r, c2++) = jac.rows[r][c];
      }
    }
    Rat cof = det(minor);
    jac.cofactors.push_back(i % 2 == 0 ? cof : Rat(-cof));
  }
  return jac;
}

std::string format_linear_form(const std::vector<Rat>& coeffs, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rat mag = abs(c);
    if (mag != 1) out << to_string(mag) << "*";
    out << var << i + 1;
  }
  return first ? "0" : out.str();
}

}  // namespace hsp
