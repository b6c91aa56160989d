#include "hsp/curvature.hpp"

#include "hsp/errors.hpp"

namespace hsp {

LaurentPoly scalar_curvature(const HomSpaceData& data) {
  const auto d = static_cast<std::size_t>(data.d);
  LaurentPoly s(d);
  for (std::size_t i = 0; i < d; ++i) {
    LaurentPoly::Exponent e(d, 0);
    e[i] = 1;
    s.add_term(e, Rat(data.dims[i]) * data.b[i] / 2);
  }
  for (const auto& v : ordered_views(data)) {
    LaurentPoly::Exponent e(d, 0);
    ++e[static_cast<std::size_t>(v.i)];
    ++e[static_cast<std::size_t>(v.j)];
    --e[static_cast<std::size_t>(v.k)];
    s.add_term(e, -v.value / 4);
  }
  return s;
}

std::vector<LaurentPoly> einstein_system(const HomSpaceData& data) {
  LaurentPoly s = scalar_curvature(data);
  std::vector<LaurentPoly> grads;
  for (std::size_t i = 0; i < static_cast<std::size_t>(data.d); ++i)
    grads.push_back(grad_component(s, i) * (Rat(1) / Rat(data.dims[i])));
  std::vector<LaurentPoly> f;
  for (std::size_t i = 0; i + 1 < grads.size(); ++i) f.push_back(grads[i] - grads[i + 1]);
  return f;
}

std::vector<Rat> ricci_components(const HomSpaceData& data, const std::vector<Rat>& x) {
  const auto d = static_cast<std::size_t>(data.d);
  if (x.size() != d) throw DimensionError("metric has the wrong number of parameters");
  for (const auto& xi : x)
    if (xi <= 0) throw DegenerateError("metric parameters must be positive");
  std::vector<Rat> r(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = data.b[i] / (2 * x[i]);
  for (const auto& v : ordered_views(data)) {
    const auto a = static_cast<std::size_t>(v.i), b = static_cast<std::size_t>(v.j), c = static_cast<std::size_t>(v.k);
    Rat term = v.value * x[c] / (x[a] * x[b]) / 4;
    r[c] += term / Rat(data.dims[c]);
    r[a] -= term / Rat(data.dims[a]);
    r[b] -= term / Rat(data.dims[b]);
  }
  return r;
}

std::vector<Rat> moment(const HomSpaceData& data, const std::vector<Rat>& x, const Rat& theta) {
  if (theta <= -1 || theta >= 1) throw DegenerateError("theta must satisfy |theta| < 1");
  auto r = ricci_components(data, x);
  const auto d = static_cast<std::size_t>(data.d);
  std::vector<Rat> c(d);
  Rat total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = Rat(data.dims[i]) * (-(1 + theta) * r[i] + data.b[i] / x[i]);
    total += c[i];
  }
  if (total <= 0) throw DegenerateError("normalising functional is not positive at this metric");
  for (auto& ci : c) ci /= total;
  return c;
}

}  // namespace hsp
