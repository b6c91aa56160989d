#include "hsp/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "hsp/errors.hpp"

namespace hsp {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw DegenerateError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  Rat inv = 1 / c_.back();
  return *this * inv;
}

UniPoly UniPoly::shift(const Rat& a) const {
  UniPoly acc;
  const UniPoly lin{a, Rat(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> p(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(p));
}

UniPoly operator-(UniPoly a) {
  for (auto& q : a.c_) q = -q;
  return a;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat q = c_[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    if (!first) out << (q < 0 ? " - " : " + ");
    else if (q < 0) out << "-";
    Rat mag = abs(q);
    if (k == 0 || mag != 1) out << hsp::to_string(mag) << (k ? "*" : "");
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DegenerateError("division by the zero polynomial");
  std::vector<Rat> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  const Rat inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rat f = r[static_cast<std::size_t>(k)] * inv;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DegenerateError("inexact polynomial division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

Rat resultant_euclid(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  auto power = [](const Rat& x, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  if (m == 0) return power(a.leading(), n);
  if (n == 0) return power(b.leading(), m);
  UniPoly r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  Rat sign = (m % 2 == 1 && n % 2 == 1) ? -1 : 1;
  return sign * power(b.leading(), m - r.degree()) * resultant_euclid(b, r);
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{squarefree(p)};
  seq.push_back(seq[0].derivative());
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_of(const Rat& q) { return sgn(q); }

int sign_at(const UniPoly& p, const RealBound& x) {
  switch (x.kind) {
    case RealBound::Kind::PosInf:
      return sign_of(p.leading());
    case RealBound::Kind::NegInf:
      return sign_of(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1);
    case RealBound::Kind::Finite:
      break;
  }
  return sign_of(p(x.value));
}

std::size_t variations(const std::vector<UniPoly>& seq, const RealBound& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

bool before(const RealBound& lo, const RealBound& hi) {
  using K = RealBound::Kind;
  if (lo.kind == K::PosInf || hi.kind == K::NegInf) return false;
  if (lo.kind == K::NegInf || hi.kind == K::PosInf) return true;
  return lo.value < hi.value;
}

}  // namespace

std::size_t sturm_count(const UniPoly& p, const RealBound& lo, const RealBound& hi) {
  if (p.is_zero()) throw DegenerateError("root count of the zero polynomial");
  if (p.degree() == 0 || !before(lo, hi)) return 0;
  auto seq = sturm_sequence(p);
  std::size_t vlo = variations(seq, lo), vhi = variations(seq, hi);
  return vlo > vhi ? vlo - vhi : 0;
}

Rat root_bound(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateError("root bound of the zero polynomial");
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(p.coeff(k) / p.leading())));
  Rat b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

void refine_root(const UniPoly& f, Rat& a, Rat& b, const Rat& max_width) {
  while (b - a > max_width) {
    Rat mid = (a + b) / 2;
    if (sturm_count(f, RealBound::at(a), RealBound::at(mid)) == 1)
      b = mid;
    else
      a = mid;
  }
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p, const Rat& max_width) {
  UniPoly f = squarefree(p);
  std::vector<std::pair<Rat, Rat>> out;
  if (f.degree() <= 0) return out;
  Rat bound = root_bound(f);
  std::vector<std::pair<Rat, Rat>> todo{{-bound, bound}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    std::size_t n = sturm_count(f, RealBound::at(a), RealBound::at(b));
    if (n == 0) continue;
    if (n == 1) {
      refine_root(f, a, b, max_width);
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) / 2;
    todo.emplace_back(a, mid);
    todo.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sign_at_root(const UniPoly& g, const UniPoly& f, Rat& a, Rat& b) {
  if (g.is_zero()) return 0;
  if (g.degree() == 0) return sgn(g.leading());
  UniPoly h = gcd(g, f);
  if (h.degree() > 0 && sturm_count(h, RealBound::at(a), RealBound::at(b)) == 1) return 0;
  while (sturm_count(g, RealBound::at(a), RealBound::at(b)) != 0) {
    Rat mid = (a + b) / 2;
    if (sturm_count(f, RealBound::at(a), RealBound::at(mid)) == 1)
      b = mid;
    else
      a = mid;
  }
  return sgn(g(b));
}

}  // namespace hsp
