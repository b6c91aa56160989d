#include "hsp/laurent.hpp"

#include <sstream>

#include <json.hpp>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw DegenerateError("negative power of zero");
    return rat_pow(1 / base, -e);
  }
  Rat r = 1;
  for (long k = 0; k < e; ++k) r *= base;
  return r;
}

std::vector<std::string> default_names(std::size_t n, const std::vector<std::string>& names) {
  if (!names.empty()) {
    if (names.size() != n) throw DimensionError("variable name count differs from the variable count");
    return names;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const Exponent& weight, const Rat& c) {
  LaurentPoly p(weight.size());
  p.add_term(weight, c);
  return p;
}

void LaurentPoly::check(const Exponent& a) const {
  if (a.size() != n_) throw DimensionError("exponent length differs from the variable count");
}

void LaurentPoly::add_term(const Exponent& weight, const Rat& c) {
  check(weight);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(weight, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LaurentPoly::coeff(const Exponent& weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Point> LaurentPoly::support() const {
  std::vector<Point> out;
  for (const auto& [a, c] : terms_) out.push_back(a);
  return out;
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& x) const {
  if (x.size() != n_) throw DimensionError("evaluation point has the wrong length");
  Rat acc = 0;
  for (const auto& [a, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < n_ && term != 0; ++i) {
      if (x[i] == 0 && a[i] > 0) throw DegenerateError("monomial is singular at a zero coordinate");
      term *= rat_pow(x[i], -a[i]);
    }
    acc += term;
  }
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.n_ != n_) throw DimensionError("adding Laurent polynomials in different variables");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.n_ != n_) throw DimensionError("subtracting Laurent polynomials in different variables");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_ != b.n_) throw DimensionError("multiplying Laurent polynomials in different variables");
  LaurentPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponent e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto vars = default_names(n_, names);
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rat mag = abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i) {
      long e = -a[i];
      if (e == 0) continue;
      mono << (any ? "*" : "") << vars[i];
      if (e != 1) mono << "^" << e;
      any = true;
    }
    if (!any) out << hsp::to_string(mag);
    else if (mag == 1) out << mono.str();
    else out << hsp::to_string(mag) << "*" << mono.str();
  }
  return out.str();
}

LaurentPoly partial(const LaurentPoly& p, std::size_t i) {
  if (i >= p.num_vars()) throw DimensionError("variable index out of range");
  LaurentPoly out(p.num_vars());
  for (const auto& [a, c] : p.terms()) {
    if (a[i] == 0) continue;
    auto e = a;
    e[i] += 1;
    out.add_term(e, c * (-a[i]));
  }
  return out;
}

LaurentPoly grad_component(const LaurentPoly& p, std::size_t i) {
  if (i >= p.num_vars()) throw DimensionError("variable index out of range");
  LaurentPoly out(p.num_vars());
  for (const auto& [a, c] : p.terms()) out.add_term(a, c * (-a[i]));
  return out;
}

LatticePolytope newton_polytope(const LaurentPoly& p) {
  if (p.is_zero()) throw DegenerateError("Newton polytope of the zero polynomial");
  return LatticePolytope::hull(p.support());
}

LaurentPoly restrict_to_face(const LaurentPoly& p, const Face& face) {
  if (face.normal.size() != p.num_vars()) throw DimensionError("face and polynomial live in different lattices");
  LaurentPoly out(p.num_vars());
  for (const auto& [a, c] : p.terms())
    if (dot(face.normal, a) == face.offset) out.add_term(a, c);
  return out;
}

LaurentPoly monomial_substitute(const LaurentPoly& p, const MonomialMap& map) {
  if (map.scalars.size() != p.num_vars() || map.exponents.size() != p.num_vars())
    throw DimensionError("substitution must assign every variable");
  for (const auto& e : map.exponents)
    if (e.size() != map.target_vars) throw DimensionError("substitution exponent has the wrong length");
  LaurentPoly out(map.target_vars);
  for (const auto& [a, c] : p.terms()) {
    std::vector<long> e(map.target_vars, 0);
    Rat coef = c;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      const long t = -a[i];
      if (t == 0) continue;
      coef *= rat_pow(map.scalars[i], t);
      for (std::size_t j = 0; j < map.target_vars; ++j) e[j] += t * map.exponents[i][j];
    }
    for (auto& x : e) x = -x;
    out.add_term(e, coef);
  }
  return out;
}

std::string to_json(const LaurentPoly& p, const std::vector<std::string>& names) {
  nlohmann::ordered_json j;
  j["vars"] = default_names(p.num_vars(), names);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [a, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = a;
    t["coef"] = to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

LaurentPoly laurent_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j["vars"].is_array())
    throw ValidationError("/vars", "expected an array of variable names");
  for (const auto& [key, value] : j.items())
    if (key != "vars" && key != "terms") throw ValidationError("/" + key, "unknown field");
  const std::size_t n = j["vars"].size();
  LaurentPoly p(n);
  if (!j.contains("terms") || !j["terms"].is_array()) throw ValidationError("/terms", "expected an array");
  for (std::size_t t = 0; t < j["terms"].size(); ++t) {
    const auto& term = j["terms"][t];
    const std::string where = "/terms/" + std::to_string(t);
    if (!term.is_object() || !term.contains("exp") || !term.contains("coef"))
      throw ValidationError(where, "expected {exp, coef}");
    if (!term["exp"].is_array() || term["exp"].size() != n)
      throw ValidationError(where + "/exp", "expected " + std::to_string(n) + " integers");
    LaurentPoly::Exponent a;
    for (const auto& v : term["exp"]) {
      if (!v.is_number_integer()) throw ValidationError(where + "/exp", "expected integers");
      a.push_back(static_cast<long>(v.get<long long>()));
    }
    if (!term["coef"].is_string()) throw ValidationError(where + "/coef", "expected a rational string");
    try {
      p.add_term(a, parse_rational(term["coef"].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + "/coef", e.what());
    }
  }
  return p;
}

}  // namespace hsp
