#include "hsp/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hsp {

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Int d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat q(Int(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q{Int(num), Int(den)};
  q.canonicalize();
  return q;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int common_denominator(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  return l;
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int den = common_denominator(v);
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& q : v) {
    Int z = q.get_num() * (den / q.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

Rat dyadic_floor(const Rat& q, unsigned bits) {
  Int scale = Int(1) << bits;
  Int num = q.get_num() * scale;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Rat r(f, scale);
  r.canonicalize();
  return r;
}

Rat dyadic_ceil(const Rat& q, unsigned bits) {
  Int scale = Int(1) << bits;
  Int num = q.get_num() * scale;
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Rat r(c, scale);
  r.canonicalize();
  return r;
}

}  // namespace hsp
