#include "hsp/infinity.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "hsp/errors.hpp"
#include "hsp/matrix.hpp"

namespace hsp {

namespace {

template <typename Coord>
std::optional<std::vector<int>> support_in_simplex(const std::vector<Coord>& x) {
  Coord sum = 0;
  std::vector<int> supp;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) return std::nullopt;
    if (x[i] != 0) supp.push_back(static_cast<int>(i));
    sum += x[i];
  }
  if (sum != 1) return std::nullopt;
  return supp;
}

bool covered(const FlatComplex& t, const std::vector<int>& supp) {
  return std::any_of(t.maximal_flats.begin(), t.maximal_flats.end(), [&](const std::vector<int>& flat) {
    return std::includes(flat.begin(), flat.end(), supp.begin(), supp.end());
  });
}

}  // namespace

bool FlatComplex::is_flat(const std::vector<int>& indices) const {
  std::vector<int> s = indices;
  std::sort(s.begin(), s.end());
  return covered(*this, s);
}

bool FlatComplex::contains(const std::vector<Rat>& x) const {
  if (x.size() != static_cast<std::size_t>(d)) throw DimensionError("point dimension differs from the complex's");
  auto supp = support_in_simplex(x);
  return supp && covered(*this, *supp);
}

bool FlatComplex::contains(const Point& x) const {
  if (x.size() != static_cast<std::size_t>(d)) throw DimensionError("point dimension differs from the complex's");
  auto supp = support_in_simplex(x);
  return supp && covered(*this, *supp);
}

FlatComplex flat_complex(const HomSpaceData& data) {
  const int d = data.d;
  std::vector<bool> allowed(static_cast<std::size_t>(d), true);
  std::vector<std::vector<bool>> edge(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(d), true));
  for (int i = 0; i < d; ++i) {
    if (data.h_nontrivial.count(i) || data.central.count(i) || data.bracket_meets_h.count({i, i}))
      allowed[static_cast<std::size_t>(i)] = false;
  }
  for (const auto& [key, value] : data.triples) {
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const auto i = static_cast<std::size_t>(key[static_cast<std::size_t>(a)]);
        const auto j = static_cast<std::size_t>(key[static_cast<std::size_t>(b)]);
        if (i == j) allowed[i] = false;
        edge[i][j] = edge[j][i] = false;
      }
  }
  for (const auto& [i, j] : data.bracket_meets_h)
    edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = edge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = false;

  // Bron–Kerbosch with pivoting on the flatness graph.
  FlatComplex out;
  out.d = d;
  std::function<void(std::vector<int>, std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int> r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          if (!r.empty()) {
            std::sort(r.begin(), r.end());
            out.maximal_flats.push_back(r);
          }
          return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        std::vector<int> candidates;
        for (int v : p)
          if (!edge[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)] || v == pivot) candidates.push_back(v);
        for (int v : candidates) {
          std::vector<int> r2 = r, p2, x2;
          r2.push_back(v);
          for (int u : p)
            if (u != v && edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) p2.push_back(u);
          for (int u : x)
            if (u != v && edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) x2.push_back(u);
          expand(r2, p2, x2);
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> vertices;
  for (int i = 0; i < d; ++i)
    if (allowed[static_cast<std::size_t>(i)]) vertices.push_back(i);
  expand({}, vertices, {});
  std::sort(out.maximal_flats.begin(), out.maximal_flats.end());
  return out;
}

bool flat_vertex_criterion(const HomSpaceData& data, int j) {
  if (j < 0 || j >= data.d) throw DimensionError("module index out of range");
  if (!flat_complex(data).is_flat({j})) throw DegenerateError("{" + std::to_string(j + 1) + "} is not flat");
  for (const auto& [key, value] : data.triples) {
    if (std::find(key.begin(), key.end(), j) == key.end()) continue;
    // Must be {i, j, i} with i != j.
    std::vector<int> rest;
    bool removed = false;
    for (int s : key) {
      if (s == j && !removed) {
        removed = true;
        continue;
      }
      rest.push_back(s);
    }
    if (rest[0] != rest[1] || rest[0] == j) return false;
  }
  return true;
}

LatticePolytope delta_min(const LatticePolytope& delta, const FlatComplex& t, const std::set<int>& skip) {
  const std::size_t d = delta.ambient_dim();
  if (static_cast<std::size_t>(t.d) != d) throw DimensionError("flat complex and polytope dimensions differ");
  std::vector<Point> gens;
  for (const auto& v : delta.vertices())
    if (!t.contains(v)) gens.push_back(v);
  for (std::size_t j = 0; j < d; ++j) {
    if (skip.count(static_cast<int>(j))) continue;
    Point e = unit_vector(d, j);
    if (!t.contains(e)) gens.push_back(e);
  }
  if (gens.empty()) throw DegenerateError("every vertex lies at infinity");
  return LatticePolytope::hull(gens);
}

namespace {

bool face_inside_t(const Face& f, const FlatComplex& t) {
  std::vector<int> supp;
  for (const auto& p : f.points) {
    auto s = support_in_simplex(p);
    if (!s) return false;
    supp.insert(supp.end(), s->begin(), s->end());
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return covered(t, supp);
}

}  // namespace

bool is_admissible(const LatticePolytope& delta, const FlatComplex& t) {
  for (const auto& level : delta.all_proper_faces())
    for (const auto& f : level)
      if (face_inside_t(f, t)) return false;
  return true;
}

std::vector<FaceTDimension> t_dimension_violations(const LatticePolytope& delta, const FlatComplex& t) {
  const std::size_t d = delta.ambient_dim();
  std::vector<FaceTDimension> out;
  for (const auto& level : delta.all_proper_faces())
    for (const auto& f : level) {
      int best = -1;
      for (const auto& flat : t.maximal_flats) {
        int on = 0;
        for (int i : flat)
          if (delta.on_face(f, unit_vector(d, static_cast<std::size_t>(i)))) ++on;
        best = std::max(best, on - 1);
      }
      if (best >= f.dim) out.push_back({f, best});
    }
  return out;
}

B2Exponent b2_exponent(const LatticePolytope& delta) {
  B2Exponent out;
  out.index = lattice_index(delta.vertices(), delta.ambient_dim());
  if (!out.index) return out;
  Int n = *out.index;
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  if (n == 1) out.exponent = e;
  return out;
}

std::string to_json(const FlatComplex& t) {
  nlohmann::ordered_json j;
  auto flats = nlohmann::ordered_json::array();
  for (const auto& f : t.maximal_flats) {
    auto a = nlohmann::ordered_json::array();
    for (int i : f) a.push_back(i + 1);
    flats.push_back(std::move(a));
  }
  j["maximal_flats"] = std::move(flats);
  return j.dump(2);
}

FlatComplex flat_complex_from_json(const std::string& text, int d) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("maximal_flats") || !j["maximal_flats"].is_array())
    throw ValidationError("/maximal_flats", "expected an array of index arrays");
  FlatComplex t;
  t.d = d;
  for (std::size_t k = 0; k < j["maximal_flats"].size(); ++k) {
    const auto& f = j["maximal_flats"][k];
    std::vector<int> flat;
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (!f[s].is_number_integer() || f[s].get<int>() < 1 || f[s].get<int>() > d)
        throw ValidationError("/maximal_flats/" + std::to_string(k) + "/" + std::to_string(s), "index out of range");
      flat.push_back(f[s].get<int>() - 1);
    }
    std::sort(flat.begin(), flat.end());
    t.maximal_flats.push_back(std::move(flat));
  }
  std::sort(t.maximal_flats.begin(), t.maximal_flats.end());
  return t;
}

}  // namespace hsp
