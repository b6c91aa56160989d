#include "hsp/homspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "hsp/errors.hpp"

namespace hsp {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(Complement c) {
  switch (c) {
    case Complement::KillingOrthogonal: return "killing_orthogonal";
    case Complement::QOrthogonal: return "q_orthogonal";
    case Complement::Other: return "other";
  }
  return "other";
}

Rat HomSpaceData::triple(int i, int j, int k) const {
  TripleKey key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = triples.find(key);
  return it == triples.end() ? Rat(0) : it->second;
}

std::vector<OrderedView> ordered_views(const HomSpaceData& data) {
  std::vector<OrderedView> out;
  for (const auto& [key, value] : data.triples) {
    TripleKey perm = key;
    do {
      if (data.central.count(perm[0]) || data.central.count(perm[1])) continue;
      out.push_back({perm[0], perm[1], perm[2], value});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

int parse_index(const json& v, const std::string& where, int d) {
  if (!v.is_number_integer()) throw ValidationError(where, "expected an integer index");
  long long i = v.get<long long>();
  if (i < 1 || i > d) throw ValidationError(where, "index out of range 1.." + std::to_string(d));
  return static_cast<int>(i - 1);
}

Rat parse_rat_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) throw ValidationError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where, e.what());
  }
}

std::set<int> parse_index_set(const json& root, const std::string& key, int d) {
  std::set<int> out;
  if (!root.contains(key)) return out;
  const json& arr = root[key];
  if (!arr.is_array()) throw ValidationError("/" + key, "expected an array of indices");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    int idx = parse_index(arr[i], at("/" + key, i), d);
    if (!out.insert(idx).second) throw ValidationError(at("/" + key, i), "duplicate index");
  }
  return out;
}

}  // namespace

HomSpaceData parse_homspace(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("", "document must be a JSON object");
  static const std::set<std::string> known{"schema", "name", "d", "dims", "b", "triples", "bracket_meets_h",
                                           "h_nontrivial", "central", "complement", "expected"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) throw ValidationError("/" + key, "unknown field");

  if (!root.contains("schema") || root["schema"] != "homspace/v1")
    throw ValidationError("/schema", "expected \"homspace/v1\"");

  HomSpaceData data;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ValidationError("/name", "expected a string");
    data.name = root["name"].get<std::string>();
  }
  if (!root.contains("d") || !root["d"].is_number_integer() || root["d"].get<long long>() < 1)
    throw ValidationError("/d", "expected a positive integer");
  data.d = static_cast<int>(root["d"].get<long long>());
  const int d = data.d;

  if (!root.contains("dims") || !root["dims"].is_array() || root["dims"].size() != static_cast<std::size_t>(d))
    throw ValidationError("/dims", "expected an array of " + std::to_string(d) + " positive integers");
  for (std::size_t i = 0; i < root["dims"].size(); ++i) {
    const json& v = root["dims"][i];
    if (!v.is_number_integer() || v.get<long long>() < 1) throw ValidationError(at("/dims", i), "expected a positive integer");
    data.dims.push_back(static_cast<long>(v.get<long long>()));
  }

  if (!root.contains("b") || !root["b"].is_array() || root["b"].size() != static_cast<std::size_t>(d))
    throw ValidationError("/b", "expected an array of " + std::to_string(d) + " rationals");
  for (std::size_t i = 0; i < root["b"].size(); ++i) {
    Rat q = parse_rat_field(root["b"][i], at("/b", i));
    if (q < 0) throw ValidationError(at("/b", i), "must be nonnegative");
    data.b.push_back(q);
  }

  if (root.contains("triples")) {
    const json& arr = root["triples"];
    if (!arr.is_array()) throw ValidationError("/triples", "expected an array");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string where = at("/triples", t);
      const json& item = arr[t];
      if (!item.is_object()) throw ValidationError(where, "expected an object {ijk, value}");
      for (const auto& [key, value] : item.items())
        if (key != "ijk" && key != "value") throw ValidationError(where + "/" + key, "unknown field");
      if (!item.contains("ijk") || !item["ijk"].is_array() || item["ijk"].size() != 3)
        throw ValidationError(where + "/ijk", "expected three indices");
      TripleKey key{};
      for (std::size_t s = 0; s < 3; ++s) key[s] = parse_index(item["ijk"][s], at(where + "/ijk", s), d);
      std::sort(key.begin(), key.end());
      if (key[0] == key[2]) throw ValidationError(where + "/ijk", "an index may repeat in at most two slots");
      if (!item.contains("value")) throw ValidationError(where + "/value", "missing value");
      Rat v = parse_rat_field(item["value"], where + "/value");
      if (v <= 0) throw ValidationError(where + "/value", "structure constants must be positive");
      if (!data.triples.emplace(key, v).second) throw ValidationError(where + "/ijk", "duplicate triple");
    }
  }

  if (root.contains("bracket_meets_h")) {
    const json& arr = root["bracket_meets_h"];
    if (!arr.is_array()) throw ValidationError("/bracket_meets_h", "expected an array of index pairs");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string where = at("/bracket_meets_h", t);
      if (!arr[t].is_array() || arr[t].size() != 2) throw ValidationError(where, "expected an index pair");
      int i = parse_index(arr[t][0], where + "/0", d), j = parse_index(arr[t][1], where + "/1", d);
      data.bracket_meets_h.insert({std::min(i, j), std::max(i, j)});
    }
  }
  data.h_nontrivial = parse_index_set(root, "h_nontrivial", d);
  data.central = parse_index_set(root, "central", d);

  if (root.contains("complement")) {
    const json& c = root["complement"];
    if (c == "killing_orthogonal") data.complement = Complement::KillingOrthogonal;
    else if (c == "q_orthogonal") data.complement = Complement::QOrthogonal;
    else if (c == "other") data.complement = Complement::Other;
    else throw ValidationError("/complement", "expected killing_orthogonal, q_orthogonal or other");
  }
  if (root.contains("expected")) {
    if (!root["expected"].is_object()) throw ValidationError("/expected", "expected an object");
    data.expected_json = root["expected"].dump();
  }

  for (int i = 0; i < d; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    if (data.b[k] == 0 && !data.central.count(i))
      data.warnings.push_back("b_" + std::to_string(i + 1) + " = 0 on a non-central module");
    if (data.b[k] != 0 && data.central.count(i))
      data.warnings.push_back("central module " + std::to_string(i + 1) + " has nonzero b");
  }
  return data;
}

std::string to_json(const HomSpaceData& data) {
  ordered_json j;
  j["schema"] = "homspace/v1";
  j["name"] = data.name;
  j["d"] = data.d;
  j["dims"] = data.dims;
  auto b = ordered_json::array();
  for (const auto& q : data.b) b.push_back(to_string(q));
  j["b"] = b;
  auto triples = ordered_json::array();
  for (const auto& [key, value] : data.triples) {
    ordered_json t;
    t["ijk"] = {key[0] + 1, key[1] + 1, key[2] + 1};
    t["value"] = to_string(value);
    triples.push_back(std::move(t));
  }
  j["triples"] = triples;
  auto meets = ordered_json::array();
  for (const auto& [i, k] : data.bracket_meets_h) meets.push_back({i + 1, k + 1});
  j["bracket_meets_h"] = meets;
  auto one_based = [](const std::set<int>& s) {
    auto a = ordered_json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
  };
  j["h_nontrivial"] = one_based(data.h_nontrivial);
  j["central"] = one_based(data.central);
  j["complement"] = to_string(data.complement);
  if (!data.expected_json.empty()) j["expected"] = ordered_json::parse(data.expected_json);
  return j.dump(2);
}

std::vector<Point> weight_points(const HomSpaceData& data) {
  const std::size_t d = static_cast<std::size_t>(data.d);
  std::set<Point> pts;
  for (const auto& v : ordered_views(data)) {
    Point p(d, 0);
    ++p[static_cast<std::size_t>(v.i)];
    ++p[static_cast<std::size_t>(v.j)];
    --p[static_cast<std::size_t>(v.k)];
    pts.insert(p);
  }
  for (std::size_t r = 0; r < d; ++r)
    if (data.b[r] != 0) pts.insert(unit_vector(d, r));
  return {pts.begin(), pts.end()};
}

LatticePolytope weight_polytope(const HomSpaceData& data) {
  auto pts = weight_points(data);
  if (pts.empty()) throw DegenerateError("no weights: every b_i vanishes and there are no active triples");
  auto P = LatticePolytope::hull(pts);
  if (P.dim() != data.d - 1)
    throw DegenerateError("weight polytope has dimension " + std::to_string(P.dim()) + ", expected " +
                          std::to_string(data.d - 1));
  return P;
}

LatticePolytope kaehler_b2_polytope(int d) {
  if (d < 2 || d > 8) throw DimensionError("kaehler_b2_polytope needs 2 <= d <= 8");
  const auto n = static_cast<std::size_t>(d);
  if (d == 2) return LatticePolytope::hull({{0, 1}, {2, -1}});
  std::vector<Point> pts;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        if (i == k || j == k) continue;
        if (i + j != k && i + k != j && j + k != i) continue;
        Point p(n, 0);
        ++p[static_cast<std::size_t>(i - 1)];
        ++p[static_cast<std::size_t>(j - 1)];
        --p[static_cast<std::size_t>(k - 1)];
        pts.push_back(std::move(p));
      }
  return LatticePolytope::hull(pts);
}

namespace {

struct JordanClasses {
  int p;
  std::vector<std::pair<int, int>> reps;

  explicit JordanClasses(int prime) : p(prime) {
    std::set<std::pair<int, int>> s;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        if (a || b) s.insert(rep(a, b));
    reps.assign(s.begin(), s.end());
  }
  std::pair<int, int> rep(int a, int b) const {
    a = ((a % p) + p) % p;
    b = ((b % p) + p) % p;
    return std::min(std::make_pair(a, b), std::make_pair((p - a) % p, (p - b) % p));
  }
  int index(int a, int b) const {
    auto r = rep(a, b);
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
  }
};

}  // namespace

HomSpaceData jordan_space(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw UnsupportedError("jordan_space supports p in {2, 3, 5, 7}");
  JordanClasses cls(p);
  HomSpaceData data;
  data.name = "jordan_" + std::to_string(p);
  data.d = static_cast<int>(cls.reps.size());
  const long m = p == 2 ? 1 : 2;
  data.dims.assign(cls.reps.size(), m);
  data.b.assign(cls.reps.size(), Rat(1));
  data.complement = Complement::KillingOrthogonal;

  std::set<TripleKey> keys;
  for (int u = 0; u < data.d; ++u)
    for (int v = u + 1; v < data.d; ++v) {
      auto [a1, b1] = cls.reps[static_cast<std::size_t>(u)];
      auto [a2, b2] = cls.reps[static_cast<std::size_t>(v)];
      if (((a1 * b2 - a2 * b1) % p + p) % p == 0) continue;
      for (int sign : {1, -1}) {
        TripleKey key{u, v, cls.index(a1 + sign * a2, b1 + sign * b2)};
        std::sort(key.begin(), key.end());
        keys.insert(key);
      }
    }
  // Uniform constant fixed by sum_{j,k} [ijk] = m_i, the identity for
  // finite isotropy with the Killing-form background.
  std::vector<long> incidences(cls.reps.size(), 0);
  for (const auto& key : keys)
    for (int s : key) ++incidences[static_cast<std::size_t>(s)];
  const long per_class = incidences.front();
  if (std::any_of(incidences.begin(), incidences.end(), [&](long n) { return n != per_class; }))
    throw std::logic_error("jordan triples are not equidistributed");
  const Rat value = Rat(m) / (2 * per_class);
  for (const auto& key : keys) data.triples.emplace(key, value);
  if (p == 2) data.expected_json = R"({"nu":4,"epsilon":1,"epsilon_source":"nu - |T|"})";
  if (p == 3) data.expected_json = R"({"nu":23,"epsilon":19,"epsilon_source":"nu - |T|"})";
  return data;
}

HomSpaceData jordan_product(int p, int q) {
  HomSpaceData a = jordan_space(p), b = jordan_space(q);
  HomSpaceData out = a;
  out.name = "jordan_" + std::to_string(p) + "x" + std::to_string(q);
  out.d = a.d + b.d;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.b.insert(out.b.end(), b.b.begin(), b.b.end());
  for (const auto& [key, value] : b.triples) out.triples.emplace(TripleKey{key[0] + a.d, key[1] + a.d, key[2] + a.d}, value);
  out.expected_json.clear();
  return out;
}

HomSpaceData product_of_irreducibles(int d) {
  if (d < 1) throw DimensionError("product_of_irreducibles needs d >= 1");
  HomSpaceData data;
  data.name = "product_" + std::to_string(d);
  data.d = d;
  data.dims.assign(static_cast<std::size_t>(d), 2);
  data.b.assign(static_cast<std::size_t>(d), Rat(1));
  for (int i = 0; i < d; ++i) data.h_nontrivial.insert(i);
  data.complement = Complement::KillingOrthogonal;
  return data;
}

}  // namespace hsp
