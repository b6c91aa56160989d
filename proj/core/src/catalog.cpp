#include "hsp/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hsp {

namespace {

// Fixtures given in homspace/v1 form.  Every entry goes through the same
// parser and validation as user input.
const std::map<std::string, const char*>& documents() {
  static const std::map<std::string, const char*> docs{
      {"su3_t2", R"({
        "schema": "homspace/v1", "name": "su3_t2", "d": 3,
        "dims": [2, 2, 2], "b": ["1", "1", "1"],
        "triples": [{"ijk": [1, 2, 3], "value": "1/3"}],
        "h_nontrivial": [1, 2, 3], "complement": "killing_orthogonal",
        "expected": {"nu": 4, "complex_solutions": 4, "positive_solutions": 4, "connected_group": true}
      })"},
      {"wang_ziller_killing", R"({
        "schema": "homspace/v1", "name": "wang_ziller_killing", "d": 3,
        "dims": [2, 2, 1], "b": ["1", "1", "0"],
        "triples": [{"ijk": [1, 1, 3], "value": "1/4"}, {"ijk": [2, 2, 3], "value": "1/4"}],
        "h_nontrivial": [1, 2], "central": [3], "complement": "killing_orthogonal",
        "expected": {"nu": 3, "complex_solutions": 3, "connected_group": true}
      })"},
      {"wang_ziller_q", R"({
        "schema": "homspace/v1", "name": "wang_ziller_q", "d": 3,
        "dims": [2, 2, 1], "b": ["1", "1", "1/2"],
        "triples": [{"ijk": [1, 1, 3], "value": "1/4"}, {"ijk": [2, 2, 3], "value": "1/4"}],
        "h_nontrivial": [1, 2], "complement": "q_orthogonal",
        "expected": {"nu": 3, "connected_group": true}
      })"},
      {"sphere_u", R"({
        "schema": "homspace/v1", "name": "sphere_u", "d": 2,
        "dims": [1, 2], "b": ["1/2", "1"],
        "triples": [{"ijk": [1, 2, 2], "value": "1/2"}],
        "h_nontrivial": [2], "complement": "q_orthogonal",
        "expected": {"nu": 1, "connected_group": true}
      })"},
      {"e8_t1_a3_a4", R"({
        "schema": "homspace/v1", "name": "e8_t1_a3_a4", "d": 5,
        "dims": [80, 60, 40, 20, 8], "b": ["1", "1", "1", "1", "1"],
        "triples": [
          {"ijk": [1, 1, 2], "value": "12"}, {"ijk": [1, 2, 3], "value": "8"},
          {"ijk": [1, 3, 4], "value": "4"}, {"ijk": [1, 4, 5], "value": "4/3"},
          {"ijk": [2, 2, 4], "value": "4"}, {"ijk": [2, 3, 5], "value": "2"}],
        "h_nontrivial": [1, 2, 3, 4, 5], "complement": "killing_orthogonal",
        "expected": {"nu": 82, "epsilon": 81, "epsilon_source": "external computation",
                     "marked_faces": 13, "connected_group": true}
      })"},
      {"e8_t1_a4_a2_a1", R"({
        "schema": "homspace/v1", "name": "e8_t1_a4_a2_a1", "d": 6,
        "dims": [60, 60, 40, 30, 12, 10], "b": ["1", "1", "1", "1", "1", "1"],
        "triples": [
          {"ijk": [1, 1, 2], "value": "8"}, {"ijk": [1, 2, 3], "value": "6"},
          {"ijk": [1, 3, 4], "value": "4"}, {"ijk": [1, 4, 5], "value": "2"},
          {"ijk": [1, 5, 6], "value": "1"}, {"ijk": [2, 2, 4], "value": "6"},
          {"ijk": [2, 3, 5], "value": "2"}, {"ijk": [2, 4, 6], "value": "2"},
          {"ijk": [3, 3, 6], "value": "2"}],
        "h_nontrivial": [1, 2, 3, 4, 5, 6], "complement": "killing_orthogonal",
        "expected": {"nu": 344, "marked_faces": 40, "connected_group": true}
      })"},
  };
  return docs;
}

const std::map<std::string, std::function<HomSpaceData()>>& generated() {
  static const std::map<std::string, std::function<HomSpaceData()>> gens{
      {"product_2", [] { return product_of_irreducibles(2); }},
      {"product_3", [] { return product_of_irreducibles(3); }},
      {"product_4", [] { return product_of_irreducibles(4); }},
      {"jordan_2", [] { return jordan_space(2); }},
      {"jordan_3", [] { return jordan_space(3); }},
      {"jordan_5", [] { return jordan_space(5); }},
      {"jordan_7", [] { return jordan_space(7); }},
      {"jordan_2x2", [] { return jordan_product(2, 2); }},
      {"jordan_2x3", [] { return jordan_product(2, 3); }},
      {"jordan_3x3", [] { return jordan_product(3, 3); }},
  };
  return gens;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, doc] : documents()) names.push_back(name);
  for (const auto& [name, gen] : generated()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

HomSpaceData catalog_entry(const std::string& name_or_alias) {
  static const std::map<std::string, std::string> aliases{{"wang_ziller", "wang_ziller_killing"},
                                                          {"su3", "su3_t2"}};
  const auto alias = aliases.find(name_or_alias);
  const std::string& name = alias == aliases.end() ? name_or_alias : alias->second;
  if (auto it = documents().find(name); it != documents().end()) return parse_homspace(it->second);
  if (auto it = generated().find(name); it != generated().end()) return it->second();
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

}  // namespace hsp
