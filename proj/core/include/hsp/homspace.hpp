#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hsp/polytope.hpp"
#include "hsp/rational.hpp"

namespace hsp {

enum class Complement { KillingOrthogonal, QOrthogonal, Other };

std::string to_string(Complement c);

// Sorted index triple (0-based) of a nonzero structure constant [ijk].
using TripleKey = std::array<int, 3>;

// Structure data of a compact homogeneous space G/H with a decomposition
// m = m_1 + ... + m_d into pairwise inequivalent irreducibles.  Indices are
// 0-based here; every external format is 1-based.
struct HomSpaceData {
  std::string name;
  int d = 0;
  std::vector<long> dims;
  std::vector<Rat> b;
  std::map<TripleKey, Rat> triples;
  std::set<std::pair<int, int>> bracket_meets_h;  // pairs {i, j} with i <= j
  std::set<int> h_nontrivial;
  std::set<int> central;
  Complement complement = Complement::Other;
  std::string expected_json;  // raw JSON of the optional annotation block
  std::vector<std::string> warnings;

  Rat triple(int i, int j, int k) const;
};

// One ordering (i, j, k) of a stored triple, contributing the weight
// e_i + e_j - e_k.  Orderings whose first two slots avoid the central
// modules are the active ones.
struct OrderedView {
  int i, j, k;
  Rat value;
};

std::vector<OrderedView> ordered_views(const HomSpaceData& data);

// Parses and validates a "homspace/v1" document.  Throws ValidationError
// carrying a JSON pointer to the offending field.
HomSpaceData parse_homspace(const std::string& text);
std::string to_json(const HomSpaceData& data);

// Lattice points of the weight polytope before taking the hull.
std::vector<Point> weight_points(const HomSpaceData& data);
// Throws DegenerateError unless the hull has dimension d - 1.
LatticePolytope weight_polytope(const HomSpaceData& data);

// Hull of e_i + e_j - e_k with i != k, j != k and i +- j +- k = 0, for
// 2 <= d <= 8; the segment [e_2, 2e_1 - e_2] when d = 2.
LatticePolytope kaehler_b2_polytope(int d);

// Spaces with finite isotropy whose modules are the classes of nonzero
// vectors of (Z_p)^2 modulo sign.
HomSpaceData jordan_space(int p);
// Two such spaces side by side with no triples between them.
HomSpaceData jordan_product(int p, int q);
// d isotropy-irreducible factors with no triples.
HomSpaceData product_of_irreducibles(int d);

}  // namespace hsp
