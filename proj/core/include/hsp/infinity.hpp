#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsp/homspace.hpp"
#include "hsp/polytope.hpp"

namespace hsp {

// Simplicial complex on {e_1, ..., e_d} given by its maximal flats
// (0-based index sets, each sorted, listed in lexicographic order).
struct FlatComplex {
  int d = 0;
  std::vector<std::vector<int>> maximal_flats;

  // Support of x (nonnegative, summing to 1) inside some flat.
  bool contains(const std::vector<Rat>& x) const;
  bool contains(const Point& x) const;
  bool is_flat(const std::vector<int>& indices) const;
};

FlatComplex flat_complex(const HomSpaceData& data);

// Whether e_j is a vertex of the weight polytope, read off the triples.
// Requires {j} to be flat.
bool flat_vertex_criterion(const HomSpaceData& data, int j);

// Hull of the vertices of delta outside |T| together with the e_j outside
// |T|.  Indices in `skip` (the central modules) contribute no e_j.
LatticePolytope delta_min(const LatticePolytope& delta, const FlatComplex& t, const std::set<int>& skip = {});

// No face of delta lies inside |T|.
bool is_admissible(const LatticePolytope& delta, const FlatComplex& t);

struct FaceTDimension {
  Face face;
  int t_dim = -1;  // dim(|T| ∩ face), -1 when empty
};

// Proper faces of delta whose intersection with |T| is at least as large as
// the face itself.
std::vector<FaceTDimension> t_dimension_violations(const LatticePolytope& delta, const FlatComplex& t);

struct B2Exponent {
  std::optional<Int> index;     // lattice index of the vertex lattice
  std::optional<int> exponent;  // log_2 of the index when it is a power of 2
};

B2Exponent b2_exponent(const LatticePolytope& delta);

std::string to_json(const FlatComplex& t);
FlatComplex flat_complex_from_json(const std::string& text, int d);

}  // namespace hsp
