#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsp/rational.hpp"

namespace hsp {

using Point = std::vector<long>;

// Set of vertex indices, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : bits_((n + 63) / 64, 0), n_(n) {}

  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const;
  std::size_t universe() const { return n_; }
  bool empty() const { return count() == 0; }
  bool subset_of(const VertexSet& o) const;
  std::vector<int> members() const;

  VertexSet operator&(const VertexSet& o) const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t n_ = 0;
};

// Inequality <normal, x> >= offset, tight exactly on `vertices`.
struct Facet {
  std::vector<long> normal;
  long offset = 0;
  VertexSet vertices;
};

// A face of a lattice polytope.  Carries its own vertex coordinates so that
// face-local predicates need no access to the owner.
struct Face {
  int dim = 0;
  std::vector<int> vertex_ids;  // indices into the owner's vertex list
  std::vector<Point> points;    // the corresponding coordinates
  std::vector<int> facet_ids;   // owner facets containing the face
  std::vector<long> normal;  // primitive sum of the containing facet normals
  long offset = 0;           // value of `normal` on the face
};

struct FaceLattice;

// Convex hull of finitely many lattice points in Z^d.  Vertices are sorted
// lexicographically and facets by normal.  For graded point sets (constant
// nonzero coordinate sum) the facet normals are chosen with offset 0.
class LatticePolytope {
 public:
  static LatticePolytope hull(const std::vector<Point>& points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // Affine hull as equations <normal, x> = offset.
  const std::vector<std::pair<std::vector<long>, long>>& equations() const { return equations_; }
  // Common coordinate sum of all points, when there is one.
  std::optional<long> grading() const { return grading_; }

  bool contains(const std::vector<Rat>& x) const;
  bool contains(const Point& x) const;
  bool contains_polytope(const LatticePolytope& q) const;

  // Whether x lies in P and on every facet containing the face.
  bool on_face(const Face& face, const Point& x) const;

  const FaceLattice& face_lattice() const;
  // All faces of dimension k, 0 <= k < dim.
  std::vector<Face> faces(int k) const;
  std::vector<std::vector<Face>> all_proper_faces() const;
  Face whole() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::pair<std::vector<long>, long>> equations_;
  std::optional<long> grading_;
  mutable std::shared_ptr<const FaceLattice> lattice_;
};

// Faces indexed level by level: level k holds the k-dimensional faces,
// level dim holds P itself.  `children[k][i]` lists the (k-1)-faces of face
// i at level k.
struct FaceLattice {
  std::vector<std::vector<VertexSet>> levels;
  std::vector<std::vector<std::vector<int>>> children;
};

std::size_t face_count(const LatticePolytope& p, int k);

// (d-1)! times the Euclidean volume in the chart that drops the last
// coordinate.  P must lie in the hyperplane of coordinate sum 1; returns 0
// when P is not full-dimensional there.
Int normalized_volume(const LatticePolytope& p);

// Simplices of the pulling triangulation, as vertex-index lists.
std::vector<std::vector<int>> pulling_triangulation(const LatticePolytope& p);

// All lattice points of P.
std::vector<Point> lattice_points(const LatticePolytope& p);

// <v, y> >= 0 for every vertex v.
bool in_dual_cone(const LatticePolytope& p, const std::vector<Rat>& y);

// Lexicographically least apex over which the face is a pyramid.
std::optional<Point> is_pyramid(const Face& face);
// Centre of the face when it is a cross-polytope.
std::optional<std::vector<Rat>> is_cross_polytope(const Face& face);

// Hull of all permutations of (2, 0, ..., 0, -1) in Z^d.
LatticePolytope permutohedron(std::size_t d);

Point unit_vector(std::size_t d, std::size_t i);
long dot(const std::vector<long>& a, const Point& b);
int affine_dimension(const std::vector<Point>& points);
// Whether x lies in the affine span of `points`.
bool in_affine_span(const std::vector<Point>& points, const Point& x);

std::string to_json(const LatticePolytope& p);
// Reads {"dim", "vertices", "facets"}; the hull is recomputed from the
// vertices.  Throws ValidationError on malformed input.
LatticePolytope polytope_from_json(const std::string& text);

std::string format_point(const Point& p);

}  // namespace hsp
