#include "hsp/polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hsp/errors.hpp"
#include "hsp/matrix.hpp"

namespace hsp {

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(static_cast<int>(i));
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
  return r;
}

Point unit_vector(std::size_t d, std::size_t i) {
  Point e(d, 0);
  e.at(i) = 1;
  return e;
}

long dot(const std::vector<long>& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  return static_cast<long>(acc);
}

namespace {

std::vector<Rat> to_rat(const Point& p) { return {p.begin(), p.end()}; }

std::vector<std::vector<Rat>> differences(const std::vector<Point>& pts) {
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> r(pts[0].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = pts[i][k] - pts[0][k];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t rank_of(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows));
}

std::vector<long> to_long_vector(const std::vector<Int>& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(to_long(z));
  return out;
}

// Motzkin double description on the cone {(g, c) : <g, q_i> - c >= 0}.
// Returns the extreme rays with the set of rows tight on each.
struct Ray {
  std::vector<Int> v;
  VertexSet zero;
};

std::vector<Ray> double_description(const std::vector<std::vector<Int>>& rows, std::size_t n) {
  const std::size_t N = rows.size();
  auto eval = [&](const std::vector<Int>& row, const std::vector<Int>& v) {
    Int acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * v[k];
    return acc;
  };

  // Initial simplicial cone from n linearly independent rows.
  std::vector<std::size_t> basis;
  std::vector<std::vector<Rat>> chosen;
  for (std::size_t i = 0; i < N && basis.size() < n; ++i) {
    std::vector<Rat> r(rows[i].begin(), rows[i].end());
    chosen.push_back(r);
    if (rank_of(chosen) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis.size() < n) throw DegenerateError("point set does not span its affine hull");

  RatMatrix ab = RatMatrix::from_rows(chosen);
  RatMatrix inv = *inverse(ab);
  std::vector<Ray> rays;
  std::vector<bool> processed(N, false);
  for (auto b : basis) processed[b] = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = inv(i, j);
    Ray r{primitive_integer(col), VertexSet(N)};
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) r.zero.set(basis[k]);
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < N; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Int> s(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = eval(rows[i], rays[k].v);
      if (s[k] > 0) plus.push_back(k);
      else if (s[k] < 0) minus.push_back(k);
      else rays[k].zero.set(i);
    }
    if (minus.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (s[k] >= 0) next.push_back(rays[k]);
    for (auto p : plus) {
      for (auto m : minus) {
        VertexSet common = rays[p].zero & rays[m].zero;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == m) continue;
          if (common.subset_of(rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<Rat> comb(n);
        for (std::size_t t = 0; t < n; ++t) comb[t] = s[p] * rays[m].v[t] - s[m] * rays[p].v[t];
        Ray r{primitive_integer(comb), common};
        r.zero.set(i);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<Point>& input) {
  if (input.empty()) throw DimensionError("convex hull of an empty point set");
  const std::size_t d = input.front().size();
  if (d == 0) throw DimensionError("points must have at least one coordinate");
  for (const auto& p : input)
    if (p.size() != d) throw DimensionError("points of different dimension");

  std::vector<Point> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope P;
  P.ambient_dim_ = d;

  long s0 = std::accumulate(pts[0].begin(), pts[0].end(), 0L);
  bool graded = std::all_of(pts.begin(), pts.end(), [&](const Point& p) {
    return std::accumulate(p.begin(), p.end(), 0L) == s0;
  });
  if (graded) P.grading_ = s0;

  auto diffs = differences(pts);
  std::vector<std::size_t> pivots;
  RatMatrix dmat = diffs.empty() ? RatMatrix(1, d) : RatMatrix::from_rows(diffs);
  RatMatrix red = rref(dmat, &pivots);
  const std::size_t r = pivots.size();
  P.dim_ = static_cast<int>(r);

  for (const auto& f : nullspace(dmat)) {
    auto normal = to_long_vector(primitive_integer(f));
    P.equations_.emplace_back(normal, dot(normal, pts[0]));
  }
  std::sort(P.equations_.begin(), P.equations_.end());

  if (r == 0) {
    P.vertices_ = pts;
    return P;
  }

  const std::size_t N = pts.size();
  std::vector<std::vector<Int>> rows;
  rows.reserve(N);
  for (const auto& p : pts) {
    std::vector<Int> row;
    for (auto c : pivots) row.emplace_back(static_cast<long>(p[c]));
    row.emplace_back(-1);
    rows.push_back(std::move(row));
  }
  auto rays = double_description(rows, r + 1);

  // A point is a vertex when the facets through it meet only in it.
  std::vector<bool> is_vertex(N, false);
  for (std::size_t i = 0; i < N; ++i) {
    VertexSet meet(N);
    for (std::size_t k = 0; k < N; ++k) meet.set(k);
    for (const auto& ray : rays)
      if (ray.zero.test(i)) meet = meet & ray.zero;
    is_vertex[i] = meet.count() == 1;
  }
  std::vector<int> new_index(N, -1);
  for (std::size_t i = 0; i < N; ++i)
    if (is_vertex[i]) {
      new_index[i] = static_cast<int>(P.vertices_.size());
      P.vertices_.push_back(pts[i]);
    }

  // Orthogonal projection onto the direction space of the affine hull.
  std::vector<std::vector<Rat>> basis;
  for (std::size_t k = 0; k < r; ++k) basis.push_back(red.row(k));
  RatMatrix B = RatMatrix::from_rows(basis);
  RatMatrix gram_inv = *inverse(B * B.transpose());

  for (const auto& ray : rays) {
    std::vector<Rat> f(d, Rat(0));
    for (std::size_t k = 0; k < r; ++k) f[pivots[k]] = ray.v[k];
    std::vector<Rat> bf(r, Rat(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < d; ++j) bf[k] += B(k, j) * f[j];
    std::vector<Rat> coef(r, Rat(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) coef[k] += gram_inv(k, j) * bf[j];
    std::vector<Rat> fl(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < r; ++k) fl[j] += coef[k] * B(k, j);

    const Point& tight = pts[static_cast<std::size_t>(ray.zero.members().front())];
    Rat cl = 0;
    for (std::size_t j = 0; j < d; ++j) cl += fl[j] * tight[j];
    if (graded && s0 != 0) {
      Rat t = cl / s0;
      for (auto& x : fl) x -= t;
    }
    Facet facet;
    facet.normal = to_long_vector(primitive_integer(fl));
    facet.offset = dot(facet.normal, tight);
    facet.vertices = VertexSet(P.vertices_.size());
    for (int i : ray.zero.members())
      if (new_index[static_cast<std::size_t>(i)] >= 0) facet.vertices.set(static_cast<std::size_t>(new_index[static_cast<std::size_t>(i)]));
    P.facets_.push_back(std::move(facet));
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return P;
}

bool LatticePolytope::contains(const std::vector<Rat>& x) const {
  if (x.size() != ambient_dim_) throw DimensionError("point dimension differs from the polytope's");
  auto eval = [&](const std::vector<long>& n) {
    Rat acc = 0;
    for (std::size_t i = 0; i < n.size(); ++i) acc += x[i] * n[i];
    return acc;
  };
  for (const auto& [n, off] : equations_)
    if (eval(n) != off) return false;
  for (const auto& f : facets_)
    if (eval(f.normal) < f.offset) return false;
  return true;
}

bool LatticePolytope::contains(const Point& x) const {
  if (x.size() != ambient_dim_) throw DimensionError("point dimension differs from the polytope's");
  for (const auto& [n, off] : equations_)
    if (dot(n, x) != off) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool LatticePolytope::contains_polytope(const LatticePolytope& q) const {
  return std::all_of(q.vertices_.begin(), q.vertices_.end(), [&](const Point& v) { return contains(v); });
}

bool LatticePolytope::on_face(const Face& face, const Point& x) const {
  if (!contains(x)) return false;
  for (int id : face.facet_ids) {
    const auto& f = facets_.at(static_cast<std::size_t>(id));
    if (dot(f.normal, x) != f.offset) return false;
  }
  return true;
}

namespace {

std::mutex lattice_mutex;

std::shared_ptr<const FaceLattice> build_lattice(const LatticePolytope& P) {
  auto L = std::make_shared<FaceLattice>();
  const int dim = P.dim();
  const std::size_t nv = P.vertices().size();
  L->levels.resize(static_cast<std::size_t>(dim) + 1);
  L->children.resize(static_cast<std::size_t>(dim) + 1);
  VertexSet all(nv);
  for (std::size_t i = 0; i < nv; ++i) all.set(i);
  L->levels[static_cast<std::size_t>(dim)] = {all};
  if (dim == 0) {
    L->children[0] = {{}};
    return L;
  }

  std::vector<VertexSet> facet_sets;
  for (const auto& f : P.facets()) facet_sets.push_back(f.vertices);
  {
    std::set<VertexSet> uniq(facet_sets.begin(), facet_sets.end());
    L->levels[static_cast<std::size_t>(dim - 1)].assign(uniq.begin(), uniq.end());
  }
  std::vector<int> top;
  for (std::size_t i = 0; i < L->levels[static_cast<std::size_t>(dim - 1)].size(); ++i) top.push_back(static_cast<int>(i));
  L->children[static_cast<std::size_t>(dim)] = {top};

  for (int k = dim - 1; k >= 1; --k) {
    const auto& level = L->levels[static_cast<std::size_t>(k)];
    std::vector<std::vector<VertexSet>> sub(level.size());
    std::set<VertexSet> below;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const VertexSet& F = level[i];
      std::set<VertexSet> cand;
      for (const auto& G : facet_sets) {
        VertexSet m = F & G;
        if (m.empty() || m == F) continue;
        cand.insert(m);
      }
      for (const auto& c : cand) {
        bool maximal = true;
        for (const auto& o : cand)
          if (!(o == c) && c.subset_of(o)) {
            maximal = false;
            break;
          }
        if (maximal) {
          sub[i].push_back(c);
          below.insert(c);
        }
      }
    }
    auto& lower = L->levels[static_cast<std::size_t>(k - 1)];
    lower.assign(below.begin(), below.end());
    std::map<VertexSet, int> index;
    for (std::size_t j = 0; j < lower.size(); ++j) index[lower[j]] = static_cast<int>(j);
    auto& ch = L->children[static_cast<std::size_t>(k)];
    ch.resize(level.size());
    for (std::size_t i = 0; i < level.size(); ++i)
      for (const auto& c : sub[i]) ch[i].push_back(index.at(c));
  }
  L->children[0].assign(L->levels[0].size(), {});
  return L;
}

Face make_face(const LatticePolytope& P, const VertexSet& s, int dim) {
  Face f;
  f.dim = dim;
  f.vertex_ids = s.members();
  for (int v : f.vertex_ids) f.points.push_back(P.vertices()[static_cast<std::size_t>(v)]);
  std::vector<Rat> sum(P.ambient_dim(), Rat(0));
  for (std::size_t i = 0; i < P.facets().size(); ++i) {
    const auto& facet = P.facets()[i];
    if (!s.subset_of(facet.vertices)) continue;
    f.facet_ids.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += facet.normal[j];
  }
  f.normal = to_long_vector(primitive_integer(sum));
  f.offset = f.points.empty() ? 0 : dot(f.normal, f.points.front());
  return f;
}

}  // namespace

const FaceLattice& LatticePolytope::face_lattice() const {
  std::lock_guard<std::mutex> lock(lattice_mutex);
  if (!lattice_) lattice_ = build_lattice(*this);
  return *lattice_;
}

std::vector<Face> LatticePolytope::faces(int k) const {
  if (k < 0 || k >= dim_) throw DimensionError("face dimension out of range");
  std::vector<Face> out;
  for (const auto& s : face_lattice().levels[static_cast<std::size_t>(k)]) out.push_back(make_face(*this, s, k));
  return out;
}

std::vector<std::vector<Face>> LatticePolytope::all_proper_faces() const {
  std::vector<std::vector<Face>> out;
  for (int k = 0; k < dim_; ++k) out.push_back(faces(k));
  return out;
}

Face LatticePolytope::whole() const {
  return make_face(*this, face_lattice().levels[static_cast<std::size_t>(dim_)][0], dim_);
}

std::size_t face_count(const LatticePolytope& p, int k) {
  if (k < 0 || k > p.dim()) throw DimensionError("face dimension out of range");
  return p.face_lattice().levels[static_cast<std::size_t>(k)].size();
}

std::vector<std::vector<int>> pulling_triangulation(const LatticePolytope& P) {
  const auto& L = P.face_lattice();
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(int, int)> tri = [&](int k, int i) -> const std::vector<std::vector<int>>& {
    auto key = std::make_pair(k, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const VertexSet& F = L.levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    std::vector<std::vector<int>> out;
    int apex = F.members().front();
    if (k == 0) {
      out.push_back({apex});
    } else {
      for (int c : L.children[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) {
        if (L.levels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)].test(static_cast<std::size_t>(apex))) continue;
        for (const auto& s : tri(k - 1, c)) {
          auto t = s;
          t.insert(t.begin(), apex);
          out.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return tri(P.dim(), 0);
}

Int normalized_volume(const LatticePolytope& P) {
  if (!P.grading() || *P.grading() != 1)
    throw DegenerateError("normalized volume needs a polytope in the hyperplane of coordinate sum 1");
  const std::size_t d = P.ambient_dim();
  if (P.dim() != static_cast<int>(d) - 1) return 0;
  if (d == 1) return 1;
  Int total = 0;
  for (const auto& simplex : pulling_triangulation(P)) {
    const Point& v0 = P.vertices()[static_cast<std::size_t>(simplex[0])];
    std::vector<std::vector<Int>> m;
    for (std::size_t k = 1; k < simplex.size(); ++k) {
      const Point& v = P.vertices()[static_cast<std::size_t>(simplex[k])];
      std::vector<Int> row;
      for (std::size_t j = 0; j + 1 < d; ++j) row.emplace_back(static_cast<long>(v[j] - v0[j]));
      m.push_back(std::move(row));
    }
    total += abs(det_int(std::move(m)));
  }
  return total;
}

std::vector<Point> lattice_points(const LatticePolytope& P) {
  const std::size_t d = P.ambient_dim();
  Point lo = P.vertices().front(), hi = lo;
  for (const auto& v : P.vertices())
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  const bool graded = P.grading().has_value();
  const std::size_t free = graded ? d - 1 : d;
  std::vector<Point> out;
  Point x = lo;
  while (true) {
    bool ok = true;
    if (graded) {
      long rest = *P.grading();
      for (std::size_t j = 0; j < free; ++j) rest -= x[j];
      x[d - 1] = rest;
      ok = rest >= lo[d - 1] && rest <= hi[d - 1];
    }
    if (ok && P.contains(x)) out.push_back(x);
    std::size_t j = 0;
    while (j < free && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == free) break;
    ++x[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_dual_cone(const LatticePolytope& P, const std::vector<Rat>& y) {
  if (y.size() != P.ambient_dim()) throw DimensionError("dual vector dimension differs from the polytope's");
  for (const auto& v : P.vertices()) {
    Rat acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += y[j] * v[j];
    if (acc < 0) return false;
  }
  return true;
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  return static_cast<int>(rank_of(differences(points)));
}

bool in_affine_span(const std::vector<Point>& points, const Point& x) {
  if (points.empty()) return false;
  auto rows = differences(points);
  std::size_t r = rank_of(rows);
  std::vector<Rat> dx(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) dx[k] = x[k] - points[0][k];
  rows.push_back(dx);
  return rank_of(rows) == r;
}

std::optional<Point> is_pyramid(const Face& face) {
  if (face.dim < 1) throw DimensionError("pyramid test needs a face of dimension at least 1");
  for (std::size_t a = 0; a < face.points.size(); ++a) {
    std::vector<Point> base;
    for (std::size_t k = 0; k < face.points.size(); ++k)
      if (k != a) base.push_back(face.points[k]);
    if (affine_dimension(base) == face.dim - 1) return face.points[a];
  }
  return std::nullopt;
}

std::optional<std::vector<Rat>> is_cross_polytope(const Face& face) {
  const std::size_t k = static_cast<std::size_t>(face.dim);
  if (k < 1 || face.points.size() != 2 * k) return std::nullopt;
  const std::size_t d = face.points.front().size();
  std::vector<Rat> centre(d, Rat(0));
  for (const auto& p : face.points)
    for (std::size_t j = 0; j < d; ++j) centre[j] += p[j];
  for (auto& c : centre) c /= static_cast<long>(2 * k);
  std::set<Point> verts(face.points.begin(), face.points.end());
  std::vector<std::vector<Rat>> axes;
  for (const auto& p : face.points) {
    Point q(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = 2 * centre[j] - p[j];
      if (!is_integer(v)) return std::nullopt;
      q[j] = v.get_num().get_si();
    }
    if (!verts.count(q)) return std::nullopt;
    if (p < q) {
      std::vector<Rat> axis(d);
      for (std::size_t j = 0; j < d; ++j) axis[j] = p[j] - q[j];
      axes.push_back(std::move(axis));
    }
  }
  if (axes.size() != k || rank_of(axes) != k) return std::nullopt;
  return centre;
}

LatticePolytope permutohedron(std::size_t d) {
  if (d < 2) throw DimensionError("permutohedron needs d >= 2");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      Point p(d, 0);
      p[i] = 2;
      p[j] = -1;
      pts.push_back(std::move(p));
    }
  return LatticePolytope::hull(pts);
}

std::string format_point(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ")";
  return out.str();
}

std::string to_json(const LatticePolytope& P) {
  nlohmann::ordered_json j;
  j["dim"] = P.dim();
  j["vertices"] = P.vertices();
  auto facets = nlohmann::ordered_json::array();
  for (const auto& f : P.facets()) {
    nlohmann::ordered_json fj;
    fj["normal"] = f.normal;
    fj["offset"] = f.offset;
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  return j.dump(2);
}

LatticePolytope polytope_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("", "polytope must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "dim" && key != "vertices" && key != "facets") throw ValidationError("/" + key, "unknown field");
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw ValidationError("/vertices", "expected a nonempty array of integer vectors");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& v = j["vertices"][i];
    if (!v.is_array()) throw ValidationError("/vertices/" + std::to_string(i), "expected an integer vector");
    Point p;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_number_integer())
        throw ValidationError("/vertices/" + std::to_string(i) + "/" + std::to_string(k), "expected an integer");
      p.push_back(v[k].get<long>());
    }
    pts.push_back(std::move(p));
  }
  LatticePolytope P;
  try {
    P = LatticePolytope::hull(pts);
  } catch (const DimensionError& e) {
    throw ValidationError("/vertices", e.what());
  }
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<int>() != P.dim()))
    throw ValidationError("/dim", "does not match the dimension of the vertex hull");
  if (P.vertices().size() != pts.size()) throw ValidationError("/vertices", "contains points that are not vertices");
  if (j.contains("facets")) {
    const auto& fs = j["facets"];
    bool same = fs.is_array() && fs.size() == P.facets().size();
    for (std::size_t i = 0; same && i < fs.size(); ++i) {
      const auto& f = fs[i];
      same = f.is_object() && f.contains("normal") && f.contains("offset") &&
             f["normal"].get<std::vector<long>>() == P.facets()[i].normal &&
             f["offset"].get<long>() == P.facets()[i].offset;
    }
    if (!same) throw ValidationError("/facets", "facets do not match the hull of the vertices");
  }
  return P;
}

}  // namespace hsp
