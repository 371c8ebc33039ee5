#include "polycurv/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "detail_nnls.hpp"
#include "polycurv/errors.hpp"

namespace polycurv {

namespace {

constexpr double kGeomTol = 1e-9;
constexpr double kCollinearTol = 1e-12;

using Eigen::Vector3d;

Mat columns(const std::vector<Vec>& v) {
  Mat m(v.empty() ? 0 : v.front().size(), static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = v[static_cast<size_t>(j)];
  return m;
}

int matrix_rank(const Mat& m, double tol = 1e-10) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

std::vector<Vec> dedupe_points(const std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : out)
      if ((p - q).norm() < tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

// --- 2D helpers -----------------------------------------------------------

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

// Andrew monotone chain; returns hull points in counterclockwise order.
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area_2d(const std::vector<Vec>& loop) {
  double a = 0.0;
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec& p = loop[i];
    const Vec& q = loop[(i + 1) % n];
    a += p(0) * q(1) - q(0) * p(1);
  }
  return 0.5 * std::abs(a);
}

// Sutherland-Hodgman clip of a convex loop against {n.x <= c}.
// `survivor` receives some point of the clipped set even when the polygon
// collapses (used to distinguish empty from touching intersections).
std::vector<Vec> clip_polygon(const std::vector<Vec>& loop, const Vec& n, double c,
                              std::optional<Vec>* survivor) {
  std::vector<Vec> out;
  const size_t m = loop.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec& a = loop[i];
    const Vec& b = loop[(i + 1) % m];
    const double da = n.dot(a) - c;
    const double db = n.dot(b) - c;
    if (da <= kGeomTol) {
      out.push_back(a);
      if (survivor && !survivor->has_value()) *survivor = a;
    }
    if ((da > kGeomTol && db < -kGeomTol) || (da < -kGeomTol && db > kGeomTol)) {
      const double t = da / (da - db);
      Vec x = a + t * (b - a);
      out.push_back(x);
      if (survivor && !survivor->has_value()) *survivor = x;
    }
  }
  // drop consecutive duplicates
  std::vector<Vec> clean;
  for (const Vec& p : out) {
    if (clean.empty() || (p - clean.back()).norm() > kGeomTol) clean.push_back(p);
  }
  while (clean.size() > 1 && (clean.front() - clean.back()).norm() <= kGeomTol)
    clean.pop_back();
  return clean;
}

// --- 3D mesh helpers ------------------------------------------------------

struct Mesh3 {
  std::vector<std::vector<Vector3d>> faces;
};

Vector3d to3(const Vec& v) { return Vector3d(v(0), v(1), v(2)); }

Vector3d newell_normal(const std::vector<Vector3d>& loop) {
  Vector3d n = Vector3d::Zero();
  const size_t m = loop.size();
  for (size_t i = 0; i < m; ++i) {
    const Vector3d& a = loop[i];
    const Vector3d& b = loop[(i + 1) % m];
    n += a.cross(b);
  }
  return 0.5 * n;
}

void clip_mesh(Mesh3& mesh, const Vector3d& n, double c,
               std::optional<Vector3d>* survivor) {
  std::vector<std::vector<Vector3d>> kept;
  std::vector<Vector3d> section;
  bool cut = false;  // whether any vertex was strictly outside
  for (const auto& poly : mesh.faces) {
    std::vector<Vector3d> out;
    const size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
      const Vector3d& a = poly[i];
      const Vector3d& b = poly[(i + 1) % m];
      const double da = n.dot(a) - c;
      const double db = n.dot(b) - c;
      if (da > kGeomTol) cut = true;
      if (da <= kGeomTol) {
        out.push_back(a);
        if (std::abs(da) <= kGeomTol) section.push_back(a);
      }
      if ((da > kGeomTol && db < -kGeomTol) || (da < -kGeomTol && db > kGeomTol)) {
        const double t = da / (da - db);
        const Vector3d x = a + t * (b - a);
        out.push_back(x);
        section.push_back(x);
      }
    }
    std::vector<Vector3d> clean;
    for (const auto& p : out)
      if (clean.empty() || (p - clean.back()).norm() > kGeomTol) clean.push_back(p);
    while (clean.size() > 1 && (clean.front() - clean.back()).norm() <= kGeomTol)
      clean.pop_back();
    if (survivor && !survivor->has_value() && !clean.empty()) *survivor = clean.front();
    if (clean.size() >= 3) kept.push_back(std::move(clean));
  }
  // cap polygon on the cutting plane; only needed if the plane cut the mesh
  std::vector<Vector3d> cap;
  if (!cut) section.clear();
  for (const auto& p : section) {
    bool dup = false;
    for (const auto& q : cap)
      if ((p - q).norm() < 10 * kGeomTol) {
        dup = true;
        break;
      }
    if (!dup) cap.push_back(p);
  }
  if (cap.size() >= 3) {
    Vector3d centroid = Vector3d::Zero();
    for (const auto& p : cap) centroid += p;
    centroid /= static_cast<double>(cap.size());
    // order around the plane normal
    Vector3d ref = cap.front() - centroid;
    if (ref.norm() < kGeomTol) ref = Vector3d::UnitX();
    ref = (ref - ref.dot(n) * n / n.squaredNorm()).normalized();
    const Vector3d ref2 = n.normalized().cross(ref);
    std::sort(cap.begin(), cap.end(), [&](const Vector3d& a, const Vector3d& b) {
      const Vector3d pa = a - centroid, pb = b - centroid;
      return std::atan2(pa.dot(ref2), pa.dot(ref)) <
             std::atan2(pb.dot(ref2), pb.dot(ref));
    });
    if (newell_normal(cap).norm() > kGeomTol * kGeomTol) kept.push_back(std::move(cap));
  }
  mesh.faces = std::move(kept);
}

Mesh3 mesh_from_polytope(const Polytope& p, const Vec& shift) {
  Mesh3 mesh;
  for (const Face& f : p.faces(2)) {
    std::vector<Vector3d> poly;
    for (int id : f.loop) poly.push_back(to3(p.vertices()[static_cast<size_t>(id)] + shift));
    mesh.faces.push_back(std::move(poly));
  }
  return mesh;
}

}  // namespace

// --- PolyhedralCone -------------------------------------------------------

int PolyhedralCone::dim() const {
  if (generators.empty()) return 0;
  return matrix_rank(columns(generators));
}

bool PolyhedralCone::is_pointed() const {
  if (generators.size() < 2) return true;
  const Eigen::Index d = generators.front().size();
  Mat a(d + 1, static_cast<Eigen::Index>(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) {
    a.col(static_cast<Eigen::Index>(j)).head(d) = generators[j].normalized();
    a(d, static_cast<Eigen::Index>(j)) = 1.0;
  }
  Vec b = Vec::Zero(d + 1);
  b(d) = 1.0;
  // 0 in conv{unit generators} iff the cone contains a line
  return detail::nnls_residual(a, b) > 1e-9;
}

bool PolyhedralCone::contains(const Vec& u, double tol) const {
  if (u.norm() < tol) return true;
  if (generators.empty()) return false;
  return detail::nnls_residual(columns(generators), u) <= tol * std::max(1.0, u.norm());
}

std::vector<Vec> PolyhedralCone::span_basis() const {
  return Subspace::from_span(dim_ambient, generators).basis;
}

std::vector<Vec> PolyhedralCone::extreme_rays() const {
  std::vector<Vec> gens;
  for (const Vec& g : generators) {
    const double n = g.norm();
    if (n < 1e-12) continue;
    Vec u = g / n;
    bool dup = false;
    for (const Vec& h : gens)
      if ((u - h).norm() < 1e-10) {
        dup = true;
        break;
      }
    if (!dup) gens.push_back(std::move(u));
  }
  if (gens.size() <= 1) return gens;
  std::vector<Vec> extreme;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (detail::nnls_residual(columns(others), gens[i]) > 1e-9)
      extreme.push_back(gens[i]);
  }
  return extreme;
}

std::vector<Halfspace> PolyhedralCone::halfspaces() const {
  const int d = dim_ambient;
  if (d > 3) throw ValidationError("cone halfspaces: ambient dimension > 3");
  if (dim() != d) throw ValidationError("cone halfspaces: cone not full-dimensional");
  if (!is_pointed()) throw NonPointedCone("cone halfspaces: cone contains a line");
  const std::vector<Vec> rays = extreme_rays();
  std::vector<Halfspace> out;
  auto add = [&](Vec n) {
    n.normalize();
    for (const Halfspace& h : out)
      if ((h.normal - n).norm() < 1e-10) return;
    out.push_back({std::move(n), 0.0});
  };
  if (d == 2) {
    for (const Vec& r : rays) {
      Vec n(2);
      n << -r(1), r(0);
      double side = 0.0;
      for (const Vec& g : generators) side += n.dot(g);
      if (side > 0) n = -n;
      bool valid = true;
      for (const Vec& g : generators)
        if (n.dot(g) > 1e-10) valid = false;
      if (valid) add(n);
    }
  } else {
    for (size_t i = 0; i < rays.size(); ++i)
      for (size_t j = i + 1; j < rays.size(); ++j) {
        Vector3d n3 = to3(rays[i]).cross(to3(rays[j]));
        if (n3.norm() < 1e-12) continue;
        Vec n(3);
        n << n3(0), n3(1), n3(2);
        bool neg = true, pos = true;
        for (const Vec& g : generators) {
          const double s = n.dot(g);
          if (s > 1e-10) neg = false;
          if (s < -1e-10) pos = false;
        }
        if (neg)
          add(n);
        else if (pos)
          add(-n);
      }
  }
  return out;
}

PolyhedralCone cone_sum(const std::vector<PolyhedralCone>& cones) {
  PolyhedralCone out;
  for (const auto& k : cones) {
    if (out.dim_ambient == 0) out.dim_ambient = k.dim_ambient;
    for (const Vec& g : k.generators) {
      const double n = g.norm();
      if (n < 1e-12) continue;
      Vec u = g / n;
      bool dup = false;
      for (const Vec& h : out.generators)
        if ((u - h).norm() < 1e-12) {
          dup = true;
          break;
        }
      if (!dup) out.generators.push_back(std::move(u));
    }
  }
  return out;
}

// --- SpatialRegion --------------------------------------------------------

SpatialRegion SpatialRegion::all() { return SpatialRegion(); }

SpatialRegion SpatialRegion::box(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size()) throw ValidationError("box: dimension mismatch");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (lo(i) > hi(i)) throw ValidationError("box: lo > hi");
  SpatialRegion r;
  r.kind_ = Kind::Box;
  r.lo_ = lo;
  r.hi_ = hi;
  const Eigen::Index d = lo.size();
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e(i) = 1.0;
    r.halfspaces_.push_back({e, hi(i)});
    r.halfspaces_.push_back({-e, -lo(i)});
  }
  return r;
}

SpatialRegion SpatialRegion::polytopal(const Polytope& p) {
  SpatialRegion r;
  r.kind_ = Kind::Polytopal;
  r.halfspaces_ = p.facet_halfspaces();
  return r;
}

SpatialRegion SpatialRegion::intersection(const std::vector<SpatialRegion>& parts) {
  SpatialRegion r;
  for (const SpatialRegion& p : parts) {
    if (p.kind_ == Kind::All) continue;
    r.kind_ = Kind::Polytopal;
    r.halfspaces_.insert(r.halfspaces_.end(), p.halfspaces_.begin(), p.halfspaces_.end());
  }
  return r;
}

bool SpatialRegion::contains(const Vec& x, double tol) const {
  for (const Halfspace& h : halfspaces_)
    if (h.normal.dot(x) > h.offset + tol) return false;
  return true;
}

SpatialRegion SpatialRegion::translated(const Vec& z) const {
  SpatialRegion r = *this;
  if (kind_ == Kind::Box) {
    r.lo_ += z;
    r.hi_ += z;
  }
  for (Halfspace& h : r.halfspaces_) h.offset += h.normal.dot(z);
  return r;
}

SpatialRegion SpatialRegion::rotated(const Mat& m) const {
  SpatialRegion r = *this;
  if (kind_ == Kind::Box) r.kind_ = Kind::Polytopal;
  for (Halfspace& h : r.halfspaces_) h.normal = m * h.normal;
  return r;
}

SpatialRegion SpatialRegion::scaled(double lambda) const {
  if (lambda <= 0) throw ValidationError("region scale must be positive");
  SpatialRegion r = *this;
  if (kind_ == Kind::Box) {
    r.lo_ *= lambda;
    r.hi_ *= lambda;
  }
  for (Halfspace& h : r.halfspaces_) h.offset *= lambda;
  return r;
}

// --- Polytope -------------------------------------------------------------

const std::vector<Face>& Polytope::faces(int j) const {
  if (j < 0 || j > dim_) throw ValidationError("faces: dimension out of range");
  return faces_by_dim_[static_cast<size_t>(j)];
}

void Polytope::build_face_geometry() {
  for (auto& level : faces_by_dim_) {
    for (Face& f : level) {
      Vec c = Vec::Zero(dim_);
      for (int id : f.vertex_ids) c += vertices_[static_cast<size_t>(id)];
      c /= static_cast<double>(f.vertex_ids.size());
      f.affine_point = c;
      if (f.dim == 0) {
        f.direction_basis.clear();
        continue;
      }
      std::vector<Vec> diffs;
      const Vec& p0 = vertices_[static_cast<size_t>(f.vertex_ids.front())];
      for (size_t i = 1; i < f.vertex_ids.size(); ++i)
        diffs.push_back(vertices_[static_cast<size_t>(f.vertex_ids[i])] - p0);
      f.direction_basis = Subspace::from_span(dim_, diffs).basis;
    }
  }
}

Polytope Polytope::from_polygon_loop(std::vector<Vec> loop) {
  if (loop.size() < 3) throw DegenerateInput("polygon: fewer than 3 vertices");
  if (polygon_area_2d(loop) < 1e-12) throw DegenerateInput("polygon: zero area");
  Polytope p;
  p.dim_ = 2;
  p.vertices_ = std::move(loop);
  // ensure counterclockwise orientation
  double s = 0.0;
  const size_t n = p.vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec& a = p.vertices_[i];
    const Vec& b = p.vertices_[(i + 1) % n];
    s += a(0) * b(1) - b(0) * a(1);
  }
  if (s < 0) std::reverse(p.vertices_.begin(), p.vertices_.end());
  p.faces_by_dim_.assign(3, {});
  std::vector<int> all_ids;
  for (size_t i = 0; i < n; ++i) {
    Face v;
    v.dim = 0;
    v.vertex_ids = {static_cast<int>(i)};
    p.faces_by_dim_[0].push_back(std::move(v));
    all_ids.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < n; ++i) {
    const int a = static_cast<int>(i);
    const int b = static_cast<int>((i + 1) % n);
    const Vec& pa = p.vertices_[static_cast<size_t>(a)];
    const Vec& pb = p.vertices_[static_cast<size_t>(b)];
    Vec dir = pb - pa;
    Vec nrm(2);
    nrm << dir(1), -dir(0);  // outward for a counterclockwise loop
    nrm.normalize();
    p.facets_.push_back({nrm, nrm.dot(pa)});
    std::vector<int> ids = {a, b};
    std::sort(ids.begin(), ids.end());
    p.facet_vertex_sets_.push_back(ids);
    Face e;
    e.dim = 1;
    e.vertex_ids = ids;
    p.faces_by_dim_[1].push_back(std::move(e));
  }
  Face body;
  body.dim = 2;
  body.vertex_ids = all_ids;
  body.loop = all_ids;
  p.faces_by_dim_[2].push_back(std::move(body));
  p.build_face_geometry();
  return p;
}

Polytope Polytope::from_facet_loops(std::vector<Vec> vertices,
                                    std::vector<std::vector<int>> facet_loops) {
  Polytope p;
  p.dim_ = 3;
  p.vertices_ = std::move(vertices);
  if (p.vertices_.size() < 4) throw DegenerateInput("3-polytope: fewer than 4 vertices");
  {
    std::vector<Vec> diffs;
    for (size_t i = 1; i < p.vertices_.size(); ++i)
      diffs.push_back(p.vertices_[i] - p.vertices_[0]);
    if (matrix_rank(columns(diffs)) < 3)
      throw DegenerateInput("3-polytope: vertices not full-dimensional");
  }
  Vec centroid = Vec::Zero(3);
  for (const Vec& v : p.vertices_) centroid += v;
  centroid /= static_cast<double>(p.vertices_.size());

  std::set<std::pair<int, int>> edge_set;
  for (auto& loop : facet_loops) {
    if (loop.size() < 3) throw DegenerateInput("3-polytope: facet with fewer than 3 vertices");
    std::vector<Vector3d> pts;
    for (int id : loop) pts.push_back(to3(p.vertices_[static_cast<size_t>(id)]));
    Vector3d n3 = newell_normal(pts);
    if (n3.norm() < 1e-12) throw DegenerateInput("3-polytope: zero-area facet");
    n3.normalize();
    Vec n(3);
    n << n3(0), n3(1), n3(2);
    double h = n.dot(p.vertices_[static_cast<size_t>(loop.front())]);
    if (n.dot(centroid) > h) {
      n = -n;
      h = -h;
      std::reverse(loop.begin(), loop.end());
    }
    p.facets_.push_back({n, h});
    std::vector<int> ids = loop;
    std::sort(ids.begin(), ids.end());
    p.facet_vertex_sets_.push_back(ids);
    for (size_t i = 0; i < loop.size(); ++i) {
      int a = loop[i], b = loop[(i + 1) % loop.size()];
      if (a > b) std::swap(a, b);
      edge_set.insert({a, b});
    }
  }
  p.faces_by_dim_.assign(4, {});
  for (size_t i = 0; i < p.vertices_.size(); ++i) {
    Face v;
    v.dim = 0;
    v.vertex_ids = {static_cast<int>(i)};
    p.faces_by_dim_[0].push_back(std::move(v));
  }
  for (const auto& [a, b] : edge_set) {
    Face e;
    e.dim = 1;
    e.vertex_ids = {a, b};
    p.faces_by_dim_[1].push_back(std::move(e));
  }
  for (size_t i = 0; i < facet_loops.size(); ++i) {
    Face f;
    f.dim = 2;
    f.loop = facet_loops[i];
    f.vertex_ids = p.facet_vertex_sets_[i];
    p.faces_by_dim_[2].push_back(std::move(f));
  }
  Face body;
  body.dim = 3;
  for (size_t i = 0; i < p.vertices_.size(); ++i) body.vertex_ids.push_back(static_cast<int>(i));
  p.faces_by_dim_[3].push_back(std::move(body));
  p.build_face_geometry();
  if (p.volume() < 1e-12) throw DegenerateInput("3-polytope: zero volume");
  return p;
}

Polytope Polytope::from_vertices(const std::vector<Vec>& points) {
  if (points.empty()) throw DegenerateInput("from_vertices: no points");
  const int d = static_cast<int>(points.front().size());
  for (const Vec& p : points)
    if (p.size() != d) throw ValidationError("from_vertices: dimension mismatch");
  std::vector<Vec> pts = dedupe_points(points, 1e-9);
  if (d == 2) {
    std::vector<Vec> hull = convex_hull_2d(pts);
    if (hull.size() < 3 || polygon_area_2d(hull) < 1e-12)
      throw DegenerateInput("from_vertices: points not full-dimensional");
    return from_polygon_loop(std::move(hull));
  }
  if (d != 3)
    throw ValidationError("from_vertices: automatic hulls only for d in {2,3}; "
                          "use explicit combinatorial input for d >= 4");
  {
    std::vector<Vec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    if (pts.size() < 4 || matrix_rank(columns(diffs)) < 3)
      throw DegenerateInput("from_vertices: points not full-dimensional");
  }
  // brute-force supporting-plane search; fine at corpus scale
  struct Plane {
    Vec n;
    double h;
    std::vector<int> support;
  };
  std::vector<Plane> planes;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vector3d nn = (to3(pts[j]) - to3(pts[i])).cross(to3(pts[k]) - to3(pts[i]));
        if (nn.norm() < 1e-12) continue;
        nn.normalize();
        Vec nv(3);
        nv << nn(0), nn(1), nn(2);
        double h = nv.dot(pts[i]);
        double lo = 0.0, hi = 0.0;
        for (const Vec& p : pts) {
          const double s = nv.dot(p) - h;
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
        if (hi > kGeomTol && lo < -kGeomTol) continue;  // not supporting
        if (hi > kGeomTol) {
          nv = -nv;
          h = -h;
        }
        bool dup = false;
        for (const Plane& pl : planes)
          if ((pl.n - nv).norm() < 1e-7 && std::abs(pl.h - h) < 1e-7) {
            dup = true;
            break;
          }
        if (dup) continue;
        Plane pl;
        pl.n = nv;
        pl.h = h;
        for (size_t t = 0; t < n; ++t)
          if (std::abs(nv.dot(pts[t]) - h) <= kGeomTol) pl.support.push_back(static_cast<int>(t));
        planes.push_back(std::move(pl));
      }
  // true hull vertices: incident supporting normals span R^3
  std::vector<int> remap(n, -1);
  std::vector<Vec> verts;
  for (size_t t = 0; t < n; ++t) {
    std::vector<Vec> normals;
    for (const Plane& pl : planes)
      if (std::find(pl.support.begin(), pl.support.end(), static_cast<int>(t)) !=
          pl.support.end())
        normals.push_back(pl.n);
    if (matrix_rank(columns(normals)) == 3) {
      remap[t] = static_cast<int>(verts.size());
      verts.push_back(pts[t]);
    }
  }
  std::vector<std::vector<int>> loops;
  for (const Plane& pl : planes) {
    std::vector<int> ids;
    for (int s : pl.support)
      if (remap[static_cast<size_t>(s)] >= 0) ids.push_back(remap[static_cast<size_t>(s)]);
    if (ids.size() < 3) continue;
    // order around the facet centroid
    Vector3d c = Vector3d::Zero();
    for (int id : ids) c += to3(verts[static_cast<size_t>(id)]);
    c /= static_cast<double>(ids.size());
    const Vector3d nn = to3(pl.n);
    Vector3d ref = to3(verts[static_cast<size_t>(ids.front())]) - c;
    ref = (ref - ref.dot(nn) * nn).normalized();
    const Vector3d ref2 = nn.cross(ref);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const Vector3d pa = to3(verts[static_cast<size_t>(a)]) - c;
      const Vector3d pb = to3(verts[static_cast<size_t>(b)]) - c;
      return std::atan2(pa.dot(ref2), pa.dot(ref)) < std::atan2(pb.dot(ref2), pb.dot(ref));
    });
    loops.push_back(std::move(ids));
  }
  return from_facet_loops(std::move(verts), std::move(loops));
}

Polytope Polytope::from_combinatorial(
    int dim, std::vector<Vec> vertices, std::vector<Halfspace> facets,
    std::vector<std::vector<std::vector<int>>> faces_by_dim) {
  Polytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  for (Halfspace& h : p.facets_) {
    const double n = h.normal.norm();
    if (n < 1e-12) throw ValidationError("combinatorial input: zero facet normal");
    h.normal /= n;
    h.offset /= n;
  }
  for (const Vec& v : p.vertices_)
    for (const Halfspace& h : p.facets_)
      if (h.normal.dot(v) > h.offset + 1e-9)
        throw ValidationError("combinatorial input: vertex violates facet inequality");
  // lists for dims 0..d-1 are required; a trailing entry for the body is allowed
  if (static_cast<int>(faces_by_dim.size()) != dim &&
      static_cast<int>(faces_by_dim.size()) != dim + 1)
    throw ValidationError("combinatorial input: need face lists for dims 0..d-1");
  p.faces_by_dim_.assign(static_cast<size_t>(dim) + 1, {});
  for (int j = 0; j < dim; ++j)
    for (auto& ids : faces_by_dim[static_cast<size_t>(j)]) {
      Face f;
      f.dim = j;
      f.vertex_ids = ids;
      std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
      p.faces_by_dim_[static_cast<size_t>(j)].push_back(std::move(f));
    }
  for (const Face& f : p.faces_by_dim_[static_cast<size_t>(dim) - 1])
    p.facet_vertex_sets_.push_back(f.vertex_ids);
  if (p.facet_vertex_sets_.size() != p.facets_.size())
    throw ValidationError("combinatorial input: facet count mismatch");
  Face body;
  body.dim = dim;
  for (size_t i = 0; i < p.vertices_.size(); ++i) body.vertex_ids.push_back(static_cast<int>(i));
  p.faces_by_dim_[static_cast<size_t>(dim)].push_back(std::move(body));
  p.build_face_geometry();
  return p;
}

PolyhedralCone Polytope::normal_cone(const Face& f) const {
  PolyhedralCone cone;
  cone.dim_ambient = dim_;
  if (f.dim == dim_) return cone;  // zero cone
  for (size_t i = 0; i < facets_.size(); ++i) {
    const auto& fset = facet_vertex_sets_[i];
    if (std::includes(fset.begin(), fset.end(), f.vertex_ids.begin(), f.vertex_ids.end()))
      cone.generators.push_back(facets_[i].normal);
  }
  return cone;
}

double Polytope::volume() const {
  const Face& b = body();
  return face_measure(b, SpatialRegion::all());
}

namespace {

// j-measure of a convex face by cone decomposition over its children.
double recursive_measure(const Polytope& p, const Face& f) {
  if (f.dim == 0) return 1.0;
  if (f.dim == 1) {
    return (p.vertices()[static_cast<size_t>(f.vertex_ids[0])] -
            p.vertices()[static_cast<size_t>(f.vertex_ids[1])])
        .norm();
  }
  double total = 0.0;
  for (const Face& g : p.faces(f.dim - 1)) {
    if (!std::includes(f.vertex_ids.begin(), f.vertex_ids.end(), g.vertex_ids.begin(),
                       g.vertex_ids.end()))
      continue;
    Vec w = f.affine_point - g.affine_point;
    for (const Vec& b : g.direction_basis) w -= b.dot(w) * b;
    total += w.norm() * recursive_measure(p, g);
  }
  return total / static_cast<double>(f.dim);
}

double polygon_measure_clipped(const Polytope& p, const Face& f,
                               const std::vector<Halfspace>& hs) {
  // 2D coordinates in the face plane
  const Vec& p0 = p.vertices()[static_cast<size_t>(f.loop.front())];
  const Mat b = [&] {
    Mat m(p.dim(), 2);
    m.col(0) = f.direction_basis[0];
    m.col(1) = f.direction_basis[1];
    return m;
  }();
  std::vector<Vec> loop;
  for (int id : f.loop)
    loop.push_back(b.transpose() * (p.vertices()[static_cast<size_t>(id)] - p0));
  for (const Halfspace& h : hs) {
    Vec n2 = b.transpose() * h.normal;
    const double c2 = h.offset - h.normal.dot(p0);
    if (n2.norm() < 1e-12) {
      if (c2 < -kGeomTol) return 0.0;  // plane parallel to face, face outside
      continue;
    }
    loop = clip_polygon(loop, n2, c2, nullptr);
    if (loop.size() < 3) return 0.0;
  }
  return polygon_area_2d(loop);
}

}  // namespace

double Polytope::face_measure(const Face& f, const SpatialRegion& b) const {
  switch (f.dim) {
    case 0: {
      const Vec& v = vertices_[static_cast<size_t>(f.vertex_ids.front())];
      return b.contains(v, kGeomTol) ? 1.0 : 0.0;
    }
    case 1: {
      const Vec& a = vertices_[static_cast<size_t>(f.vertex_ids[0])];
      const Vec& c = vertices_[static_cast<size_t>(f.vertex_ids[1])];
      double t0 = 0.0, t1 = 1.0;
      for (const Halfspace& h : b.halfspaces()) {
        const double s = h.normal.dot(c - a);
        const double rhs = h.offset - h.normal.dot(a);
        if (std::abs(s) < 1e-14) {
          if (rhs < -kGeomTol) return 0.0;
        } else if (s > 0) {
          t1 = std::min(t1, rhs / s);
        } else {
          t0 = std::max(t0, rhs / s);
        }
      }
      return (c - a).norm() * std::max(0.0, t1 - t0);
    }
    case 2: {
      if (!f.loop.empty()) {
        if (b.kind() == SpatialRegion::Kind::All && dim_ == 3) {
          std::vector<Vector3d> pts;
          for (int id : f.loop) pts.push_back(to3(vertices_[static_cast<size_t>(id)]));
          return newell_normal(pts).norm();
        }
        return polygon_measure_clipped(*this, f, b.halfspaces());
      }
      break;
    }
    case 3: {
      if (dim_ == 3) {
        if (b.kind() == SpatialRegion::Kind::All) {
          double v = 0.0;
          for (size_t i = 0; i < facets_.size(); ++i)
            v += facets_[i].offset * face_measure(faces_by_dim_[2][i], SpatialRegion::all());
          return v / 3.0;
        }
        Mesh3 mesh = mesh_from_polytope(*this, Vec::Zero(3));
        for (const Halfspace& h : b.halfspaces())
          clip_mesh(mesh, to3(h.normal), h.offset, nullptr);
        if (mesh.faces.empty()) return 0.0;
        std::vector<Vec> pts;
        for (const auto& poly : mesh.faces)
          for (const auto& q : poly) {
            Vec v(3);
            v << q(0), q(1), q(2);
            pts.push_back(std::move(v));
          }
        try {
          return Polytope::from_vertices(pts).volume();
        } catch (const DegenerateInput&) {
          return 0.0;
        }
      }
      break;
    }
    default:
      break;
  }
  if (b.kind() != SpatialRegion::Kind::All)
    throw ValidationError("face_measure: clipped regions unsupported for this face");
  return recursive_measure(*this, f);
}

bool Polytope::contains(const Vec& x, double tol) const {
  for (const Halfspace& h : facets_)
    if (h.normal.dot(x) > h.offset + tol) return false;
  return true;
}

double Polytope::distance(const Vec& x) const {
  if (contains(x)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const Face& v : faces_by_dim_[0])
    best = std::min(best, (x - vertices_[static_cast<size_t>(v.vertex_ids[0])]).norm());
  for (const Face& e : faces_by_dim_[1]) {
    const Vec& a = vertices_[static_cast<size_t>(e.vertex_ids[0])];
    const Vec& b = vertices_[static_cast<size_t>(e.vertex_ids[1])];
    const Vec d = b - a;
    const double t = d.dot(x - a) / d.squaredNorm();
    if (t > 0.0 && t < 1.0) best = std::min(best, (x - (a + t * d)).norm());
  }
  if (dim_ == 3) {
    for (size_t i = 0; i < facets_.size(); ++i) {
      const Halfspace& h = facets_[i];
      const double s = h.normal.dot(x) - h.offset;
      if (s <= 0) continue;
      const Vec y = x - s * h.normal;
      // point-in-polygon along the facet loop
      const Face& f = faces_by_dim_[2][i];
      bool inside = true;
      const size_t m = f.loop.size();
      for (size_t j = 0; j < m && inside; ++j) {
        const Vec& a = vertices_[static_cast<size_t>(f.loop[j])];
        const Vec& b = vertices_[static_cast<size_t>(f.loop[(j + 1) % m])];
        const Vector3d cr = (to3(b) - to3(a)).cross(to3(y) - to3(a));
        if (cr.dot(to3(h.normal)) < -kGeomTol) inside = false;
      }
      if (inside) best = std::min(best, s);
    }
  }
  return best;
}

Vec Polytope::interior_point() const {
  Vec c = Vec::Zero(dim_);
  for (const Vec& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

void Polytope::bounding_box(Vec& lo, Vec& hi) const {
  lo = vertices_.front();
  hi = vertices_.front();
  for (const Vec& v : vertices_) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
}

Polytope Polytope::translated(const Vec& z) const {
  Polytope p = *this;
  for (Vec& v : p.vertices_) v += z;
  for (Halfspace& h : p.facets_) h.offset += h.normal.dot(z);
  for (auto& level : p.faces_by_dim_)
    for (Face& f : level) f.affine_point += z;
  return p;
}

Polytope Polytope::rotated(const Mat& r) const {
  if (r.rows() != dim_ || r.cols() != dim_ ||
      (r.transpose() * r - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > 1e-10)
    throw ValidationError("rotate: matrix is not orthogonal");
  Polytope p = *this;
  for (Vec& v : p.vertices_) v = r * v;
  for (Halfspace& h : p.facets_) h.normal = r * h.normal;
  for (auto& level : p.faces_by_dim_)
    for (Face& f : level) {
      f.affine_point = r * f.affine_point;
      for (Vec& b : f.direction_basis) b = r * b;
    }
  return p;
}

Polytope Polytope::reflected() const {
  Polytope p = *this;
  for (Vec& v : p.vertices_) v = -v;
  for (Halfspace& h : p.facets_) h.normal = -h.normal;
  for (auto& level : p.faces_by_dim_)
    for (Face& f : level) {
      f.affine_point = -f.affine_point;
      for (Vec& b : f.direction_basis) b = -b;
    }
  return p;
}

Polytope Polytope::scaled(double lambda) const {
  if (lambda <= 0) throw ValidationError("scale factor must be positive");
  Polytope p = *this;
  for (Vec& v : p.vertices_) v *= lambda;
  for (Halfspace& h : p.facets_) h.offset *= lambda;
  for (auto& level : p.faces_by_dim_)
    for (Face& f : level) f.affine_point *= lambda;
  return p;
}

// --- intersections and Minkowski sums -------------------------------------

IntersectionResult intersect_translates(const Polytope& p,
                                        const std::vector<const Polytope*>& qs,
                                        const std::vector<Vec>& zs) {
  IntersectionResult res;
  if (p.dim() == 2) {
    std::vector<Vec> loop;
    for (int id : p.body().loop) loop.push_back(p.vertices()[static_cast<size_t>(id)]);
    std::optional<Vec> survivor;
    for (size_t qi = 0; qi < qs.size(); ++qi) {
      for (const Halfspace& h : qs[qi]->facet_halfspaces()) {
        survivor.reset();
        loop = clip_polygon(loop, h.normal, h.offset + h.normal.dot(zs[qi]), &survivor);
        if (loop.empty()) {
          res.status = survivor ? IntersectionResult::Status::Degenerate
                                : IntersectionResult::Status::Empty;
          return res;
        }
      }
    }
    try {
      res.polytope = Polytope::from_polygon_loop(loop);
      res.status = IntersectionResult::Status::NonEmpty;
    } catch (const DegenerateInput&) {
      res.status = IntersectionResult::Status::Degenerate;
    }
    return res;
  }
  if (p.dim() != 3) throw ValidationError("intersect: only d in {2,3} supported");
  Mesh3 mesh = mesh_from_polytope(p, Vec::Zero(3));
  std::optional<Vector3d> survivor;
  for (size_t qi = 0; qi < qs.size(); ++qi) {
    for (const Halfspace& h : qs[qi]->facet_halfspaces()) {
      survivor.reset();
      clip_mesh(mesh, to3(h.normal), h.offset + h.normal.dot(zs[qi]), &survivor);
      if (mesh.faces.empty()) {
        res.status = survivor ? IntersectionResult::Status::Degenerate
                              : IntersectionResult::Status::Empty;
        return res;
      }
    }
  }
  // merge coincident points and index the loops
  std::vector<Vec> verts;
  std::vector<std::vector<int>> loops;
  for (const auto& poly : mesh.faces) {
    std::vector<int> loop;
    for (const auto& q : poly) {
      Vec v(3);
      v << q(0), q(1), q(2);
      int id = -1;
      for (size_t i = 0; i < verts.size(); ++i)
        if ((verts[i] - v).norm() < 10 * kGeomTol) {
          id = static_cast<int>(i);
          break;
        }
      if (id < 0) {
        id = static_cast<int>(verts.size());
        verts.push_back(std::move(v));
      }
      if (loop.empty() || loop.back() != id) loop.push_back(id);
    }
    while (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
    if (loop.size() >= 3) loops.push_back(std::move(loop));
  }
  try {
    res.polytope = Polytope::from_facet_loops(std::move(verts), std::move(loops));
    res.status = IntersectionResult::Status::NonEmpty;
  } catch (const DegenerateInput&) {
    res.status = IntersectionResult::Status::Degenerate;
  }
  return res;
}

IntersectionResult intersect(const Polytope& p, const Polytope& q) {
  return intersect_translates(p, {&q}, {Vec::Zero(p.dim())});
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw ValidationError("minkowski_sum: dimension mismatch");
  std::vector<Vec> sums;
  for (const Vec& a : p.vertices())
    for (const Vec& b : q.vertices()) sums.push_back(a + b);
  return Polytope::from_vertices(sums);
}

}  // namespace polycurv
