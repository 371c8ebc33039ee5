#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycurv/errors.hpp"
#include "polycurv/multilinear.hpp"

namespace polycurv {

/// Closed halfspace {x : normal . x <= offset}.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// A j-face of a polytope: vertex indices into the parent's vertex list,
/// a point in the face and an orthonormal basis of lin(F - F).
/// For 2-faces of 3-polytopes (and the body of a 2-polytope) `loop` holds
/// the boundary vertices in cyclic order.
struct Face {
  int dim = 0;
  std::vector<int> vertex_ids;
  Vec affine_point;
  std::vector<Vec> direction_basis;
  std::vector<int> loop;

  Subspace direction_space(int ambient_dim) const {
    return Subspace(ambient_dim, direction_basis);
  }
};

/// Finitely generated cone, stored by unit generators.
struct PolyhedralCone {
  int dim_ambient = 0;
  std::vector<Vec> generators;

  bool is_zero() const { return generators.empty(); }
  int dim() const;          ///< dim lin(cone)
  bool is_pointed() const;  ///< 0 is not a nontrivial nonnegative combination
  bool contains(const Vec& u, double tol = 1e-9) const;
  std::vector<Vec> span_basis() const;  ///< orthonormal basis of lin(cone)
  /// Extreme unit rays (generators not in the cone of the others).
  std::vector<Vec> extreme_rays() const;
  /// Facet halfspaces {n . x <= 0}; requires a full-dimensional pointed cone
  /// in ambient dimension <= 3.
  std::vector<Halfspace> halfspaces() const;
};

/// Minkowski sum of cones: the cone generated by all generators.
PolyhedralCone cone_sum(const std::vector<PolyhedralCone>& cones);

class Polytope;

/// Spatial Borel region used in measure queries: everything, an axis-aligned
/// box, or a full-dimensional polytopal set.
class SpatialRegion {
 public:
  enum class Kind { All, Box, Polytopal };

  static SpatialRegion all();
  static SpatialRegion box(const Vec& lo, const Vec& hi);
  static SpatialRegion polytopal(const Polytope& p);
  /// Common refinement of several regions (possibly empty).
  static SpatialRegion intersection(const std::vector<SpatialRegion>& parts);

  Kind kind() const { return kind_; }
  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  bool contains(const Vec& x, double tol = 1e-12) const;
  /// Defining halfspaces; empty list for All.
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  SpatialRegion translated(const Vec& z) const;
  SpatialRegion rotated(const Mat& r) const;
  SpatialRegion scaled(double lambda) const;

 private:
  SpatialRegion() = default;
  Kind kind_ = Kind::All;
  Vec lo_, hi_;
  std::vector<Halfspace> halfspaces_;
};

/// Bounded, convex, full-dimensional polytope with an explicit face lattice.
class Polytope {
 public:
  /// Convex hull construction; supported for ambient dimension 2 and 3.
  /// Throws DegenerateInput if the points do not span the space.
  static Polytope from_vertices(const std::vector<Vec>& points);

  /// Construction from explicit combinatorial data (any dimension >= 2).
  /// `faces_by_dim[j]` lists the vertex-index sets of the j-faces; the entry
  /// for j = d-1 must be ordered consistently with `facets`.
  static Polytope from_combinatorial(int dim, std::vector<Vec> vertices,
                                     std::vector<Halfspace> facets,
                                     std::vector<std::vector<std::vector<int>>> faces_by_dim);

  /// Assembles a 3-polytope from facet polygons given as ordered loops of
  /// vertex indices (used by the intersection kernel; skips hull search).
  static Polytope from_facet_loops(std::vector<Vec> vertices,
                                   std::vector<std::vector<int>> facet_loops);

  /// Assembles a 2-polytope from a counterclockwise convex vertex loop.
  static Polytope from_polygon_loop(std::vector<Vec> loop);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facet_halfspaces() const { return facets_; }
  /// Faces by dimension; faces(d) has a single entry representing P itself.
  const std::vector<Face>& faces(int j) const;
  const Face& body() const { return faces_by_dim_.back().front(); }

  PolyhedralCone normal_cone(const Face& f) const;
  double volume() const;
  /// H^j measure of F intersected with the region.
  double face_measure(const Face& f, const SpatialRegion& b) const;
  bool contains(const Vec& x, double tol = 1e-9) const;
  /// Euclidean distance to the body (0 inside). Ambient dimension <= 3.
  double distance(const Vec& x) const;
  Vec interior_point() const;
  void bounding_box(Vec& lo, Vec& hi) const;

  Polytope translated(const Vec& z) const;
  Polytope rotated(const Mat& r) const;  ///< r orthogonal to 1e-10
  Polytope reflected() const;            ///< -P
  Polytope scaled(double lambda) const;  ///< lambda > 0

 private:
  Polytope() = default;
  void build_face_geometry();

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Halfspace> facets_;
  /// facet_vertex_sets_[i] = sorted vertex ids on facet i.
  std::vector<std::vector<int>> facet_vertex_sets_;
  std::vector<std::vector<Face>> faces_by_dim_;
};

struct IntersectionResult {
  enum class Status { NonEmpty, Empty, Degenerate };
  Status status = Status::Empty;
  std::optional<Polytope> polytope;
};

/// P cap Q by halfspace clipping (d in {2,3}). Lower-dimensional touching
/// intersections are reported as Degenerate, not as errors.
IntersectionResult intersect(const Polytope& p, const Polytope& q);

/// Intersection of p with translates q_i + z_i.
IntersectionResult intersect_translates(const Polytope& p,
                                        const std::vector<const Polytope*>& qs,
                                        const std::vector<Vec>& zs);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

}  // namespace polycurv
