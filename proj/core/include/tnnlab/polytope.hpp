#pragma once

#include <random>
#include <string>
#include <vector>

#include "tnnlab/rootdata.hpp"

namespace tnnlab {

// Coweights are stored in simple-coroot coordinates and weights in fundamental-weight
// coordinates, so <weight, coweight> is the plain dot product.

/// Simplicial cone spanned by {-alpha_i^vee : i in K} and {varpi_i^vee : i in J}, K and J disjoint.
struct Cone {
  NodeSet K = 0;
  NodeSet J = 0;
  std::vector<RatVector> rays;  // primitive integer vectors, -alpha^vee rays first
  int dimension() const { return static_cast<int>(rays.size()); }
};

struct Fan {
  int rank = 0;
  std::vector<Cone> cones;  // all 3^n cones, ordered by (K, J)
  const Cone* find(NodeSet K, NodeSet J) const;
};

/// varpi_i^vee in simple-coroot coordinates (column i of C^{-1}).
RatVector fundamental_coweight(const RootDatum& d, int i);

Fan build_fan(const RootDatum& d);

/// Structural checks of a fan of simplicial cones in dimension n.
struct FanCheck {
  bool simplicial = true;
  bool ridges_paired = true;   // every (n-1)-cone lies in exactly two n-cones, on opposite sides
  bool directions_covered = true;  // each sampled direction lies in exactly one n-cone
  int directions = 0;
  std::string detail;
  bool ok() const { return simplicial && ridges_paired && directions_covered; }
};
FanCheck check_fan(const Fan& fan, std::mt19937_64& rng, int directions = 200);

/// Face F_{K,J} of P^lambda: vertices v_{J'} with K subset J' subset J.
struct Face {
  NodeSet K = 0;
  NodeSet J = 0;
  int dimension = -1;          // affine rank of the vertex set
  std::vector<NodeSet> vertices;  // vertex labels J'
};

/// Inequality normal . nu <= bound; normal is the outward normal (a coweight).
struct Halfspace {
  RatVector normal;
  Rational bound;
};

/// P^lambda = Conv(W lambda) intersected with the dominant chamber, cut out by
/// <alpha_i^vee, nu> >= 0 and <varpi_i^vee, nu> <= <varpi_i^vee, lambda>.
class WeightPolytope {
 public:
  WeightPolytope(const RootDatum& d, RatVector lambda);

  int rank() const { return static_cast<int>(lambda_.size()); }
  const RatVector& lambda() const { return lambda_; }
  /// Halfspaces: index i is the chamber wall H_i, index n + i the wall H_i^lambda.
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  /// Vertex v_J, indexed by the bitmask J.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const RatVector& vertex(NodeSet J) const { return vertices_[J]; }
  bool contains_point(const RatVector& nu) const;

  /// Faces found by tightness for every pair (K, J), including empty ones (vertices empty).
  const std::vector<Face>& all_labels() const { return labels_; }
  /// Nonempty faces (3^n for a combinatorial cube).
  std::vector<Face> faces() const;
  const Face& face(NodeSet K, NodeSet J) const { return labels_[(static_cast<std::size_t>(K) << rank()) | J]; }

 private:
  RatVector lambda_;
  std::vector<Halfspace> halfspaces_;
  std::vector<RatVector> vertices_;
  std::vector<Face> labels_;
};

/// Throws std::invalid_argument unless every lambda_i > 0.
WeightPolytope build_polytope(const RootDatum& d, const RatVector& lambda);

/// Independent route: exact hull of the W-orbit, clipped to the chamber. Sorted vertices.
std::vector<RatVector> hull_oracle(const RootDatum& d, const RatVector& lambda);

/// Extreme rays of the pointed cone {x : A x >= 0} (double description, exact).
/// Rays are primitive integer vectors in lexicographic order.
std::vector<RatVector> extreme_rays(const std::vector<RatVector>& constraints, int dim);

struct CubeCheck {
  bool ok = true;
  int faces = 0;
  int vertices = 0;
  int facets = 0;
  std::string detail;
};
/// Checks face counts, dim F_{K,J} = |J| - |K|, emptiness iff K not subset J, and that
/// (K,J) -> cube face (0 on K, 1 off J, free on J - K) is an order isomorphism.
CubeCheck cube_check(const WeightPolytope& p);

/// Normal fan from the polytope's geometry: facet normals come from the facet vertex sets, oriented
/// outward by the vertex centroid; the cone of F_{K,J} is stored with label (K, I - J).
Fan normal_fan(const WeightPolytope& p);

/// Cone-by-cone equality (same labels, same ray sets).
bool same_fan(const Fan& a, const Fan& b, std::string* detail = nullptr);

/// Geomview OFF text (nOFF for dimensions other than 3); 2-faces as quadrilaterals.
std::string to_off(const WeightPolytope& p, int digits = 12);

}  // namespace tnnlab
