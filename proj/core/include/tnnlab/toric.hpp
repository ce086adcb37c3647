#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tnnlab/polytope.hpp"
#include "tnnlab/rootdata.hpp"

namespace tnnlab {

using RealVector = std::vector<long double>;

/// Homogeneous coordinates [x ; y] of a point of X(Sigma)_{>=0}. The torus acts on x_i with
/// weight varpi_i and on y_i with weight alpha_i.
struct CoxPoint {
  RealVector x;
  RealVector y;
  int rank() const { return static_cast<int>(x.size()); }
  static CoxPoint from_rational(const RatVector& x, const RatVector& y);
};

/// Throws std::invalid_argument on size mismatch, negative or non-finite entries, or some (x_i, y_i) = (0, 0).
void validate(const CoxPoint& p);

/// K = {i : x_i = 0}, J = {i : y_i != 0}.
StratumLabel stratum_of(const CoxPoint& p);

/// Representative with x = 0 on K, x = 1 off J, y = 0 off J, y = 1 on J; `free` holds x_i for
/// i in J - K in increasing index order.
struct CanonicalCoxPoint {
  StratumLabel label;
  RealVector free;
};

CanonicalCoxPoint canonicalize(const CartanMatrix& c, const CoxPoint& p);
CoxPoint to_cox_point(const CanonicalCoxPoint& q, int rank);

/// exp(u) . p for u in simple-coroot coordinates: log x_i += u_i, log y_i += (C u)_i.
CoxPoint torus_act(const CartanMatrix& c, const CoxPoint& p, const RealVector& u);

/// Same stratum and free coordinates equal within a relative tolerance.
bool equivalent(const CartanMatrix& c, const CoxPoint& p, const CoxPoint& q, long double rel_tol = 1e-10L);

/// Point of the given stratum with nonzero coordinates drawn log-uniformly from [lo, hi].
CoxPoint random_cox_point(int rank, StratumLabel label, std::mt19937_64& rng, double lo = 0.2, double hi = 5.0);

/// Moment map of X(Sigma)_{>=0} onto P^lambda, weighted by the root-lattice points of N P^lambda where
/// N is the least common denominator of the vertex coordinates in the simple-root basis.
class MomentMap {
 public:
  /// Throws std::length_error if the bounding box of N P^lambda has more than max_box points.
  MomentMap(const RootDatum& d, const WeightPolytope& p, std::size_t max_box = 2'000'000);

  int rank() const { return rank_; }
  long long dilation() const { return dilation_; }
  std::size_t lattice_point_count() const { return points_.size(); }
  /// Lattice points of N P^lambda in fundamental-weight coordinates.
  std::vector<RatVector> lattice_points() const;

  /// mu(p) in fundamental-weight coordinates (long double log-sum-exp).
  RealVector operator()(const CoxPoint& p) const;
  /// mu(p) in exact arithmetic for rational coordinates.
  RatVector exact(const RatVector& x, const RatVector& y) const;

  /// Values of the facet functionals at nu: index i is <alpha_i^vee, nu>, index n + i is
  /// <varpi_i^vee, lambda - nu>. All are >= 0 on P^lambda.
  RealVector facet_values(const RealVector& nu) const;

  struct CellCheck {
    bool ok = true;
    long double worst_tight = 0;  // largest |value| on facets that should contain the point
    long double worst_slack = 0;  // smallest value on the remaining facets
    std::string detail;
  };
  /// nu lies on the facets containing F_{K,J} (within tol) and strictly off all others (value > tol).
  CellCheck check_cell(StratumLabel label, const RealVector& nu, long double tol = 1e-9L) const;

 private:
  struct LatticePoint {
    std::vector<long long> weight;    // <alpha_i^vee, m>, the exponent of x_i
    std::vector<long long> codegree;  // c_i - <varpi_i^vee, m>, the exponent of y_i
  };
  int rank_ = 0;
  long long dilation_ = 1;
  RatVector lambda_;
  std::vector<RatVector> coweights_;  // varpi_i^vee in simple-coroot coordinates
  std::vector<LatticePoint> points_;
};

}  // namespace tnnlab
