#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "tnnlab/grouprep.hpp"

namespace tnnlab {

/// Point x * w_J-dot of the Peterson variety with x = exp(sum coords[k] * centralizer_basis(J)[k]).
struct PetersonPoint {
  NodeSet J = 0;
  RatVector coords;
  RatVector lie;  // log x in Chevalley coordinates
  GroupElement element;
};

/// Throws std::invalid_argument if coords has the wrong length.
PetersonPoint make_peterson_point(const GroupContext& ctx, NodeSet J, const RatVector& coords);

/// Ad_{g^{-1}} e has no component along f_alpha for any non-simple positive root alpha.
bool peterson_membership(const GroupContext& ctx, const GroupElement& g);

/// (Delta_{varpi_1}(g), ..., Delta_{varpi_n}(g)).
RatVector delta_vector(const GroupContext& ctx, const GroupElement& g);

/// K = {i : Delta_{varpi_i} = 0}. Throws std::logic_error if Delta_{varpi_i} != 1 for some i outside J,
/// or (with tnn_sampled) if some Delta is negative.
StratumLabel classify_stratum(const GroupContext& ctx, const PetersonPoint& p, bool tnn_sampled = false);

/// Delta and q values of a point, i.e. its Cox coordinates [x ; y].
struct PsiValue {
  RatVector delta;
  RatVector q;
};
PsiValue psi(const GroupContext& ctx, const PetersonPoint& p);

/// One block of a splitting: the Levi datum on `nodes` and the point restricted to it.
struct SplitPiece {
  NodeSet nodes = 0;
  std::shared_ptr<GroupContext> context;
  PetersonPoint point;
};

/// Splits a point along a partition of I into unions of Dynkin components.
/// Throws std::invalid_argument if the blocks overlap, miss a node or cut an edge of the diagram.
std::vector<SplitPiece> split_components(const GroupContext& ctx, const PetersonPoint& p,
                                         const std::vector<NodeSet>& partition);

/// Arbitrary rational centralizer coordinates (no positivity), for identities that hold on all of Y.
PetersonPoint sample_peterson_point(const GroupContext& ctx, NodeSet J, std::mt19937_64& rng);

struct TnnPetersonSample {
  PetersonPoint point;
  bool certified = false;  // built from factors known to lie in U_{>=0}
};

/// Point of the nonnegative part. Dynkin components of J of type A use the factorization
/// x = prod (1 + r N) prod (1 - s N)^{-1} of the regular unipotent Toeplitz family (certified);
/// other components draw signed centralizer coordinates and keep draws with all Delta >= 0,
/// falling back to exp(t e_C). Each component is independently set to the identity, pushed to
/// a boundary (some Delta = 0), or left generic.
TnnPetersonSample sample_tnn_point(const GroupContext& ctx, NodeSet J, std::mt19937_64& rng);

struct InversionOptions {
  int max_iterations = 400;
  double tolerance = 1e-9;
  std::optional<std::vector<double>> start;  // centralizer coordinates; coarse grid if absent
};

struct InversionResult {
  bool converged = false;
  std::vector<double> coords;
  PetersonPoint point;  // exact point at the returned coordinates
  double residual = 0;  // max |Delta_i(point) - target_i|
  int iterations = 0;
};

/// Solves Delta(x w_J-dot) = target for x in the nonnegative centralizer (height-one coordinates kept
/// >= 0) by damped Gauss-Newton on exact evaluations. Entries of target outside J must equal 1.
InversionResult invert_delta(const GroupContext& ctx, const std::vector<double>& target, NodeSet J,
                             const InversionOptions& options = {});

/// Path order of a Dynkin component of type A (simply laced path), or empty.
std::vector<int> type_a_path(const CartanMatrix& c, NodeSet component);
/// Connected components of the diagram restricted to J, ordered by smallest node.
std::vector<NodeSet> dynkin_components_of(const RootDatum& d, NodeSet J);

}  // namespace tnnlab
