#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnnlab/matrix.hpp"
#include "tnnlab/rational.hpp"

namespace tnnlab {

/// Subset of the node set I as a bitmask; bit i is node i (0-based).
using NodeSet = std::uint32_t;

inline constexpr int kMaxRank = 16;

inline bool contains(NodeSet s, int i) { return ((s >> i) & 1U) != 0; }
inline NodeSet with(NodeSet s, int i) { return s | (NodeSet{1} << i); }
inline NodeSet full_set(int n) { return n >= 32 ? ~NodeSet{0} : (NodeSet{1} << n) - 1; }
inline bool is_subset(NodeSet a, NodeSet b) { return (a & ~b) == 0; }
int popcount(NodeSet s);
std::vector<int> members(NodeSet s);
NodeSet node_set(const std::vector<int>& zero_based);

/// "{1,3}" with 1-based labels.
std::string format_nodes(NodeSet s);
/// Parses "1,3" (1-based); "" or "-" is the empty set. Throws on labels outside 1..n.
NodeSet parse_nodes(const std::string& text, int n);

/// All subsets of full_set(n), in increasing bitmask order.
std::vector<NodeSet> all_subsets(int n);

/// Stratum index (K, J) with K subset J.
struct StratumLabel {
  NodeSet K = 0;
  NodeSet J = 0;
  friend bool operator==(const StratumLabel& a, const StratumLabel& b) { return a.K == b.K && a.J == b.J; }
  friend bool operator<(const StratumLabel& a, const StratumLabel& b) { return a.K != b.K ? a.K < b.K : a.J < b.J; }
};

/// Integer Cartan matrix with entries c[i][j] = <alpha_i, alpha_j^vee>.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Validates the generalized Cartan matrix axioms and det != 0; throws std::invalid_argument.
  CartanMatrix(std::string name, std::vector<IntVector> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i][j]; }
  const std::vector<IntVector>& entries() const { return entries_; }
  const std::string& name() const { return name_; }

  RatMatrix to_rational() const { return RatMatrix::from_int_rows(entries_); }
  /// Principal submatrix on the nodes of J (in increasing index order).
  CartanMatrix restrict_to(NodeSet J, std::string name) const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::string name_;
  std::vector<IntVector> entries_;
};

/// Block-diagonal sum; the name is "<a>x<b>".
CartanMatrix direct_sum(const CartanMatrix& a, const CartanMatrix& b);

/// Element of the Weyl group, identified by its action on the simple-root basis.
class WeylElement {
 public:
  WeylElement() = default;

  /// Reduced word of simple reflections (0-based), leftmost letter first.
  const IntVector& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Column j holds w(alpha_j) in the simple-root basis; row-major n x n.
  const IntVector& action() const { return action_; }
  int rank() const { return rank_; }

  /// w(beta) for beta in simple-root coordinates.
  IntVector apply(const IntVector& beta) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.action_ < b.action_; }

 private:
  friend class RootDatum;
  int rank_ = 0;
  IntVector word_;
  IntVector action_;
};

/// Roots, coroots, weights and Weyl combinatorics of a finite-type Cartan matrix.
/// Immutable after construction.
class RootDatum {
 public:
  /// Closes the simple roots under root strings; throws std::invalid_argument if the
  /// closure has not stabilized by height 100 (non-finite type).
  explicit RootDatum(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  const std::string& name() const { return cartan_.name(); }
  int rank() const { return cartan_.rank(); }
  NodeSet all_nodes() const { return full_set(rank()); }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically
  /// descending; the first rank() entries are the simple roots in index order.
  const std::vector<IntVector>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  int height(int root) const { return heights_[root]; }
  int max_height() const { return heights_.back(); }
  std::optional<int> root_index(const IntVector& beta) const;
  /// Positive roots whose support lies in J.
  std::vector<int> roots_supported_on(NodeSet J) const;
  NodeSet support(int root) const;

  /// beta^vee in the simple-coroot basis.
  const IntVector& coroot(int root) const { return coroots_[root]; }
  /// Symmetrizer: c[i][j] * d_j = c[j][i] * d_i with d_i proportional to (alpha_i, alpha_i).
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }

  /// alpha_i in the fundamental-weight basis (row i of C).
  IntVector simple_root_weight(int i) const;
  /// alpha_i^vee in the fundamental-coweight basis (column i of C).
  IntVector simple_coroot_coweight(int i) const;
  /// beta (simple-root coordinates) in the fundamental-weight basis.
  IntVector root_weight(const IntVector& beta) const;

  /// <lambda, beta^vee> for lambda in fundamental-weight coordinates.
  Rational pair_weight_coroot(const RatVector& lambda, int root) const;
  /// <lambda, alpha_i^vee> = lambda_i.
  const Rational& pair_weight_simple_coroot(const RatVector& lambda, int i) const { return lambda[i]; }
  /// <lambda, varpi_j^vee> for lambda in fundamental-weight coordinates.
  Rational pair_weight_coweight(const RatVector& lambda, int j) const;
  /// Fundamental weights expressed in the simple-root basis: row i is varpi_i.
  const RatMatrix& cartan_inverse() const { return cartan_inverse_; }
  /// Weight in simple-root coordinates (rational) from fundamental-weight coordinates.
  RatVector weight_to_root_coords(const RatVector& lambda) const;
  RatVector root_coords_to_weight(const RatVector& beta) const;

  /// Least m_i > 0 with m_i varpi_i in the root lattice.
  IntVector fundamental_exponents() const;
  Rational cartan_determinant() const;

  std::vector<NodeSet> dynkin_components() const;

  WeylElement identity() const;
  /// w * s_i.
  WeylElement times_simple(const WeylElement& w, int i) const;
  WeylElement from_word(const IntVector& word) const;
  /// Longest element of the parabolic subgroup W_J.
  WeylElement longest_element(NodeSet J) const;
  /// i -> i* with w_0(alpha_i) = -alpha_{i*}.
  IntVector involution_star() const;
  /// Positive roots sent to negative roots by w.
  int inversion_count(const WeylElement& w) const;
  /// Right descents: l(w s_i) < l(w).
  bool is_right_descent(const WeylElement& w, int i) const;
  /// All reduced words of w, up to the given cap.
  std::vector<IntVector> reduced_words(const WeylElement& w, std::size_t cap = 2000) const;
  /// All Weyl group elements in breadth-first (length) order; throws above the cap.
  std::vector<WeylElement> weyl_group(std::size_t cap = 200000) const;

  /// s_i(lambda) in fundamental-weight coordinates.
  RatVector reflect_weight(const RatVector& lambda, int i) const;
  /// w(lambda) in fundamental-weight coordinates, applying the word right to left.
  RatVector act_on_weight(const WeylElement& w, const RatVector& lambda) const;

 private:
  CartanMatrix cartan_;
  std::vector<IntVector> roots_;
  std::vector<int> heights_;
  std::vector<IntVector> coroots_;
  std::vector<Rational> symmetrizer_;
  std::map<IntVector, int> index_;
  RatMatrix cartan_inverse_;
};

bool is_positive(const IntVector& beta);
bool is_negative(const IntVector& beta);

}  // namespace tnnlab
