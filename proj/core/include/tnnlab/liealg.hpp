#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnnlab/matrix.hpp"
#include "tnnlab/rootdata.hpp"

namespace tnnlab {

class ChevalleyBasis;

inline constexpr int kDefaultDimensionCap = 400;

/// Thrown when a requested module exceeds the dimension budget.
class DimensionCapExceeded : public std::runtime_error {
 public:
  DimensionCapExceeded(std::int64_t dimension, int cap);
  std::int64_t dimension() const { return dimension_; }

 private:
  std::int64_t dimension_;
};

/// Weyl dimension formula; lambda in fundamental-weight coordinates, dominant integral.
std::int64_t weyl_dimension(const RootDatum& datum, const IntVector& lambda);

/// Finite-dimensional module with exact action matrices of the simple generators,
/// root-vector matrices and the contravariant (Shapovalov) form.
class WeightModule {
 public:
  const std::string& id() const { return id_; }
  int dimension() const { return static_cast<int>(weights_.size()); }
  int rank() const { return static_cast<int>(act_e_.size()); }
  /// Highest weight of the (first) irreducible constituent.
  const IntVector& highest_weight() const { return highest_weight_; }
  /// Weight of each basis vector in fundamental-weight coordinates.
  const std::vector<IntVector>& weights() const { return weights_; }
  /// Basis index of each constituent's highest weight vector (one entry if irreducible).
  const std::vector<int>& highest_indices() const { return highest_indices_; }
  int highest_index() const { return highest_indices_.front(); }
  /// Optional readable names of the basis vectors (set for the adjoint module).
  const std::vector<std::string>& labels() const { return labels_; }

  const RatMatrix& e(int i) const { return act_e_[i]; }
  const RatMatrix& f(int i) const { return act_f_[i]; }
  const RatMatrix& h(int i) const { return act_h_[i]; }
  const SparseMatrix& sparse_e(int i) const { return sparse_e_[i]; }
  const SparseMatrix& sparse_f(int i) const { return sparse_f_[i]; }
  /// Matrices of the Chevalley root vectors e_beta, f_beta (beta positive, by root index).
  const RatMatrix& root_e(int root) const { return root_e_[root]; }
  const RatMatrix& root_f(int root) const { return root_f_[root]; }
  const SparseMatrix& sparse_root_e(int root) const { return sparse_root_e_[root]; }
  const SparseMatrix& sparse_root_f(int root) const { return sparse_root_f_[root]; }
  const RatMatrix& gram() const { return gram_; }

  /// Basis vectors of the given weight.
  std::vector<int> weight_space(const IntVector& mu) const;

 private:
  friend WeightModule build_irreducible(const RootDatum&, const IntVector&, int);
  friend WeightModule adjoint_module(const ChevalleyBasis&);
  void finish(const RootDatum& datum);

  std::string id_;
  IntVector highest_weight_;
  std::vector<IntVector> weights_;
  std::vector<int> highest_indices_;
  std::vector<std::string> labels_;
  std::vector<RatMatrix> act_e_, act_f_, act_h_;
  std::vector<SparseMatrix> sparse_e_, sparse_f_;
  std::vector<RatMatrix> root_e_, root_f_;
  std::vector<SparseMatrix> sparse_root_e_, sparse_root_f_;
  RatMatrix gram_;
};

/// Irreducible module V_lambda realized as the quotient of the Verma module by the radical
/// of its contravariant form. Throws DimensionCapExceeded before building anything too large.
WeightModule build_irreducible(const RootDatum& datum, const IntVector& lambda,
                               int cap = kDefaultDimensionCap);

/// Contravariant form: symmetric, block diagonal by weight, e_i^T G = G f_i, and 1 on each
/// listed highest weight vector. Solved as an exact linear system.
RatMatrix contravariant_form(const std::vector<RatMatrix>& e, const std::vector<RatMatrix>& f,
                             const std::vector<IntVector>& weights, const std::vector<int>& normalized);

/// Basis element of g: e_beta, h_i or f_beta.
struct ChevalleyLabel {
  enum class Kind { E, H, F };
  Kind kind;
  int index;  // positive root index for E/F, node for H
};

/// Chevalley basis of g with its structure constants. Basis order: e_beta for positive roots
/// (root order), then h_1..h_n, then f_beta (root order).
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  int dimension() const { return static_cast<int>(labels_.size()); }
  int num_roots() const { return datum_.num_positive_roots(); }
  int e_slot(int root) const { return root; }
  int h_slot(int i) const { return num_roots() + i; }
  int f_slot(int root) const { return num_roots() + datum_.rank() + root; }
  const ChevalleyLabel& label(int slot) const { return labels_[slot]; }
  /// "e[1,1]", "h2", "f[0,1]" with root coordinates in the simple-root basis.
  std::string label_name(int slot) const;
  /// Weight of a basis element in fundamental-weight coordinates.
  IntVector slot_weight(int slot) const;

  /// [x_a, x_b] in basis coordinates.
  const RatVector& bracket_basis(int a, int b) const { return table_[a * dimension() + b]; }
  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Coefficient c with [x_a, x_b] = c * x_{slot of weight(a)+weight(b)} for root-vector slots a, b;
  /// zero when the sum is not a root.
  Rational structure_constant(int a, int b) const;

  /// sum_{i in J} e_i as an element of g.
  RatVector regular_nilpotent(NodeSet J) const;
  RatVector basis_vector(int slot) const;

  /// Faithful representation used to compute the bracket table.
  const std::vector<WeightModule>& faithful_modules() const { return faithful_; }

 private:
  RootDatum datum_;
  std::vector<ChevalleyLabel> labels_;
  std::vector<RatVector> table_;
  std::vector<WeightModule> faithful_;
};

/// Adjoint representation built from the bracket table; labels() names each slot, the
/// contravariant form is normalized to 1 at the highest root of each Dynkin component.
WeightModule adjoint_module(const ChevalleyBasis& basis);

/// build_irreducible taking the Chevalley basis as context.
WeightModule build_irreducible(const ChevalleyBasis& basis, const IntVector& lambda,
                               int cap = kDefaultDimensionCap);

}  // namespace tnnlab
