#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "tnnlab/liealg.hpp"

namespace tnnlab {

/// One generator of a group word. X(i,t) = exp(t e_i), Y(i,t) = exp(t f_i),
/// SDot(i) = Y(i,1) X(i,-1) Y(i,1), SDotInv(i) its inverse, Exp(u) = exp(u) for u in the
/// nilradical (u given in Chevalley-basis coordinates, only e_beta slots nonzero).
struct GroupToken {
  enum class Kind { X, Y, SDot, SDotInv, Exp };
  Kind kind = Kind::X;
  int index = 0;  // 0-based node for X, Y, SDot, SDotInv
  Rational t;
  RatVector lie;

  static GroupToken x(int i, Rational t) { return {Kind::X, i, std::move(t), {}}; }
  static GroupToken y(int i, Rational t) { return {Kind::Y, i, std::move(t), {}}; }
  static GroupToken sdot(int i) { return {Kind::SDot, i, Rational(0), {}}; }
  static GroupToken sdot_inv(int i) { return {Kind::SDotInv, i, Rational(0), {}}; }
  static GroupToken exp(RatVector u) { return {Kind::Exp, 0, Rational(0), std::move(u)}; }

  GroupToken inverse() const;
  friend bool operator==(const GroupToken& a, const GroupToken& b) {
    return a.kind == b.kind && a.index == b.index && a.t == b.t && a.lie == b.lie;
  }
};

/// A group element as a word of generators, leftmost factor first.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<GroupToken> word) : word_(std::move(word)) {}

  const std::vector<GroupToken>& word() const { return word_; }
  bool is_identity_word() const { return word_.empty(); }
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<GroupToken> word_;
};

/// Parses "x1(3) s2 y1(1/2) s2^-1" (1-based nodes); "e" or "" is the identity.
GroupElement parse_group_word(const std::string& text, int rank);
/// Inverse of parse_group_word for X/Y/SDot/SDotInv tokens; Exp tokens print as exp[...].
std::string format_group_word(const GroupElement& g);

/// Root datum, Chevalley basis and a lazily filled, thread-safe cache of modules.
/// Module ids: "fund:i" (1-based), "adjoint", "hw:a,b,..." (fundamental-weight coordinates).
class GroupContext {
 public:
  explicit GroupContext(RootDatum datum, int dimension_cap = kDefaultDimensionCap);
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const RootDatum& datum() const { return chevalley_.datum(); }
  const ChevalleyBasis& chevalley() const { return chevalley_; }
  int dimension_cap() const { return cap_; }

  /// Throws std::invalid_argument for unknown ids, DimensionCapExceeded above the cap.
  std::shared_ptr<const WeightModule> module(const std::string& id) const;
  std::shared_ptr<const WeightModule> fundamental(int i) const;
  std::shared_ptr<const WeightModule> adjoint() const;
  std::shared_ptr<const WeightModule> highest_weight(const IntVector& lambda) const;

  /// g v in the given module, applying the word right to left.
  RatVector apply(const GroupElement& g, const WeightModule& m, RatVector v) const;
  RatMatrix matrix(const GroupElement& g, const WeightModule& m) const;
  RatMatrix matrix(const GroupElement& g, const std::string& module_id) const;

 private:
  void apply_token(const GroupToken& tok, const WeightModule& m, RatVector& v) const;

  ChevalleyBasis chevalley_;
  int cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const WeightModule>> cache_;
};

GroupElement gen(const GroupToken& tok);
/// Representative w-dot = s-dot_{i_1} ... s-dot_{i_k} along the stored reduced word.
GroupElement wdot(const WeylElement& w);

/// (g v_{varpi_i})_{varpi_i}: highest-weight coefficient in the fundamental module (0-based i).
Rational delta_varpi(const GroupContext& ctx, int i, const GroupElement& g);
/// <g v, v^-> in V_{m_i varpi_i} under its contravariant form, with v^- = w0-dot^{-1} v.
Rational delta_adjoint_type(const GroupContext& ctx, int i, const GroupElement& g);
/// Coefficient of the given Chevalley basis slot in Ad_{g^{-1}} e, e = sum_i e_i.
Rational ad_coefficient(const GroupContext& ctx, const GroupElement& g, int slot);
/// Ad_{g^{-1}} x for x in g (Chevalley coordinates).
RatVector ad_inverse(const GroupContext& ctx, const GroupElement& g, const RatVector& x);
/// q_i(g) = -(Ad_{g^{-1}} e)_{-alpha_i}.
Rational q_value(const GroupContext& ctx, int i, const GroupElement& g);

struct TnnSample {
  WeylElement weyl;
  RatVector params;
  GroupElement element;
};

/// x_{i_1}(a_1) ... x_{i_m}(a_m) along the reduced word of w; throws on a non-positive parameter.
TnnSample tnn_sample(const WeylElement& w, const RatVector& params);
/// Parameters drawn as positive rationals (numerator 1..9, denominator 1..4).
TnnSample tnn_sample(const WeylElement& w, std::mt19937_64& rng);

/// All-minors test for an upper unitriangular rational matrix; throws std::invalid_argument
/// for other input.
bool tnn_membership_typeA(const RatMatrix& u);
/// Smallest minor of a square matrix (exhaustive; intended for sizes up to 6).
Rational min_minor(const RatMatrix& m);
long double min_minor(const std::vector<std::vector<long double>>& m);

/// Basis of {x in u_J : [x, e_J] = 0}, one homogeneous element per Dynkin component of J and
/// per exponent; the height-one element of each component is the sum of its e_i.
std::vector<RatVector> centralizer_basis(const ChevalleyBasis& cb, NodeSet J);
/// Height (in the simple-root grading) of a homogeneous nilradical element.
int lie_height(const ChevalleyBasis& cb, const RatVector& x);

/// Re-indexes a word whose tokens only involve nodes of J into the Levi datum on J
/// (nodes renumbered in increasing order). Throws if some token leaves G_J.
GroupElement restrict_to_levi(const ChevalleyBasis& cb, const GroupElement& g, NodeSet J,
                              const ChevalleyBasis& levi);

}  // namespace tnnlab
