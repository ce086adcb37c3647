#include "tnnlab/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tnnlab {

DimensionCapExceeded::DimensionCapExceeded(std::int64_t dimension, int cap)
    : std::runtime_error("module of dimension " + std::to_string(dimension) + " (Weyl formula) exceeds the cap of " +
                         std::to_string(cap)),
      dimension_(dimension) {}

std::int64_t weyl_dimension(const RootDatum& datum, const IntVector& lambda) {
  if (static_cast<int>(lambda.size()) != datum.rank()) throw std::invalid_argument("weight has wrong length");
  for (int a : lambda)
    if (a < 0) throw std::invalid_argument("weight is not dominant");
  Rational dim = 1;
  for (int r = 0; r < datum.num_positive_roots(); ++r) {
    int num = 0, den = 0;
    for (int k = 0; k < datum.rank(); ++k) {
      num += (lambda[k] + 1) * datum.coroot(r)[k];
      den += datum.coroot(r)[k];
    }
    Rational factor(num, den);
    factor.canonicalize();
    dim *= factor;
  }
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return dim.get_num().get_si();
}

std::vector<int> WeightModule::weight_space(const IntVector& mu) const {
  std::vector<int> out;
  for (int b = 0; b < dimension(); ++b)
    if (weights_[b] == mu) out.push_back(b);
  return out;
}

namespace {

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, v] : x) {
    auto& slot = y[k];
    slot += a * v;
    if (sgn(slot) == 0) y.erase(k);
  }
}

IntVector minus_simple(const RootDatum& d, const IntVector& mu, int i) {
  IntVector out = mu;
  for (int j = 0; j < d.rank(); ++j) out[j] -= d.cartan()(i, j);
  return out;
}

std::string weight_id(const IntVector& lambda) {
  std::string s = "hw:";
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(lambda[k]);
  }
  return s;
}

struct Block {
  std::vector<int> ids;  // basis vectors of this weight, in order
  RatMatrix gram;
};

}  // namespace

WeightModule build_irreducible(const RootDatum& datum, const IntVector& lambda, int cap) {
  const int n = datum.rank();
  const auto expected = weyl_dimension(datum, lambda);
  if (expected > cap) throw DimensionCapExceeded(expected, cap);

  std::vector<IntVector> weight{lambda};
  std::vector<std::vector<SparseVec>> e_act(n, std::vector<SparseVec>(1));  // e_act[j][b] = e_j b
  std::vector<std::vector<SparseVec>> f_act(n);                             // f_act[i][b] = f_i b
  std::map<IntVector, Block> blocks;
  blocks[lambda] = Block{{0}, RatMatrix::identity(1)};

  std::vector<int> layer{0};
  while (!layer.empty()) {
    // candidates f_i b, b in the current layer, grouped by weight
    struct Candidate {
      int i;
      int b;
      std::vector<SparseVec> e_image;  // e_j f_i b over the current layer
    };
    std::map<IntVector, std::vector<Candidate>, std::greater<>> groups;
    for (int b : layer) {
      for (int i = 0; i < n; ++i) {
        Candidate c{i, b, std::vector<SparseVec>(n)};
        for (int j = 0; j < n; ++j) {
          // e_j f_i b = f_i (e_j b) + delta_ij <mu_b, alpha_i^vee> b
          for (const auto& [u, coef] : e_act[j][b]) axpy(c.e_image[j], coef, f_act[i][u]);
          if (i == j && weight[b][i] != 0) axpy(c.e_image[j], Rational(weight[b][i]), SparseVec{{b, 1}});
        }
        groups[minus_simple(datum, weight[b], i)].push_back(std::move(c));
      }
    }
    for (int i = 0; i < n; ++i) f_act[i].resize(weight.size());

    std::vector<int> next_layer;
    for (auto& [mu, cands] : groups) {
      const std::size_t m = cands.size();
      // <f_i b, f_k b'> = <b, e_i f_k b'>
      RatMatrix g(m, m);
      for (std::size_t a = 0; a < m; ++a) {
        const auto& ca = cands[a];
        const Block& up = blocks.at(weight[ca.b]);
        auto pos_b = std::find(up.ids.begin(), up.ids.end(), ca.b) - up.ids.begin();
        for (std::size_t c = a; c < m; ++c) {
          Rational s = 0;
          for (const auto& [u, coef] : cands[c].e_image[ca.i]) {
            auto pos_u = std::find(up.ids.begin(), up.ids.end(), u) - up.ids.begin();
            if (pos_u == static_cast<std::ptrdiff_t>(up.ids.size())) continue;
            s += coef * up.gram(pos_b, pos_u);
          }
          g(a, c) = s;
          g(c, a) = s;
        }
      }
      // greedy independent subset; the form is positive definite on the irreducible quotient
      std::vector<std::size_t> chosen;
      for (std::size_t a = 0; a < m; ++a) {
        std::vector<std::size_t> trial = chosen;
        trial.push_back(a);
        RatMatrix sub(trial.size(), trial.size());
        for (std::size_t r = 0; r < trial.size(); ++r)
          for (std::size_t c = 0; c < trial.size(); ++c) sub(r, c) = g(trial[r], trial[c]);
        if (sgn(determinant(sub)) != 0) chosen = std::move(trial);
      }
      if (chosen.empty()) {
        for (const auto& c : cands) f_act[c.i][c.b].clear();
        continue;
      }
      const std::size_t k = chosen.size();
      RatMatrix gs(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) gs(r, c) = g(chosen[r], chosen[c]);
      RatMatrix gs_inv = inverse(gs);

      Block block;
      block.gram = gs;
      std::vector<int> new_ids;
      for (std::size_t r = 0; r < k; ++r) {
        int id = static_cast<int>(weight.size());
        weight.push_back(mu);
        new_ids.push_back(id);
        const auto& c = cands[chosen[r]];
        for (int j = 0; j < n; ++j) e_act[j].push_back(c.e_image[j]);
      }
      block.ids = new_ids;
      // every candidate equals its projection onto the chosen span modulo the radical
      for (std::size_t a = 0; a < m; ++a) {
        SparseVec image;
        for (std::size_t r = 0; r < k; ++r) {
          Rational coef = 0;
          for (std::size_t c = 0; c < k; ++c) coef += gs_inv(r, c) * g(chosen[c], a);
          if (sgn(coef) != 0) image[new_ids[r]] = coef;
        }
        f_act[cands[a].i][cands[a].b] = std::move(image);
      }
      blocks[mu] = std::move(block);
      next_layer.insert(next_layer.end(), new_ids.begin(), new_ids.end());
    }
    layer = std::move(next_layer);
    if (static_cast<std::int64_t>(weight.size()) > expected) {
      throw std::logic_error("Verma quotient grew beyond the Weyl dimension");
    }
  }
  const int dim = static_cast<int>(weight.size());
  if (dim != expected) throw std::logic_error("Verma quotient dimension differs from the Weyl dimension");

  WeightModule mod;
  mod.id_ = weight_id(lambda);
  mod.highest_weight_ = lambda;
  mod.weights_ = weight;
  mod.highest_indices_ = {0};
  for (int j = 0; j < n; ++j) {
    RatMatrix e(dim, dim), f(dim, dim), h(dim, dim);
    f_act[j].resize(dim);
    for (int b = 0; b < dim; ++b) {
      for (const auto& [u, coef] : e_act[j][b]) e(u, b) = coef;
      for (const auto& [u, coef] : f_act[j][b]) f(u, b) = coef;
      h(b, b) = weight[b][j];
    }
    mod.act_e_.push_back(std::move(e));
    mod.act_f_.push_back(std::move(f));
    mod.act_h_.push_back(std::move(h));
  }
  mod.gram_ = RatMatrix(dim, dim);
  for (const auto& [mu, block] : blocks)
    for (std::size_t r = 0; r < block.ids.size(); ++r)
      for (std::size_t c = 0; c < block.ids.size(); ++c) mod.gram_(block.ids[r], block.ids[c]) = block.gram(r, c);
  mod.finish(datum);
  return mod;
}

void WeightModule::finish(const RootDatum& datum) {
  const int n = datum.rank();
  sparse_e_.clear();
  sparse_f_.clear();
  for (int i = 0; i < n; ++i) {
    sparse_e_.emplace_back(act_e_[i]);
    sparse_f_.emplace_back(act_f_[i]);
  }
  // e_xi = [e_i, e_{xi - alpha_i}] / (p + 1), f_xi = [f_{xi - alpha_i}, f_i] / (p + 1),
  // with i the smallest index such that xi - alpha_i is a root
  root_e_.assign(datum.num_positive_roots(), RatMatrix());
  root_f_.assign(datum.num_positive_roots(), RatMatrix());
  for (int r = 0; r < datum.num_positive_roots(); ++r) {
    if (datum.height(r) == 1) {
      root_e_[r] = act_e_[r];
      root_f_[r] = act_f_[r];
      continue;
    }
    const IntVector& xi = datum.positive_roots()[r];
    for (int i = 0; i < n; ++i) {
      IntVector rest = xi;
      rest[i] -= 1;
      auto prev = datum.root_index(rest);
      if (!prev) continue;
      int p = 0;
      IntVector down = rest;
      while (true) {
        down[i] -= 1;
        if (!datum.root_index(down)) break;
        ++p;
      }
      Rational scale(1, p + 1);
      root_e_[r] = scale * commutator(act_e_[i], root_e_[*prev]);
      root_f_[r] = scale * commutator(root_f_[*prev], act_f_[i]);
      break;
    }
  }
  sparse_root_e_.clear();
  sparse_root_f_.clear();
  for (int r = 0; r < datum.num_positive_roots(); ++r) {
    sparse_root_e_.emplace_back(root_e_[r]);
    sparse_root_f_.emplace_back(root_f_[r]);
  }
}

RatMatrix contravariant_form(const std::vector<RatMatrix>& e, const std::vector<RatMatrix>& f,
                             const std::vector<IntVector>& weights, const std::vector<int>& normalized) {
  const int dim = static_cast<int>(weights.size());
  std::map<IntVector, std::vector<int>> blocks;
  for (int b = 0; b < dim; ++b) blocks[weights[b]].push_back(b);
  // unknowns: G[a][b] with a <= b in a common weight block
  std::map<std::pair<int, int>, int> var;
  for (const auto& [mu, ids] : blocks)
    for (std::size_t x = 0; x < ids.size(); ++x)
      for (std::size_t y = x; y < ids.size(); ++y) var.emplace(std::make_pair(ids[x], ids[y]), static_cast<int>(var.size()));
  auto var_of = [&](int a, int b) -> int {
    auto it = var.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
    return it == var.end() ? -1 : it->second;
  };
  const int nv = static_cast<int>(var.size());
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t i = 0; i < e.size(); ++i) {
    // (e_i^T G - G f_i)[r][c] = sum_k E[k][r] G[k][c] - sum_k G[r][k] F[k][c]
    std::set<std::pair<int, int>> entries;
    for (int k = 0; k < dim; ++k) {
      for (int r = 0; r < dim; ++r) {
        if (sgn(e[i](k, r)) != 0)
          for (int c : blocks[weights[k]]) entries.emplace(r, c);
        if (sgn(f[i](k, r)) != 0)
          for (int a : blocks[weights[k]]) entries.emplace(a, r);
      }
    }
    for (const auto& [r, c] : entries) {
      RatVector row(nv);
      for (int k = 0; k < dim; ++k) {
        if (sgn(e[i](k, r)) != 0) {
          int v = var_of(k, c);
          if (v >= 0) row[v] += e[i](k, r);
        }
        if (sgn(f[i](k, c)) != 0) {
          int v = var_of(r, k);
          if (v >= 0) row[v] -= f[i](k, c);
        }
      }
      if (!is_zero(row)) {
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
    }
  }
  for (int hw : normalized) {
    RatVector row(nv);
    row[var_of(hw, hw)] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  RatMatrix a = RatMatrix::from_rows(rows);
  auto sol = solve(a, rhs);
  if (!sol) throw std::logic_error("no contravariant form with the requested normalization");
  if (!nullspace(a).empty()) throw std::logic_error("contravariant form is not unique");
  RatMatrix g(dim, dim);
  for (const auto& [key, v] : var) {
    g(key.first, key.second) = (*sol)[v];
    g(key.second, key.first) = (*sol)[v];
  }
  return g;
}

namespace {

IntVector signed_root(const RootDatum& d, const ChevalleyLabel& l) {
  if (l.kind == ChevalleyLabel::Kind::H) return IntVector(d.rank(), 0);
  IntVector r = d.positive_roots()[l.index];
  if (l.kind == ChevalleyLabel::Kind::F)
    for (int& x : r) x = -x;
  return r;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(RootDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank();
  const int N = datum_.num_positive_roots();
  for (int r = 0; r < N; ++r) labels_.push_back({ChevalleyLabel::Kind::E, r});
  for (int i = 0; i < n; ++i) labels_.push_back({ChevalleyLabel::Kind::H, i});
  for (int r = 0; r < N; ++r) labels_.push_back({ChevalleyLabel::Kind::F, r});

  // faithful representation: the smallest fundamental module of each Dynkin component
  for (NodeSet comp : datum_.dynkin_components()) {
    int best = -1;
    std::int64_t best_dim = 0;
    for (int i : members(comp)) {
      IntVector w(n, 0);
      w[i] = 1;
      auto dim = weyl_dimension(datum_, w);
      if (best < 0 || dim < best_dim) {
        best = i;
        best_dim = dim;
      }
    }
    IntVector w(n, 0);
    w[best] = 1;
    faithful_.push_back(build_irreducible(datum_, w, static_cast<int>(best_dim)));
  }

  auto matrix_of = [&](int slot, const WeightModule& m) -> const RatMatrix& {
    const auto& l = labels_[slot];
    switch (l.kind) {
      case ChevalleyLabel::Kind::E:
        return m.root_e(l.index);
      case ChevalleyLabel::Kind::F:
        return m.root_f(l.index);
      default:
        return m.h(l.index);
    }
  };

  const int D = dimension();
  table_.assign(static_cast<std::size_t>(D) * D, RatVector(D));
  for (int a = 0; a < D; ++a) {
    for (int b = a + 1; b < D; ++b) {
      IntVector target = signed_root(datum_, labels_[a]);
      IntVector wb = signed_root(datum_, labels_[b]);
      for (int k = 0; k < n; ++k) target[k] += wb[k];
      std::vector<RatMatrix> comm;
      for (const auto& m : faithful_) comm.push_back(commutator(matrix_of(a, m), matrix_of(b, m)));
      RatVector result(D);
      bool is_zero_weight = std::all_of(target.begin(), target.end(), [](int x) { return x == 0; });
      if (is_zero_weight) {
        // combination of the h_i, read off the diagonals
        std::vector<RatVector> rows;
        RatVector rhs;
        for (std::size_t mi = 0; mi < faithful_.size(); ++mi) {
          for (int p = 0; p < faithful_[mi].dimension(); ++p) {
            RatVector row(n);
            for (int i = 0; i < n; ++i) row[i] = faithful_[mi].h(i)(p, p);
            rows.push_back(row);
            rhs.push_back(comm[mi](p, p));
          }
        }
        auto x = solve(RatMatrix::from_rows(rows), rhs);
        if (!x) throw std::logic_error("bracket does not lie in the Cartan subalgebra");
        for (int i = 0; i < n; ++i) result[h_slot(i)] = (*x)[i];
      } else {
        IntVector pos = target;
        bool negative = is_negative(target);
        if (negative)
          for (int& x : pos) x = -x;
        auto idx = datum_.root_index(pos);
        if (idx) {
          int t = negative ? f_slot(*idx) : e_slot(*idx);
          // coefficient from any nonzero entry of the target matrix
          Rational coef = 0;
          bool found = false;
          for (std::size_t mi = 0; mi < faithful_.size() && !found; ++mi) {
            const RatMatrix& mt = matrix_of(t, faithful_[mi]);
            for (std::size_t p = 0; p < mt.rows() && !found; ++p)
              for (std::size_t q = 0; q < mt.cols() && !found; ++q)
                if (sgn(mt(p, q)) != 0) {
                  coef = comm[mi](p, q) / mt(p, q);
                  found = true;
                }
          }
          result[t] = coef;
        }
      }
      // exact verification of the decomposition in every module
      for (std::size_t mi = 0; mi < faithful_.size(); ++mi) {
        RatMatrix rebuilt(faithful_[mi].dimension(), faithful_[mi].dimension());
        for (int s = 0; s < D; ++s)
          if (sgn(result[s]) != 0) rebuilt = rebuilt + result[s] * matrix_of(s, faithful_[mi]);
        if (!(rebuilt == comm[mi])) throw std::logic_error("bracket does not close on the Chevalley basis");
      }
      table_[static_cast<std::size_t>(a) * D + b] = result;
      table_[static_cast<std::size_t>(b) * D + a] = scaled(Rational(-1), result);
    }
  }
}

std::string ChevalleyBasis::label_name(int slot) const {
  const auto& l = labels_[slot];
  if (l.kind == ChevalleyLabel::Kind::H) return "h" + std::to_string(l.index + 1);
  std::string prefix = l.kind == ChevalleyLabel::Kind::E ? "e" : "f";
  if (datum_.height(l.index) == 1) return prefix + std::to_string(l.index + 1);
  std::string s = prefix + "[";
  const auto& root = datum_.positive_roots()[l.index];
  for (std::size_t k = 0; k < root.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(root[k]);
  }
  return s + "]";
}

IntVector ChevalleyBasis::slot_weight(int slot) const { return datum_.root_weight(signed_root(datum_, labels_[slot])); }

RatVector ChevalleyBasis::bracket(const RatVector& x, const RatVector& y) const {
  const int D = dimension();
  RatVector out(D);
  for (int a = 0; a < D; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < D; ++b) {
      if (sgn(y[b]) == 0) continue;
      const auto& ab = bracket_basis(a, b);
      Rational s = x[a] * y[b];
      for (int c = 0; c < D; ++c)
        if (sgn(ab[c]) != 0) out[c] += s * ab[c];
    }
  }
  return out;
}

Rational ChevalleyBasis::structure_constant(int a, int b) const {
  IntVector target = signed_root(datum_, labels_[a]);
  IntVector wb = signed_root(datum_, labels_[b]);
  for (std::size_t k = 0; k < target.size(); ++k) target[k] += wb[k];
  bool negative = is_negative(target);
  IntVector pos = target;
  if (negative)
    for (int& x : pos) x = -x;
  auto idx = datum_.root_index(pos);
  if (!idx) return 0;
  return bracket_basis(a, b)[negative ? f_slot(*idx) : e_slot(*idx)];
}

RatVector ChevalleyBasis::regular_nilpotent(NodeSet J) const {
  RatVector e(dimension());
  for (int i : members(J)) e[e_slot(i)] = 1;
  return e;
}

RatVector ChevalleyBasis::basis_vector(int slot) const {
  RatVector v(dimension());
  v[slot] = 1;
  return v;
}

WeightModule adjoint_module(const ChevalleyBasis& basis) {
  const RootDatum& d = basis.datum();
  const int D = basis.dimension();
  WeightModule mod;
  mod.id_ = "adjoint";
  for (int s = 0; s < D; ++s) {
    mod.weights_.push_back(basis.slot_weight(s));
    mod.labels_.push_back(basis.label_name(s));
  }
  auto ad = [&](int slot) {
    RatMatrix m(D, D);
    for (int b = 0; b < D; ++b) {
      const auto& col = basis.bracket_basis(slot, b);
      for (int c = 0; c < D; ++c) m(c, b) = col[c];
    }
    return m;
  };
  for (int i = 0; i < d.rank(); ++i) {
    mod.act_e_.push_back(ad(basis.e_slot(i)));
    mod.act_f_.push_back(ad(basis.f_slot(i)));
    mod.act_h_.push_back(ad(basis.h_slot(i)));
  }
  for (NodeSet comp : d.dynkin_components()) {
    int top = -1;
    for (int r = 0; r < d.num_positive_roots(); ++r)
      if (is_subset(d.support(r), comp)) top = r;
    mod.highest_indices_.push_back(basis.e_slot(top));
  }
  mod.highest_weight_ = mod.weights_[mod.highest_indices_.front()];
  mod.gram_ = contravariant_form(mod.act_e_, mod.act_f_, mod.weights_, mod.highest_indices_);
  mod.finish(d);
  return mod;
}

WeightModule build_irreducible(const ChevalleyBasis& basis, const IntVector& lambda, int cap) {
  return build_irreducible(basis.datum(), lambda, cap);
}

}  // namespace tnnlab
