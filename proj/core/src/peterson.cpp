#include "tnnlab/peterson.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tnnlab {

std::vector<NodeSet> dynkin_components_of(const RootDatum& d, NodeSet J) {
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int start : members(J)) {
    if (contains(seen, start)) continue;
    NodeSet comp = with(0, start);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : members(J))
        if (j != i && d.cartan()(i, j) != 0 && !contains(comp, j)) {
          comp = with(comp, j);
          queue.push_back(j);
        }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<int> type_a_path(const CartanMatrix& c, NodeSet component) {
  auto nodes = members(component);
  if (nodes.empty()) return {};
  auto degree = [&](int i) {
    int deg = 0;
    for (int j : nodes)
      if (j != i && c(i, j) != 0) ++deg;
    return deg;
  };
  for (int i : nodes)
    for (int j : nodes)
      if (i != j && c(i, j) != 0 && c(i, j) != -1) return {};
  int start = nodes.front();
  for (int i : nodes) {
    if (degree(i) > 2) return {};
    if (degree(i) <= 1) {
      start = i;
      break;
    }
  }
  std::vector<int> path{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int j : nodes)
      if (j != cur && j != prev && c(cur, j) != 0) next = j;
    if (next < 0) break;
    if (std::find(path.begin(), path.end(), next) != path.end()) return {};  // cycle
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  if (path.size() != nodes.size()) return {};
  return path;
}

namespace {

IntVector local_root(const IntVector& beta, const std::vector<int>& nodes) {
  IntVector out(nodes.size());
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    auto it = std::find(nodes.begin(), nodes.end(), static_cast<int>(k));
    if (it == nodes.end()) throw std::invalid_argument("root leaves the block");
    out[it - nodes.begin()] = beta[k];
  }
  return out;
}

NodeSet local_set(NodeSet J, const std::vector<int>& nodes) {
  NodeSet out = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (contains(J, nodes[k])) out = with(out, static_cast<int>(k));
  return out;
}

// Lie element restricted to the roots supported on `nodes`, in the Levi basis.
RatVector restrict_lie(const ChevalleyBasis& cb, const RatVector& lie, const std::vector<int>& nodes,
                       const ChevalleyBasis& levi) {
  RatVector out(levi.dimension());
  for (int r = 0; r < cb.num_roots(); ++r) {
    if (sgn(lie[cb.e_slot(r)]) == 0) continue;
    const auto& beta = cb.datum().positive_roots()[r];
    bool inside = true;
    for (std::size_t k = 0; k < beta.size(); ++k)
      if (beta[k] != 0 && std::find(nodes.begin(), nodes.end(), static_cast<int>(k)) == nodes.end()) inside = false;
    if (!inside) continue;
    auto lr = levi.datum().root_index(local_root(beta, nodes));
    if (!lr) throw std::logic_error("restricted root missing from the Levi datum");
    out[levi.e_slot(*lr)] = lie[cb.e_slot(r)];
  }
  return out;
}

RatVector combine(const std::vector<RatVector>& basis, const RatVector& coords, int dim) {
  RatVector lie(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (int s = 0; s < dim; ++s)
      if (sgn(basis[k][s]) != 0) lie[s] += coords[k] * basis[k][s];
  }
  return lie;
}

GroupElement point_element(const RootDatum& d, NodeSet J, const RatVector& lie) {
  GroupElement x;
  if (!is_zero(lie)) x = gen(GroupToken::exp(lie));
  return x * wdot(d.longest_element(J));
}

}  // namespace

PetersonPoint make_peterson_point(const GroupContext& ctx, NodeSet J, const RatVector& coords) {
  const auto& cb = ctx.chevalley();
  if (!is_subset(J, ctx.datum().all_nodes())) throw std::invalid_argument("J is not a subset of the nodes");
  auto basis = centralizer_basis(cb, J);
  if (coords.size() != basis.size()) {
    throw std::invalid_argument("expected " + std::to_string(basis.size()) + " centralizer coordinates, got " +
                                std::to_string(coords.size()));
  }
  PetersonPoint p;
  p.J = J;
  p.coords = coords;
  p.lie = combine(basis, coords, cb.dimension());
  p.element = point_element(ctx.datum(), J, p.lie);
  return p;
}

bool peterson_membership(const GroupContext& ctx, const GroupElement& g) {
  const auto& cb = ctx.chevalley();
  const auto& d = ctx.datum();
  RatVector v = ad_inverse(ctx, g, cb.regular_nilpotent(d.all_nodes()));
  for (int r = 0; r < cb.num_roots(); ++r)
    if (d.height(r) >= 2 && sgn(v[cb.f_slot(r)]) != 0) return false;
  return true;
}

RatVector delta_vector(const GroupContext& ctx, const GroupElement& g) {
  RatVector out;
  for (int i = 0; i < ctx.datum().rank(); ++i) out.push_back(delta_varpi(ctx, i, g));
  return out;
}

StratumLabel classify_stratum(const GroupContext& ctx, const PetersonPoint& p, bool tnn_sampled) {
  RatVector delta = delta_vector(ctx, p.element);
  StratumLabel label{0, p.J};
  for (int i = 0; i < ctx.datum().rank(); ++i) {
    if (!contains(p.J, i) && delta[i] != 1) {
      throw std::logic_error("Delta_" + std::to_string(i + 1) + " = " + to_string(delta[i]) +
                             " on a node outside J (expected 1)");
    }
    if (tnn_sampled && delta[i] < 0) {
      throw std::logic_error("negative Delta_" + std::to_string(i + 1) + " = " + to_string(delta[i]) +
                             " on a nonnegative sample");
    }
    if (sgn(delta[i]) == 0) label.K = with(label.K, i);
  }
  return label;
}

PsiValue psi(const GroupContext& ctx, const PetersonPoint& p) {
  PsiValue out;
  out.delta = delta_vector(ctx, p.element);
  for (int i = 0; i < ctx.datum().rank(); ++i) out.q.push_back(q_value(ctx, i, p.element));
  return out;
}

std::vector<SplitPiece> split_components(const GroupContext& ctx, const PetersonPoint& p,
                                         const std::vector<NodeSet>& partition) {
  const auto& d = ctx.datum();
  NodeSet covered = 0;
  for (NodeSet b : partition) {
    if (b == 0) throw std::invalid_argument("empty block in partition");
    if (covered & b) throw std::invalid_argument("partition blocks overlap");
    covered |= b;
  }
  if (covered != d.all_nodes()) throw std::invalid_argument("partition does not cover all nodes");
  for (NodeSet b : partition)
    for (int i : members(b))
      for (int j = 0; j < d.rank(); ++j)
        if (!contains(b, j) && d.cartan()(i, j) != 0) {
          throw std::invalid_argument("partition block " + format_nodes(b) + " cuts a Dynkin edge");
        }

  std::vector<SplitPiece> out;
  for (NodeSet b : partition) {
    auto nodes = members(b);
    SplitPiece piece;
    piece.nodes = b;
    piece.context = std::make_shared<GroupContext>(
        RootDatum(d.cartan().restrict_to(b, d.cartan().name() + format_nodes(b))), ctx.dimension_cap());
    const auto& levi = piece.context->chevalley();
    NodeSet local_J = local_set(p.J, nodes);
    RatVector lie = restrict_lie(ctx.chevalley(), p.lie, nodes, levi);
    auto basis = centralizer_basis(levi, local_J);
    RatMatrix columns(levi.dimension(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (int s = 0; s < levi.dimension(); ++s) columns(s, k) = basis[k][s];
    auto coords = solve(columns, lie);
    if (!coords) throw std::logic_error("restricted point left the centralizer");
    piece.point = make_peterson_point(*piece.context, local_J, *coords);
    if (piece.point.lie != lie) throw std::logic_error("restricted point left the centralizer");
    out.push_back(std::move(piece));
  }
  return out;
}

PetersonPoint sample_peterson_point(const GroupContext& ctx, NodeSet J, std::mt19937_64& rng) {
  auto size = centralizer_basis(ctx.chevalley(), J).size();
  RatVector coords;
  for (std::size_t k = 0; k < size; ++k) coords.push_back(random_rational(rng, -4, 4, 3));
  return make_peterson_point(ctx, J, coords);
}

namespace {

// lambda_k with z_k = lambda_k N^k in the vector representation of A_m, z_k the height-k
// centralizer element. Depends only on the Cartan matrix of the component.
std::vector<Rational> toeplitz_scales(const RootDatum& d, NodeSet component, const std::vector<int>& path) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<IntVector>, int>, std::vector<Rational>> cache;
  auto nodes = members(component);
  CartanMatrix local = d.cartan().restrict_to(component, "levi");
  int end = static_cast<int>(std::find(nodes.begin(), nodes.end(), path.front()) - nodes.begin());
  auto key = std::make_pair(local.entries(), end);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ChevalleyBasis levi{RootDatum(local)};
  IntVector w(nodes.size(), 0);
  w[end] = 1;
  WeightModule vec = build_irreducible(levi, w);
  RatMatrix n_mat(vec.dimension(), vec.dimension());
  for (int i = 0; i < levi.datum().rank(); ++i) n_mat = n_mat + vec.e(i);
  auto basis = centralizer_basis(levi, levi.datum().all_nodes());
  std::vector<Rational> scales;
  RatMatrix power = RatMatrix::identity(vec.dimension());
  for (const auto& z : basis) {
    power = power * n_mat;
    RatMatrix m(vec.dimension(), vec.dimension());
    for (int r = 0; r < levi.num_roots(); ++r)
      if (sgn(z[levi.e_slot(r)]) != 0) m = m + z[levi.e_slot(r)] * vec.root_e(r);
    std::optional<Rational> ratio;
    for (std::size_t a = 0; a < power.rows() && !ratio; ++a)
      for (std::size_t b = 0; b < power.cols() && !ratio; ++b)
        if (sgn(power(a, b)) != 0) ratio = m(a, b) / power(a, b);
    if (!ratio || m != *ratio * power) throw std::logic_error("centralizer element is not a power of e");
    scales.push_back(*ratio);
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, scales);
  return scales;
}

// Truncated power series in z, coefficients of z^0..z^m.
using Series = RatVector;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod (1 + r z) prod (1 - s z)^{-1} truncated at z^m
Series edrei_symbol(const RatVector& r, const RatVector& s, int m) {
  Series b(m + 1);
  b[0] = 1;
  for (const auto& x : r) {
    Series f(m + 1);
    f[0] = 1;
    if (m >= 1) f[1] = x;
    b = series_mul(b, f);
  }
  for (const auto& x : s) {
    Series f(m + 1);
    Rational power = 1;
    for (int k = 0; k <= m; ++k, power *= x) f[k] = power;
    b = series_mul(b, f);
  }
  return b;
}

// log b for b[0] = 1, coefficients of z^1..z^m
RatVector series_log(const Series& b) {
  const std::size_t m = b.size() - 1;
  Series u = b;
  u[0] = 0;
  Series power = u;
  RatVector out(m);
  for (std::size_t k = 1; k <= m; ++k) {
    Rational c = Rational(k % 2 == 1 ? 1 : -1, k);
    for (std::size_t j = 1; j <= m; ++j) out[j - 1] += c * power[j];
    power = series_mul(power, u);
  }
  return out;
}

// Upper triangular Toeplitz matrix sum_k b_k S^k, S the shift
RatMatrix toeplitz(const Series& b) {
  const std::size_t n = b.size();
  RatMatrix t(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) t(r, c) = b[c - r];
  return t;
}

// Delta values on the nodes of one component for a point whose only nonzero coords are on it.
bool component_nonnegative(const GroupContext& ctx, NodeSet J, NodeSet comp, const RatVector& coords) {
  auto p = make_peterson_point(ctx, J, coords);
  for (int i : members(comp))
    if (delta_varpi(ctx, i, p.element) < 0) return false;
  return true;
}

}  // namespace

TnnPetersonSample sample_tnn_point(const GroupContext& ctx, NodeSet J, std::mt19937_64& rng) {
  const auto& d = ctx.datum();
  const auto& cb = ctx.chevalley();
  auto basis = centralizer_basis(cb, J);
  RatVector coords(basis.size());
  bool certified = true;
  auto supported_on = [&](const RatVector& z, NodeSet comp) {
    for (int r = 0; r < cb.num_roots(); ++r)
      if (sgn(z[cb.e_slot(r)]) != 0) return is_subset(d.support(r), comp);
    return false;
  };
  for (NodeSet comp : dynkin_components_of(d, J)) {
    std::vector<std::size_t> slots;  // basis indices of this component, increasing height
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (supported_on(basis[k], comp)) slots.push_back(k);
    const int draw = static_cast<int>(random_int(rng, 0, 4));
    if (draw == 0) continue;  // identity on this component
    const int mode = draw <= 2 ? 1 : 2;  // 1 boundary, 2 generic
    auto path = type_a_path(d.cartan(), comp);
    if (!path.empty()) {
      const int m = static_cast<int>(path.size());
      int p = m, q = static_cast<int>(random_int(rng, 0, m));
      if (mode == 1) {
        int total = m == 1 ? 0 : static_cast<int>(random_int(rng, 1, m - 1));
        p = static_cast<int>(random_int(rng, 0, total));
        q = total - p;
      }
      RatVector r, s;
      for (int k = 0; k < p; ++k) r.push_back(random_positive_rational(rng, 9, 4));
      for (int k = 0; k < q; ++k) s.push_back(random_positive_rational(rng, 9, 4));
      Series b = edrei_symbol(r, s, m);
      auto scales = toeplitz_scales(d, comp, path);
      auto coords_for = [&](const Series& symbol) {
        RatVector out = coords;
        auto c = series_log(symbol);
        for (int k = 0; k < m; ++k) out[slots[k]] = c[k] / scales[k];
        return out;
      };
      if (mode == 1 && m >= 2) {
        // push one more Delta to zero through an affine Toeplitz coefficient; keep it only if the
        // Toeplitz matrix stays totally nonnegative
        auto nodes_c = members(comp);
        int i = nodes_c[random_int(rng, 0, m - 1)];
        int k = static_cast<int>(random_int(rng, 1, m));
        std::vector<Rational> values;
        for (int j = 0; j < 6; ++j) {
          Series probe = b;
          probe[k] += j;
          values.push_back(delta_varpi(ctx, i, make_peterson_point(ctx, J, coords_for(probe)).element));
        }
        bool affine = true;
        for (int j = 0; j + 2 < 6; ++j)
          if (values[j + 2] - 2 * values[j + 1] + values[j] != 0) affine = false;
        Rational slope = values[1] - values[0];
        if (affine && sgn(slope) != 0) {
          Series probe = b;
          probe[k] -= values[0] / slope;
          if (min_minor(toeplitz(probe)) >= 0) b = probe;
        }
      }
      coords = coords_for(b);
      continue;
    }
    // other types: Delta-filtered draws around exp(t e_C)
    Rational t = random_positive_rational(rng, 16, 4);
    RatVector trial = coords;
    bool accepted = false;
    for (int attempt = 0; attempt < 50 && !accepted; ++attempt) {
      trial = coords;
      trial[slots[0]] = t;
      for (std::size_t k = 1; k < slots.size(); ++k) {
        Rational scale = 1;
        for (int h = 0; h < lie_height(cb, basis[slots[k]]); ++h) scale *= t;
        trial[slots[k]] = random_rational(rng, -1, 1, 4) * scale;
      }
      accepted = component_nonnegative(ctx, J, comp, trial);
    }
    if (!accepted) {
      trial = coords;
      trial[slots[0]] = t;
    } else {
      certified = false;
    }
    if (mode == 1 && accepted && slots.size() > 1) {
      // Delta_i is often affine in the top coordinate; solve it to zero when it is
      auto members_c = members(comp);
      int i = members_c[random_int(rng, 0, static_cast<int>(members_c.size()) - 1)];
      std::size_t top = slots.back();
      std::vector<Rational> values;
      for (int k = 0; k < 6; ++k) {
        RatVector probe = trial;
        probe[top] += k;
        values.push_back(delta_varpi(ctx, i, make_peterson_point(ctx, J, probe).element));
      }
      bool affine = true;
      for (int k = 0; k + 2 < 6; ++k)
        if (values[k + 2] - 2 * values[k + 1] + values[k] != 0) affine = false;
      Rational slope = values[1] - values[0];
      if (affine && sgn(slope) != 0) {
        RatVector probe = trial;
        probe[top] -= values[0] / slope;
        if (component_nonnegative(ctx, J, comp, probe)) trial = probe;
      }
    }
    coords = trial;
  }
  return TnnPetersonSample{make_peterson_point(ctx, J, coords), certified};
}

namespace {

class DeltaResidual {
 public:
  DeltaResidual(const GroupContext& ctx, NodeSet J, const std::vector<double>& target)
      : ctx_(ctx), J_(J), target_(target), basis_(centralizer_basis(ctx.chevalley(), J)), nodes_(members(J)) {
    for (const auto& z : basis_) first_height_.push_back(lie_height(ctx.chevalley(), z) == 1);
  }

  std::size_t size() const { return basis_.size(); }

  void project(std::vector<double>& c) const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (first_height_[k]) c[k] = std::fabs(c[k]);
  }

  PetersonPoint point(const std::vector<double>& c) const {
    RatVector coords;
    for (double x : c) coords.push_back(from_double(x));
    return make_peterson_point(ctx_, J_, coords);
  }

  std::vector<double> operator()(const std::vector<double>& c) const {
    auto p = point(c);
    std::vector<double> r;
    for (int i : nodes_) r.push_back(to_double(delta_varpi(ctx_, i, p.element)) - target_[i]);
    return r;
  }

  bool is_first_height(std::size_t k) const { return first_height_[k]; }
  int height(std::size_t k) const { return lie_height(ctx_.chevalley(), basis_[k]); }

 private:
  const GroupContext& ctx_;
  NodeSet J_;
  std::vector<double> target_;
  std::vector<RatVector> basis_;
  std::vector<int> nodes_;
  std::vector<bool> first_height_;
};

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double sum_sq(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

// Solves a x = b in place by Gaussian elimination with partial pivoting; false if singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-300) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return true;
}

std::vector<double> grid_start(const DeltaResidual& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<double>> axes(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (f.is_first_height(k)) {
      for (int j = 0; j <= 10; ++j) axes[k].push_back(0.5 * j);
    } else {
      for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) axes[k].push_back(s);
    }
  }
  std::vector<double> best(n, 0.0);
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<double> c(n);
    // height-h coordinates scale like t^h with t the first-height value of the grid point
    double t = 1;
    for (std::size_t k = 0; k < n; ++k)
      if (f.is_first_height(k)) t = axes[k][idx[k]];
    for (std::size_t k = 0; k < n; ++k)
      c[k] = f.is_first_height(k) ? axes[k][idx[k]] : axes[k][idx[k]] * std::pow(t, f.height(k));
    double value = sum_sq(f(c));
    if (value < best_value) {
      best_value = value;
      best = c;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace

InversionResult invert_delta(const GroupContext& ctx, const std::vector<double>& target, NodeSet J,
                             const InversionOptions& options) {
  const auto& d = ctx.datum();
  if (static_cast<int>(target.size()) != d.rank()) throw std::invalid_argument("target has wrong length");
  for (int i = 0; i < d.rank(); ++i) {
    if (!(target[i] >= 0)) throw std::invalid_argument("target entries must be nonnegative");
    if (!contains(J, i) && target[i] != 1) throw std::invalid_argument("target entries outside J must equal 1");
  }
  DeltaResidual f(ctx, J, target);
  InversionResult result;
  std::vector<double> c = options.start ? *options.start : grid_start(f);
  if (c.size() != f.size()) throw std::invalid_argument("start has wrong length");
  f.project(c);
  std::vector<double> r = f(c);
  double mu = 1e-3;
  int it = 0;
  // keep polishing below the tolerance: at a degenerate root (target 0) the coordinates only
  // settle to about sqrt(residual)
  int polish = 0;
  for (; it < options.max_iterations && max_abs(r) > 0; ++it) {
    if (max_abs(r) < options.tolerance && ++polish > 60) break;
    const std::size_t n = c.size(), m = r.size();
    std::vector<std::vector<double>> jac(m, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
      double h = 1e-6 * std::max(1.0, std::fabs(c[k]));
      auto plus = c, minus = c;
      plus[k] += h;
      minus[k] -= h;
      // no projection here: the residual is smooth across zero
      auto rp = f(plus), rm = f(minus);
      for (std::size_t i = 0; i < m; ++i) jac[i][k] = (rp[i] - rm[i]) / (2 * h);
    }
    bool improved = false;
    for (int tries = 0; tries < 30 && !improved; ++tries) {
      std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
      std::vector<double> g(n, 0.0);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t i = 0; i < m; ++i) a[p][q] += jac[i][p] * jac[i][q];
        for (std::size_t i = 0; i < m; ++i) g[p] -= jac[i][p] * r[i];
        a[p][p] += mu * (1 + a[p][p]);
      }
      std::vector<double> step;
      if (!solve_dense(a, g, step)) {
        mu *= 10;
        continue;
      }
      auto next = c;
      for (std::size_t k = 0; k < n; ++k) next[k] += step[k];
      f.project(next);
      auto rn = f(next);
      if (sum_sq(rn) < sum_sq(r)) {
        c = std::move(next);
        r = std::move(rn);
        mu = std::max(mu / 5, 1e-12);
        improved = true;
      } else {
        mu *= 4;
      }
    }
    if (!improved) break;
  }
  result.iterations = it;
  result.coords = c;
  result.point = f.point(c);
  double res = 0;
  for (int i = 0; i < d.rank(); ++i)
    res = std::max(res, std::fabs(to_double(delta_varpi(ctx, i, result.point.element)) - target[i]));
  result.residual = res;
  result.converged = res < options.tolerance;
  return result;
}

}  // namespace tnnlab
