#include "tnnlab/toric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tnnlab {

namespace {

// Gaussian elimination with partial pivoting; the systems here are Cartan submatrices.
RealVector solve_small(std::vector<RealVector> a, RealVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0) throw std::logic_error("singular Cartan submatrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      long double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  RealVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

Rational power(const Rational& base, long long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

void require_rank(const CartanMatrix& c, const CoxPoint& p) {
  if (p.rank() != c.rank()) throw std::invalid_argument("Cox point rank does not match the Cartan matrix");
}

}  // namespace

CoxPoint CoxPoint::from_rational(const RatVector& x, const RatVector& y) {
  CoxPoint p;
  for (const auto& v : x) p.x.push_back(to_long_double(v));
  for (const auto& v : y) p.y.push_back(to_long_double(v));
  return p;
}

void validate(const CoxPoint& p) {
  if (p.x.size() != p.y.size()) throw std::invalid_argument("Cox point: x and y have different lengths");
  for (int i = 0; i < p.rank(); ++i) {
    for (long double v : {p.x[i], p.y[i]})
      if (!std::isfinite(v) || v < 0) throw std::invalid_argument("Cox point: coordinates must be finite and >= 0");
    if (p.x[i] == 0 && p.y[i] == 0)
      throw std::invalid_argument("Cox point: (x_" + std::to_string(i + 1) + ", y_" + std::to_string(i + 1) + ") = (0, 0)");
  }
}

StratumLabel stratum_of(const CoxPoint& p) {
  validate(p);
  StratumLabel s;
  for (int i = 0; i < p.rank(); ++i) {
    if (p.x[i] == 0) s.K = with(s.K, i);
    if (p.y[i] != 0) s.J = with(s.J, i);
  }
  return s;
}

CanonicalCoxPoint canonicalize(const CartanMatrix& c, const CoxPoint& p) {
  require_rank(c, p);
  CanonicalCoxPoint out;
  out.label = stratum_of(p);
  const int n = p.rank();
  const NodeSet J = out.label.J;
  RealVector lx(n, 0), ly(n, 0);
  for (int i = 0; i < n; ++i) {
    if (p.x[i] > 0) lx[i] = std::log(p.x[i]);
    if (p.y[i] > 0) ly[i] = std::log(p.y[i]);
  }
  auto act = [&](const RealVector& u) {
    for (int i = 0; i < n; ++i) {
      lx[i] += u[i];
      long double cu = 0;
      for (int k = 0; k < n; ++k) cu += c(i, k) * u[k];
      ly[i] += cu;
    }
  };
  // x_i -> 1 off J; x_i is nonzero there
  RealVector u(n, 0);
  for (int i = 0; i < n; ++i)
    if (!contains(J, i)) u[i] = -lx[i];
  act(u);
  // y_j -> 1 on J with a coweight supported on J, which leaves x off J alone
  auto nodes = members(J);
  if (!nodes.empty()) {
    std::vector<RealVector> a(nodes.size(), RealVector(nodes.size()));
    RealVector b(nodes.size());
    for (std::size_t r = 0; r < nodes.size(); ++r) {
      for (std::size_t k = 0; k < nodes.size(); ++k) a[r][k] = c(nodes[r], nodes[k]);
      b[r] = -ly[nodes[r]];
    }
    RealVector w = solve_small(a, b);
    RealVector v(n, 0);
    for (std::size_t k = 0; k < nodes.size(); ++k) v[nodes[k]] = w[k];
    act(v);
  }
  for (int i : members(J & ~out.label.K)) out.free.push_back(std::exp(lx[i]));
  return out;
}

CoxPoint to_cox_point(const CanonicalCoxPoint& q, int rank) {
  const auto& [K, J] = q.label;
  if (!is_subset(K, J) || !is_subset(J, full_set(rank))) throw std::invalid_argument("invalid stratum label");
  if (static_cast<int>(q.free.size()) != popcount(J & ~K)) throw std::invalid_argument("free coordinates do not match J - K");
  CoxPoint p;
  p.x.assign(rank, 1);
  p.y.assign(rank, 0);
  std::size_t k = 0;
  for (int i = 0; i < rank; ++i) {
    if (!contains(J, i)) continue;
    p.y[i] = 1;
    p.x[i] = contains(K, i) ? 0 : q.free[k++];
  }
  return p;
}

CoxPoint torus_act(const CartanMatrix& c, const CoxPoint& p, const RealVector& u) {
  require_rank(c, p);
  if (static_cast<int>(u.size()) != p.rank()) throw std::invalid_argument("torus element has the wrong rank");
  CoxPoint out = p;
  for (int i = 0; i < p.rank(); ++i) {
    long double cu = 0;
    for (int k = 0; k < p.rank(); ++k) cu += c(i, k) * u[k];
    out.x[i] *= std::exp(u[i]);
    out.y[i] *= std::exp(cu);
  }
  return out;
}

bool equivalent(const CartanMatrix& c, const CoxPoint& p, const CoxPoint& q, long double rel_tol) {
  auto a = canonicalize(c, p);
  auto b = canonicalize(c, q);
  if (!(a.label == b.label)) return false;
  for (std::size_t k = 0; k < a.free.size(); ++k) {
    long double scale = std::max(std::fabs(a.free[k]), std::fabs(b.free[k]));
    if (std::fabs(a.free[k] - b.free[k]) > rel_tol * scale) return false;
  }
  return true;
}

CoxPoint random_cox_point(int rank, StratumLabel label, std::mt19937_64& rng, double lo, double hi) {
  if (!is_subset(label.K, label.J)) throw std::invalid_argument("stratum label needs K subset J");
  std::uniform_real_distribution<double> logu(std::log(lo), std::log(hi));
  CoxPoint p;
  for (int i = 0; i < rank; ++i) {
    p.x.push_back(contains(label.K, i) ? 0.0L : static_cast<long double>(std::exp(logu(rng))));
    p.y.push_back(contains(label.J, i) ? static_cast<long double>(std::exp(logu(rng))) : 0.0L);
  }
  return p;
}

MomentMap::MomentMap(const RootDatum& d, const WeightPolytope& p, std::size_t max_box)
    : rank_(d.rank()), lambda_(p.lambda()) {
  if (p.rank() != d.rank()) throw std::invalid_argument("polytope and root datum have different ranks");
  const int n = rank_;
  for (int i = 0; i < n; ++i) coweights_.push_back(fundamental_coweight(d, i));

  mpz_class N = 1;
  for (const auto& v : p.vertices())
    for (int i = 0; i < n; ++i) {
      Rational a = dot(v, coweights_[i]);
      mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), a.get_den_mpz_t());
    }
  if (!N.fits_slong_p()) throw std::length_error("moment map dilation too large");
  dilation_ = N.get_si();

  std::vector<long long> top(n);
  long double box = 1;
  for (int i = 0; i < n; ++i) {
    Rational ci = Rational(N) * dot(lambda_, coweights_[i]);
    top[i] = mpz_class(ci.get_num()).get_si();
    box *= static_cast<long double>(top[i] + 1);
  }
  if (box > static_cast<long double>(max_box)) {
    std::ostringstream msg;
    msg << "moment map: N P^lambda has a bounding box of " << static_cast<double>(box) << " points (N = " << dilation_
        << "), above the cap of " << max_box;
    throw std::length_error(msg.str());
  }

  const auto& c = d.cartan();
  std::vector<long long> a(n, 0);
  while (true) {
    LatticePoint m;
    m.weight.assign(n, 0);
    bool dominant = true;
    for (int k = 0; k < n && dominant; ++k) {
      for (int j = 0; j < n; ++j) m.weight[k] += a[j] * c(j, k);
      dominant = m.weight[k] >= 0;
    }
    if (dominant) {
      for (int i = 0; i < n; ++i) m.codegree.push_back(top[i] - a[i]);
      points_.push_back(std::move(m));
    }
    int i = 0;
    while (i < n && a[i] == top[i]) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
}

std::vector<RatVector> MomentMap::lattice_points() const {
  std::vector<RatVector> out;
  for (const auto& m : points_) {
    RatVector v;
    for (long long w : m.weight) v.push_back(Rational(static_cast<long>(w)));
    out.push_back(v);
  }
  return out;
}

RealVector MomentMap::operator()(const CoxPoint& p) const {
  validate(p);
  if (p.rank() != rank_) throw std::invalid_argument("Cox point rank does not match the polytope");
  const int n = rank_;
  RealVector lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = p.x[i] > 0 ? std::log(p.x[i]) : 0;
    ly[i] = p.y[i] > 0 ? std::log(p.y[i]) : 0;
  }
  std::vector<std::pair<long double, const LatticePoint*>> terms;
  long double top = -INFINITY;
  for (const auto& m : points_) {
    long double L = 0;
    bool alive = true;
    for (int i = 0; i < n && alive; ++i) {
      if (m.weight[i] > 0) {
        if (p.x[i] == 0) alive = false;
        else L += m.weight[i] * lx[i];
      }
      if (m.codegree[i] > 0) {
        if (p.y[i] == 0) alive = false;
        else L += m.codegree[i] * ly[i];
      }
    }
    if (!alive) continue;
    terms.emplace_back(L, &m);
    top = std::max(top, L);
  }
  RealVector mu(n, 0);
  long double total = 0;
  for (const auto& [L, m] : terms) {
    long double w = std::exp(L - top);
    total += w;
    for (int k = 0; k < n; ++k) mu[k] += w * m->weight[k];
  }
  for (auto& v : mu) v /= total * dilation_;
  return mu;
}

RatVector MomentMap::exact(const RatVector& x, const RatVector& y) const {
  validate(CoxPoint::from_rational(x, y));
  if (static_cast<int>(x.size()) != rank_) throw std::invalid_argument("Cox point rank does not match the polytope");
  const int n = rank_;
  RatVector mu(n);
  Rational total = 0;
  for (const auto& m : points_) {
    Rational w = 1;
    for (int i = 0; i < n && w != 0; ++i) {
      if (m.weight[i] > 0) w *= power(x[i], m.weight[i]);
      if (m.codegree[i] > 0) w *= power(y[i], m.codegree[i]);
    }
    if (w == 0) continue;
    total += w;
    for (int k = 0; k < n; ++k) mu[k] += w * Rational(static_cast<long>(m.weight[k]));
  }
  for (auto& v : mu) {
    v /= total * Rational(static_cast<long>(dilation_));
    v.canonicalize();
  }
  return mu;
}

RealVector MomentMap::facet_values(const RealVector& nu) const {
  const int n = rank_;
  RealVector out(2 * n);
  for (int i = 0; i < n; ++i) {
    out[i] = nu[i];
    long double s = 0;
    for (int k = 0; k < n; ++k) s += (to_long_double(lambda_[k]) - nu[k]) * to_long_double(coweights_[i][k]);
    out[n + i] = s;
  }
  return out;
}

MomentMap::CellCheck MomentMap::check_cell(StratumLabel label, const RealVector& nu, long double tol) const {
  const int n = rank_;
  CellCheck r;
  r.worst_slack = INFINITY;
  auto vals = facet_values(nu);
  std::ostringstream bad;
  for (int f = 0; f < 2 * n; ++f) {
    int i = f % n;
    bool tight = f < n ? contains(label.K, i) : !contains(label.J, i);
    if (tight) {
      r.worst_tight = std::max(r.worst_tight, std::fabs(vals[f]));
      if (std::fabs(vals[f]) > tol) bad << (f < n ? " H_" : " H^lambda_") << i + 1 << " not tight";
    } else {
      r.worst_slack = std::min(r.worst_slack, vals[f]);
      if (vals[f] <= tol) bad << (f < n ? " H_" : " H^lambda_") << i + 1 << " touched";
    }
  }
  r.detail = bad.str();
  r.ok = r.detail.empty();
  return r;
}

}  // namespace tnnlab
