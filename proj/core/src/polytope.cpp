#include "tnnlab/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnnlab {

const Cone* Fan::find(NodeSet K, NodeSet J) const {
  for (const auto& c : cones)
    if (c.K == K && c.J == J) return &c;
  return nullptr;
}

RatVector fundamental_coweight(const RootDatum& d, int i) { return d.cartan_inverse().column(i); }

namespace {

RatVector unit(int n, int i, int sign = 1) {
  RatVector v(n);
  v[i] = sign;
  return v;
}

void sort_rays(std::vector<RatVector>& rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

}  // namespace

Fan build_fan(const RootDatum& d) {
  const int n = d.rank();
  Fan fan;
  fan.rank = n;
  for (NodeSet K : all_subsets(n))
    for (NodeSet J : all_subsets(n)) {
      if (K & J) continue;
      Cone c;
      c.K = K;
      c.J = J;
      for (int i : members(K)) c.rays.push_back(unit(n, i, -1));
      for (int i : members(J)) c.rays.push_back(primitive(fundamental_coweight(d, i)));
      fan.cones.push_back(std::move(c));
    }
  return fan;
}

FanCheck check_fan(const Fan& fan, std::mt19937_64& rng, int directions) {
  const int n = fan.rank;
  FanCheck out;
  std::vector<const Cone*> maximal, ridges;
  for (const auto& c : fan.cones) {
    if (rank(c.rays) != c.rays.size()) {
      out.simplicial = false;
      out.detail += "cone " + format_nodes(c.K) + format_nodes(c.J) + " is not simplicial; ";
    }
    if (c.dimension() == n) maximal.push_back(&c);
    if (c.dimension() == n - 1) ridges.push_back(&c);
  }
  auto ray_subset = [](const Cone& a, const Cone& b) {
    for (const auto& r : a.rays)
      if (std::find(b.rays.begin(), b.rays.end(), r) == b.rays.end()) return false;
    return true;
  };
  for (const Cone* ridge : ridges) {
    std::vector<const Cone*> around;
    for (const Cone* m : maximal)
      if (ray_subset(*ridge, *m)) around.push_back(m);
    bool ok = around.size() == 2;
    if (ok) {
      RatVector normal;
      if (ridge->rays.empty()) {
        normal = RatVector(n);
        normal[0] = 1;  // n = 1: the ridge is the origin
      } else {
        auto ns = nullspace(RatMatrix::from_rows(ridge->rays));
        if (ns.size() != 1) ok = false;
        else normal = ns[0];
      }
      if (ok) {
        int signs[2] = {0, 0};
        for (int k = 0; k < 2; ++k)
          for (const auto& r : around[k]->rays)
            if (std::find(ridge->rays.begin(), ridge->rays.end(), r) == ridge->rays.end()) signs[k] = sgn(dot(normal, r));
        ok = signs[0] != 0 && signs[0] == -signs[1];
      }
    }
    if (!ok) {
      out.ridges_paired = false;
      out.detail += "ridge " + format_nodes(ridge->K) + format_nodes(ridge->J) + " is not shared by two opposite cones; ";
    }
  }
  std::vector<RatMatrix> inverses;
  for (const Cone* m : maximal) {
    RatMatrix cols(n, n);
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < n; ++r) cols(r, k) = m->rays[k][r];
    inverses.push_back(inverse(cols));
  }
  for (int t = 0; t < directions; ++t) {
    RatVector x(n);
    for (auto& q : x) q = static_cast<long>(random_int(rng, -60, 60));
    int hits = 0;
    bool boundary = false;
    for (const auto& inv : inverses) {
      RatVector coef = inv * x;
      bool inside = std::all_of(coef.begin(), coef.end(), [](const Rational& q) { return sgn(q) >= 0; });
      if (!inside) continue;
      ++hits;
      if (std::any_of(coef.begin(), coef.end(), [](const Rational& q) { return sgn(q) == 0; })) boundary = true;
    }
    if (boundary) continue;  // non-generic direction, lies on a wall
    ++out.directions;
    if (hits != 1) {
      out.directions_covered = false;
      out.detail += "direction covered " + std::to_string(hits) + " times; ";
    }
  }
  return out;
}

WeightPolytope::WeightPolytope(const RootDatum& d, RatVector lambda) : lambda_(std::move(lambda)) {
  const int n = d.rank();
  if (static_cast<int>(lambda_.size()) != n) throw std::invalid_argument("lambda has wrong length");
  if (n > 8) throw std::invalid_argument("polytope construction is limited to rank 8");
  for (int i = 0; i < n; ++i)
    if (sgn(lambda_[i]) <= 0) {
      throw std::invalid_argument("lambda must be regular dominant (all fundamental-weight coordinates > 0)");
    }
  for (int i = 0; i < n; ++i) halfspaces_.push_back({unit(n, i, -1), Rational(0)});
  for (int i = 0; i < n; ++i) halfspaces_.push_back({fundamental_coweight(d, i), d.pair_weight_coweight(lambda_, i)});

  for (NodeSet J : all_subsets(n)) {
    RatMatrix a(n, n);
    RatVector b(n);
    for (int i = 0; i < n; ++i) {
      const auto& h = contains(J, i) ? halfspaces_[i] : halfspaces_[n + i];
      for (int k = 0; k < n; ++k) a(i, k) = h.normal[k];
      b[i] = h.bound;
    }
    RatMatrix inv;
    try {
      inv = inverse(a);
    } catch (const std::domain_error&) {
      throw std::logic_error("vertex system for J=" + format_nodes(J) + " is singular");
    }
    vertices_.push_back(inv * b);
  }

  labels_.resize(std::size_t{1} << (2 * n));
  for (NodeSet K : all_subsets(n))
    for (NodeSet J : all_subsets(n)) {
      Face f;
      f.K = K;
      f.J = J;
      std::vector<RatVector> pts;
      for (NodeSet v : all_subsets(n)) {
        const auto& p = vertices_[v];
        if (!contains_point(p)) continue;
        bool tight = true;
        for (int i = 0; i < n && tight; ++i) {
          if (contains(K, i) && dot(halfspaces_[i].normal, p) != halfspaces_[i].bound) tight = false;
          if (!contains(J, i) && dot(halfspaces_[n + i].normal, p) != halfspaces_[n + i].bound) tight = false;
        }
        if (tight) {
          f.vertices.push_back(v);
          pts.push_back(p);
        }
      }
      if (!pts.empty()) {
        std::vector<RatVector> diffs;
        for (std::size_t k = 1; k < pts.size(); ++k) {
          RatVector diff = pts[k];
          for (int c = 0; c < n; ++c) diff[c] -= pts[0][c];
          diffs.push_back(std::move(diff));
        }
        f.dimension = diffs.empty() ? 0 : static_cast<int>(tnnlab::rank(diffs));
      }
      labels_[(static_cast<std::size_t>(K) << n) | J] = std::move(f);
    }
}

bool WeightPolytope::contains_point(const RatVector& nu) const {
  for (const auto& h : halfspaces_)
    if (dot(h.normal, nu) > h.bound) return false;
  return true;
}

std::vector<Face> WeightPolytope::faces() const {
  std::vector<Face> out;
  for (const auto& f : labels_)
    if (!f.vertices.empty()) out.push_back(f);
  return out;
}

WeightPolytope build_polytope(const RootDatum& d, const RatVector& lambda) { return WeightPolytope(d, lambda); }

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] & b[k];
  return out;
}
bool subset_bits(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}
int count_bits(const Bits& a) {
  int c = 0;
  for (auto w : a) c += __builtin_popcountll(w);
  return c;
}

struct Ray {
  RatVector v;
  Bits zeros;
};

}  // namespace

std::vector<RatVector> extreme_rays(const std::vector<RatVector>& constraints, int dim) {
  const std::size_t m = constraints.size();
  const std::size_t words = (m + 63) / 64 + 1;
  // initial basis of constraints
  std::vector<std::size_t> basis;
  std::vector<RatVector> chosen;
  for (std::size_t k = 0; k < m && static_cast<int>(basis.size()) < dim; ++k) {
    chosen.push_back(constraints[k]);
    if (static_cast<int>(rank(chosen)) == static_cast<int>(chosen.size())) {
      basis.push_back(k);
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(basis.size()) < dim) throw std::invalid_argument("cone is not pointed");
  RatMatrix inv = inverse(RatMatrix::from_rows(chosen));
  std::vector<Ray> rays;
  for (int c = 0; c < dim; ++c) {
    Ray r{primitive(inv.column(c)), Bits(words)};
    for (int k = 0; k < dim; ++k)
      if (k != c) set_bit(r.zeros, basis[k]);
    rays.push_back(std::move(r));
  }
  std::vector<bool> done(m, false);
  for (auto k : basis) done[k] = true;
  std::vector<std::size_t> processed(basis.begin(), basis.end());

  for (std::size_t k = 0; k < m; ++k) {
    if (done[k]) continue;
    const auto& a = constraints[k];
    std::vector<Ray> pos, neg, zero;
    std::vector<Rational> pos_val, neg_val;
    for (auto& r : rays) {
      Rational v = dot(a, r.v);
      if (sgn(v) > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (sgn(v) < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        set_bit(r.zeros, k);
        zero.push_back(r);
      }
    }
    std::vector<Ray> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t p = 0; p < pos.size(); ++p)
      for (std::size_t q = 0; q < neg.size(); ++q) {
        Bits common = intersect(pos[p].zeros, neg[q].zeros);
        if (count_bits(common) < dim - 2) continue;
        bool adjacent = true;
        for (const auto& r : rays) {
          if (r.v == pos[p].v || r.v == neg[q].v) continue;
          if (subset_bits(common, r.zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        RatVector v(dim);
        Rational up = -neg_val[q], un = pos_val[p];
        for (int c = 0; c < dim; ++c) v[c] = up * pos[p].v[c] + un * neg[q].v[c];
        Ray r{primitive(v), common};
        set_bit(r.zeros, k);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
    done[k] = true;
  }
  std::vector<RatVector> out;
  for (auto& r : rays) out.push_back(r.v);
  sort_rays(out);
  return out;
}

std::vector<RatVector> hull_oracle(const RootDatum& d, const RatVector& lambda) {
  const int n = d.rank();
  std::set<RatVector> orbit{lambda};
  std::deque<RatVector> queue{lambda};
  while (!queue.empty()) {
    RatVector v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RatVector w = d.reflect_weight(v, i);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  // facets a0 + a . nu >= 0 of Conv(orbit): rays of the polar cone
  std::vector<RatVector> polar;
  for (const auto& v : orbit) {
    RatVector row{Rational(1)};
    row.insert(row.end(), v.begin(), v.end());
    polar.push_back(std::move(row));
  }
  auto facets = extreme_rays(polar, n + 1);
  // clip with the chamber nu_i >= 0 and read off vertices of the homogenized cone
  std::vector<RatVector> cone = facets;
  for (int i = 0; i < n; ++i) {
    RatVector row(n + 1);
    row[i + 1] = 1;
    cone.push_back(std::move(row));
  }
  RatVector t(n + 1);
  t[0] = 1;
  cone.push_back(t);
  std::vector<RatVector> out;
  for (const auto& r : extreme_rays(cone, n + 1)) {
    if (sgn(r[0]) <= 0) throw std::logic_error("clipped hull is unbounded");
    RatVector v(r.begin() + 1, r.end());
    for (auto& q : v) q /= r[0];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubeCheck cube_check(const WeightPolytope& p) {
  const int n = p.rank();
  CubeCheck out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    if (out.detail.size() < 2000) out.detail += msg + "; ";
  };
  for (const auto& v : p.vertices())
    if (!p.contains_point(v)) fail("a vertex violates an inequality");
  std::set<RatVector> distinct(p.vertices().begin(), p.vertices().end());
  if (static_cast<int>(distinct.size()) != (1 << n)) fail("vertices are not distinct");

  std::vector<const Face*> nonempty;
  for (const auto& f : p.all_labels()) {
    std::string label = "(" + format_nodes(f.K) + "," + format_nodes(f.J) + ")";
    bool should = is_subset(f.K, f.J);
    if (should != !f.vertices.empty()) fail("face " + label + (should ? " is empty" : " is nonempty"));
    if (!should || f.vertices.empty()) continue;
    nonempty.push_back(&f);
    if (f.dimension != popcount(f.J) - popcount(f.K)) {
      fail("dim F" + label + " = " + std::to_string(f.dimension));
    }
    // cube face vertices: K subset J' subset J
    std::vector<NodeSet> expected;
    for (NodeSet v : all_subsets(n))
      if (is_subset(f.K, v) && is_subset(v, f.J)) expected.push_back(v);
    if (expected != f.vertices) fail("vertex set of F" + label + " differs from the cube face");
    if (f.dimension == 0) ++out.vertices;
    if (f.dimension == n - 1) ++out.facets;
  }
  out.faces = static_cast<int>(nonempty.size());
  int expected_faces = 1;
  for (int i = 0; i < n; ++i) expected_faces *= 3;
  if (out.faces != expected_faces) fail("face count " + std::to_string(out.faces));
  if (out.vertices != (1 << n)) fail("vertex count " + std::to_string(out.vertices));
  if (out.facets != 2 * n) fail("facet count " + std::to_string(out.facets));

  // order isomorphism: vertex-set inclusion <=> K' subset K and J subset J'
  for (const Face* a : nonempty)
    for (const Face* b : nonempty) {
      bool geometric = std::includes(b->vertices.begin(), b->vertices.end(), a->vertices.begin(), a->vertices.end());
      bool cube = is_subset(b->K, a->K) && is_subset(a->J, b->J);
      if (geometric != cube) {
        fail("order mismatch between (" + format_nodes(a->K) + "," + format_nodes(a->J) + ") and (" +
             format_nodes(b->K) + "," + format_nodes(b->J) + ")");
      }
    }
  return out;
}

Fan normal_fan(const WeightPolytope& p) {
  const int n = p.rank();
  RatVector centroid(n);
  for (const auto& v : p.vertices())
    for (int c = 0; c < n; ++c) centroid[c] += v[c];
  for (auto& q : centroid) q /= static_cast<long>(p.vertices().size());

  struct Facet {
    std::vector<NodeSet> vertices;
    RatVector normal;
  };
  std::vector<Facet> facets;
  auto nonempty = p.faces();
  for (const auto& f : nonempty) {
    if (f.dimension != n - 1) continue;
    const auto& v0 = p.vertex(f.vertices[0]);
    std::vector<RatVector> diffs;
    for (std::size_t k = 1; k < f.vertices.size(); ++k) {
      RatVector diff = p.vertex(f.vertices[k]);
      for (int c = 0; c < n; ++c) diff[c] -= v0[c];
      diffs.push_back(std::move(diff));
    }
    RatVector normal;
    if (diffs.empty()) {
      normal = RatVector{Rational(1)};  // n = 1: a facet is a point
    } else {
      auto ns = nullspace(RatMatrix::from_rows(diffs));
      if (ns.size() != 1) throw std::logic_error("facet does not span a hyperplane");
      normal = ns[0];
    }
    RatVector out_dir = v0;
    for (int c = 0; c < n; ++c) out_dir[c] -= centroid[c];
    if (sgn(dot(normal, out_dir)) < 0)
      for (auto& q : normal) q = -q;
    facets.push_back({f.vertices, primitive(normal)});
  }
  Fan fan;
  fan.rank = n;
  const NodeSet all = full_set(n);
  for (const auto& f : nonempty) {
    Cone c;
    c.K = f.K;
    c.J = all & ~f.J;
    for (const auto& fac : facets)
      if (std::includes(fac.vertices.begin(), fac.vertices.end(), f.vertices.begin(), f.vertices.end()))
        c.rays.push_back(fac.normal);
    sort_rays(c.rays);
    fan.cones.push_back(std::move(c));
  }
  return fan;
}

bool same_fan(const Fan& a, const Fan& b, std::string* detail) {
  auto note = [&](const std::string& msg) {
    if (detail) *detail += msg + "; ";
    return false;
  };
  if (a.rank != b.rank) return note("rank differs");
  if (a.cones.size() != b.cones.size()) {
    return note("cone counts " + std::to_string(a.cones.size()) + " vs " + std::to_string(b.cones.size()));
  }
  bool ok = true;
  for (const auto& c : a.cones) {
    const Cone* other = b.find(c.K, c.J);
    std::string label = "(" + format_nodes(c.K) + "," + format_nodes(c.J) + ")";
    if (!other) {
      ok = note("cone " + label + " missing");
      continue;
    }
    auto ra = c.rays, rb = other->rays;
    sort_rays(ra);
    sort_rays(rb);
    if (ra != rb) ok = note("cone " + label + " has different rays");
  }
  return ok;
}

std::string to_off(const WeightPolytope& p, int digits) {
  const int n = p.rank();
  std::vector<const Face*> two_faces;
  int edges = 0;
  for (const auto& f : p.all_labels()) {
    if (f.vertices.empty()) continue;
    if (f.dimension == 2 && is_subset(f.K, f.J) && popcount(f.J) - popcount(f.K) == 2) two_faces.push_back(&f);
    if (f.dimension == 1) ++edges;
  }
  std::ostringstream out;
  if (n == 3) {
    out << "OFF\n";
  } else {
    out << "nOFF\n" << n << "\n";
  }
  out << (1 << n) << " " << two_faces.size() << " " << edges << "\n";
  for (NodeSet J : all_subsets(n)) {
    const auto& v = p.vertex(J);
    for (int c = 0; c < n; ++c) out << (c ? " " : "") << to_decimal(v[c], digits);
    out << "\n";
  }
  for (const Face* f : two_faces) {
    auto free = members(f->J & ~f->K);
    NodeSet a = with(0, free[0]), b = with(0, free[1]);
    out << "4 " << f->K << " " << (f->K | a) << " " << (f->K | a | b) << " " << (f->K | b) << "\n";
  }
  return out.str();
}

}  // namespace tnnlab
