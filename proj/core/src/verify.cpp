#include "tnnlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tnnlab/catalog.hpp"
#include "tnnlab/peterson.hpp"
#include "tnnlab/polytope.hpp"
#include "tnnlab/toric.hpp"

namespace tnnlab {

namespace {

using Json = nlohmann::json;

std::string fmt(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

template <class T>
std::string fmt_real(const std::vector<T>& v) {
  std::ostringstream s;
  s << std::setprecision(12) << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << static_cast<double>(v[i]);
  s << ")";
  return s.str();
}

std::string fmt_label(StratumLabel s) { return "K=" + format_nodes(s.K) + " J=" + format_nodes(s.J); }

struct Context {
  const SuiteOptions& opt;
  RootDatum datum;
  VerificationReport& report;
  std::mt19937_64 rng;

  void fail(std::string input, std::string expected, std::string got, const std::string& suite) {
    report.failures.push_back({std::move(input), std::move(expected), std::move(got), suite_anchor(suite)});
  }
  int samples(int fallback) const { return opt.samples.value_or(fallback); }
  RatVector rho() const { return RatVector(datum.rank(), Rational(1)); }
  std::vector<RatVector> lambdas(int random_count) {
    std::vector<RatVector> out{opt.lambda.value_or(rho())};
    for (int k = 0; k < random_count; ++k) {
      RatVector l;
      for (int i = 0; i < datum.rank(); ++i) l.push_back(random_positive_rational(rng, 9, 4));
      out.push_back(l);
    }
    return out;
  }
};

Rational pow_int(const Rational& a, int m) {
  Rational r = 1;
  for (int k = 0; k < m; ++k) r *= a;
  return r;
}

void suite_q_pattern(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const int n = c.datum.rank();
  const int per = c.samples(50);
  c.report.samples = per;
  for (NodeSet J : all_subsets(n))
    for (int k = 0; k < per; ++k) {
      auto p = sample_peterson_point(ctx, J, c.rng);
      ++c.report.cases;
      for (int i = 0; i < n; ++i) {
        Rational q = q_value(ctx, i, p.element);
        Rational want = contains(J, i) ? 1 : 0;
        if (q != want)
          c.fail("J=" + format_nodes(J) + " coords=" + fmt(p.coords) + " i=" + std::to_string(i + 1), to_string(want),
                 to_string(q), "lemma53");
      }
    }
}

void suite_delta_nonnegative(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const int n = c.datum.rank();
  const int total = c.samples(200);
  c.report.samples = total;
  auto subsets = all_subsets(n);
  for (int k = 0; k < total; ++k) {
    // x in U(w_{J1}) with positive parameters, paired with the representative of w_{J2}
    NodeSet J1 = subsets[random_int(c.rng, 0, static_cast<std::int64_t>(subsets.size()) - 1)];
    NodeSet J2 = subsets[k % subsets.size()];
    auto x = tnn_sample(c.datum.longest_element(J1), c.rng);
    auto g = x.element * wdot(c.datum.longest_element(J2));
    ++c.report.cases;
    for (int i = 0; i < n; ++i) {
      Rational v = delta_varpi(ctx, i, g);
      if (v < 0)
        c.fail("x=" + format_group_word(x.element) + " w=w_" + format_nodes(J2) + " i=" + std::to_string(i + 1), ">= 0",
               to_string(v), "prop44");
    }
  }
}

void suite_levi_restriction(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const int n = c.datum.rank();
  const int per = c.samples(50);
  c.report.samples = per;
  for (NodeSet J : all_subsets(n)) {
    if (J == 0) continue;
    GroupContext levi(RootDatum(c.datum.cartan().restrict_to(J, c.datum.name() + "_J")), c.opt.dimension_cap);
    auto idx = members(J);
    for (int k = 0; k < per; ++k) {
      std::vector<GroupToken> word;
      for (int t = 0; t < 6; ++t) {
        int i = idx[random_int(c.rng, 0, static_cast<std::int64_t>(idx.size()) - 1)];
        switch (random_int(c.rng, 0, 2)) {
          case 0: word.push_back(GroupToken::x(i, random_rational(c.rng, -4, 4, 3))); break;
          case 1: word.push_back(GroupToken::y(i, random_rational(c.rng, -4, 4, 3))); break;
          default: word.push_back(GroupToken::sdot(i));
        }
      }
      GroupElement g(word);
      auto g_levi = restrict_to_levi(ctx.chevalley(), g, J, levi.chevalley());
      ++c.report.cases;
      for (int i = 0; i < n; ++i) {
        Rational got = delta_varpi(ctx, i, g);
        Rational want = 1;
        if (contains(J, i)) {
          int local = static_cast<int>(std::find(idx.begin(), idx.end(), i) - idx.begin());
          want = delta_varpi(levi, local, g_levi);
        }
        if (got != want)
          c.fail("J=" + format_nodes(J) + " g=" + format_group_word(g) + " i=" + std::to_string(i + 1), to_string(want),
                 to_string(got), "prop35");
      }
    }
  }
}

void suite_cube(Context& c) {
  const int randoms = c.samples(5);
  int faces = 0;
  for (const auto& lambda : c.lambdas(randoms)) {
    auto p = build_polytope(c.datum, lambda);
    auto check = cube_check(p);
    ++c.report.cases;
    faces = check.faces;
    if (!check.ok) c.fail("lambda=" + fmt(lambda), "combinatorial cube", check.detail, "cube");
    auto mine = p.vertices();
    std::sort(mine.begin(), mine.end());
    if (mine != hull_oracle(c.datum, lambda))
      c.fail("lambda=" + fmt(lambda), "vertices = hull of W-orbit in the chamber", "vertex sets differ", "cube");
  }
  c.report.samples = randoms;
  c.report.notes["faces"] = std::to_string(faces);
  c.report.notes["vertices"] = std::to_string(1 << c.datum.rank());
  c.report.notes["facets"] = std::to_string(2 * c.datum.rank());
}

void suite_normalfan(Context& c) {
  const int randoms = c.samples(5);
  c.report.samples = randoms;
  auto sigma = build_fan(c.datum);
  auto fc = check_fan(sigma, c.rng, 200);
  ++c.report.cases;
  if (!fc.ok()) c.fail("fan of " + c.datum.name(), "complete simplicial fan", fc.detail, "normalfan");
  for (const auto& lambda : c.lambdas(randoms)) {
    std::string detail;
    ++c.report.cases;
    if (!same_fan(normal_fan(build_polytope(c.datum, lambda)), sigma, &detail))
      c.fail("lambda=" + fmt(lambda), "normal fan = Sigma", detail, "normalfan");
  }
  c.report.notes["cones"] = std::to_string(sigma.cones.size());
}

void suite_cox_strata(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const auto& cartan = c.datum.cartan();
  const int n = c.datum.rank();
  const int per = c.samples(20);
  c.report.samples = per;
  std::map<StratumLabel, std::vector<std::pair<RatVector, CoxPoint>>> by_label;
  int uncertified = 0;
  for (NodeSet J : all_subsets(n))
    for (int k = 0; k < per; ++k) {
      auto s = sample_tnn_point(ctx, J, c.rng);
      uncertified += !s.certified;
      ++c.report.cases;
      std::string input = "J=" + format_nodes(J) + " coords=" + fmt(s.point.coords);
      StratumLabel label;
      try {
        label = classify_stratum(ctx, s.point, true);
      } catch (const std::logic_error& e) {
        c.fail(input, "Delta >= 0 and Delta = 1 off J", e.what(), "psi-strata");
        continue;
      }
      auto v = psi(ctx, s.point);
      auto cox = CoxPoint::from_rational(v.delta, v.q);
      auto zero_pattern = stratum_of(cox);
      auto canon = canonicalize(cartan, cox);
      if (!(zero_pattern == label) || !(canon.label == label) || label.J != J)
        c.fail(input, fmt_label({label.K, J}), fmt_label(zero_pattern) + " canonical " + fmt_label(canon.label),
               "psi-strata");
      by_label[label].emplace_back(s.point.coords, cox);
    }
  // distinct points of one stratum must give inequivalent Cox points
  int pairs = 0;
  for (const auto& [label, pts] : by_label)
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (pts[a].first == pts[b].first) continue;
        ++pairs;
        if (equivalent(cartan, pts[a].second, pts[b].second))
          c.fail(fmt_label(label) + " coords " + fmt(pts[a].first) + " vs " + fmt(pts[b].first), "inequivalent",
                 "equivalent", "psi-strata");
      }
  c.report.notes["injectivity_pairs"] = std::to_string(pairs);
  c.report.notes["strata_reached"] = std::to_string(by_label.size());
  c.report.notes["uncertified_samples"] = std::to_string(uncertified);
}

void suite_splitting(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const int n = c.datum.rank();
  const int total = c.samples(50);
  c.report.samples = total;
  auto comps = c.datum.dynkin_components();
  std::vector<std::vector<NodeSet>> partitions{comps, {c.datum.all_nodes()}};
  auto subsets = all_subsets(n);
  for (int k = 0; k < total; ++k) {
    NodeSet J = subsets[k % subsets.size()];
    auto p = sample_peterson_point(ctx, J, c.rng);
    auto whole = psi(ctx, p);
    for (const auto& partition : partitions) {
      ++c.report.cases;
      RatVector delta(n), q(n);
      for (const auto& piece : split_components(ctx, p, partition)) {
        auto v = psi(*piece.context, piece.point);
        auto nodes = members(piece.nodes);
        for (std::size_t t = 0; t < nodes.size(); ++t) {
          delta[nodes[t]] = v.delta[t];
          q[nodes[t]] = v.q[t];
        }
      }
      if (delta != whole.delta || q != whole.q)
        c.fail("J=" + format_nodes(J) + " coords=" + fmt(p.coords) + " blocks=" + std::to_string(partition.size()),
               fmt(whole.delta) + ";" + fmt(whole.q), fmt(delta) + ";" + fmt(q), "splitting");
    }
  }
  c.report.notes["components"] = std::to_string(comps.size());
}

void suite_adjoint_minor(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const auto& d = c.datum;
  const auto& cb = ctx.chevalley();
  const int per = c.samples(10);
  c.report.samples = per;
  auto exps = d.fundamental_exponents();
  auto w0 = wdot(d.longest_element(d.all_nodes()));
  std::string skipped;
  for (int i = 0; i < d.rank(); ++i) {
    IntVector weight(d.rank(), 0);
    weight[i] = exps[i];
    if (weyl_dimension(d, weight) > c.opt.dimension_cap) {
      skipped += (skipped.empty() ? "" : ",") + std::to_string(i + 1);
      continue;
    }
    // Weyl invariance of the contravariant form on V_{m_i varpi_i}
    auto m = ctx.highest_weight(weight);
    for (int j = 0; j < d.rank(); ++j) {
      RatMatrix s = ctx.matrix(gen(GroupToken::sdot(j)), *m);
      ++c.report.cases;
      if (!(s.transpose() * m->gram() * s == m->gram()))
        c.fail("V_{" + std::to_string(exps[i]) + "varpi_" + std::to_string(i + 1) + "} s_" + std::to_string(j + 1),
               "M^T G M = G", "not invariant", "prop76");
    }
    for (int k = 0; k < per; ++k) {
      RatVector u(cb.dimension());
      for (int r = 0; r < cb.num_roots(); ++r) u[cb.e_slot(r)] = random_rational(c.rng, -6, 6, 3);
      auto x = gen(GroupToken::exp(u));
      Rational want = pow_int(delta_varpi(ctx, i, x * w0), exps[i]);
      Rational got = delta_adjoint_type(ctx, i, w0.inverse() * x * w0);
      ++c.report.cases;
      if (got != want)
        c.fail("i=" + std::to_string(i + 1) + " log x=" + fmt(u), to_string(want), to_string(got), "prop76");
    }
  }
  std::string ms;
  for (int i = 0; i < d.rank(); ++i) ms += (i ? "," : "") + std::to_string(exps[i]);
  c.report.notes["m"] = ms;
  if (!skipped.empty()) c.report.notes["skipped_over_cap"] = skipped;
}

bool low_rank_components(const RootDatum& d) {
  for (NodeSet comp : d.dynkin_components())
    if (popcount(comp) > 2) return false;
  return true;
}

void suite_delta_inverse(Context& c) {
  const auto& d = c.datum;
  if (!low_rank_components(d))
    throw std::invalid_argument("the Delta-inverse suite needs Dynkin components of rank <= 2");
  GroupContext ctx(d, c.opt.dimension_cap);
  const int n = d.rank();
  const NodeSet all = d.all_nodes();
  const int restarts = c.samples(10);
  c.report.samples = restarts;
  // vector representations of the type-A components carry the all-minors certificate; elsewhere the
  // nonnegative part has no membership test, so restarts may land on other real preimages
  std::vector<int> path_ends;
  for (NodeSet comp : d.dynkin_components()) {
    auto path = type_a_path(d.cartan(), comp);
    if (!path.empty()) path_ends.push_back(path.front());
  }
  const bool type_a = path_ends.size() == d.dynkin_components().size();
  std::map<std::string, int> misses;
  auto miss = [&](const std::string& kind, std::string input, std::string expected, std::string got) {
    if (type_a) c.fail(std::move(input), std::move(expected), std::move(got), "theorem59");
    else ++misses[kind];
  };

  // exact: the map is the identity in rank one
  if (n == 1)
    for (int k = 0; k <= 20; ++k) {
      Rational a(k, 2);
      a.canonicalize();
      auto p = make_peterson_point(ctx, 1, {a});
      ++c.report.cases;
      Rational got = psi(ctx, p).delta[0];
      if (got != a) c.fail("a=" + to_string(a), to_string(a), to_string(got), "theorem59");
    }

  const int grid = n == 1 ? 21 : n == 2 ? 10 : 5;
  std::vector<double> axis;
  for (int k = 0; k < grid; ++k) axis.push_back(10.0 * k / (grid - 1));
  std::vector<std::vector<double>> targets{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<double>> next;
    for (const auto& t : targets)
      for (double v : axis) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    targets = std::move(next);
  }
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  auto basis = centralizer_basis(ctx.chevalley(), all);
  int worst_iterations = 0;
  double worst_residual = 0, worst_spread = 0;
  for (const auto& target : targets) {
    ++c.report.cases;
    std::string input = "target=" + fmt_real(target);
    auto base = invert_delta(ctx, target, all);
    worst_iterations = std::max(worst_iterations, base.iterations);
    worst_residual = std::max(worst_residual, base.residual);
    if (!base.converged || base.residual >= 1e-9) {
      miss("unconverged", input, "residual < 1e-9", "residual " + std::to_string(base.residual));
      continue;
    }
    if (type_a) {
      RatVector lie = base.point.lie;
      GroupElement x = is_zero(lie) ? GroupElement() : gen(GroupToken::exp(lie));
      for (int end : path_ends) {
        long double mm = to_long_double(min_minor(ctx.matrix(x, "fund:" + std::to_string(end + 1))));
        if (mm < -1e-9L) c.fail(input, "all minors >= -1e-9", std::to_string(static_cast<double>(mm)), "theorem59");
      }
    }
    for (int r = 0; r < restarts; ++r) {
      InversionOptions o;
      o.max_iterations = 100;  // converging restarts need well under 30 steps
      std::vector<double> start;
      for (int k = 0; k < static_cast<int>(base.coords.size()); ++k) start.push_back(uni(c.rng));
      // the nonnegative branch has height-one coordinates >= 0
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (lie_height(ctx.chevalley(), basis[k]) == 1) start[k] = std::fabs(start[k]);
      o.start = start;
      auto again = invert_delta(ctx, target, all, o);
      if (!again.converged) {
        miss("restart_unconverged", input + " restart " + std::to_string(r), "converged", "no convergence");
        continue;
      }
      double spread = 0;
      for (std::size_t k = 0; k < again.coords.size(); ++k)
        spread = std::max(spread, std::fabs(again.coords[k] - base.coords[k]));
      if (type_a) worst_spread = std::max(worst_spread, spread);
      if (spread > 1e-6) miss("restart_other_preimage", input + " restart " + std::to_string(r), fmt_real(base.coords), fmt_real(again.coords));
    }
  }
  std::ostringstream r, s;
  r << std::scientific << std::setprecision(2) << worst_residual;
  s << std::scientific << std::setprecision(2) << worst_spread;
  c.report.notes["targets"] = std::to_string(targets.size());
  c.report.notes["worst_residual"] = r.str();
  c.report.notes["worst_restart_spread"] = s.str();
  c.report.notes["worst_iterations"] = std::to_string(worst_iterations);
  c.report.notes["tnn_minor_check"] = type_a ? "vector representations" : "not applicable";
  for (const auto& [kind, count] : misses) c.report.notes["uncertified_" + kind] = std::to_string(count);
}

void suite_moment_cells(Context& c) {
  const auto& d = c.datum;
  const int n = d.rank();
  const int per = c.samples(100);
  c.report.samples = per;
  RatVector lambda = c.opt.lambda.value_or(c.rho());
  auto poly = build_polytope(d, lambda);
  MomentMap mu(d, poly);
  for (NodeSet J : all_subsets(n)) {
    RatVector x(n, Rational(1)), y(n, Rational(0));
    for (int i : members(J)) {
      x[i] = 0;
      y[i] = 1;
    }
    ++c.report.cases;
    auto got = mu.exact(x, y);
    if (got != poly.vertex(J))
      c.fail("[" + fmt(x) + ";" + fmt(y) + "]", fmt(poly.vertex(J)), fmt(got), "moment-cells");
  }
  for (int k = 0; k < per; ++k) {
    StratumLabel label;
    for (int i = 0; i < n; ++i) {
      auto r = random_int(c.rng, 0, 2);
      if (r == 0) label.K = with(label.K, i);
      if (r <= 1) label.J = with(label.J, i);
    }
    auto p = random_cox_point(n, label, c.rng);
    auto nu = mu(p);
    auto check = mu.check_cell(label, nu);
    ++c.report.cases;
    if (!check.ok)
      c.fail("[" + fmt_real(p.x) + ";" + fmt_real(p.y) + "]", "relative interior of F_" + fmt_label(label),
             fmt_real(nu) + check.detail, "moment-cells");
  }
  c.report.notes["dilation"] = std::to_string(mu.dilation());
  c.report.notes["lattice_points"] = std::to_string(mu.lattice_point_count());
  c.report.notes["lambda"] = fmt(lambda);
}

void suite_longest_conjugation(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const auto& d = c.datum;
  const auto& cb = ctx.chevalley();
  auto w0 = wdot(d.longest_element(d.all_nodes()));
  auto star = d.involution_star();
  for (int i = 0; i < d.rank(); ++i) {
    RatVector expected(cb.dimension());
    IntVector simple(d.rank(), 0);
    simple[star[i]] = 1;
    expected[cb.f_slot(*d.root_index(simple))] = -1;
    auto got = ad_inverse(ctx, w0, cb.basis_vector(cb.e_slot(i)));
    ++c.report.cases;
    if (got != expected) c.fail("e_" + std::to_string(i + 1), "-f_" + std::to_string(star[i] + 1), fmt(got), "lemma51");
  }
}

void suite_modules(Context& c) {
  GroupContext ctx(c.datum, c.opt.dimension_cap);
  const auto& d = c.datum;
  std::string dims;
  for (int i = 0; i < d.rank(); ++i) {
    IntVector weight(d.rank(), 0);
    weight[i] = 1;
    auto want = weyl_dimension(d, weight);
    dims += (i ? "," : "") + std::to_string(want);
    if (want > c.opt.dimension_cap) continue;
    ++c.report.cases;
    int got = ctx.fundamental(i)->dimension();
    if (got != want) c.fail("V_varpi_" + std::to_string(i + 1), std::to_string(want), std::to_string(got), "modules");
  }
  c.report.notes["fundamental_dimensions"] = dims;
}

using SuiteFn = std::function<void(Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"lemma53", suite_q_pattern},       {"lemma51", suite_longest_conjugation},   {"prop44", suite_delta_nonnegative},
      {"prop35", suite_levi_restriction},         {"cube", suite_cube},         {"normalfan", suite_normalfan},
      {"psi-strata", suite_cox_strata}, {"splitting", suite_splitting}, {"prop76", suite_adjoint_minor},
      {"theorem59", suite_delta_inverse},   {"moment-cells", suite_moment_cells}, {"modules", suite_modules},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

const std::string& suite_anchor(const std::string& suite) {
  static const std::map<std::string, std::string> anchors{
      {"lemma53", "q_i(x w_J-dot) = 1 for i in J and 0 for i in I - J, x in the centralizer of e_J"},
      {"lemma51", "Ad_{w0-dot^{-1}} e_i = -f_{i*}"},
      {"prop44", "Delta_{varpi_i}(x w-dot) >= 0 for x in U_{>=0} and w in W"},
      {"prop35", "Delta_{varpi_i} restricted to G_J is 1 for i outside J and the Levi minor Delta_{varpi'_i} for i in J"},
      {"cube", "P^lambda is a combinatorial n-cube with faces F_{K,J}, K subset J"},
      {"normalfan", "the normal fan of P^lambda is Sigma, F_{K,J} <-> sigma_{K, I-J}"},
      {"psi-strata", "Psi sends the nonnegative Richardson stratum R_{K,J;>0} into X_{K,J;>=0}, injectively"},
      {"splitting", "Delta and q values of a reducible type are the concatenation over Dynkin components"},
      {"prop76", "Delta_i(w0-dot^{-1} x w0-dot) = Delta_{varpi_i}(x w0-dot)^{m_i}, Shapovalov form Weyl invariant"},
      {"theorem59", "x -> (Delta_{varpi_i}(x w_J-dot))_i is a homeomorphism onto R_{>=0}^J"},
      {"moment-cells", "the moment map sends X_{K,J;>=0} onto the relative interior of F_{K,J}"},
      {"modules", "fundamental module dimensions equal the Weyl dimension formula"},
  };
  auto it = anchors.find(suite);
  if (it == anchors.end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + suite);
  RootDatum datum(resolve_type(options.type, options.extra_types));
  if (options.lambda && static_cast<int>(options.lambda->size()) != datum.rank())
    throw std::invalid_argument("--lambda needs " + std::to_string(datum.rank()) + " entries");

  VerificationReport report;
  report.suite = suite;
  report.type_name = datum.name();
  report.seed = options.seed;

  if (suite != "all") {
    Context c{options, datum, report, std::mt19937_64(options.seed)};
    report.anchors.push_back(suite_anchor(suite));
    suite_table()[std::find(suite_names().begin(), suite_names().end(), suite) - suite_names().begin()].second(c);
    return report;
  }
  for (const auto& [name, fn] : suite_table()) {
    if (name == "theorem59" && !low_rank_components(datum)) {
      report.notes["theorem59"] = "skipped: a Dynkin component has rank > 2";
      continue;
    }
    auto sub = run_suite(name, options);
    report.cases += sub.cases;
    report.anchors.push_back(name + ": " + suite_anchor(name));
    for (auto f : sub.failures) {
      f.input = "[" + name + "] " + f.input;
      report.failures.push_back(std::move(f));
    }
    for (const auto& [k, v] : sub.notes) report.notes[name + "." + k] = v;
    report.notes[name + ".cases"] = std::to_string(sub.cases);
  }
  return report;
}

std::string VerificationReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["type"] = type_name;
  j["seed"] = seed;
  j["samples"] = samples;
  j["cases"] = cases;
  j["passed"] = passed();
  j["anchors"] = anchors;
  j["notes"] = Json(notes);
  j["failures"] = Json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}, {"anchor", f.anchor}});
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream s;
  s << "suite " << suite << "  type " << type_name << "  seed " << seed << "\n";
  for (const auto& a : anchors) s << "  claim: " << a << "\n";
  for (const auto& [k, v] : notes) s << "  " << k << " = " << v << "\n";
  for (const auto& f : failures)
    s << "  FAIL " << f.input << "\n    expected " << f.expected << "\n    got      " << f.got << "\n";
  s << (passed() ? "PASS" : "FAIL") << "  cases " << cases << "  failures " << failures.size() << "\n";
  return s.str();
}

}  // namespace tnnlab
