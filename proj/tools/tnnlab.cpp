#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tnnlab/catalog.hpp"
#include "tnnlab/export.hpp"
#include "tnnlab/peterson.hpp"
#include "tnnlab/toric.hpp"
#include "tnnlab/verify.hpp"

using namespace tnnlab;
using Json = nlohmann::json;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string type = "A2";
  std::string catalog;
  bool json = false;

  RootDatum datum() const {
    std::vector<CartanMatrix> extra;
    if (!catalog.empty()) extra = load_catalog_file(catalog);
    return RootDatum(resolve_type(type, extra));
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--type", c.type, "Cartan type, e.g. A2, B3, A2xA1, or a name from --catalog");
  cmd->add_option("--catalog", c.catalog, "JSON file with extra {\"name\",\"cartan\"} entries");
  cmd->add_flag("--json", c.json, "machine-readable output");
}

RatVector parse_vector(const std::string& text, int n, const std::string& what) {
  RatVector v = parse_rational_list(text);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument(what + " needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return v;
}

std::pair<RatVector, RatVector> parse_point(const std::string& text, int n) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("--point must look like \"x1,...,xn;y1,...,yn\"");
  return {parse_vector(text.substr(0, semi), n, "x part of --point"), parse_vector(text.substr(semi + 1), n, "y part of --point")};
}

Json strings(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <class T>
Json decimals(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    std::ostringstream s;
    s << std::setprecision(12) << static_cast<double>(x);
    out.push_back(s.str());
  }
  return out;
}

Json one_based(NodeSet s) {
  Json out = Json::array();
  for (int i : members(s)) out.push_back(i + 1);
  return out;
}

std::string join(const Json& arr) {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
  return "(" + s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tnnlab: Peterson varieties, totally nonnegative parts and weight-polytope cubes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tnnlab 1.0");

  // rootdata show
  Common rd;
  auto* rootdata = app.add_subcommand("rootdata", "root data of a Cartan type");
  rootdata->require_subcommand(1);
  auto* rd_show = rootdata->add_subcommand("show", "Cartan matrix, positive roots, exponents m_i");
  add_common(rd_show, rd);

  // liealg dump
  Common la;
  std::string la_weight, la_module;
  int cap = 400;
  auto* liealg = app.add_subcommand("liealg", "Chevalley basis and modules");
  liealg->require_subcommand(1);
  auto* la_dump = liealg->add_subcommand("dump", "action matrices of a highest-weight module as JSON");
  add_common(la_dump, la);
  la_dump->add_option("--weight", la_weight, "highest weight in fundamental-weight coordinates, e.g. 1,0");
  la_dump->add_option("--module", la_module, "module id: fund:i, adjoint, hw:a,b");
  la_dump->add_option("--cap", cap, "dimension cap")->capture_default_str();

  // group eval
  Common ge;
  std::string ge_word, ge_module = "fund:1";
  auto* group = app.add_subcommand("group", "group words acting on modules");
  group->require_subcommand(1);
  auto* ge_eval = group->add_subcommand("eval", "matrix of a word, e.g. \"x1(3) s2 y1(1/2)\"");
  add_common(ge_eval, ge);
  ge_eval->add_option("--word", ge_word, "word in x_i(t), y_i(t), s_i, s_i^-1")->required();
  ge_eval->add_option("--module", ge_module, "module id")->capture_default_str();

  // psi map
  Common pm;
  std::string pm_J, pm_coords;
  auto* psi_cmd = app.add_subcommand("psi", "Peterson points");
  psi_cmd->require_subcommand(1);
  auto* pm_map = psi_cmd->add_subcommand("map", "Cox coordinates [Delta ; q] of x w_J-dot");
  add_common(pm_map, pm);
  pm_map->add_option("--J", pm_J, "subset J, 1-based, e.g. 1,2 (empty: \"-\")")->required();
  pm_map->add_option("--coords", pm_coords, "centralizer coordinates, one per basis element of J");

  // verify
  Common vf;
  std::string vf_suite, vf_report, vf_lambda;
  std::uint64_t vf_seed = 0;
  int vf_samples = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vf_suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(verify, vf);
  verify->add_option("--seed", vf_seed, "random seed")->capture_default_str();
  verify->add_option("--samples", vf_samples, "samples (suite-specific meaning and default)");
  verify->add_option("--lambda", vf_lambda, "regular dominant weight for polytope suites (default rho)");
  verify->add_option("--report", vf_report, "write the JSON report to this path");

  // polytope build
  Common pb;
  std::string pb_lambda, pb_off, pb_lattice;
  auto* polytope = app.add_subcommand("polytope", "strongly dominant weight polytope");
  polytope->require_subcommand(1);
  auto* pb_build = polytope->add_subcommand("build", "vertices, faces and exports of P^lambda");
  add_common(pb_build, pb);
  pb_build->add_option("--lambda", pb_lambda, "regular dominant weight (default rho)");
  pb_build->add_option("--off", pb_off, "write OFF (nOFF outside dimension 3) to this path");
  pb_build->add_option("--lattice", pb_lattice, "write the face lattice JSON to this path");

  // toric canon / moment
  Common tc, tm;
  std::string tc_point, tm_point, tm_lambda;
  auto* toric = app.add_subcommand("toric", "Cox coordinates of X(Sigma)_{>=0}");
  toric->require_subcommand(1);
  auto* tc_canon = toric->add_subcommand("canon", "stratum and canonical representative");
  add_common(tc_canon, tc);
  tc_canon->add_option("--point", tc_point, "\"x1,...,xn;y1,...,yn\"")->required();
  auto* tm_moment = toric->add_subcommand("moment", "moment map image in fundamental-weight coordinates");
  add_common(tm_moment, tm);
  tm_moment->add_option("--point", tm_point, "\"x1,...,xn;y1,...,yn\"")->required();
  tm_moment->add_option("--lambda", tm_lambda, "regular dominant weight (default rho)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*rd_show) {
      auto d = rd.datum();
      if (rd.json) {
        std::cout << rootdata_json(d);
      } else {
        std::cout << d.name() << "  rank " << d.rank() << "  (" << kNodeOrdering << " ordering)\n";
        for (const auto& row : d.cartan().entries()) std::cout << "  " << Json(row).dump() << "\n";
        std::cout << "positive roots " << d.num_positive_roots() << ", det C = " << to_string(d.cartan_determinant())
                  << ", m = " << Json(d.fundamental_exponents()).dump() << "\n";
      }
      return 0;
    }

    if (*la_dump) {
      auto d = la.datum();
      GroupContext ctx(d, cap);
      std::string id = la_module;
      if (id.empty()) {
        if (la_weight.empty()) throw std::invalid_argument("give --weight or --module");
        id = "hw:" + la_weight;
      }
      std::cout << module_json(*ctx.module(id));
      return 0;
    }

    if (*ge_eval) {
      auto d = ge.datum();
      GroupContext ctx(d);
      auto g = parse_group_word(ge_word, d.rank());
      auto m = ctx.matrix(g, ge_module);
      if (ge.json) {
        Json j;
        j["word"] = format_group_word(g);
        j["module"] = ge_module;
        j["matrix"] = Json::parse(matrix_json(m));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << format_group_word(g) << " on " << ge_module << ":\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "  ") << std::setw(6) << to_string(m(r, c));
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*pm_map) {
      auto d = pm.datum();
      GroupContext ctx(d);
      NodeSet J = parse_nodes(pm_J, d.rank());
      RatVector coords = pm_coords.empty() ? RatVector{} : parse_rational_list(pm_coords);
      auto p = make_peterson_point(ctx, J, coords);
      auto v = psi(ctx, p);
      bool nonneg = std::all_of(v.delta.begin(), v.delta.end(), [](const Rational& x) { return x >= 0; });
      StratumLabel label{0, J};
      for (int i = 0; i < d.rank(); ++i)
        if (v.delta[i] == 0) label.K = with(label.K, i);
      Json j;
      j["type"] = d.name();
      j["J"] = one_based(J);
      j["coords"] = strings(p.coords);
      j["delta"] = strings(v.delta);
      j["q"] = strings(v.q);
      j["K"] = one_based(label.K);
      j["delta_nonnegative"] = nonneg;
      j["peterson_membership"] = peterson_membership(ctx, p.element);
      if (pm.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "[" << join(j["delta"]) << " ; " << join(j["q"]) << "]  K=" << format_nodes(label.K)
                  << " J=" << format_nodes(J) << (nonneg ? "" : "  (some Delta < 0: not a nonnegative point)") << "\n";
      }
      return 0;
    }

    if (*verify) {
      SuiteOptions opt;
      opt.type = vf.type;
      opt.seed = vf_seed;
      if (vf_samples >= 0) opt.samples = vf_samples;
      if (!vf.catalog.empty()) opt.extra_types = load_catalog_file(vf.catalog);
      if (!vf_lambda.empty()) opt.lambda = parse_rational_list(vf_lambda);
      auto report = run_suite(vf_suite, opt);
      if (!vf_report.empty()) write_text_file(vf_report, report.to_json());
      std::cout << (vf.json ? report.to_json() : report.to_text());
      return report.passed() ? 0 : kExitFailures;
    }

    if (*pb_build) {
      auto d = pb.datum();
      RatVector lambda = pb_lambda.empty() ? RatVector(d.rank(), Rational(1)) : parse_vector(pb_lambda, d.rank(), "--lambda");
      auto p = build_polytope(d, lambda);
      if (!pb_off.empty()) write_text_file(pb_off, to_off(p));
      if (!pb_lattice.empty()) write_text_file(pb_lattice, face_lattice_json(d, p));
      auto check = cube_check(p);
      if (pb.json) {
        Json j = Json::parse(face_lattice_json(d, p));
        j["cube"] = check.ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "P^lambda for " << d.name() << ", lambda = " << join(strings(lambda)) << "\n";
        for (NodeSet J : all_subsets(d.rank())) std::cout << "  v_" << format_nodes(J) << " = " << join(strings(p.vertex(J))) << "\n";
        std::cout << check.faces << " faces, " << check.vertices << " vertices, " << check.facets << " facets; cube: "
                  << (check.ok ? "yes" : "no " + check.detail) << "\n";
      }
      return check.ok ? 0 : kExitFailures;
    }

    if (*tc_canon) {
      auto d = tc.datum();
      auto [x, y] = parse_point(tc_point, d.rank());
      auto canon = canonicalize(d.cartan(), CoxPoint::from_rational(x, y));
      auto rep = to_cox_point(canon, d.rank());
      Json j;
      j["K"] = one_based(canon.label.K);
      j["J"] = one_based(canon.label.J);
      j["free"] = decimals(canon.free);
      j["x"] = decimals(rep.x);
      j["y"] = decimals(rep.y);
      if (tc.json) std::cout << j.dump(2) << "\n";
      else
        std::cout << "K=" << format_nodes(canon.label.K) << " J=" << format_nodes(canon.label.J) << "  [" << join(j["x"])
                  << " ; " << join(j["y"]) << "]\n";
      return 0;
    }

    if (*tm_moment) {
      auto d = tm.datum();
      RatVector lambda = tm_lambda.empty() ? RatVector(d.rank(), Rational(1)) : parse_vector(tm_lambda, d.rank(), "--lambda");
      auto [x, y] = parse_point(tm_point, d.rank());
      auto poly = build_polytope(d, lambda);
      MomentMap mu(d, poly);
      auto cox = CoxPoint::from_rational(x, y);
      auto label = stratum_of(cox);
      auto nu = mu(cox);
      auto cell = mu.check_cell(label, nu);
      Json j;
      j["mu"] = decimals(nu);
      j["mu_exact"] = strings(mu.exact(x, y));
      j["dilation"] = mu.dilation();
      j["lattice_points"] = mu.lattice_point_count();
      j["K"] = one_based(label.K);
      j["J"] = one_based(label.J);
      j["in_face_interior"] = cell.ok;
      if (tm.json) std::cout << j.dump(2) << "\n";
      else
        std::cout << "mu = " << join(j["mu_exact"]) << "  in F_{K=" << format_nodes(label.K) << ",J=" << format_nodes(label.J)
                  << "}" << (cell.ok ? "" : " (NOT in the relative interior:" + cell.detail + ")") << "  N = " << mu.dilation()
                  << "\n";
      return cell.ok ? 0 : kExitFailures;
    }
  } catch (const std::exception& e) {
    // bad input, unknown names, dimension caps and I/O errors
    std::cerr << "tnnlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
