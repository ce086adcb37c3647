#include "tnnlab/export.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "tnnlab/catalog.hpp"

namespace tnnlab {

namespace {

using Json = nlohmann::json;

Json rational_rows(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json one_based(NodeSet s) {
  Json out = Json::array();
  for (int i : members(s)) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string rootdata_json(const RootDatum& d) {
  Json j;
  j["name"] = d.name();
  j["rank"] = d.rank();
  j["cartan"] = d.cartan().entries();
  j["node_ordering"] = kNodeOrdering;
  j["positive_roots"] = d.positive_roots();
  j["fundamental_exponents"] = d.fundamental_exponents();
  j["cartan_determinant"] = to_string(d.cartan_determinant());
  Json comps = Json::array();
  for (NodeSet c : d.dynkin_components()) comps.push_back(one_based(c));
  j["dynkin_components"] = comps;
  return j.dump(2) + "\n";
}

std::string module_json(const WeightModule& m) {
  Json j;
  j["id"] = m.id();
  j["dimension"] = m.dimension();
  j["highest_weight"] = m.highest_weight();
  j["weights"] = m.weights();
  Json e = Json::array(), f = Json::array(), h = Json::array();
  for (int i = 0; i < m.rank(); ++i) {
    e.push_back(rational_rows(m.e(i)));
    f.push_back(rational_rows(m.f(i)));
    h.push_back(rational_rows(m.h(i)));
  }
  j["e"] = e;
  j["f"] = f;
  j["h"] = h;
  j["gram"] = rational_rows(m.gram());
  return j.dump(2) + "\n";
}

std::string matrix_json(const RatMatrix& m) { return rational_rows(m).dump() + "\n"; }

std::string face_lattice_json(const RootDatum& d, const WeightPolytope& p, int digits) {
  Json j;
  j["type"] = d.name();
  j["rank"] = p.rank();
  Json lambda = Json::array();
  for (const auto& v : p.lambda()) lambda.push_back(to_string(v));
  j["lambda"] = lambda;
  Json faces = Json::array();
  for (const auto& f : p.faces()) {
    Json face;
    face["K"] = one_based(f.K);
    face["J"] = one_based(f.J);
    face["dim"] = f.dimension;
    Json verts = Json::array();
    for (NodeSet v : f.vertices) {
      Json coords = Json::array();
      for (const auto& x : p.vertex(v)) coords.push_back(to_decimal(x, digits));
      verts.push_back(coords);
    }
    face["vertices"] = verts;
    faces.push_back(face);
  }
  j["faces"] = faces;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing: " + std::strerror(errno));
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace tnnlab
