#include "tnnlab/catalog.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace tnnlab {

namespace {

std::vector<IntVector> zero_cartan(int n) {
  std::vector<IntVector> c(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  return c;
}

void link(std::vector<IntVector>& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// 0-based chain 0-1-...-(n-1)
std::vector<IntVector> chain(int n) {
  auto c = zero_cartan(n);
  for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
  return c;
}

CartanMatrix irreducible(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown type '" + name + "'");
  char letter = name[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown type '" + name + "'");
  }
  std::vector<IntVector> c;
  switch (letter) {
    case 'A':
      if (n < 1) break;
      c = chain(n);
      break;
    case 'B':
      if (n < 2) break;
      c = chain(n);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) break;
      c = chain(n);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) break;
      c = zero_cartan(n);
      for (int i = 0; i + 2 < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 2);
      link(c, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) break;
      c = zero_cartan(n);
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case 'F':
      if (n != 4) break;
      c = chain(4);
      c[1][2] = -2;
      break;
    case 'G':
      if (n != 2) break;
      c = chain(2);
      c[1][0] = -3;  // alpha_2 long
      break;
    default:
      break;
  }
  if (c.empty()) throw std::invalid_argument("unknown type '" + name + "'");
  return CartanMatrix(name, std::move(c));
}

CartanMatrix from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("cartan")) {
    throw std::invalid_argument("catalog entry needs \"name\" and \"cartan\"");
  }
  return CartanMatrix(j.at("name").get<std::string>(), j.at("cartan").get<std::vector<IntVector>>());
}

}  // namespace

CartanMatrix cartan_by_name(const std::string& name) {
  std::size_t start = 0;
  std::optional<CartanMatrix> acc;
  while (start <= name.size()) {
    auto x = name.find('x', start);
    std::string part = name.substr(start, x == std::string::npos ? std::string::npos : x - start);
    CartanMatrix piece = irreducible(part);
    acc = acc ? direct_sum(*acc, piece) : piece;
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return CartanMatrix(name, acc->entries());
}

const std::vector<std::string>& catalog_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  return types;
}

const std::vector<std::string>& reducible_catalog_types() {
  static const std::vector<std::string> types{"A1xA1", "A2xA1"};
  return types;
}

std::vector<CartanMatrix> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("catalog file '" + path + "': " + e.what());
  }
  std::vector<CartanMatrix> out;
  try {
    if (doc.is_array()) {
      for (const auto& entry : doc) out.push_back(from_json(entry));
    } else {
      out.push_back(from_json(doc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("catalog file '" + path + "': " + e.what());
  }
  return out;
}

CartanMatrix resolve_type(const std::string& name, const std::vector<CartanMatrix>& extra) {
  for (const auto& c : extra)
    if (c.name() == name) return c;
  return cartan_by_name(name);
}

}  // namespace tnnlab
