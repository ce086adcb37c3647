#pragma once

#include <string>
#include <vector>

#include "tnnlab/rootdata.hpp"

namespace tnnlab {

/// Cartan matrix of a named type in Bourbaki node ordering. Accepts single types
/// (A1.., B2.., C2.., D4.., E6-E8, F4, G2) and direct sums written "A2xA1".
CartanMatrix cartan_by_name(const std::string& name);

/// Irreducible catalog types exercised by the verification suites.
const std::vector<std::string>& catalog_types();
/// Reducible catalog entries used by the splitting checks.
const std::vector<std::string>& reducible_catalog_types();

/// Reads a JSON file holding one {"name","cartan"} object or an array of them.
std::vector<CartanMatrix> load_catalog_file(const std::string& path);

/// Looks the name up in the extra matrices first, then in the built-in types.
CartanMatrix resolve_type(const std::string& name, const std::vector<CartanMatrix>& extra = {});

/// Fixed node-ordering convention recorded in outputs.
inline constexpr const char* kNodeOrdering = "Bourbaki";

}  // namespace tnnlab
