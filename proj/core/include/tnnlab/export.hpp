#pragma once

#include <string>

#include "tnnlab/grouprep.hpp"
#include "tnnlab/polytope.hpp"

namespace tnnlab {

// JSON writers with sorted keys; rationals appear as exact strings ("3/2") unless noted.

/// Name, Cartan matrix, node ordering, positive roots, m_i, determinant.
std::string rootdata_json(const RootDatum& d);

/// Weights, e_i / f_i / h_i action matrices and contravariant form of a module.
std::string module_json(const WeightModule& m);

/// Rational matrix as an array of rows of strings.
std::string matrix_json(const RatMatrix& m);

/// {"faces":[{"K","J","dim","vertices"}], ...} with vertex coordinates decimalized to `digits`.
std::string face_lattice_json(const RootDatum& d, const WeightPolytope& p, int digits = 12);

/// Writes text to path; throws std::runtime_error naming the path on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tnnlab
