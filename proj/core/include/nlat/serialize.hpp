#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "nlat/decomposition.hpp"
#include "nlat/directed.hpp"
#include "nlat/pcg.hpp"

namespace nlat {

/// JSON encodings of the domain types. All indices are 1-based on the wire;
/// key order follows the documented schemas.
using Json = nlohmann::ordered_json;

Json subset_json(Subset s);
Subset subset_from_json(const nlohmann::json& j, int d);

Json coefficients_json(const SemCoefficients& c);
/// {"node", "m", "M", "size"} plus "projections" when given.
Json lattice_json(const NeighborhoodLattice& lat, const int* projections = nullptr);
/// {"node", "K", "intervals", "po_count"}.
Json decomposition_json(const LatticeDecomposition& dec);
Json po_statement_json(const PoStatement& st);
/// {"d", "edges"}.
Json pcg_json(const Pcg& p);
std::string pcg_dot(const Pcg& p);
/// {"perm", "B", "D", "edges"}; edges are (parent, child) pairs.
Json factorization_json(const SemFactorization& f);
/// {"d", "sigma"}.
Json gram_json(const GramMatrix& g);

/// Parses a matrix from CSV rows (comma-separated decimals, one row per
/// line) or a JSON object {"d": n, "sigma": [[...]]}; the format is sniffed
/// from the first non-space character.
Eigen::MatrixXd read_matrix(std::string_view text);
Eigen::MatrixXd read_matrix_file(const std::string& path);

/// CSV with round-trip-exact decimals; byte-stable for identical inputs.
std::string write_csv(const Eigen::MatrixXd& m);

}  // namespace nlat
