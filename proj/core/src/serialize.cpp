#include "nlat/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlat {

Json subset_json(Subset s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

Subset subset_from_json(const nlohmann::json& j, int d) {
  if (!j.is_array()) throw error(errc::bad_input, "expected an array of 1-based indices");
  Subset out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw error(errc::bad_input, "indices must be integers");
    const int idx = v.get<int>();
    if (idx < 1 || idx > d) {
      throw error(errc::bad_index,
                  "index " + std::to_string(idx) + " out of range 1.." + std::to_string(d));
    }
    out = out.with(idx - 1);
  }
  return out;
}

Json coefficients_json(const SemCoefficients& c) {
  Json values = Json::object();
  for (int k : c.conditioning) values[std::to_string(k + 1)] = c.values(k);
  Json out;
  out["node"] = c.node + 1;
  out["set"] = subset_json(c.conditioning);
  out["values"] = std::move(values);
  out["support"] = subset_json(c.support);
  return out;
}

Json lattice_json(const NeighborhoodLattice& lat, const int* projections) {
  Json out;
  out["node"] = lat.node + 1;
  out["m"] = subset_json(lat.min_set);
  out["M"] = subset_json(lat.max_set);
  out["size"] = lat.size();
  if (projections != nullptr) out["projections"] = *projections;
  return out;
}

Json decomposition_json(const LatticeDecomposition& dec) {
  Json intervals = Json::array();
  for (const auto& iv : dec.intervals) {
    Json entry;
    entry["m"] = subset_json(iv.min_set);
    entry["M"] = subset_json(iv.max_set);
    intervals.push_back(std::move(entry));
  }
  Json out;
  out["node"] = dec.node + 1;
  out["K"] = dec.lattice_count();
  out["intervals"] = std::move(intervals);
  out["po_count"] = count_po(dec);
  return out;
}

Json po_statement_json(const PoStatement& st) {
  Json out;
  out["j"] = st.j + 1;
  out["i"] = st.i + 1;
  out["T"] = subset_json(st.t);
  return out;
}

Json pcg_json(const Pcg& p) {
  Json edges = Json::array();
  for (auto [i, j] : p.edges()) edges.push_back(Json::array({i + 1, j + 1}));
  Json out;
  out["d"] = p.dim();
  out["edges"] = std::move(edges);
  return out;
}

std::string pcg_dot(const Pcg& p) {
  std::ostringstream out;
  out << "graph pcg {\n";
  for (int i = 0; i < p.dim(); ++i) out << "  " << (i + 1) << ";\n";
  for (auto [i, j] : p.edges()) out << "  " << (i + 1) << " -- " << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

Json factorization_json(const SemFactorization& f) {
  const int d = static_cast<int>(f.b.rows());
  Json b = Json::array();
  for (int i = 0; i < d; ++i) {
    Json row = Json::array();
    for (int j = 0; j < d; ++j) row.push_back(f.b(i, j));
    b.push_back(std::move(row));
  }
  Json diag = Json::array();
  for (int i = 0; i < d; ++i) diag.push_back(f.diag(i));
  Json perm = Json::array();
  for (int v : f.perm) perm.push_back(v + 1);
  Json edges = Json::array();
  for (int j = 0; j < d; ++j) {
    for (int parent : f.parents[static_cast<std::size_t>(j)]) {
      edges.push_back(Json::array({parent + 1, j + 1}));
    }
  }
  Json out;
  out["perm"] = std::move(perm);
  out["B"] = std::move(b);
  out["D"] = std::move(diag);
  out["edges"] = std::move(edges);
  return out;
}

Json gram_json(const GramMatrix& g) {
  const int d = g.dim();
  Json sigma = Json::array();
  for (int i = 0; i < d; ++i) {
    Json row = Json::array();
    for (int j = 0; j < d; ++j) row.push_back(g(i, j));
    sigma.push_back(std::move(row));
  }
  Json out;
  out["d"] = d;
  out["sigma"] = std::move(sigma);
  return out;
}

namespace {

Eigen::MatrixXd matrix_from_json(const nlohmann::json& doc) {
  if (!doc.contains("d") || !doc.contains("sigma")) {
    throw error(errc::bad_input, "matrix JSON needs \"d\" and \"sigma\"");
  }
  const int d = doc["d"].get<int>();
  const auto& rows = doc["sigma"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw error(errc::bad_input, "\"sigma\" must hold d rows");
  }
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw error(errc::bad_input, "row " + std::to_string(i + 1) + " must hold d entries");
    }
    for (int j = 0; j < d; ++j) m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

Eigen::MatrixXd matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<double> row;
    std::size_t field_start = 0;
    while (field_start <= line.size()) {
      std::size_t comma = line.find(',', field_start);
      if (comma == std::string_view::npos) comma = line.size();
      std::string_view field = line.substr(field_start, comma - field_start);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
      }
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
        field.remove_suffix(1);
      }
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw error(errc::bad_input, "line " + std::to_string(line_no) +
                                         ": cannot parse \"" + std::string(field) + "\"");
      }
      row.push_back(value);
      field_start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw error(errc::bad_input,
                  "line " + std::to_string(line_no) + ": inconsistent field count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw error(errc::bad_input, "no rows");

  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXd read_matrix(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw error(errc::bad_input, "empty matrix input");
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(doc);
  }
  return matrix_from_csv(text);
}

Eigen::MatrixXd read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_input, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_matrix(buffer.str());
}

std::string write_csv(const Eigen::MatrixXd& m) {
  std::string out;
  char field[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(field, sizeof(field), "%.17g", m(i, j));
      out += field;
      out += (j + 1 < m.cols()) ? "," : "\n";
    }
  }
  return out;
}

}  // namespace nlat
