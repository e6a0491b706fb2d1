#include "ddvv/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

namespace ddvv::io {

namespace {

using nlohmann::json;

Eigen::Index require_positive_int(const json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_number_integer() ||
      doc[field].get<long long>() < 1) {
    throw ParseError("field '" + field + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(doc[field].get<long long>());
}

// Parses one n x n matrix from doc[key][r], reporting offenders as
// e.g. "matrices[2][1]".
Eigen::MatrixXd parse_matrix(const json& entry, Eigen::Index n,
                             const std::string& where) {
  if (!entry.is_array() || static_cast<Eigen::Index>(entry.size()) != n) {
    throw ParseError("field '" + where + "' must be an array of " +
                     std::to_string(n) + " rows");
  }
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = entry[static_cast<std::size_t>(i)];
    const std::string row_name = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("field '" + row_name + "' must be an array of " +
                       std::to_string(n) + " numbers");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number()) {
        throw ParseError("field '" + row_name + "[" + std::to_string(j) +
                         "]' must be a number");
      }
      out(i, j) = cell.get<double>();
    }
  }
  return out;
}

SymTuple parse_tuple_field(const json& doc, const std::string& key) {
  const Eigen::Index n = require_positive_int(doc, "n");
  const Eigen::Index m = require_positive_int(doc, "m");
  if (!doc.contains(key) || !doc[key].is_array() ||
      static_cast<Eigen::Index>(doc[key].size()) != m) {
    throw ParseError("field '" + key + "' must be an array of " + std::to_string(m) +
                     " matrices");
  }
  std::vector<SymMatrix> mats;
  mats.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) {
    const std::string where = key + "[" + std::to_string(r) + "]";
    Eigen::MatrixXd raw = parse_matrix(doc[key][static_cast<std::size_t>(r)], n, where);
    try {
      mats.emplace_back(std::move(raw));
    } catch (const std::invalid_argument& e) {
      throw ParseError("field '" + where + "': " + e.what());
    }
  }
  return SymTuple(std::move(mats));
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void save_file(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace

SymTuple tuple_from_json(const json& doc) { return parse_tuple_field(doc, "matrices"); }

json tuple_to_json(const SymTuple& t) {
  json doc;
  doc["n"] = t.dim();
  doc["m"] = t.size();
  json mats = json::array();
  for (const auto& a : t.mats()) mats.push_back(matrix_to_json(a.mat()));
  doc["matrices"] = std::move(mats);
  return doc;
}

SymTuple read_tuple(const std::filesystem::path& path) {
  return tuple_from_json(load_file(path));
}

void write_tuple(const SymTuple& t, const std::filesystem::path& path) {
  save_file(tuple_to_json(t), path);
}

SecondFundamentalForm form_from_json(const json& doc) {
  SymTuple h = parse_tuple_field(doc, "h");
  if (!doc.contains("c") || !doc["c"].is_number() ||
      !std::isfinite(doc["c"].get<double>())) {
    throw ParseError("field 'c' must be a finite number");
  }
  return SecondFundamentalForm(std::move(h), doc["c"].get<double>());
}

json form_to_json(const SecondFundamentalForm& f) {
  json doc;
  doc["n"] = f.n();
  doc["m"] = f.m();
  doc["c"] = f.c();
  json mats = json::array();
  for (const auto& hr : f.h().mats()) mats.push_back(matrix_to_json(hr.mat()));
  doc["h"] = std::move(mats);
  return doc;
}

SecondFundamentalForm read_form(const std::filesystem::path& path) {
  return form_from_json(load_file(path));
}

void write_form(const SecondFundamentalForm& f, const std::filesystem::path& path) {
  save_file(form_to_json(f), path);
}

json report_to_json(const InequalityReport& report) {
  return json{{"name", to_string(report.name)}, {"lhs", report.lhs},
              {"rhs", report.rhs},              {"residual", report.residual},
              {"scale", report.scale},          {"tol", report.tol},
              {"holds", report.holds}};
}

json search_result_to_json(const SearchResult& result) {
  json doc;
  doc["n"] = result.tuple.dim();
  doc["m"] = result.tuple.size();
  doc["lambda"] = result.lambda;
  doc["stationarity"] = result.stationarity;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  doc["restart_index"] = result.restart_index;
  doc["seed"] = result.seed;
  doc["tuple"] = tuple_to_json(result.tuple);
  return doc;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace ddvv::io
