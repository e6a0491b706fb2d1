#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "ddvv/curvature.hpp"
#include "ddvv/inequalities.hpp"
#include "ddvv/search.hpp"
#include "ddvv/sym_matrix.hpp"

namespace ddvv::io {

/// Raised for malformed input documents; the message names the first
/// offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tuple documents: {"n": int, "m": int, "matrices": [[[row], [row], ...], ...]}
SymTuple tuple_from_json(const nlohmann::json& doc);
nlohmann::json tuple_to_json(const SymTuple& t);
SymTuple read_tuple(const std::filesystem::path& path);
void write_tuple(const SymTuple& t, const std::filesystem::path& path);

// Second-fundamental-form documents:
// {"n": int, "m": int, "c": number, "h": [[[row], ...], ...]} with h[r][i][j].
SecondFundamentalForm form_from_json(const nlohmann::json& doc);
nlohmann::json form_to_json(const SecondFundamentalForm& f);
SecondFundamentalForm read_form(const std::filesystem::path& path);
void write_form(const SecondFundamentalForm& f, const std::filesystem::path& path);

nlohmann::json report_to_json(const InequalityReport& report);
nlohmann::json search_result_to_json(const SearchResult& result);

/// Formats a double with 17 significant digits (round-trip exact); used for
/// the CSV emitter.
std::string format_double(double value);

}  // namespace ddvv::io
