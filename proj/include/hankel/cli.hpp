#pragma once
// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hankel/census.hpp"

namespace hankel::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kResource = 3,
};

enum class Format { Text, Json, Csv };

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json field_json(const Field& f);
/// Integer-looking values become JSON numbers; everything else stays a string.
Json params_json(const ParamList& params);
Json estimate_json(const McEstimate& e);
/// One verification or count record. `elapsed_ms` only when `timing`.
Json report_json(const CensusReport& r, bool timing);

std::string params_text(const ParamList& params);
std::string csv_escape(const std::string& cell);

/// Splits a comma-separated field list; `p^d:c0,...,cd` entries keep their
/// d+1 coefficients.
std::vector<Field> parse_field_list(const std::string& text);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli
