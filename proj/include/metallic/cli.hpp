#pragma once

// Command-line front end and the text formats it reads and writes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "metallic/dimension.hpp"
#include "metallic/fractal.hpp"
#include "metallic/tiling.hpp"

namespace metallic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

// Exact element as four decimal strings: c0_num, c0_den, c1_num, c1_den.
nlohmann::json quad_to_json(const QuadElement& v);
QuadElement quad_from_strings(Field field, const std::string& c0_num, const std::string& c0_den,
                              const std::string& c1_num, const std::string& c1_den);

// 17 significant digits, the form used for every float column.
std::string float17(double v);

nlohmann::json dimension_json(const DimensionReport& report);

inline const std::vector<std::string> kCoverColumns = {
    "depth",        "index",         "kind_path",   "start_c0_num",    "start_c0_den",
    "start_c1_num", "start_c1_den",  "start_float", "length_exponent", "length_float"};

std::string cover_csv(const IntervalCover& cover, mpfr_prec_t bits = BigFloat::kDefaultBits);
nlohmann::json cover_json(const IntervalCover& cover, mpfr_prec_t bits = BigFloat::kDefaultBits);

struct CoverRow {
  int depth;
  std::uint64_t index;
  std::string kind_path;
  std::string c0_num, c0_den, c1_num, c1_den;
  std::string start_float;
  int length_exponent;
  std::string length_float;
};

// Parses cover_csv output; throws Error(kInvalidArgument) on malformed input.
std::vector<CoverRow> parse_cover_csv(std::string_view text);

std::string tiling_csv(const Tiling& tiling, mpfr_prec_t bits = BigFloat::kDefaultBits);
nlohmann::json tiling_json(const Tiling& tiling, mpfr_prec_t bits = BigFloat::kDefaultBits);

// Table of named metallic means, optionally with one extra (p, q) row.
std::string metallic_table(const std::vector<std::pair<int, int>>& extra = {});

// Runs one invocation. Data goes to `out` (or --out), diagnostics to `err`.
// Returns 0 on success, 2 on validation errors, 3 when a cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metallic::cli
