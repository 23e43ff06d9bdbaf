#pragma once

#include "fusion/affine_fusion.hpp"
#include "fusion/virasoro.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

inline constexpr int table_format_version = 1;

std::string tool_version();

// "generic" or "p/q".
struct Level {
  std::optional<RationalLevel> rational;

  bool is_generic() const { return !rational.has_value(); }
  std::string to_string() const { return rational ? rational->to_string() : "generic"; }
  friend bool operator==(const Level&, const Level&) = default;
};

// Parsers throw ParseError with a message naming the bad field.
Level parse_level(std::string_view text);
RationalLevel parse_rational_level(std::string_view text);
AffineSymbol parse_affine_symbol(std::string_view text);
VirSymbol parse_vir_symbol(std::string_view text);
// "(a,b)" rather than "(r,e;s)".
bool is_vir_symbol_text(std::string_view text);
// Splits "(0,0;1),(0,0;2)" on commas outside parentheses.
std::vector<std::string> split_symbol_list(std::string_view text);

struct ProductReport {
  std::string level;
  std::vector<AffineSymbol> inputs;
  std::vector<std::pair<AffineSymbol, Integer>> product;
  std::string tool_version;

  friend bool operator==(const ProductReport&, const ProductReport&) = default;
};

ProductReport make_product_report(const Level& level, const AffineSymbol& a, const AffineSymbol& b,
                                  const AffineSum& product);
ProductReport make_product_report(const RationalLevel& level, const AffineSymbol& a, const AffineSymbol& b,
                                  const AdmissibleSum& product);
nlohmann::json to_json(const ProductReport& report);
ProductReport product_report_from_json(const nlohmann::json& j);

struct VirProductReport {
  std::string level;
  std::vector<VirSymbol> inputs;
  std::vector<std::pair<VirSymbol, Integer>> product;
  std::string tool_version;

  friend bool operator==(const VirProductReport&, const VirProductReport&) = default;
};

nlohmann::json to_json(const VirProductReport& report);
VirProductReport vir_product_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report, const std::string& level, int bound);

// Classes first, then every N[i][j][k] including zeros.
nlohmann::json table_to_json(const FusionTable& table);
std::string table_to_csv(const FusionTable& table);
std::string table_to_text(const FusionTable& table);
// Rejects a document whose format version or level differs from `expected`.
FusionTable table_from_json(const nlohmann::json& j, const RationalLevel& expected);

// Reads the cache if it exists, otherwise computes the table and writes it.
FusionTable load_or_build_table(const RationalLevel& level, const std::optional<std::filesystem::path>& cache);

// JSON text with a trailing newline, stable across runs.
std::string dump(const nlohmann::json& j);

long long to_int64(const Integer& x);

}  // namespace fusion
