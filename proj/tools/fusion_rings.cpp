#include "fusion/affine_fusion.hpp"
#include "fusion/coinvariant_oracle.hpp"
#include "fusion/error.hpp"
#include "fusion/io.hpp"
#include "fusion/tensor_cats.hpp"
#include "fusion/virasoro.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace fusion;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

bool use_color() {
  if (std::getenv("FUSION_RINGS_NO_COLOR") != nullptr) return false;
  return isatty(STDOUT_FILENO) == 1;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

template <class Symbol>
std::string sum_text(const std::vector<std::pair<Symbol, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    if (terms[i].second != 1) os << terms[i].second << "*";
    os << to_string(terms[i].first);
  }
  return os.str();
}

std::string set_text(const std::set<LinearForm>& roots) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& w : roots) {
    os << (first ? "" : ", ") << to_string(w);
    first = false;
  }
  os << "}";
  return os.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

struct FuseArgs {
  std::string level = "generic";
  std::string format = "text";
  std::string a, b;
};

int run_fuse(const FuseArgs& args) {
  const Level level = parse_level(args.level);
  if (is_vir_symbol_text(args.a) || is_vir_symbol_text(args.b)) {
    const VirSymbol x = parse_vir_symbol(args.a);
    const VirSymbol y = parse_vir_symbol(args.b);
    VirProductReport report{level.to_string(), {x, y}, {}, tool_version()};
    if (level.is_generic()) {
      if (x.a < 0 || x.b < 0 || y.a < 0 || y.b < 0) throw RangeError("a", "indices must be nonnegative");
      for (const auto& [v, c] : vir_fuse_generic(x, y)) report.product.emplace_back(v, c);
    } else {
      const RationalLevel& lv = *level.rational;
      const auto cx = vir_canonicalize(lv, x);
      const auto cy = vir_canonicalize(lv, y);
      if (cx && cy)
        for (const auto& [c, k] : vir_fuse_minimal(lv, *cx, *cy)) report.product.emplace_back(c.rep, k);
    }
    if (args.format == "json") {
      std::cout << dump(to_json(report));
    } else {
      std::cout << to_string(x) << " x " << to_string(y) << " = " << sum_text(report.product) << "\n";
    }
    return exit_ok;
  }

  const AffineSymbol x = parse_affine_symbol(args.a);
  const AffineSymbol y = parse_affine_symbol(args.b);
  ProductReport report;
  if (level.is_generic()) {
    report = make_product_report(level, x, y, fuse_generic(x, y));
  } else {
    const RationalLevel& lv = *level.rational;
    report = make_product_report(lv, x, y, fuse_rational(lv, canonicalize(lv, x), canonicalize(lv, y)));
  }
  if (args.format == "json") {
    std::cout << dump(to_json(report));
  } else {
    std::cout << to_string(x) << " x " << to_string(y) << " = " << sum_text(report.product) << "\n";
  }
  return exit_ok;
}

struct TableArgs {
  std::string level;
  std::string format = "text";
  std::string out;
  std::string cache;
};

int run_table(const TableArgs& args) {
  const RationalLevel level = parse_rational_level(args.level);
  std::optional<std::filesystem::path> cache;
  if (!args.cache.empty()) cache = args.cache;
  const FusionTable table = load_or_build_table(level, cache);
  if (args.format == "json") {
    write_output(dump(table_to_json(table)), args.out);
  } else if (args.format == "csv") {
    write_output(table_to_csv(table), args.out);
  } else {
    write_output(table_to_text(table), args.out);
  }
  return exit_ok;
}

struct GenusArgs {
  std::string level;
  int genus = 0;
  std::string insertions;
  std::string cache;
  std::string format = "text";
};

int run_genus(const GenusArgs& args) {
  const RationalLevel level = parse_rational_level(args.level);
  std::optional<std::filesystem::path> cache;
  if (!args.cache.empty()) cache = args.cache;
  const FusionTable table = load_or_build_table(level, cache);
  std::vector<std::size_t> indices;
  for (const auto& item : split_symbol_list(args.insertions))
    indices.push_back(table.index_of(canonicalize(level, parse_affine_symbol(item))));
  const Integer dim = genus_dimension(table, args.genus, indices);
  if (args.format == "json") {
    json ins = json::array();
    for (auto i : indices) {
      const auto& rep = table.classes()[i].rep;
      ins.push_back(json{{"r", rep.r}, {"parity", rep.parity.value()}, {"s", rep.s}});
    }
    std::cout << dump(json{{"level", level.to_string()},
                           {"genus", args.genus},
                           {"insertions", ins},
                           {"dimension", to_int64(dim)},
                           {"tool_version", tool_version()}});
  } else {
    std::cout << dim << "\n";
  }
  return exit_ok;
}

struct VerifyArgs {
  std::string suite;
  std::string level = "generic";
  int bound = 3;
  std::string format = "text";
};

VerificationReport first_failure(std::vector<VerificationReport> reports) {
  VerificationReport combined{reports.front().suite, reports.front().scope};
  for (auto& r : reports) {
    combined.checked += r.checked;
    if (!r.passed()) {
      combined.counterexample = r.counterexample;
      break;
    }
  }
  return combined;
}

int run_verify(const VerifyArgs& args) {
  const Level level = parse_level(args.level);
  if (args.bound < 0) throw RangeError("bound", "bound must be nonnegative");
  const auto generic_only = [&] {
    if (!level.is_generic()) throw RangeError("level", "suite " + args.suite + " runs at the generic level only");
  };
  const auto rational_only = [&] {
    if (level.is_generic()) throw RangeError("level", "suite " + args.suite + " needs --level p/q");
  };

  VerificationReport report;
  if (args.suite == "assoc") {
    report = level.is_generic() ? verify_associativity_generic(args.bound) : verify_associativity_rational(*level.rational);
  } else if (args.suite == "comm") {
    report = level.is_generic() ? verify_commutativity_generic(args.bound) : verify_commutativity_rational(*level.rational);
  } else if (args.suite == "factorization") {
    generic_only();
    report = verify_factorization(args.bound);
  } else if (args.suite == "quotient") {
    rational_only();
    report = verify_quotient(*level.rational);
  } else if (args.suite == "ds-hom") {
    if (level.is_generic()) {
      report = verify_ds_epimorphism(args.bound);
    } else {
      report = first_failure({verify_ds_epimorphism(*level.rational), verify_ds_well_defined(*level.rational)});
    }
  } else if (args.suite == "oracle") {
    generic_only();
    report = verify_oracle(args.bound, calibrate_convention().convention);
  } else {
    generic_only();
    report = verify_dimension_homomorphism(args.bound);
  }
  report.suite = args.suite;

  if (args.format == "json") {
    std::cout << dump(to_json(report, level.to_string(), args.bound));
  } else {
    std::cout << (report.passed() ? paint("PASS", "32") : paint("FAIL", "31")) << " " << args.suite << " ("
              << report.scope << "): " << report.checked << " cases\n";
    if (!report.passed()) std::cout << "counterexample: " << *report.counterexample << "\n";
  }
  return report.passed() ? exit_ok : exit_failed;
}

struct OracleArgs {
  std::string a, b;
};

int run_oracle(const OracleArgs& args) {
  const AffineSymbol x = parse_affine_symbol(args.a);
  const AffineSymbol y = parse_affine_symbol(args.b);
  if (x.r < 0 || x.s < 0 || y.r < 0 || y.s < 0) throw RangeError("r", "symbol indices must be nonnegative");
  const Calibration cal = calibrate_convention();
  std::cout << "convention: " << to_string(cal.convention) << " (candidate " << cal.candidates_tried << " of "
            << candidate_conventions().size() << ", " << cal.seed_cases << " seed products)\n";
  const OracleTrace trace = fusion_oracle_trace(x, y, cal.convention);
  std::cout << "R_a = " << set_text(trace.roots_a) << "\n";
  std::cout << "R_b = " << set_text(trace.roots_b) << "\n";
  std::cout << "common = " << set_text(trace.common) << "\n";
  std::vector<std::pair<AffineSymbol, Integer>> oracle_terms;
  for (const auto& s : trace.product) oracle_terms.emplace_back(s, Integer(1));
  std::vector<std::pair<AffineSymbol, Integer>> fused;
  std::vector<AffineSymbol> expected;
  for (const auto& [s, c] : fuse_generic(x, y)) {
    fused.emplace_back(s, c);
    for (Integer k = 0; k < c; ++k) expected.push_back(s);
  }
  std::cout << "oracle: " << sum_text(oracle_terms) << "\n";
  std::cout << "fusion: " << sum_text(fused) << "\n";
  const bool agree = expected == trace.product;
  std::cout << (agree ? paint("agree", "32") : paint("DISAGREE", "31")) << "\n";
  return agree ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion rings of affine sl2, osp(1|2) and Virasoro"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  FuseArgs fuse;
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse two symbols");
  fuse_cmd->add_option("--level", fuse.level, "generic or p/q")->capture_default_str();
  fuse_cmd->add_option("--format", fuse.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  fuse_cmd->add_option("a", fuse.a, "(r,e;s) or (a,b)")->required();
  fuse_cmd->add_option("b", fuse.b, "(r,e;s) or (a,b)")->required();

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Structure constants at a rational level");
  table_cmd->add_option("--level", table.level, "p/q")->required();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  table_cmd->add_option("--out", table.out, "Write to a file instead of stdout");
  table_cmd->add_option("--cache", table.cache, "Table cache file");

  GenusArgs genus;
  auto* genus_cmd = app.add_subcommand("genus", "Conformal block dimension");
  genus_cmd->add_option("--level", genus.level, "p/q")->required();
  genus_cmd->add_option("--genus", genus.genus)->capture_default_str();
  genus_cmd->add_option("--insertions", genus.insertions, "Comma-separated symbols");
  genus_cmd->add_option("--cache", genus.cache, "Table cache file");
  genus_cmd->add_option("--format", genus.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive identity check");
  verify_cmd->add_option("suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"assoc", "comm", "factorization", "quotient", "ds-hom", "oracle", "dimension-hom"}));
  verify_cmd->add_option("--level", verify.level, "generic or p/q")->capture_default_str();
  verify_cmd->add_option("--bound", verify.bound, "Index bound for generic checks")->capture_default_str();
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the coinvariant oracle with fusion");
  oracle_cmd->add_option("a", oracle.a)->required();
  oracle_cmd->add_option("b", oracle.b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*fuse_cmd) return run_fuse(fuse);
    if (*table_cmd) return run_table(table);
    if (*genus_cmd) return run_genus(genus);
    if (*verify_cmd) return run_verify(verify);
    if (*oracle_cmd) return run_oracle(oracle);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const LevelMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
