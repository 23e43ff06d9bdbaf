#include "fusion/io.hpp"

#include "fusion/error.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace fusion {

using nlohmann::json;

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view what) : text_(text), what_(what) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, std::string_view field) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(field, std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer(std::string_view field) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail(field, "expected an integer");
    const std::string token(text_.substr(start, pos_ - start));
    try {
      return std::stoi(token);
    } catch (const std::out_of_range&) {
      fail(field, "integer " + token + " is too large");
    }
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("input", "trailing characters");
  }

  [[noreturn]] void fail(std::string_view field, const std::string& why) const {
    throw ParseError("cannot parse " + std::string(what_) + " \"" + std::string(text_) + "\": " +
                     std::string(field) + ": " + why);
  }

 private:
  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

json symbol_json(const AffineSymbol& x) {
  return json{{"r", x.r}, {"parity", x.parity.value()}, {"s", x.s}};
}

AffineSymbol symbol_from_json(const json& j) {
  const int parity = j.at("parity").get<int>();
  if (parity != 0 && parity != 1) throw ParseError("parity must be 0 or 1");
  return {j.at("r").get<int>(), Parity(parity), j.at("s").get<int>()};
}

json integer_json(const Integer& x) { return to_int64(x); }

}  // namespace

std::string tool_version() { return FUSION_RINGS_VERSION; }

long long to_int64(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw Error("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<long long>();
}

Level parse_level(std::string_view text) {
  if (text == "generic") return {};
  return {parse_rational_level(text)};
}

RationalLevel parse_rational_level(std::string_view text) {
  Cursor cur(text, "level");
  const int p = cur.integer("p");
  cur.expect('/', "level");
  const int q = cur.integer("q");
  cur.finish();
  try {
    return RationalLevel(p, q);
  } catch (const RangeError& e) {
    throw ParseError("invalid level " + std::string(text) + ": " + e.what());
  }
}

AffineSymbol parse_affine_symbol(std::string_view text) {
  Cursor cur(text, "symbol");
  cur.expect('(', "symbol");
  const int r = cur.integer("r");
  cur.expect(',', "symbol");
  const int e = cur.integer("parity");
  if (e != 0 && e != 1) cur.fail("parity", "must be 0 or 1");
  cur.expect(';', "symbol");
  const int s = cur.integer("s");
  cur.expect(')', "symbol");
  cur.finish();
  return {r, Parity(e), s};
}

VirSymbol parse_vir_symbol(std::string_view text) {
  Cursor cur(text, "Virasoro symbol");
  cur.expect('(', "symbol");
  const int a = cur.integer("a");
  cur.expect(',', "symbol");
  const int b = cur.integer("b");
  cur.expect(')', "symbol");
  cur.finish();
  return {a, b};
}

bool is_vir_symbol_text(std::string_view text) {
  return text.find(';') == std::string_view::npos && text.find(',') != std::string_view::npos;
}

std::vector<std::string> split_symbol_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in \"" + std::string(text) + "\"");
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in \"" + std::string(text) + "\"");
  out.push_back(current);
  // An empty list is allowed; empty items are not.
  if (out.size() == 1 && out.front().find_first_not_of(" \t") == std::string::npos) return {};
  for (const auto& item : out)
    if (item.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty item in symbol list \"" + std::string(text) + "\"");
  return out;
}

ProductReport make_product_report(const Level& level, const AffineSymbol& a, const AffineSymbol& b,
                                  const AffineSum& product) {
  ProductReport report{level.to_string(), {a, b}, {}, tool_version()};
  for (const auto& [x, c] : product) report.product.emplace_back(x, c);
  return report;
}

ProductReport make_product_report(const RationalLevel& level, const AffineSymbol& a, const AffineSymbol& b,
                                  const AdmissibleSum& product) {
  ProductReport report{level.to_string(), {a, b}, {}, tool_version()};
  for (const auto& [x, c] : product) report.product.emplace_back(x.rep, c);
  return report;
}

json to_json(const ProductReport& report) {
  json inputs = json::array();
  for (const auto& x : report.inputs) inputs.push_back(symbol_json(x));
  json product = json::array();
  for (const auto& [x, c] : report.product) {
    json term = symbol_json(x);
    term["coeff"] = integer_json(c);
    product.push_back(term);
  }
  return json{{"level", report.level},
              {"inputs", inputs},
              {"product", product},
              {"tool_version", report.tool_version}};
}

ProductReport product_report_from_json(const json& j) {
  try {
    ProductReport report;
    report.level = j.at("level").get<std::string>();
    for (const auto& x : j.at("inputs")) report.inputs.push_back(symbol_from_json(x));
    for (const auto& t : j.at("product"))
      report.product.emplace_back(symbol_from_json(t), Integer(t.at("coeff").get<long long>()));
    report.tool_version = j.at("tool_version").get<std::string>();
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed product report: ") + e.what());
  }
}

json to_json(const VirProductReport& report) {
  json inputs = json::array();
  for (const auto& x : report.inputs) inputs.push_back(json{{"a", x.a}, {"b", x.b}});
  json product = json::array();
  for (const auto& [x, c] : report.product)
    product.push_back(json{{"a", x.a}, {"b", x.b}, {"coeff", integer_json(c)}});
  return json{{"level", report.level},
              {"inputs", inputs},
              {"product", product},
              {"tool_version", report.tool_version}};
}

VirProductReport vir_product_report_from_json(const json& j) {
  try {
    VirProductReport report;
    report.level = j.at("level").get<std::string>();
    for (const auto& x : j.at("inputs")) report.inputs.push_back({x.at("a").get<int>(), x.at("b").get<int>()});
    for (const auto& t : j.at("product"))
      report.product.emplace_back(VirSymbol{t.at("a").get<int>(), t.at("b").get<int>()},
                                  Integer(t.at("coeff").get<long long>()));
    report.tool_version = j.at("tool_version").get<std::string>();
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed product report: ") + e.what());
  }
}

json to_json(const VerificationReport& report, const std::string& level, int bound) {
  json j{{"suite", report.suite},
         {"level", level},
         {"bound", bound},
         {"passed", report.passed()},
         {"checked", report.checked}};
  j["counterexample"] = report.counterexample ? json(*report.counterexample) : json(nullptr);
  return j;
}

json table_to_json(const FusionTable& table) {
  json classes = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    json c = symbol_json(table.classes()[i].rep);
    c["index"] = i;
    classes.push_back(c);
  }
  json entries = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      for (std::size_t k = 0; k < table.size(); ++k)
        entries.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"N", integer_json(table.N(i, j, k))}});
  return json{{"format_version", table_format_version},
              {"level", table.level().to_string()},
              {"tool_version", tool_version()},
              {"classes", classes},
              {"entries", entries}};
}

std::string table_to_csv(const FusionTable& table) {
  std::ostringstream os;
  os << "i,j,k,N\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      for (std::size_t k = 0; k < table.size(); ++k) os << i << ',' << j << ',' << k << ',' << table.N(i, j, k) << '\n';
  return os.str();
}

std::string table_to_text(const FusionTable& table) {
  std::ostringstream os;
  os << "level " << table.level().to_string() << ", " << table.size() << " classes\n";
  for (std::size_t i = 0; i < table.size(); ++i) os << "  [" << i << "] " << to_string(table.classes()[i].rep) << '\n';
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i; j < table.size(); ++j) {
      os << to_string(table.classes()[i].rep) << " x " << to_string(table.classes()[j].rep) << " =";
      bool first = true;
      for (std::size_t k = 0; k < table.size(); ++k) {
        const Integer& n = table.N(i, j, k);
        if (n == 0) continue;
        os << (first ? " " : " + ");
        if (n != 1) os << n << '*';
        os << to_string(table.classes()[k].rep);
        first = false;
      }
      if (first) os << " 0";
      os << '\n';
    }
  return os.str();
}

FusionTable table_from_json(const json& j, const RationalLevel& expected) {
  try {
    const int version = j.at("format_version").get<int>();
    if (version != table_format_version)
      throw ParseError("table format version " + std::to_string(version) + " is not supported (expected " +
                       std::to_string(table_format_version) + ")");
    const std::string level = j.at("level").get<std::string>();
    if (level != expected.to_string())
      throw ParseError("table is for level " + level + ", expected " + expected.to_string());

    const FusionTable reference(expected);
    const std::size_t n = reference.size();
    const auto& classes = j.at("classes");
    if (classes.size() != n)
      throw ParseError("table lists " + std::to_string(classes.size()) + " classes, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if (!(symbol_from_json(classes[i]) == reference.classes()[i].rep))
        throw ParseError("class " + std::to_string(i) + " does not match the level");

    std::vector<Integer> entries(n * n * n, Integer(0));
    std::vector<bool> seen(n * n * n, false);
    for (const auto& e : j.at("entries")) {
      const auto i = e.at("i").get<std::size_t>(), jj = e.at("j").get<std::size_t>(), k = e.at("k").get<std::size_t>();
      if (i >= n || jj >= n || k >= n) throw ParseError("entry index out of range");
      const std::size_t slot = (i * n + jj) * n + k;
      if (seen[slot]) throw ParseError("duplicate entry");
      seen[slot] = true;
      entries[slot] = Integer(e.at("N").get<long long>());
    }
    for (bool s : seen)
      if (!s) throw ParseError("table is missing entries");
    return FusionTable::from_constants(expected, entries);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed table: ") + e.what());
  }
}

FusionTable load_or_build_table(const RationalLevel& level, const std::optional<std::filesystem::path>& cache) {
  if (!cache) return FusionTable(level);
  if (std::filesystem::exists(*cache)) {
    std::ifstream in(*cache);
    if (!in) throw Error("cannot read cache " + cache->string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError("cache " + cache->string() + " is not valid JSON: " + e.what());
    }
    return table_from_json(j, level);
  }
  FusionTable table(level);
  std::ofstream out(*cache);
  if (!out) throw Error("cannot write cache " + cache->string());
  out << dump(table_to_json(table));
  return table;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fusion
