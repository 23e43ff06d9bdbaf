#include "fusion/affine_fusion.hpp"

#include "fusion/error.hpp"
#include "fusion/tensor_cats.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fusion {

namespace {

void require_symbol(const AffineSymbol& x) {
  if (x.r < 0) throw RangeError("r", "r must be nonnegative, got " + std::to_string(x.r));
  if (x.s < 0) throw RangeError("s", "s must be nonnegative, got " + std::to_string(x.s));
}

void require_level(const RationalLevel& level, const AdmissibleClass& c) {
  if (!(c.level == level))
    throw LevelMismatch("class " + to_string(c.rep) + " belongs to level " + c.level.to_string() +
                        ", expected " + level.to_string());
}

std::string describe(const AffineSum& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << to_string(b);
    first = false;
  }
  return os.str();
}

std::string describe(const AdmissibleSum& x) {
  std::vector<AffineSum::Term> raw;
  for (const auto& [c, k] : x) raw.emplace_back(c.rep, k);
  return describe(AffineSum::normalized(std::move(raw)));
}

}  // namespace

std::string to_string(const AffineSymbol& x) {
  return "(" + std::to_string(x.r) + "," + std::to_string(x.parity.value()) + ";" +
         std::to_string(x.s) + ")";
}

Integer quantum_dimension(const AffineSymbol& x) {
  return Integer(2 * x.r + 1) * Integer(x.s + 1);
}

AffineSum fuse_generic(const AffineSymbol& a, const AffineSymbol& b) {
  require_symbol(a);
  require_symbol(b);
  const Parity base = a.parity + b.parity;
  std::vector<AffineSum::Term> raw;
  // Offsets d from the top index r1+r2 carry parity alpha+beta+d.
  for (int d = 0; d <= 2 * std::min(a.r, b.r); ++d) {
    const int r = a.r + b.r - d;
    for (int s = std::abs(a.s - b.s); s <= a.s + b.s; s += 2)
      raw.emplace_back(AffineSymbol{r, base + d, s}, Integer(1));
  }
  return AffineSum::normalized(std::move(raw));
}

AffineSum fuse_generic(const AffineSum& x, const AffineSum& y) {
  return bilinear_product(x, y, [](const AffineSymbol& a, const AffineSymbol& b) {
    return fuse_generic(a, b);
  });
}

std::vector<AffineSymbol> symbols_up_to(int bound) {
  std::vector<AffineSymbol> out;
  for (int r = 0; r <= bound; ++r)
    for (int e = 0; e < 2; ++e)
      for (int s = 0; s <= bound; ++s) out.push_back({r, Parity(e), s});
  return out;
}

// RationalLevel ---------------------------------------------------------------

RationalLevel::RationalLevel(int p, int q) : p_(p), q_(q) {
  if (p < 2) throw RangeError("p", "p must be at least 2, got " + std::to_string(p));
  if (q < 1) throw RangeError("q", "q must be positive, got " + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw RangeError("q", "p and q must be coprime, got " + std::to_string(p) + "/" + std::to_string(q));
}

std::string RationalLevel::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

AdmissibleClass canonicalize(const RationalLevel& level, const AffineSymbol& x) {
  if (x.r < 0 || x.r > level.max_r())
    throw RangeError("r", "r out of range 0.." + std::to_string(level.max_r()));
  if (x.s < 0 || x.s > level.max_s())
    throw RangeError("s", "s out of range 0.." + std::to_string(level.max_s()));
  if (x.parity == Parity::even()) return {level, x};
  return {level, {level.max_r() - x.r, Parity::even(), level.max_s() - x.s}};
}

std::pair<AffineSymbol, AffineSymbol> class_members(const AdmissibleClass& c) {
  const auto& lv = c.level;
  return {c.rep, {lv.max_r() - c.rep.r, Parity::odd(), lv.max_s() - c.rep.s}};
}

AdmissibleClass unit_class(const RationalLevel& level) { return {level, unit_symbol()}; }

std::vector<AdmissibleClass> admissible_classes(const RationalLevel& level) {
  std::vector<AdmissibleClass> out;
  for (int r = 0; r <= level.max_r(); ++r)
    for (int s = 0; s <= level.max_s(); ++s) out.push_back({level, {r, Parity::even(), s}});
  return out;
}

std::vector<AffineSymbol> admissible_symbols(const RationalLevel& level) {
  std::vector<AffineSymbol> out;
  for (int r = 0; r <= level.max_r(); ++r)
    for (int e = 0; e < 2; ++e)
      for (int s = 0; s <= level.max_s(); ++s) out.push_back({r, Parity(e), s});
  return out;
}

AdmissibleSum fuse_rational(const RationalLevel& level, const AdmissibleClass& a,
                            const AdmissibleClass& b) {
  require_level(level, a);
  require_level(level, b);
  const int r1 = a.rep.r, r2 = b.rep.r, s1 = a.rep.s, s2 = b.rep.s;
  const int r_low = std::abs(r1 - r2);
  const int r_top = std::min(2 * level.q() - 2 - r1 - r2, r1 + r2);
  const int s_low = std::abs(s1 - s2);
  const int s_top = std::min(2 * level.max_s() - s1 - s2, s1 + s2);
  if (r_top < r_low || s_top < s_low)
    throw Error("truncation bound below |difference| for " + to_string(a.rep) + " x " + to_string(b.rep));

  const Parity base = a.rep.parity + b.rep.parity;
  std::vector<AdmissibleSum::Term> raw;
  for (int r = r_low; r <= r_top; ++r)
    for (int s = s_low; s <= s_top; s += 2)
      raw.emplace_back(canonicalize(level, {r, base + (r - r_low), s}), Integer(1));
  return AdmissibleSum::normalized(std::move(raw));
}

AdmissibleSum fuse_rational(const RationalLevel& level, const AdmissibleSum& x,
                            const AdmissibleSum& y) {
  return bilinear_product(x, y, [&](const AdmissibleClass& a, const AdmissibleClass& b) {
    return fuse_rational(level, a, b);
  });
}

AffineSum fuse_truncated_symbols(const RationalLevel& level, const AffineSymbol& a,
                                 const AffineSymbol& b) {
  canonicalize(level, a);
  canonicalize(level, b);
  const OspMultiset osp = osp_truncated_tensor({a.r, a.parity}, {b.r, b.parity}, level.q());
  const Sl2Multiset sl2 = sl2_truncated_tensor({a.s}, {b.s}, level.max_s());
  std::vector<AffineSum::Term> raw;
  for (const auto& o : osp)
    for (const auto& v : sl2) raw.emplace_back(AffineSymbol{o.n, o.parity, v.n}, Integer(1));
  return AffineSum::normalized(std::move(raw));
}

// FusionTable -------------------------------------------------------------------

struct FusionTable::Impl {
  RationalLevel level;
  std::vector<AdmissibleClass> classes;
  std::size_t unit = 0;
  bool preloaded = false;
  mutable std::vector<ClassVector> rows;
  mutable std::unique_ptr<std::once_flag[]> flags;

  explicit Impl(RationalLevel lv)
      : level(lv), classes(admissible_classes(lv)) {
    const std::size_t n = classes.size();
    rows.resize(n * n);
    flags = std::make_unique<std::once_flag[]>(n * n);
    unit = index(unit_symbol());
  }

  std::size_t index(const AffineSymbol& rep) const {
    return static_cast<std::size_t>(rep.r * (level.max_s() + 1) + rep.s);
  }

  const ClassVector& row(std::size_t i, std::size_t j) const {
    const std::size_t n = classes.size();
    const std::size_t slot = i * n + j;
    if (!preloaded) {
      std::call_once(flags[slot], [&] {
        ClassVector dense(n, Integer(0));
        for (const auto& [c, coeff] : fuse_rational(level, classes[i], classes[j]))
          dense[index(c.rep)] += coeff;
        rows[slot] = std::move(dense);
      });
    }
    return rows[slot];
  }
};

FusionTable::FusionTable(RationalLevel level) : impl_(std::make_shared<const Impl>(level)) {}

FusionTable FusionTable::from_constants(RationalLevel level, const std::vector<Integer>& entries) {
  auto impl = std::make_shared<Impl>(level);
  const std::size_t n = impl->classes.size();
  if (entries.size() != n * n * n)
    throw Error("expected " + std::to_string(n * n * n) + " structure constants, got " +
                std::to_string(entries.size()));
  for (std::size_t slot = 0; slot < n * n; ++slot)
    impl->rows[slot].assign(entries.begin() + static_cast<std::ptrdiff_t>(slot * n),
                            entries.begin() + static_cast<std::ptrdiff_t>((slot + 1) * n));
  impl->preloaded = true;
  return FusionTable(std::shared_ptr<const Impl>(std::move(impl)));
}

const RationalLevel& FusionTable::level() const { return impl_->level; }
const std::vector<AdmissibleClass>& FusionTable::classes() const { return impl_->classes; }
std::size_t FusionTable::size() const { return impl_->classes.size(); }
std::size_t FusionTable::unit_index() const { return impl_->unit; }

std::size_t FusionTable::index_of(const AdmissibleClass& c) const {
  require_level(impl_->level, c);
  canonicalize(impl_->level, c.rep);
  if (c.rep.parity != Parity::even()) throw RangeError("parity", "class representative must be even");
  return impl_->index(c.rep);
}

const Integer& FusionTable::N(std::size_t i, std::size_t j, std::size_t k) const {
  return impl_->row(i, j)[k];
}

const FusionTable::ClassVector& FusionTable::product(std::size_t i, std::size_t j) const {
  return impl_->row(i, j);
}

FusionTable::ClassVector FusionTable::basis_vector(std::size_t i) const {
  ClassVector v(size(), Integer(0));
  v.at(i) = 1;
  return v;
}

FusionTable::ClassVector FusionTable::multiply(const ClassVector& x, const ClassVector& y) const {
  const std::size_t n = size();
  ClassVector out(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Integer scale = x[i] * y[j];
      const ClassVector& row = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (row[k] != 0) out[k] += scale * row[k];
    }
  }
  return out;
}

FusionTable structure_table(const RationalLevel& level) { return FusionTable(level); }

std::size_t conjugate_class(const FusionTable& table, std::size_t i) {
  const std::size_t unit = table.unit_index();
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Integer& n = table.N(i, j, unit);
    if (n == 0) continue;
    if (n != 1 || found)
      throw Error("class " + to_string(table.classes()[i].rep) + " has no unique conjugate");
    found = j;
  }
  if (!found) throw Error("class " + to_string(table.classes()[i].rep) + " has no conjugate");
  return *found;
}

Integer genus_dimension(const FusionTable& table, int genus, const std::vector<std::size_t>& insertions) {
  if (genus < 0) throw RangeError("genus", "genus must be nonnegative");
  if (genus == 0 && insertions.empty())
    throw RangeError("insertions", "genus 0 surface needs at least one insertion");
  for (auto i : insertions)
    if (i >= table.size()) throw RangeError("insertions", "class index " + std::to_string(i) + " out of range");

  using ClassVector = FusionTable::ClassVector;
  ClassVector acc = table.basis_vector(table.unit_index());
  for (auto i : insertions) acc = table.multiply(acc, table.basis_vector(i));

  if (genus > 0) {
    // Each handle contributes h = sum_a a * a^*.
    ClassVector handle(table.size(), Integer(0));
    for (std::size_t a = 0; a < table.size(); ++a) {
      const ClassVector& row = table.product(a, conjugate_class(table, a));
      for (std::size_t k = 0; k < table.size(); ++k) handle[k] += row[k];
    }
    for (int g = 0; g < genus; ++g) acc = table.multiply(acc, handle);
  }
  return acc[table.unit_index()];
}

// Verification ------------------------------------------------------------------

VerificationReport verify_factorization(int bound) {
  VerificationReport report{"factorization", "generic, indices <= " + std::to_string(bound)};
  const auto symbols = symbols_up_to(bound);
  for (const auto& a : symbols) {
    for (const auto& b : symbols) {
      ++report.checked;
      std::map<OspIrrep, int> osp_mult;
      for (const auto& o : osp_tensor({a.r, a.parity}, {b.r, b.parity})) ++osp_mult[o];
      std::map<Sl2Irrep, int> sl2_mult;
      for (const auto& v : sl2_tensor({a.s}, {b.s})) ++sl2_mult[v];
      std::vector<AffineSum::Term> raw;
      for (const auto& [o, mo] : osp_mult)
        for (const auto& [v, mv] : sl2_mult)
          raw.emplace_back(AffineSymbol{o.n, o.parity, v.n}, Integer(mo * mv));
      const AffineSum expected = AffineSum::normalized(std::move(raw));
      const AffineSum actual = fuse_generic(a, b);
      if (actual != expected) {
        report.counterexample = to_string(a) + " o " + to_string(b) + " = " + describe(actual) +
                                " but osp x sl2 gives " + describe(expected);
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_quotient(const RationalLevel& level) {
  VerificationReport report{"quotient", "level " + level.to_string()};
  const auto to_class = [&](const AffineSymbol& x) {
    return AdmissibleSum::basis(canonicalize(level, x));
  };
  if (!(canonicalize(level, unit_symbol()) == unit_class(level))) {
    report.counterexample = "unit symbol does not map to the unit class";
    return report;
  }
  const auto symbols = admissible_symbols(level);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i; j < symbols.size(); ++j) {
      ++report.checked;
      const auto& x = symbols[i];
      const auto& y = symbols[j];
      const AdmissibleSum lhs = linear_extension(fuse_truncated_symbols(level, x, y), to_class);
      const AdmissibleSum rhs = fuse_rational(level, canonicalize(level, x), canonicalize(level, y));
      if (lhs != rhs) {
        report.counterexample = "[" + to_string(x) + " o " + to_string(y) + "] = " + describe(lhs) +
                                " but class product = " + describe(rhs);
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_commutativity_generic(int bound) {
  VerificationReport report{"comm", "generic, indices <= " + std::to_string(bound)};
  const auto symbols = symbols_up_to(bound);
  for (const auto& a : symbols)
    for (const auto& b : symbols) {
      ++report.checked;
      if (fuse_generic(a, b) != fuse_generic(b, a)) {
        report.counterexample = to_string(a) + " o " + to_string(b) + " != " + to_string(b) + " o " + to_string(a);
        return report;
      }
    }
  return report;
}

VerificationReport verify_associativity_generic(int bound) {
  VerificationReport report{"assoc", "generic, indices <= " + std::to_string(bound)};
  const auto symbols = symbols_up_to(bound);
  const std::size_t n = symbols.size();
  std::vector<AffineSum> pair(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair[i * n + j] = fuse_generic(symbols[i], symbols[j]);

  // Symbols in a pair product have indices up to 2*bound.
  const std::size_t side = 2 * static_cast<std::size_t>(bound) + 1;
  const auto key = [side](const AffineSymbol& x) {
    return (static_cast<std::size_t>(x.r) * 2 + static_cast<std::size_t>(x.parity.value())) * side +
           static_cast<std::size_t>(x.s);
  };
  std::unordered_map<std::size_t, AffineSum> memo;
  const auto cached = [&](const AffineSymbol& a, const AffineSymbol& b) -> const AffineSum& {
    const std::size_t k = key(a) * 2 * side * side + key(b);
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, fuse_generic(a, b)).first;
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        const AffineSum left = bilinear_product(pair[i * n + j], AffineSum::basis(symbols[k]), cached);
        const AffineSum right = bilinear_product(AffineSum::basis(symbols[i]), pair[j * n + k], cached);
        if (left != right) {
          report.counterexample = "(" + to_string(symbols[i]) + " o " + to_string(symbols[j]) + ") o " +
                                  to_string(symbols[k]) + " = " + describe(left) + " but right bracketing = " +
                                  describe(right);
          return report;
        }
      }
  return report;
}

VerificationReport verify_commutativity_rational(const RationalLevel& level) {
  VerificationReport report{"comm", "level " + level.to_string()};
  const auto classes = admissible_classes(level);
  for (const auto& a : classes)
    for (const auto& b : classes) {
      ++report.checked;
      if (fuse_rational(level, a, b) != fuse_rational(level, b, a)) {
        report.counterexample = to_string(a.rep) + " o " + to_string(b.rep) + " is not symmetric";
        return report;
      }
    }
  return report;
}

VerificationReport verify_associativity_rational(const RationalLevel& level) {
  VerificationReport report{"assoc", "level " + level.to_string()};
  const FusionTable table(level);
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        const auto left = table.multiply(table.product(i, j), table.basis_vector(k));
        const auto right = table.multiply(table.basis_vector(i), table.product(j, k));
        if (left != right) {
          const auto& c = table.classes();
          report.counterexample = "(" + to_string(c[i].rep) + " o " + to_string(c[j].rep) + ") o " +
                                  to_string(c[k].rep) + " differs from the right bracketing";
          return report;
        }
      }
  return report;
}

VerificationReport verify_dimension_homomorphism(int bound) {
  VerificationReport report{"dimension-hom", "generic, indices <= " + std::to_string(bound)};
  const auto symbols = symbols_up_to(bound);
  for (const auto& a : symbols)
    for (const auto& b : symbols) {
      ++report.checked;
      const Integer lhs = evaluate(fuse_generic(a, b), quantum_dimension);
      const Integer rhs = quantum_dimension(a) * quantum_dimension(b);
      if (lhs != rhs) {
        report.counterexample = "qdim(" + to_string(a) + " o " + to_string(b) + ") = " + lhs.str() +
                                " but qdim product = " + rhs.str();
        return report;
      }
    }
  return report;
}

VerificationReport verify_representative_independence(const RationalLevel& level) {
  VerificationReport report{"representatives", "level " + level.to_string()};
  const auto to_class = [&](const AffineSymbol& x) {
    return AdmissibleSum::basis(canonicalize(level, x));
  };
  for (const auto& c : admissible_classes(level)) {
    const auto [even, odd] = class_members(c);
    if (!(canonicalize(level, even) == canonicalize(level, odd))) {
      report.counterexample = to_string(even) + " and " + to_string(odd) + " canonicalize differently";
      return report;
    }
    for (const auto& y : admissible_symbols(level)) {
      ++report.checked;
      const AdmissibleSum via_even = linear_extension(fuse_truncated_symbols(level, even, y), to_class);
      const AdmissibleSum via_odd = linear_extension(fuse_truncated_symbols(level, odd, y), to_class);
      if (via_even != via_odd) {
        report.counterexample = to_string(even) + " o " + to_string(y) + " = " + describe(via_even) +
                                " but " + to_string(odd) + " o " + to_string(y) + " = " + describe(via_odd);
        return report;
      }
    }
  }
  return report;
}

}  // namespace fusion
