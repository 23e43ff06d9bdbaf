#include "fusion/virasoro.hpp"

#include "fusion/error.hpp"
#include "fusion/tensor_cats.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fusion {

namespace {

template <class Sum, class Show>
std::string describe(const Sum& x, Show show) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << show(b);
    first = false;
  }
  return os.str();
}

std::string describe(const VirSum& x) {
  return describe(x, [](const VirSymbol& v) { return to_string(v); });
}

std::string describe(const MinimalSum& x) {
  return describe(x, [](const MinimalClass& c) { return to_string(c.rep); });
}

void require_level(const RationalLevel& level, const MinimalClass& c) {
  if (!(c.level == level))
    throw LevelMismatch("class " + to_string(c.rep) + " belongs to level " + c.level.to_string() +
                        ", expected " + level.to_string());
}

MinimalSum to_minimal(const RationalLevel& level, const VirSum& x) {
  std::vector<MinimalSum::Term> raw;
  for (const auto& [v, c] : x)
    if (auto cls = vir_canonicalize(level, v)) raw.emplace_back(*cls, c);
  return MinimalSum::normalized(std::move(raw));
}

}  // namespace

std::string to_string(const VirSymbol& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

CentralCharge central_charge(int p, int q) {
  if (p < 2) throw RangeError("p", "p must be at least 2");
  if (q < 2) throw RangeError("q", "q must be at least 2");
  if (std::gcd(p, q) != 1) throw RangeError("q", "p and q must be coprime");
  const Rational diff(p - q);
  return {Rational(1) - Rational(6) * diff * diff / Rational(p * q)};
}

VirSum vir_fuse_generic(const VirSymbol& x, const VirSymbol& y) {
  std::vector<VirSum::Term> raw;
  for (const auto& a : sl2_tensor({x.a}, {y.a}))
    for (const auto& b : sl2_tensor({x.b}, {y.b})) raw.emplace_back(VirSymbol{a.n, b.n}, Integer(1));
  return VirSum::normalized(std::move(raw));
}

VirSum vir_fuse_generic(const VirSum& x, const VirSum& y) {
  return bilinear_product(x, y, [](const VirSymbol& a, const VirSymbol& b) {
    return vir_fuse_generic(a, b);
  });
}

void require_minimal(const RationalLevel& level) {
  if (level.q() < 2)
    throw RangeError("q", "minimal models need q >= 2, got level " + level.to_string());
}

std::optional<MinimalClass> vir_canonicalize(const RationalLevel& level, const VirSymbol& x) {
  require_minimal(level);
  const int p = level.p(), q = level.q();
  if (x.a < 0 || x.a > q - 1) throw RangeError("a", "a out of range 0.." + std::to_string(q - 1));
  if (x.b < 0 || x.b > p - 1) throw RangeError("b", "b out of range 0.." + std::to_string(p - 1));
  if (x.a == q - 1 || x.b == p - 1) return std::nullopt;
  const VirSymbol partner{q - 2 - x.a, p - 2 - x.b};
  return MinimalClass{level, std::min(x, partner)};
}

std::vector<MinimalClass> minimal_classes(const RationalLevel& level) {
  require_minimal(level);
  std::set<MinimalClass> seen;
  for (int a = 0; a <= level.q() - 2; ++a)
    for (int b = 0; b <= level.p() - 2; ++b) seen.insert(*vir_canonicalize(level, {a, b}));
  return {seen.begin(), seen.end()};
}

MinimalSum vir_fuse_minimal(const RationalLevel& level, const MinimalClass& x, const MinimalClass& y) {
  require_level(level, x);
  require_level(level, y);
  std::vector<MinimalSum::Term> raw;
  for (const auto& a : sl2_truncated_tensor({x.rep.a}, {y.rep.a}, level.q() - 2))
    for (const auto& b : sl2_truncated_tensor({x.rep.b}, {y.rep.b}, level.p() - 2))
      if (auto cls = vir_canonicalize(level, {a.n, b.n})) raw.emplace_back(*cls, Integer(1));
  return MinimalSum::normalized(std::move(raw));
}

MinimalSum vir_fuse_minimal(const RationalLevel& level, const MinimalSum& x, const MinimalSum& y) {
  return bilinear_product(x, y, [&](const MinimalClass& a, const MinimalClass& b) {
    return vir_fuse_minimal(level, a, b);
  });
}

// V_{-1} is zero.
VirSum ds_phi_e(const AffineSymbol& x) {
  const int a = x.parity == Parity::even() ? x.r : x.r - 1;
  if (a < 0) return {};
  return VirSum::basis({a, x.s});
}

VirSum ds_phi_f(const AffineSymbol& x) {
  const int a = x.parity == Parity::even() ? x.r - 1 : x.r;
  if (a < 0) return {};
  return VirSum::basis({a, x.s});
}

VirSum ds_map(const AffineSymbol& x) { return ds_phi_e(x) + ds_phi_f(x); }

VirSum ds_map(const AffineSum& x) {
  return linear_extension(x, [](const AffineSymbol& s) { return ds_map(s); });
}

MinimalSum ds_map(const RationalLevel& level, const AffineSymbol& x) {
  canonicalize(level, x);
  return to_minimal(level, ds_map(x));
}

MinimalSum ds_map(const RationalLevel& level, const AdmissibleSum& x) {
  return linear_extension(x, [&](const AdmissibleClass& c) { return ds_map(level, c.rep); });
}

VerificationReport verify_ds_epimorphism(int bound) {
  VerificationReport report{"ds-hom", "generic, indices <= " + std::to_string(bound)};
  const auto symbols = symbols_up_to(bound);
  for (const auto& x : symbols)
    for (const auto& y : symbols) {
      ++report.checked;
      const VirSum lhs = ds_map(fuse_generic(x, y));
      const VirSum rhs = vir_fuse_generic(ds_map(x), ds_map(y));
      if (lhs != rhs) {
        report.counterexample = "ds(" + to_string(x) + " o " + to_string(y) + ") = " + describe(lhs) +
                                " but ds(x) o ds(y) = " + describe(rhs);
        return report;
      }
    }
  // ds(a,0;b) = (a,b) + (a-1,b) is unitriangular, so every (a,b) is hit.
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      ++report.checked;
      const VirSymbol lead{a, b};
      const VirSum image = ds_map(AffineSymbol{a, Parity::even(), b});
      const VirSum rest = image - VirSum::basis(lead);
      const bool lower = std::all_of(rest.begin(), rest.end(), [&](const auto& t) { return t.first < lead; });
      if (image.coefficient(lead) != 1 || !lower) {
        report.counterexample = "image of (" + std::to_string(a) + ",0;" + std::to_string(b) +
                                ") is not unitriangular: " + describe(image);
        return report;
      }
    }
  return report;
}

VerificationReport verify_ds_epimorphism(const RationalLevel& level) {
  require_minimal(level);
  const CentralCharge c = central_charge(level.p(), level.q());
  VerificationReport report{"ds-hom", "level " + level.to_string() + " onto c = " + c.value.str()};
  const auto classes = admissible_classes(level);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      ++report.checked;
      const MinimalSum lhs = ds_map(level, fuse_rational(level, x, y));
      const MinimalSum rhs = vir_fuse_minimal(level, ds_map(level, AdmissibleSum::basis(x)),
                                              ds_map(level, AdmissibleSum::basis(y)));
      if (lhs != rhs) {
        report.counterexample = "ds(" + to_string(x.rep) + " o " + to_string(y.rep) + ") = " + describe(lhs) +
                                " but ds(x) o ds(y) = " + describe(rhs);
        return report;
      }
    }

  // Surjectivity over Z: ds(a,0;b) - [a-1,b] = [a,b], by induction on a.
  std::set<MinimalClass> reached;
  for (int a = 0; a <= level.q() - 2; ++a)
    for (int b = 0; b <= level.p() - 2; ++b) {
      ++report.checked;
      const MinimalClass lead = *vir_canonicalize(level, {a, b});
      MinimalSum expected = MinimalSum::basis(lead);
      if (a > 0) {
        const MinimalClass below = *vir_canonicalize(level, {a - 1, b});
        if (!reached.contains(below)) {
          report.counterexample = "class " + to_string(below.rep) + " not reached before " + to_string(lead.rep);
          return report;
        }
        expected = expected + MinimalSum::basis(below);
      }
      const MinimalSum image = ds_map(level, AffineSymbol{a, Parity::even(), b});
      if (image != expected) {
        report.counterexample = "ds(" + std::to_string(a) + ",0;" + std::to_string(b) + ") = " + describe(image);
        return report;
      }
      reached.insert(lead);
    }
  for (const auto& m : minimal_classes(level)) {
    ++report.checked;
    if (!reached.contains(m)) {
      report.counterexample = "minimal class " + to_string(m.rep) + " is not in the image";
      return report;
    }
  }
  return report;
}

VerificationReport verify_ds_well_defined(const RationalLevel& level) {
  require_minimal(level);
  VerificationReport report{"ds-well-defined", "level " + level.to_string()};
  for (const auto& x : admissible_symbols(level)) {
    ++report.checked;
    const AffineSymbol rep = canonicalize(level, x).rep;
    const MinimalSum lhs = ds_map(level, x);
    const MinimalSum rhs = ds_map(level, rep);
    if (lhs != rhs) {
      report.counterexample = "ds" + to_string(x) + " = " + describe(lhs) + " but ds" + to_string(rep) +
                              " = " + describe(rhs);
      return report;
    }
  }
  return report;
}

}  // namespace fusion
