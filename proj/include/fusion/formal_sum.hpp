#pragma once

#include "fusion/numeric.hpp"

#include <algorithm>
#include <concepts>
#include <type_traits>
#include <utility>
#include <vector>

namespace fusion {

template <class B>
concept BasisSymbol = std::totally_ordered<B> && std::copyable<B>;

// A finite integer combination of basis symbols.
//
// Terms are kept sorted by basis symbol with no zero coefficients, so the
// empty sum is the only representation of zero and structural equality is
// ring equality.
template <BasisSymbol B, class Coeff = Integer>
class FormalSum {
 public:
  using basis_type = B;
  using coeff_type = Coeff;
  using Term = std::pair<B, Coeff>;

  FormalSum() = default;

  static FormalSum basis(B b, Coeff c = Coeff(1)) {
    return normalized({Term{std::move(b), std::move(c)}});
  }

  // Merges equal symbols, drops zero coefficients and sorts.
  static FormalSum normalized(std::vector<Term> raw) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    FormalSum out;
    out.terms_.reserve(raw.size());
    for (auto& term : raw) {
      if (!out.terms_.empty() && out.terms_.back().first == term.first) {
        out.terms_.back().second += term.second;
      } else {
        if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
        out.terms_.push_back(std::move(term));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
    return out;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  Coeff coefficient(const B& b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const B& key) { return t.first < key; });
    if (it == terms_.end() || !(it->first == b)) return Coeff(0);
    return it->second;
  }

  std::vector<B> support() const {
    std::vector<B> out;
    out.reserve(terms_.size());
    for (const auto& [b, c] : terms_) out.push_back(b);
    return out;
  }

  FormalSum& operator+=(const FormalSum& other) { return *this = *this + other; }

  friend FormalSum operator+(const FormalSum& x, const FormalSum& y) {
    // Both inputs are sorted; a linear merge keeps the invariant.
    FormalSum out;
    out.terms_.reserve(x.size() + y.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->first < i->first) {
        out.terms_.push_back(*j++);
      } else {
        Coeff c = i->second + j->second;
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend FormalSum operator-(const FormalSum& x) {
    FormalSum out = x;
    for (auto& term : out.terms_) term.second = -term.second;
    return out;
  }

  friend FormalSum operator-(const FormalSum& x, const FormalSum& y) { return x + (-y); }

  friend FormalSum operator*(const Coeff& c, const FormalSum& x) {
    if (c == 0) return {};
    FormalSum out = x;
    for (auto& term : out.terms_) term.second *= c;
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::vector<Term> terms_;
};

template <BasisSymbol B, class Coeff>
FormalSum<B, Coeff> normalize(std::vector<std::pair<B, Coeff>> raw) {
  return FormalSum<B, Coeff>::normalized(std::move(raw));
}

template <BasisSymbol B, class Coeff>
FormalSum<B, Coeff> add(const FormalSum<B, Coeff>& x, const FormalSum<B, Coeff>& y) {
  return x + y;
}

// Extends a product rule on basis symbols bilinearly. `rule(a, b)` may return
// a sum over any basis type; the result has that basis type.
template <BasisSymbol B, class Coeff, class Rule>
auto bilinear_product(const FormalSum<B, Coeff>& x, const FormalSum<B, Coeff>& y,
                      Rule&& rule) {
  using Result = std::remove_cvref_t<std::invoke_result_t<Rule&, const B&, const B&>>;
  std::vector<typename Result::Term> raw;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      const Coeff scale = ca * cb;
      for (const auto& [c, cc] : rule(a, b)) raw.emplace_back(c, scale * cc);
    }
  }
  return Result::normalized(std::move(raw));
}

// Extends `f : B -> FormalSum<B2>` linearly.
template <BasisSymbol B, class Coeff, class F>
auto linear_extension(const FormalSum<B, Coeff>& x, F&& f) {
  using Result = std::remove_cvref_t<std::invoke_result_t<F&, const B&>>;
  std::vector<typename Result::Term> raw;
  for (const auto& [a, ca] : x) {
    for (const auto& [c, cc] : f(a)) raw.emplace_back(c, ca * cc);
  }
  return Result::normalized(std::move(raw));
}

// Applies a ring homomorphism to the integers (e.g. a dimension function).
template <BasisSymbol B, class Coeff, class F>
Coeff evaluate(const FormalSum<B, Coeff>& x, F&& value_of) {
  Coeff total(0);
  for (const auto& [b, c] : x) total += c * value_of(b);
  return total;
}

}  // namespace fusion
