#pragma once

#include "fusion/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace fusion {

// The affine function `constant + t_coefficient * t` of the level parameter
// t = k + 2. Highest weights of generalized Weyl modules live here.
struct LinearForm {
  Rational constant{0};
  Rational t_coefficient{0};

  static LinearForm constant_form(Rational c) { return {std::move(c), Rational(0)}; }
  static LinearForm t() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return constant == 0 && t_coefficient == 0; }
  Rational operator()(const Rational& t_value) const { return constant + t_coefficient * t_value; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  // Ordered by slope first; any total order will do for set semantics.
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
    if (a.t_coefficient != b.t_coefficient)
      return a.t_coefficient < b.t_coefficient ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    if (a.constant != b.constant)
      return a.constant < b.constant ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  LinearForm& operator+=(const LinearForm& o) {
    constant += o.constant;
    t_coefficient += o.t_coefficient;
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    constant -= o.constant;
    t_coefficient -= o.t_coefficient;
    return *this;
  }
  LinearForm& operator*=(const Rational& c) {
    constant *= c;
    t_coefficient *= c;
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator-(const LinearForm& a) { return {-a.constant, -a.t_coefficient}; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  friend LinearForm operator+(LinearForm a, const Rational& c) {
    a.constant += c;
    return a;
  }
  friend LinearForm operator-(LinearForm a, const Rational& c) {
    a.constant -= c;
    return a;
  }
};

std::string to_string(const LinearForm& form);

// Affine function `c0 + ct * t + clambda * lambda` on the plane with
// coordinates (t, lambda). Its zero set is a line.
struct PlaneForm {
  Rational c0{0};
  Rational ct{0};
  Rational clambda{0};

  bool is_zero() const { return c0 == 0 && ct == 0 && clambda == 0; }

  // Substitutes a LinearForm for lambda.
  LinearForm restrict_to(const LinearForm& lambda) const {
    return LinearForm{c0 + clambda * lambda.constant, ct + clambda * lambda.t_coefficient};
  }

  friend bool operator==(const PlaneForm&, const PlaneForm&) = default;

  PlaneForm& operator+=(const PlaneForm& o) {
    c0 += o.c0;
    ct += o.ct;
    clambda += o.clambda;
    return *this;
  }
  friend PlaneForm operator+(PlaneForm a, const PlaneForm& b) { return a += b; }
  friend PlaneForm operator-(const PlaneForm& a) { return {-a.c0, -a.ct, -a.clambda}; }
  friend PlaneForm operator-(const PlaneForm& a, const PlaneForm& b) { return a + (-b); }
  friend PlaneForm operator*(const Rational& c, const PlaneForm& a) {
    return {c * a.c0, c * a.ct, c * a.clambda};
  }
  // Embeds a form in t alone (no lambda dependence).
  static PlaneForm from(const LinearForm& f) { return {f.constant, f.t_coefficient, Rational(0)}; }
  static PlaneForm lambda() { return {Rational(0), Rational(0), Rational(1)}; }
  static PlaneForm constant(Rational c) { return {std::move(c), Rational(0), Rational(0)}; }
};

std::string to_string(const PlaneForm& form, const std::string& lambda_name = "l");

// Solves `factor = 0` for lambda. Returns nothing when the factor does not
// involve lambda, in which case it only constrains t.
std::optional<LinearForm> lf_solve(const PlaneForm& factor);

}  // namespace fusion
