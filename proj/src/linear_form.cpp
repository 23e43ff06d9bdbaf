#include "fusion/linear_form.hpp"

#include <sstream>

namespace fusion {

namespace {

void append_term(std::ostringstream& os, const Rational& c, const std::string& var, bool& first) {
  if (c == 0) return;
  Rational magnitude = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (var.empty()) {
    os << magnitude;
  } else {
    if (magnitude != 1) os << magnitude << "*";
    os << var;
  }
  first = false;
}

}  // namespace

std::string to_string(const LinearForm& form) {
  std::ostringstream os;
  bool first = true;
  append_term(os, form.t_coefficient, "t", first);
  append_term(os, form.constant, "", first);
  if (first) os << "0";
  return os.str();
}

std::string to_string(const PlaneForm& form, const std::string& lambda_name) {
  std::ostringstream os;
  bool first = true;
  append_term(os, form.clambda, lambda_name, first);
  append_term(os, form.ct, "t", first);
  append_term(os, form.c0, "", first);
  if (first) os << "0";
  return os.str();
}

std::optional<LinearForm> lf_solve(const PlaneForm& factor) {
  if (factor.clambda == 0) return std::nullopt;
  return LinearForm{-factor.c0 / factor.clambda, -factor.ct / factor.clambda};
}

}  // namespace fusion
