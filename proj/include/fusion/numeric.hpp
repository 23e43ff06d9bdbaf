#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace fusion {

// Exact scalars. Expression templates are disabled so the types behave as
// plain values inside Eigen matrices and standard containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace fusion
