#include "fusion/coinvariant_oracle.hpp"

#include "fusion/error.hpp"
#include "fusion/tensor_cats.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace fusion {

namespace {

std::string describe(const std::set<LinearForm>& roots) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& w : roots) {
    if (!first) os << ", ";
    os << to_string(w);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string describe(const std::vector<AffineSymbol>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << to_string(xs[i]);
  os << "]";
  return os.str();
}

std::vector<AffineSymbol> support_multiset(const AffineSum& x) {
  std::vector<AffineSymbol> out;
  for (const auto& [b, c] : x)
    for (Integer k = 0; k < c; ++k) out.push_back(b);
  return out;
}

// t - 2 - lambda: the diagram automorphism exchanging the two branches.
LinearForm flip_branch(const LinearForm& w) {
  return {Rational(-2) - w.constant, Rational(1) - w.t_coefficient};
}

}  // namespace

WeightLine weight_of_symbol(const AffineSymbol& x) {
  if (x.r < 0 || x.s < 0) throw RangeError(x.r < 0 ? "r" : "s", "symbol indices must be nonnegative");
  if (x.parity == Parity::even()) return {LinearForm{Rational(x.s), Rational(-x.r)}, 0};
  return {LinearForm{Rational(-x.s - 2), Rational(x.r + 1)}, 1};
}

std::vector<std::pair<AffineSymbol, int>> symbol_of_weight(const LinearForm& w) {
  std::vector<std::pair<AffineSymbol, int>> out;
  if (!is_integer(w.constant) || !is_integer(w.t_coefficient)) return out;
  const int c = w.constant.convert_to<int>();
  const int d = w.t_coefficient.convert_to<int>();
  if (d <= 0 && c >= 0) out.push_back({AffineSymbol{-d, Parity::even(), c}, 0});
  if (d >= 1 && c <= -2) out.push_back({AffineSymbol{d - 1, Parity::odd(), -c - 2}, 1});
  return out;
}

SingularData singular_data(const AffineSymbol& x) {
  if (x.r < 0 || x.s < 0) throw RangeError(x.r < 0 ? "r" : "s", "symbol indices must be nonnegative");
  if (x.parity == Parity::even()) return {0, x.s + 1, x.r};
  return {1, x.s + 1, x.r + 1};
}

PlaneForm loop_alpha(const LinearForm& lambda_x, const LinearForm& lambda_other) {
  const Rational half(1, 2);
  return half * (PlaneForm::lambda() - PlaneForm::from(lambda_x) - PlaneForm::from(lambda_other) -
                 PlaneForm::constant(Rational(2)));
}

std::vector<VanishingFactor> loop_factors(const SingularData& sd, const PlaneForm& alpha,
                                          const LinearForm& beta, int t_orientation) {
  if (sd.branch != 0 && sd.branch != 1) throw RangeError("branch", "branch must be 0 or 1");
  if (sd.n_sv < 1) throw RangeError("n_sv", "n_sv must be positive");
  if (sd.m_sv < 0) throw RangeError("m_sv", "m_sv must be nonnegative");
  if (t_orientation != 1 && t_orientation != -1) throw RangeError("t_orientation", "orientation is +1 or -1");

  const PlaneForm b = PlaneForm::from(beta);
  const auto t_term = [&](int i) { return PlaneForm{Rational(0), Rational(i * t_orientation), Rational(0)}; };
  const auto c = [](int j) { return PlaneForm::constant(Rational(j)); };

  std::vector<VanishingFactor> out;
  for (int i = 1; i <= sd.m_sv; ++i)
    for (int j = 1; j <= sd.n_sv; ++j) {
      if (sd.branch == 1) {
        out.push_back(-t_term(i) - c(j) - alpha + b);
      } else {
        out.push_back(t_term(i) + c(j) - alpha + b);
      }
      out.push_back(-t_term(i) - c(j) - alpha);
    }
  for (int s = 1; s <= sd.n_sv; ++s) {
    if (sd.branch == 1) {
      out.push_back(alpha + c(s));
    } else {
      out.push_back(alpha - b - c(s));
    }
  }
  return out;
}

std::string to_string(const Convention& c) {
  std::string beta;
  switch (c.beta) {
    case BetaReading::weight: beta = "lambda"; break;
    case BetaReading::dot_reflection: beta = "-lambda-2"; break;
    case BetaReading::shifted_negation: beta = "-lambda-1"; break;
  }
  return std::string("t_orientation=") + (c.t_orientation > 0 ? "+1" : "-1") + " beta=" + beta +
         " swap_branches=" + (c.swap_branches ? "yes" : "no") +
         " sigma=" + (c.reflect_infinity ? "-lambda-2" : "identity");
}

std::vector<Convention> candidate_conventions() {
  std::vector<Convention> out;
  for (int orientation : {1, -1})
    for (auto beta : {BetaReading::weight, BetaReading::dot_reflection, BetaReading::shifted_negation})
      for (bool swap : {false, true})
        for (bool reflect : {false, true}) out.push_back({orientation, beta, swap, reflect});
  return out;
}

LinearForm apply_beta(BetaReading reading, const LinearForm& lambda_other) {
  switch (reading) {
    case BetaReading::weight: return lambda_other;
    case BetaReading::dot_reflection: return -lambda_other - Rational(2);
    case BetaReading::shifted_negation: return -lambda_other - Rational(1);
  }
  return lambda_other;
}

std::set<LinearForm> root_set(const AffineSymbol& x, const AffineSymbol& other, const Convention& c) {
  if (x.parity == Parity::odd()) {
    // Not calibrated separately: the odd branch is the image of the even
    // one under lambda -> t - 2 - lambda.
    std::set<LinearForm> out;
    for (const auto& w : root_set({x.r, Parity::even(), x.s}, other, c)) out.insert(flip_branch(w));
    return out;
  }
  SingularData sd = singular_data(x);
  if (c.swap_branches) sd.branch = 1 - sd.branch;
  const LinearForm lambda_x = weight_of_symbol(x).weight;
  const LinearForm lambda_o = weight_of_symbol(other).weight;
  std::set<LinearForm> out;
  for (const auto& factor :
       loop_factors(sd, loop_alpha(lambda_x, lambda_o), apply_beta(c.beta, lambda_o), c.t_orientation))
    if (auto w = lf_solve(factor)) out.insert(*w);
  return out;
}

OracleTrace fusion_oracle_trace(const AffineSymbol& a, const AffineSymbol& b, const Convention& c) {
  OracleTrace trace;
  trace.roots_a = root_set(a, b, c);
  trace.roots_b = root_set(b, a, c);
  std::set_intersection(trace.roots_a.begin(), trace.roots_a.end(), trace.roots_b.begin(),
                        trace.roots_b.end(), std::inserter(trace.common, trace.common.end()));
  for (LinearForm w : trace.common) {
    if (c.reflect_infinity) w = -w - Rational(2);
    const auto hits = symbol_of_weight(w);
    if (hits.size() != 1) {
      throw Error("line lambda = " + to_string(w) + (hits.empty() ? " is off the lattice" : " lies on both branches") +
                  " for " + to_string(a) + " x " + to_string(b) + "; R_a = " + describe(trace.roots_a) +
                  ", R_b = " + describe(trace.roots_b));
    }
    trace.product.push_back(hits.front().first);
  }
  std::sort(trace.product.begin(), trace.product.end());
  return trace;
}

std::vector<AffineSymbol> fusion_oracle(const AffineSymbol& a, const AffineSymbol& b, const Convention& c) {
  return fusion_oracle_trace(a, b, c).product;
}

Calibration calibrate_convention() {
  std::vector<std::pair<std::pair<AffineSymbol, AffineSymbol>, std::vector<AffineSymbol>>> seeds;
  for (int s1 = 0; s1 <= 3; ++s1)
    for (int s2 = 0; s2 <= 3; ++s2) {
      std::vector<AffineSymbol> expected;
      for (const auto& v : sl2_tensor({s1}, {s2})) expected.push_back({0, Parity::even(), v.n});
      std::sort(expected.begin(), expected.end());
      seeds.push_back({{{0, Parity::even(), s1}, {0, Parity::even(), s2}}, expected});
    }
  {
    std::vector<AffineSymbol> expected{{0, Parity::even(), 0}, {1, Parity::odd(), 0}, {2, Parity::even(), 0}};
    std::sort(expected.begin(), expected.end());
    seeds.push_back({{{1, Parity::even(), 0}, {1, Parity::even(), 0}}, expected});
  }

  Calibration result;
  result.seed_cases = seeds.size();
  for (const auto& candidate : candidate_conventions()) {
    ++result.candidates_tried;
    const bool ok = std::all_of(seeds.begin(), seeds.end(), [&](const auto& seed) {
      try {
        return fusion_oracle(seed.first.first, seed.first.second, candidate) == seed.second;
      } catch (const Error&) {
        return false;
      }
    });
    if (ok) {
      result.convention = candidate;
      return result;
    }
  }
  throw Error("no convention reproduces the seed products");
}

VerificationReport verify_oracle(int bound, const Convention& c) {
  VerificationReport report{"oracle", "generic, indices <= " + std::to_string(bound) + ", " + to_string(c)};
  const auto symbols = symbols_up_to(bound);
  for (const auto& a : symbols)
    for (const auto& b : symbols) {
      ++report.checked;
      const auto expected = support_multiset(fuse_generic(a, b));
      try {
        const OracleTrace trace = fusion_oracle_trace(a, b, c);
        if (trace.product != expected) {
          report.counterexample = to_string(a) + " x " + to_string(b) + ": oracle " + describe(trace.product) +
                                  " vs fusion " + describe(expected) + "; R_a = " + describe(trace.roots_a) +
                                  ", R_b = " + describe(trace.roots_b);
          return report;
        }
      } catch (const Error& e) {
        report.counterexample = e.what();
        return report;
      }
    }
  return report;
}

Sl2Matrices sl2_matrices(int d) {
  if (d < 0) throw RangeError("d", "module dimension index must be nonnegative");
  const Eigen::Index n = d + 1;
  Sl2Matrices m{ExactMatrix::Zero(n, n), ExactMatrix::Zero(n, n), ExactMatrix::Zero(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    m.h(k, k) = Rational(d - 2 * k);
    if (k + 1 < n) m.f(k + 1, k) = 1;
    if (k > 0) m.e(k - 1, k) = Rational(k * (d - k + 1));
  }
  return m;
}

ExactMatrix p_polynomial(const Sl2Matrices& m, const Rational& x) {
  const Eigen::Index n = m.h.rows();
  return ExactMatrix(m.e * m.f - (x + 1) * m.h - x * (x + 1) * ExactMatrix::Identity(n, n));
}

ExactMatrix pi_projection(const SingularData& sd, const Rational& t0, int d) {
  if (sd.branch != 0 && sd.branch != 1) throw RangeError("branch", "branch must be 0 or 1");
  if (sd.n_sv < 1) throw RangeError("n_sv", "n_sv must be positive");
  if (sd.m_sv < 0) throw RangeError("m_sv", "m_sv must be nonnegative");
  const Sl2Matrices m = sl2_matrices(d);
  const int big_n = sd.n_sv;
  ExactMatrix acc = ExactMatrix::Identity(d + 1, d + 1);
  for (int i = 1; i <= sd.m_sv; ++i) {
    if (sd.branch == 1) {
      for (int j = 1; j <= big_n; ++j) acc = acc * p_polynomial(m, Rational(-i) * t0 - j);
    } else {
      for (int j = 0; j < big_n; ++j) acc = acc * p_polynomial(m, Rational(i) * t0 + j);
    }
  }
  return acc * matrix_power(sd.branch == 1 ? m.e : m.f, big_n);
}

Monodromy monodromy_coeffs(const Rational& lambda1, const Rational& lambda2, const Rational& beta) {
  const auto casimir = [](const Rational& l) { return l * (l + 2) / 2; };
  return {(-lambda2 + lambda1 + beta) / 2, (-casimir(lambda2) + casimir(lambda1) + casimir(beta)) / 2};
}

std::pair<int, int> generic_splitting(int r, int s, int m) {
  if (r < 0) throw RangeError("r", "r must be nonnegative");
  if (s < 0) throw RangeError("s", "s must be nonnegative");
  if (m < 0) throw RangeError("m", "m must be nonnegative");
  if (m < std::abs(r - s)) throw RangeError("m", "m must be at least |r - s|");
  const int x = r + s - m;
  const int p = x >= 0 ? x / 2 : -((-x + 1) / 2);
  if (x - 2 * p == 1) return {p + 1, p};
  return {p, p};
}

}  // namespace fusion
