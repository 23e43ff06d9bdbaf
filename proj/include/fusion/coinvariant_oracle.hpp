#pragma once

#include "fusion/affine_fusion.hpp"
#include "fusion/exact_matrix.hpp"
#include "fusion/linear_form.hpp"
#include "fusion/verification.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fusion {

// Labels the singular vector S^branch_{n,m} that cuts out a generalized Weyl module.
struct SingularData {
  int branch = 0;
  int n_sv = 1;
  int m_sv = 0;

  friend bool operator==(const SingularData&, const SingularData&) = default;
};

// An affine form c0 + ct*t + clambda*lambda_inf.
using VanishingFactor = PlaneForm;

// Highest weight lambda(t). Branch 0 is lambda = -i t + j - 1, branch 1 is
// lambda = i t - j - 1.
struct WeightLine {
  LinearForm weight;
  int branch = 0;

  friend bool operator==(const WeightLine&, const WeightLine&) = default;
};

WeightLine weight_of_symbol(const AffineSymbol& x);

// Every lattice point on either parametrization line with this weight.
std::vector<std::pair<AffineSymbol, int>> symbol_of_weight(const LinearForm& w);

SingularData singular_data(const AffineSymbol& x);

// Scalar factors by which the singular vector acts on the loop module.
// t_orientation = -1 reverses the sign of every t term.
std::vector<VanishingFactor> loop_factors(const SingularData& sd, const PlaneForm& alpha,
                                          const LinearForm& beta, int t_orientation = 1);

// alpha = (lambda_inf - lambda_x - lambda_other - 2) / 2
PlaneForm loop_alpha(const LinearForm& lambda_x, const LinearForm& lambda_other);

enum class BetaReading { weight, dot_reflection, shifted_negation };

// Normalizations left open by the construction. Fixed once by calibration.
struct Convention {
  int t_orientation = 1;
  BetaReading beta = BetaReading::weight;
  bool swap_branches = false;
  bool reflect_infinity = false;

  friend bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(const Convention& c);

// All 24 conventions, in the order calibration tries them.
std::vector<Convention> candidate_conventions();

LinearForm apply_beta(BetaReading reading, const LinearForm& lambda_other);

// The set of lambda_inf lines on which x's singular vector kills the
// coinvariants, with `other` at the third point.
std::set<LinearForm> root_set(const AffineSymbol& x, const AffineSymbol& other, const Convention& c);

struct OracleTrace {
  std::set<LinearForm> roots_a;
  std::set<LinearForm> roots_b;
  std::set<LinearForm> common;
  std::vector<AffineSymbol> product;
};

// Intersects the root families of a and b and reads off symbols. Throws
// Error, with both root sets in the message, if a common line is off the
// lattice or lies on both branches.
OracleTrace fusion_oracle_trace(const AffineSymbol& a, const AffineSymbol& b, const Convention& c);
std::vector<AffineSymbol> fusion_oracle(const AffineSymbol& a, const AffineSymbol& b, const Convention& c);

// The seeds are Weyl x Weyl for s <= 3 and (1,0;0) squared.
struct Calibration {
  Convention convention;
  std::size_t candidates_tried = 0;
  std::size_t seed_cases = 0;
};

// First candidate that reproduces both seeds. Throws Error if none does.
Calibration calibrate_convention();

VerificationReport verify_oracle(int bound, const Convention& c);

// sl2 action on V_d with basis v_0..v_d: h v_k = (d-2k) v_k, f v_k = v_{k+1},
// e v_k = k(d-k+1) v_{k-1}.
struct Sl2Matrices {
  ExactMatrix e;
  ExactMatrix f;
  ExactMatrix h;
};

Sl2Matrices sl2_matrices(int d);

// P(x) = ef - (x+1)h - x(x+1)
ExactMatrix p_polynomial(const Sl2Matrices& m, const Rational& x);

ExactMatrix pi_projection(const SingularData& sd, const Rational& t0, int d);

struct Monodromy {
  Rational delta1;
  Rational delta2;
};

Monodromy monodromy_coeffs(const Rational& lambda1, const Rational& lambda2, const Rational& beta);

// Splitting type (d1, d2) of the rank-2 bundle; d1 + d2 = r + s - m.
std::pair<int, int> generic_splitting(int r, int s, int m);

}  // namespace fusion
