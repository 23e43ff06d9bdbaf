#pragma once

#include "fusion/exact_matrix.hpp"
#include "fusion/parity.hpp"

#include <compare>
#include <vector>

namespace fusion {

// V_n, the (n+1)-dimensional irreducible sl2-module.
struct Sl2Irrep {
  int n = 0;
  int dimension() const { return n + 1; }
  friend auto operator<=>(const Sl2Irrep&, const Sl2Irrep&) = default;
};

// V_n^parity, the (2n+1)-dimensional irreducible osp(1|2)-module whose
// highest vector has the given parity.
struct OspIrrep {
  int n = 0;
  Parity parity;
  int dimension() const { return 2 * n + 1; }
  friend auto operator<=>(const OspIrrep&, const OspIrrep&) = default;
};

// Multisets are sorted vectors.
using Sl2Multiset = std::vector<Sl2Irrep>;
using OspMultiset = std::vector<OspIrrep>;

// Clebsch-Gordan: V_{n1+n2} + V_{n1+n2-2} + ... + V_{|n1-n2|}.
Sl2Multiset sl2_tensor(Sl2Irrep a, Sl2Irrep b);

// Semisimple part of the tensor product at a root of unity: indices from
// |n1-n2| up to min(2 kmax - n1 - n2, n1 + n2) in steps of two.
Sl2Multiset sl2_truncated_tensor(Sl2Irrep a, Sl2Irrep b, int kmax);

// Every index from |r1-r2| to r1+r2; the parity is alpha+beta at the bottom
// and alternates with each step.
OspMultiset osp_tensor(OspIrrep a, OspIrrep b);

// osp_tensor with the top index capped at min(2(l-1) - r1 - r2, r1 + r2).
OspMultiset osp_truncated_tensor(OspIrrep a, OspIrrep b, int l);

// Restriction to the even subalgebra: V_n^e -> V_n + V_{n-1}.
Sl2Multiset osp_forget_to_sl2(OspIrrep a);

// A finite-dimensional osp(1|2)-module given by matrices, with the parity
// of each basis vector.
struct GradedModule {
  ExactMatrix x_plus;
  ExactMatrix x_minus;
  ExactMatrix h;
  std::vector<Parity> parity_vector;

  Eigen::Index dimension() const { return h.rows(); }
};

// Explicit matrices of V_n^parity on the basis u_0..u_{2n}:
// h u_i = (n-i) u_i, x_minus u_i = u_{i+1}, x_plus u_i = c_i u_{i-1}.
struct OspMatrixRep : GradedModule {
  int n = 0;
  Parity parity;
};

OspMatrixRep osp_matrix_rep(int n, Parity parity);

// The constants c_i in x_plus u_i = c_i u_{i-1}.
std::vector<Rational> osp_raising_coefficients(int n);

// Graded tensor product of two explicit representations with the Koszul
// sign on the second factor. Basis index i * dim(b) + j is u_i (x) u_j.
GradedModule osp_tensor_matrices(const GradedModule& a, const GradedModule& b);

// Decomposes a (x) b by counting x_plus-singular vectors in each weight
// space, with exact ranks over the rationals.
OspMultiset osp_tensor_oracle(OspIrrep a, OspIrrep b);

}  // namespace fusion
