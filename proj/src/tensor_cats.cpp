#include "fusion/tensor_cats.hpp"

#include "fusion/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace fusion {

namespace {

void require_nonnegative(int value, const char* field) {
  if (value < 0)
    throw RangeError(field, std::string(field) + " must be nonnegative, got " + std::to_string(value));
}

OspMultiset osp_range(OspIrrep a, OspIrrep b, int top) {
  const int bottom = std::abs(a.n - b.n);
  const Parity base = a.parity + b.parity;
  OspMultiset out;
  for (int index = bottom; index <= top; ++index)
    out.push_back({index, base + (index - bottom)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Sl2Multiset sl2_tensor(Sl2Irrep a, Sl2Irrep b) {
  require_nonnegative(a.n, "n1");
  require_nonnegative(b.n, "n2");
  Sl2Multiset out;
  for (int n = std::abs(a.n - b.n); n <= a.n + b.n; n += 2) out.push_back({n});
  return out;
}

Sl2Multiset sl2_truncated_tensor(Sl2Irrep a, Sl2Irrep b, int kmax) {
  require_nonnegative(a.n, "n1");
  require_nonnegative(b.n, "n2");
  if (a.n > kmax) throw RangeError("n1", "n1 exceeds truncation bound " + std::to_string(kmax));
  if (b.n > kmax) throw RangeError("n2", "n2 exceeds truncation bound " + std::to_string(kmax));
  const int top = std::min(2 * kmax - a.n - b.n, a.n + b.n);
  Sl2Multiset out;
  for (int n = std::abs(a.n - b.n); n <= top; n += 2) out.push_back({n});
  return out;
}

OspMultiset osp_tensor(OspIrrep a, OspIrrep b) {
  require_nonnegative(a.n, "r1");
  require_nonnegative(b.n, "r2");
  return osp_range(a, b, a.n + b.n);
}

OspMultiset osp_truncated_tensor(OspIrrep a, OspIrrep b, int l) {
  require_nonnegative(a.n, "r1");
  require_nonnegative(b.n, "r2");
  if (l < 1) throw RangeError("l", "root of unity order must be positive");
  if (a.n >= l) throw RangeError("r1", "r1 must be below " + std::to_string(l));
  if (b.n >= l) throw RangeError("r2", "r2 must be below " + std::to_string(l));
  return osp_range(a, b, std::min(2 * (l - 1) - a.n - b.n, a.n + b.n));
}

Sl2Multiset osp_forget_to_sl2(OspIrrep a) {
  require_nonnegative(a.n, "n");
  Sl2Multiset out;
  if (a.n > 0) out.push_back({a.n - 1});
  out.push_back({a.n});
  return out;
}

std::vector<Rational> osp_raising_coefficients(int n) {
  require_nonnegative(n, "n");
  std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1));
  c[0] = 0;
  for (int i = 0; i + 1 <= 2 * n; ++i)
    c[static_cast<std::size_t>(i + 1)] = Rational(n - i) - c[static_cast<std::size_t>(i)];
  return c;
}

OspMatrixRep osp_matrix_rep(int n, Parity parity) {
  const std::vector<Rational> c = osp_raising_coefficients(n);
  const Eigen::Index dim = 2 * n + 1;
  OspMatrixRep rep;
  rep.n = n;
  rep.parity = parity;
  rep.x_plus = ExactMatrix::Zero(dim, dim);
  rep.x_minus = ExactMatrix::Zero(dim, dim);
  rep.h = ExactMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    rep.h(i, i) = Rational(n - i);
    if (i + 1 < dim) rep.x_minus(i + 1, i) = 1;
    if (i > 0) rep.x_plus(i - 1, i) = c[static_cast<std::size_t>(i)];
    rep.parity_vector.push_back(parity + static_cast<int>(i));
  }
  return rep;
}

GradedModule osp_tensor_matrices(const GradedModule& a, const GradedModule& b) {
  const Eigen::Index da = a.dimension();
  const Eigen::Index db = b.dimension();
  const Eigen::Index dim = da * db;
  const ExactMatrix id_b = ExactMatrix::Identity(db, db);
  ExactMatrix sign_a = ExactMatrix::Zero(da, da);
  for (Eigen::Index i = 0; i < da; ++i)
    sign_a(i, i) = a.parity_vector[static_cast<std::size_t>(i)].value() == 0 ? 1 : -1;

  // Kronecker product with index i * db + j.
  auto kron = [&](const ExactMatrix& left, const ExactMatrix& right) {
    ExactMatrix out = ExactMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < left.rows(); ++i)
      for (Eigen::Index k = 0; k < left.cols(); ++k) {
        if (left(i, k) == 0) continue;
        out.block(i * db, k * db, db, db) = left(i, k) * right;
      }
    return out;
  };

  GradedModule out;
  out.x_plus = kron(a.x_plus, id_b) + kron(sign_a, b.x_plus);
  out.x_minus = kron(a.x_minus, id_b) + kron(sign_a, b.x_minus);
  out.h = kron(a.h, id_b) + kron(ExactMatrix::Identity(da, da), b.h);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      out.parity_vector.push_back(a.parity_vector[static_cast<std::size_t>(i)] +
                                  b.parity_vector[static_cast<std::size_t>(j)]);
  return out;
}

OspMultiset osp_tensor_oracle(OspIrrep a, OspIrrep b) {
  require_nonnegative(a.n, "r1");
  require_nonnegative(b.n, "r2");
  const GradedModule product =
      osp_tensor_matrices(osp_matrix_rep(a.n, a.parity), osp_matrix_rep(b.n, b.parity));

  // h is diagonal with integer entries; group basis vectors by weight.
  std::map<int, std::vector<Eigen::Index>> weight_spaces;
  for (Eigen::Index i = 0; i < product.dimension(); ++i)
    weight_spaces[product.h(i, i).convert_to<int>()].push_back(i);

  OspMultiset out;
  for (const auto& [weight, basis] : weight_spaces) {
    const auto above = weight_spaces.find(weight + 1);
    const auto cols = static_cast<Eigen::Index>(basis.size());
    ExactMatrix restricted;
    if (above == weight_spaces.end()) {
      restricted = ExactMatrix::Zero(1, cols);
    } else {
      const auto rows = static_cast<Eigen::Index>(above->second.size());
      restricted.resize(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
          restricted(r, c) = product.x_plus(above->second[static_cast<std::size_t>(r)],
                                            basis[static_cast<std::size_t>(c)]);
    }
    const ExactMatrix kernel = exact_kernel(restricted);
    for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
      // A singular vector is homogeneous; read its parity off any nonzero entry.
      Eigen::Index support = 0;
      while (kernel(support, k) == 0) ++support;
      const Parity parity =
          product.parity_vector[static_cast<std::size_t>(basis[static_cast<std::size_t>(support)])];
      for (Eigen::Index i = support + 1; i < kernel.rows(); ++i) {
        if (kernel(i, k) != 0 &&
            product.parity_vector[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] != parity)
          throw Error("inhomogeneous singular vector at weight " + std::to_string(weight));
      }
      out.push_back({weight, parity});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fusion
