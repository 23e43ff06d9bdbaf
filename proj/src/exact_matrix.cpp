#include "fusion/exact_matrix.hpp"

namespace fusion {

EchelonForm row_echelon(ExactMatrix m) {
  EchelonForm out;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index row = pivot_row; row < m.rows(); ++row) {
      if (m(row, col) != 0) {
        found = row;
        break;
      }
    }
    if (found < 0) continue;
    m.row(pivot_row).swap(m.row(found));
    const Rational inv = Rational(1) / m(pivot_row, col);
    m.row(pivot_row) *= inv;
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      if (row == pivot_row || m(row, col) == 0) continue;
      const Rational factor = m(row, col);
      m.row(row) -= factor * m.row(pivot_row);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

Eigen::Index exact_rank(const ExactMatrix& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivot_columns.size());
}

ExactMatrix exact_kernel(const ExactMatrix& m) {
  const EchelonForm ech = row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Eigen::Index> free_columns;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_columns.push_back(c);

  ExactMatrix kernel = ExactMatrix::Zero(m.cols(), static_cast<Eigen::Index>(free_columns.size()));
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    const Eigen::Index free = free_columns[k];
    const auto col = static_cast<Eigen::Index>(k);
    kernel(free, col) = 1;
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
      kernel(ech.pivot_columns[r], col) = -ech.reduced(static_cast<Eigen::Index>(r), free);
  }
  return kernel;
}

}  // namespace fusion
