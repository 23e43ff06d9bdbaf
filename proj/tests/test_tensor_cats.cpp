#include "fusion/error.hpp"
#include "fusion/tensor_cats.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fusion;

namespace {

std::vector<int> indices(const Sl2Multiset& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(x.n);
  return out;
}

std::vector<std::pair<int, int>> pairs(const OspMultiset& xs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& x : xs) out.push_back({x.n, x.parity.value()});
  return out;
}

OspIrrep osp(int n, int e) { return {n, Parity(e)}; }

bool is_submultiset(const OspMultiset& small, const OspMultiset& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("sl2 Clebsch-Gordan") {
  CHECK(indices(sl2_tensor({1}, {1})) == std::vector<int>{0, 2});
  CHECK(indices(sl2_tensor({4}, {0})) == std::vector<int>{4});
  CHECK(indices(sl2_tensor({2}, {3})) == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(sl2_tensor({-1}, {0}), RangeError);
}

TEST_CASE("sl2 tensor agrees with characters and dimensions") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const auto prod = sl2_tensor({a}, {b});
      CHECK(indices(prod) == oracle::sl2_by_characters(a, b));
      int dim = 0;
      for (const auto& x : prod) dim += x.dimension();
      CHECK(dim == (a + 1) * (b + 1));
    }
}

TEST_CASE("sl2 truncated tensor") {
  CHECK(indices(sl2_truncated_tensor({1}, {1}, 2)) == std::vector<int>{0, 2});
  CHECK(indices(sl2_truncated_tensor({2}, {2}, 2)) == std::vector<int>{0});
  CHECK(indices(sl2_truncated_tensor({3}, {0}, 5)) == std::vector<int>{3});
  CHECK_THROWS_AS(sl2_truncated_tensor({3}, {0}, 2), RangeError);
  try {
    sl2_truncated_tensor({0}, {4}, 2);
    FAIL("expected a range error");
  } catch (const RangeError& e) {
    CHECK(e.field() == "n2");
  }
}

TEST_CASE("sl2 truncated tensor matches the Verlinde formula") {
  for (int kmax = 0; kmax <= 6; ++kmax)
    for (int a = 0; a <= kmax; ++a)
      for (int b = 0; b <= kmax; ++b) {
        std::vector<int> expected;
        for (int c = 0; c <= kmax; ++c)
          for (int m = oracle::verlinde_sl2(a, b, c, kmax); m > 0; --m) expected.push_back(c);
        CHECK(indices(sl2_truncated_tensor({a}, {b}, kmax)) == expected);
        CHECK(sl2_truncated_tensor({a}, {b}, kmax) == sl2_truncated_tensor({b}, {a}, kmax));
      }
}

TEST_CASE("truncation at a large bound changes nothing") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      CHECK(sl2_truncated_tensor({a}, {b}, a + b) == sl2_tensor({a}, {b}));
      CHECK(osp_truncated_tensor(osp(a, 0), osp(b, 1), a + b + 1) == osp_tensor(osp(a, 0), osp(b, 1)));
    }
}

TEST_CASE("osp tensor") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(pairs(osp_tensor(osp(1, 0), osp(1, 0))) == P{{0, 0}, {1, 1}, {2, 0}});
  CHECK(pairs(osp_tensor(osp(3, 1), osp(0, 1))) == P{{3, 0}});
  CHECK(pairs(osp_tensor(osp(2, 1), osp(1, 0))) == P{{1, 1}, {2, 0}, {3, 1}});
}

TEST_CASE("osp tensor agrees with graded characters") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
          const auto prod = osp_tensor(osp(a, e1), osp(b, e2));
          CHECK(pairs(prod) == oracle::osp_by_characters(a, e1, b, e2));
          int dim = 0;
          for (const auto& x : prod) dim += x.dimension();
          CHECK(dim == (2 * a + 1) * (2 * b + 1));
          CHECK(prod == osp_tensor(osp(b, e2), osp(a, e1)));
        }
}

TEST_CASE("osp truncated tensor") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(pairs(osp_truncated_tensor(osp(2, 0), osp(2, 0), 3)) == P{{0, 0}});
  CHECK(pairs(osp_truncated_tensor(osp(1, 0), osp(1, 0), 3)) == P{{0, 0}, {1, 1}, {2, 0}});
  CHECK(pairs(osp_truncated_tensor(osp(2, 1), osp(0, 1), 4)) == P{{2, 0}});
  CHECK_THROWS_AS(osp_truncated_tensor(osp(3, 0), osp(0, 0), 3), RangeError);
  CHECK_THROWS_AS(osp_truncated_tensor(osp(0, 0), osp(0, 0), 0), RangeError);
  for (int l = 1; l <= 5; ++l)
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b) {
        const auto t = osp_truncated_tensor(osp(a, 1), osp(b, 0), l);
        CHECK(is_submultiset(t, osp_tensor(osp(a, 1), osp(b, 0))));
        CHECK(t == osp_truncated_tensor(osp(b, 0), osp(a, 1), l));
        CHECK_FALSE(t.empty());
      }
}

TEST_CASE("forgetful map to sl2") {
  CHECK(indices(osp_forget_to_sl2(osp(0, 1))) == std::vector<int>{0});
  CHECK(indices(osp_forget_to_sl2(osp(3, 0))) == std::vector<int>{2, 3});
  CHECK(indices(osp_forget_to_sl2(osp(1, 1))) == std::vector<int>{0, 1});
}

TEST_CASE("osp matrices") {
  CHECK(osp_raising_coefficients(1) == std::vector<Rational>{0, 1, -1});
  CHECK(osp_raising_coefficients(2) == std::vector<Rational>{0, 2, -1, 1, -2});

  const auto zero = osp_matrix_rep(0, Parity::even());
  CHECK(zero.dimension() == 1);
  CHECK(zero.x_plus.isZero());
  CHECK(zero.h.isZero());

  for (int n = 0; n <= 8; ++n)
    for (int e = 0; e < 2; ++e) {
      const auto rep = osp_matrix_rep(n, Parity(e));
      CHECK(ExactMatrix(rep.x_plus * rep.x_minus + rep.x_minus * rep.x_plus) == rep.h);
      for (int i = 0; i <= 2 * n; ++i) {
        CHECK(rep.h(i, i) == n - i);
        CHECK(rep.parity_vector[static_cast<std::size_t>(i)] == Parity(i + e));
      }
      // [h, x_plus] = x_plus
      CHECK(ExactMatrix(rep.h * rep.x_plus - rep.x_plus * rep.h) == rep.x_plus);
    }
}

TEST_CASE("graded tensor product is again a representation") {
  const auto a = osp_matrix_rep(2, Parity::odd());
  const auto b = osp_matrix_rep(1, Parity::even());
  const auto t = osp_tensor_matrices(a, b);
  CHECK(ExactMatrix(t.x_plus * t.x_minus + t.x_minus * t.x_plus) == t.h);
  CHECK(ExactMatrix(t.h * t.x_plus - t.x_plus * t.h) == t.x_plus);
}

TEST_CASE("osp matrix oracle on small cases") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(pairs(osp_tensor_oracle(osp(0, 0), osp(0, 0))) == P{{0, 0}});
  CHECK(pairs(osp_tensor_oracle(osp(1, 0), osp(1, 0))) == P{{0, 0}, {1, 1}, {2, 0}});
  CHECK(osp_tensor_oracle(osp(2, 0), osp(1, 1)) == osp_tensor(osp(2, 0), osp(1, 1)));
}
