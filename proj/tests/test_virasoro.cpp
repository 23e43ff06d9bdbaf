#include "fusion/error.hpp"
#include "fusion/virasoro.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace fusion;

namespace {

AffineSymbol sym(int r, int e, int s) { return {r, Parity(e), s}; }

const std::vector<std::pair<int, int>> tested_levels{{3, 2}, {5, 2}, {4, 3}, {5, 3}, {7, 2}};

}  // namespace

TEST_CASE("generic Virasoro fusion") {
  CHECK(vir_fuse_generic({0, 0}, {2, 3}) == VirSum::basis({2, 3}));
  CHECK(vir_fuse_generic({1, 0}, {1, 0}) == VirSum::normalized({{{2, 0}, 1}, {{0, 0}, 1}}));
  CHECK(vir_fuse_generic({1, 1}, {1, 1}) ==
        VirSum::normalized({{{2, 2}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("generic Virasoro ring is commutative, associative and unital") {
  std::vector<VirSymbol> basis;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) basis.push_back({a, b});
  for (const auto& x : basis) {
    CHECK(vir_fuse_generic({0, 0}, x) == VirSum::basis(x));
    for (const auto& y : basis) {
      CHECK(vir_fuse_generic(x, y) == vir_fuse_generic(y, x));
      if (x.a + y.a > 5) continue;
      for (const auto& z : basis)
        CHECK(vir_fuse_generic(vir_fuse_generic(VirSum::basis(x), VirSum::basis(y)), VirSum::basis(z)) ==
              vir_fuse_generic(VirSum::basis(x), vir_fuse_generic(VirSum::basis(y), VirSum::basis(z))));
    }
  }
}

TEST_CASE("central charge") {
  CHECK(central_charge(4, 3).value == Rational(1, 2));
  CHECK(central_charge(3, 2).value == 0);
  CHECK(central_charge(5, 2).value == Rational(-22, 5));
  for (int p = 2; p <= 9; ++p)
    for (int q = 2; q <= 9; ++q)
      if (std::gcd(p, q) == 1) CHECK(central_charge(p, q).value == central_charge(q, p).value);
  CHECK_THROWS_AS(central_charge(4, 2), RangeError);
  CHECK_THROWS_AS(central_charge(3, 1), RangeError);
}

TEST_CASE("vir_canonicalize") {
  const RationalLevel ising(4, 3);
  CHECK(vir_canonicalize(ising, {1, 2})->rep == VirSymbol{0, 0});
  CHECK(vir_canonicalize(ising, {0, 0})->rep == VirSymbol{0, 0});
  for (int b = 0; b <= 3; ++b) CHECK_FALSE(vir_canonicalize(ising, {2, b}));
  CHECK_FALSE(vir_canonicalize(ising, {0, 3}));
  CHECK_THROWS_AS(vir_canonicalize(ising, {3, 0}), RangeError);
  CHECK_THROWS_AS(vir_canonicalize(ising, {0, 4}), RangeError);
  CHECK_THROWS_AS(vir_canonicalize(RationalLevel(3, 1), {0, 0}), RangeError);

  for (auto [p, q] : tested_levels) {
    const RationalLevel level(p, q);
    for (int a = 0; a <= q - 2; ++a)
      for (int b = 0; b <= p - 2; ++b) {
        const auto c = vir_canonicalize(level, {a, b});
        REQUIRE(c);
        CHECK(vir_canonicalize(level, c->rep) == c);
        CHECK(vir_canonicalize(level, {q - 2 - a, p - 2 - b}) == c);
      }
    CHECK(minimal_classes(level).size() == static_cast<std::size_t>((p - 1) * (q - 1) / 2));
  }
}

TEST_CASE("Ising fusion") {
  const RationalLevel level(4, 3);
  const auto cls = [&](int a, int b) { return *vir_canonicalize(level, {a, b}); };
  const MinimalClass one = cls(0, 0), sigma = cls(0, 1), eps = cls(0, 2);
  CHECK(minimal_classes(level) == std::vector<MinimalClass>{one, sigma, eps});
  CHECK(vir_fuse_minimal(level, sigma, sigma) == MinimalSum::basis(one) + MinimalSum::basis(eps));
  CHECK(vir_fuse_minimal(level, eps, eps) == MinimalSum::basis(one));
  CHECK(vir_fuse_minimal(level, sigma, eps) == MinimalSum::basis(sigma));
  for (const auto& x : minimal_classes(level)) CHECK(vir_fuse_minimal(level, one, x) == MinimalSum::basis(x));
  CHECK_THROWS_AS(vir_fuse_minimal(level, one, *vir_canonicalize(RationalLevel(5, 2), {0, 0})), LevelMismatch);
}

TEST_CASE("minimal fusion matches the product of two Verlinde formulas") {
  for (auto [p, q] : tested_levels) {
    const RationalLevel level(p, q);
    const auto classes = minimal_classes(level);
    for (const auto& x : classes)
      for (const auto& y : classes) {
        const MinimalSum got = vir_fuse_minimal(level, x, y);
        for (const auto& z : classes) {
          // A class holds (a,b) and its reflection; both can receive a term.
          const int a2 = q - 2 - z.rep.a, b2 = p - 2 - z.rep.b;
          const int expected = oracle::verlinde_sl2(x.rep.a, y.rep.a, z.rep.a, q - 2) *
                                   oracle::verlinde_sl2(x.rep.b, y.rep.b, z.rep.b, p - 2) +
                               oracle::verlinde_sl2(x.rep.a, y.rep.a, a2, q - 2) *
                                   oracle::verlinde_sl2(x.rep.b, y.rep.b, b2, p - 2);
          CHECK(got.coefficient(z) == expected);
        }
      }
  }
}

TEST_CASE("Drinfeld-Sokolov maps on symbols") {
  CHECK(ds_phi_e(sym(2, 1, 3)) == VirSum::basis({1, 3}));
  CHECK(ds_phi_f(sym(0, 0, 4)).is_zero());
  CHECK(ds_phi_e(sym(0, 0, 4)) == VirSum::basis({0, 4}));
  CHECK(ds_map(sym(3, 0, 1)) == VirSum::basis({3, 1}) + VirSum::basis({2, 1}));
  CHECK(ds_map(sym(0, 0, 5)) == VirSum::basis({0, 5}));
  for (const auto& x : symbols_up_to(4))
    CHECK(ds_phi_e(x) == ds_phi_f({x.r, x.parity.flipped(), x.s}));
}

TEST_CASE("ds_map of a product") {
  const AffineSum square = fuse_generic(sym(1, 0, 0), sym(1, 0, 0));
  const VirSum expected = VirSum::normalized({{{2, 0}, 1}, {{1, 0}, 2}, {{0, 0}, 2}});
  CHECK(ds_map(square) == expected);
  CHECK(vir_fuse_generic(ds_map(sym(1, 0, 0)), ds_map(sym(1, 0, 0))) == expected);
}

TEST_CASE("ds epimorphism") {
  CHECK(verify_ds_epimorphism(3).passed());
  for (auto [p, q] : tested_levels) {
    const RationalLevel level(p, q);
    CAPTURE(level.to_string());
    CHECK(verify_ds_epimorphism(level).passed());
    CHECK(verify_ds_well_defined(level).passed());
  }
}

TEST_CASE("ds image of the Ising affine classes") {
  const RationalLevel level(4, 3);
  CHECK(ds_map(level, sym(0, 0, 1)) == MinimalSum::basis(*vir_canonicalize(level, {0, 1})));
  CHECK(ds_map(level, sym(0, 0, 2)) == MinimalSum::basis(*vir_canonicalize(level, {0, 2})));
  // r = q-1 sends its phi_e part to zero.
  CHECK(ds_map(level, sym(2, 0, 0)) == MinimalSum::basis(*vir_canonicalize(level, {1, 0})));
}
