#include "fusion/exact_matrix.hpp"
#include "fusion/formal_sum.hpp"
#include "fusion/linear_form.hpp"
#include "fusion/parity.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace fusion;

namespace {

using Sum = FormalSum<std::string>;

Sum random_sum(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), key(0, 4), coeff(-3, 3);
  std::vector<Sum::Term> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) raw.emplace_back(std::string(1, static_cast<char>('a' + key(rng))), Integer(coeff(rng)));
  return Sum::normalized(raw);
}

// Concatenation on single letters, truncated to keep sums small.
Sum concat_rule(const std::string& x, const std::string& y) {
  return Sum::normalized({{x + y, Integer(1)}, {y, Integer(2)}});
}

}  // namespace

TEST_CASE("normalize merges, drops zeros and sorts") {
  CHECK(normalize<std::string, Integer>({{"a", 1}, {"a", -1}}).is_zero());
  const Sum dropped = normalize<std::string, Integer>({{"a", 2}, {"b", 0}});
  CHECK(dropped.size() == 1);
  CHECK(dropped.coefficient("a") == 2);
  const Sum merged = normalize<std::string, Integer>({{"b", 1}, {"a", 3}, {"b", 2}});
  REQUIRE(merged.size() == 2);
  CHECK(merged.terms()[0] == Sum::Term{"a", 3});
  CHECK(merged.terms()[1] == Sum::Term{"b", 3});
}

TEST_CASE("zero in the middle of a run is removed") {
  const Sum x = normalize<std::string, Integer>({{"a", 1}, {"b", 1}, {"b", -1}, {"c", 1}});
  CHECK(x.support() == std::vector<std::string>{"a", "c"});
}

TEST_CASE("add") {
  CHECK(add(Sum::basis("a"), Sum::basis("a", Integer(-1))).is_zero());
  const Sum ab = add(Sum::basis("a"), Sum::basis("b", Integer(2)));
  CHECK(ab.coefficient("a") == 1);
  CHECK(ab.coefficient("b") == 2);
  CHECK(add(ab, Sum{}) == ab);
}

TEST_CASE("bilinear product") {
  const auto rule = [](const std::string& x, const std::string& y) {
    if ((x == "a" || x == "b") && y == "c") return Sum::basis("d");
    return Sum::basis(x + y);
  };
  CHECK(bilinear_product(Sum::basis("a"), Sum::basis("b"), rule) == Sum::basis("ab"));
  CHECK(bilinear_product(Sum::basis("a") + Sum::basis("b"), Sum::basis("c"), rule) == Sum::basis("d", Integer(2)));
  CHECK(bilinear_product(Sum::basis("a"), Sum{}, rule).is_zero());
}

TEST_CASE("formal sum ring laws on random inputs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Sum x = random_sum(rng), y = random_sum(rng), z = random_sum(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x - x == Sum{});
    CHECK(bilinear_product(x + y, z, concat_rule) ==
          bilinear_product(x, z, concat_rule) + bilinear_product(y, z, concat_rule));
    CHECK(bilinear_product(z, x + y, concat_rule) ==
          bilinear_product(z, x, concat_rule) + bilinear_product(z, y, concat_rule));
    CHECK(Sum::normalized(x.terms()) == x);
  }
}

TEST_CASE("evaluate and linear extension") {
  const Sum x = normalize<std::string, Integer>({{"a", 2}, {"bb", -1}});
  CHECK(evaluate(x, [](const std::string& s) { return Integer(s.size()); }) == 0);
  const Sum doubled = linear_extension(x, [](const std::string& s) { return Sum::basis(s + s); });
  CHECK(doubled.coefficient("aa") == 2);
  CHECK(doubled.coefficient("bbbb") == -1);
}

TEST_CASE("coefficients are arbitrary precision") {
  const Integer big("123456789012345678901234567890");
  const Sum x = Sum::basis("a", big);
  CHECK((x + x).coefficient("a") == big * 2);
}

TEST_CASE("lf_solve") {
  const auto w = lf_solve(PlaneForm{Rational(2), Rational(1), Rational(-1)});
  REQUIRE(w);
  CHECK(*w == LinearForm{Rational(2), Rational(1)});
  CHECK(*lf_solve(PlaneForm{Rational(0), Rational(0), Rational(3)}) == LinearForm{});
  CHECK_FALSE(lf_solve(PlaneForm{Rational(1), Rational(2), Rational(0)}));
}

TEST_CASE("lf_solve substitutes back to zero") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const PlaneForm f{Rational(d(rng), 1 + (trial % 4)), Rational(d(rng)), Rational(d(rng))};
    if (f.clambda == 0) continue;
    CHECK(f.restrict_to(*lf_solve(f)).is_zero());
  }
}

TEST_CASE("linear form printing") {
  CHECK(to_string(LinearForm{Rational(-2), Rational(3)}) == "3*t - 2");
  CHECK(to_string(LinearForm{Rational(1, 2), Rational(0)}) == "1/2");
  CHECK(to_string(LinearForm{}) == "0");
  CHECK(to_string(PlaneForm{Rational(1), Rational(-1), Rational(1, 2)}) == "1/2*l - t + 1");
}

TEST_CASE("parity arithmetic") {
  CHECK(Parity::odd() + Parity::odd() == Parity::even());
  CHECK(Parity(3) == Parity::odd());
  CHECK(Parity(-1) == Parity::odd());
  CHECK(Parity::even().flipped() == Parity::odd());
}

TEST_CASE("exact rank and kernel") {
  ExactMatrix m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  CHECK(exact_rank(m) == 1);
  const ExactMatrix k = exact_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).isZero());

  // Hilbert matrices are full rank; a float elimination would struggle at n = 12.
  const int n = 12;
  ExactMatrix hilbert(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hilbert(i, j) = Rational(1, i + j + 1);
  CHECK(exact_rank(hilbert) == n);
  CHECK(exact_kernel(hilbert).cols() == 0);
}

TEST_CASE("kernel of zero and empty matrices") {
  CHECK(exact_kernel(ExactMatrix::Zero(1, 3)).cols() == 3);
  CHECK(exact_rank(ExactMatrix::Zero(2, 2)) == 0);
}

TEST_CASE("matrix power") {
  ExactMatrix nilpotent = ExactMatrix::Zero(3, 3);
  nilpotent(1, 0) = 1;
  nilpotent(2, 1) = 1;
  CHECK(matrix_power(nilpotent, 0) == ExactMatrix::Identity(3, 3));
  CHECK(matrix_power(nilpotent, 3).isZero());
  CHECK(matrix_power(nilpotent, 2)(2, 0) == 1);
}
