#pragma once

#include "fusion/formal_sum.hpp"
#include "fusion/parity.hpp"
#include "fusion/verification.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace fusion {

// The symbol (V_r^parity, V_s) labelling a generalized Weyl module over
// affine sl2 at generic level.
struct AffineSymbol {
  int r = 0;
  Parity parity;
  int s = 0;

  friend auto operator<=>(const AffineSymbol&, const AffineSymbol&) = default;
};

std::string to_string(const AffineSymbol& x);

using AffineSum = FormalSum<AffineSymbol>;

// The vacuum module (V_0^0, V_0).
constexpr AffineSymbol unit_symbol() { return {0, Parity::even(), 0}; }

// Quantum dimension (2r+1)(s+1); a ring homomorphism on the generic ring.
Integer quantum_dimension(const AffineSymbol& x);

// Generic-level fusion: the osp(1|2) decomposition of the (r, parity)
// parts times the Clebsch-Gordan series of the s parts.
AffineSum fuse_generic(const AffineSymbol& a, const AffineSymbol& b);
AffineSum fuse_generic(const AffineSum& x, const AffineSum& y);

// Every symbol with r <= bound and s <= bound, both parities, in basis order.
std::vector<AffineSymbol> symbols_up_to(int bound);

// k + 2 = p/q with p >= 2, q >= 1 coprime.
class RationalLevel {
 public:
  // Throws RangeError for p < 2, q < 1 or gcd(p, q) != 1.
  RationalLevel(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int max_r() const { return q_ - 1; }
  int max_s() const { return p_ - 2; }
  int class_count() const { return q_ * (p_ - 1); }
  std::string to_string() const;

  friend auto operator<=>(const RationalLevel&, const RationalLevel&) = default;

 private:
  int p_;
  int q_;
};

// An equivalence class of admissible symbols, stored by its parity-0
// representative.
struct AdmissibleClass {
  RationalLevel level;
  AffineSymbol rep;

  friend auto operator<=>(const AdmissibleClass&, const AdmissibleClass&) = default;
};

using AdmissibleSum = FormalSum<AdmissibleClass>;

// Maps (r, e; s) to its class; parity-1 symbols go to (q-1-r, 0; p-2-s).
// Throws RangeError naming r or s when the symbol is outside the grid.
AdmissibleClass canonicalize(const RationalLevel& level, const AffineSymbol& x);

// The two symbols of a class (parity 0 first).
std::pair<AffineSymbol, AffineSymbol> class_members(const AdmissibleClass& c);

AdmissibleClass unit_class(const RationalLevel& level);

// All classes at a level, ordered lexicographically by (r, s).
std::vector<AdmissibleClass> admissible_classes(const RationalLevel& level);

// Every in-range symbol (both parities) at a level.
std::vector<AffineSymbol> admissible_symbols(const RationalLevel& level);

// Rational-level fusion with the osp part capped at
// N = min(2q-2-r1-r2, r1+r2) and the sl2 part truncated at p-2.
AdmissibleSum fuse_rational(const RationalLevel& level, const AdmissibleClass& a,
                            const AdmissibleClass& b);
AdmissibleSum fuse_rational(const RationalLevel& level, const AdmissibleSum& x,
                            const AdmissibleSum& y);

// Truncated tensor product on symbols (osp at l = q, sl2 at p-2), before
// passing to classes.
AffineSum fuse_truncated_symbols(const RationalLevel& level, const AffineSymbol& a,
                                 const AffineSymbol& b);

// Structure constants N[i][j][k] of the rational fusion ring.
//
// Rows of the multiplication table are computed on first use and cached.
// Copies share the cache, and concurrent readers are safe.
class FusionTable {
 public:
  using ClassVector = std::vector<Integer>;

  explicit FusionTable(RationalLevel level);

  // Builds a table from previously computed constants, e.g. a cache file.
  // `entries[(i * n + j) * n + k]` is N[i][j][k].
  static FusionTable from_constants(RationalLevel level, const std::vector<Integer>& entries);

  const RationalLevel& level() const;
  const std::vector<AdmissibleClass>& classes() const;
  std::size_t size() const;
  std::size_t unit_index() const;
  // Throws RangeError if the class does not belong to this level.
  std::size_t index_of(const AdmissibleClass& c) const;

  const Integer& N(std::size_t i, std::size_t j, std::size_t k) const;
  // Row i*j of the table as a dense vector over classes.
  const ClassVector& product(std::size_t i, std::size_t j) const;

  ClassVector basis_vector(std::size_t i) const;
  ClassVector multiply(const ClassVector& x, const ClassVector& y) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FusionTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

FusionTable structure_table(const RationalLevel& level);

// The unique j with N[i][j][unit] = 1. Throws Error if none or several.
std::size_t conjugate_class(const FusionTable& table, std::size_t i);

// Dimension of the space of conformal blocks on a genus-g surface with the
// given insertions: the unit coefficient of (x_1 ... x_n) h^g, where
// h = sum_a a a*. Throws RangeError when g = 0 and there are no insertions.
Integer genus_dimension(const FusionTable& table, int genus, const std::vector<std::size_t>& insertions);

// Exhaustive checks. Each returns the first counterexample found.
VerificationReport verify_factorization(int bound);
VerificationReport verify_quotient(const RationalLevel& level);
VerificationReport verify_commutativity_generic(int bound);
VerificationReport verify_associativity_generic(int bound);
VerificationReport verify_commutativity_rational(const RationalLevel& level);
VerificationReport verify_associativity_rational(const RationalLevel& level);
VerificationReport verify_dimension_homomorphism(int bound);
VerificationReport verify_representative_independence(const RationalLevel& level);

}  // namespace fusion
