#pragma once

#include "fusion/affine_fusion.hpp"
#include "fusion/formal_sum.hpp"
#include "fusion/verification.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace fusion {

// The symbol (V_a, V_b) of a Virasoro module.
struct VirSymbol {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const VirSymbol&, const VirSymbol&) = default;
};

std::string to_string(const VirSymbol& x);

using VirSum = FormalSum<VirSymbol>;

// A minimal-model class; rep is the smaller of (a, b) and (q-2-a, p-2-b).
struct MinimalClass {
  RationalLevel level;
  VirSymbol rep;

  friend auto operator<=>(const MinimalClass&, const MinimalClass&) = default;
};

using MinimalSum = FormalSum<MinimalClass>;

struct CentralCharge {
  Rational value;
};

// 1 - 6(p-q)^2/(pq). Needs p, q >= 2 and coprime.
CentralCharge central_charge(int p, int q);

VirSum vir_fuse_generic(const VirSymbol& x, const VirSymbol& y);
VirSum vir_fuse_generic(const VirSum& x, const VirSum& y);

// Throws RangeError unless the level has q >= 2.
void require_minimal(const RationalLevel& level);

// nullopt is the zero module: a = q-1 or b = p-1 pairs with a V_{-1}.
std::optional<MinimalClass> vir_canonicalize(const RationalLevel& level, const VirSymbol& x);

std::vector<MinimalClass> minimal_classes(const RationalLevel& level);

MinimalSum vir_fuse_minimal(const RationalLevel& level, const MinimalClass& x, const MinimalClass& y);
MinimalSum vir_fuse_minimal(const RationalLevel& level, const MinimalSum& x, const MinimalSum& y);

VirSum ds_phi_e(const AffineSymbol& x);
VirSum ds_phi_f(const AffineSymbol& x);
VirSum ds_map(const AffineSymbol& x);
VirSum ds_map(const AffineSum& x);

// phi_e + phi_f on a single admissible symbol, read in the minimal ring.
MinimalSum ds_map(const RationalLevel& level, const AffineSymbol& x);
MinimalSum ds_map(const RationalLevel& level, const AdmissibleSum& x);

VerificationReport verify_ds_epimorphism(int bound);
VerificationReport verify_ds_epimorphism(const RationalLevel& level);
VerificationReport verify_ds_well_defined(const RationalLevel& level);

}  // namespace fusion
