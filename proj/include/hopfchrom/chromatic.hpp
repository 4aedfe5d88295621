#pragma once

// Chromatic maps in H-mod and the defining identities they satisfy.
//
//   left:       c^l_H : ld(ld(H)) (x) H -> alpha (x) H (x) H
//               e_x (x) y  |->  lambda(S(y1) x) alpha(y2) (x) y3 (x) y4
//   right:      c^r_H : H (x) rd(rd(H)) -> H (x) H (x) alpha
//               y (x) e_x  |->  y1 (x) y2 (x) alpha(y3) lambda(S(x) y4)
//   spherical:  c_H : H (x) H -> H (x) H
//               x (x) y  |->  lambda(S(y1) g x) y2 (x) y3
//
// The double duals are identified with H through e_x, i.e. identity coordinates.

#include <optional>
#include <string>
#include <vector>

#include "hopfchrom/expr.hpp"
#include "hopfchrom/hmod.hpp"

namespace hopfchrom {

enum class ChromaticSide { left, right, spherical };

std::string to_string(ChromaticSide side);
/// "left", "right" or "spherical"; throws ParseError otherwise.
ChromaticSide parse_chromatic_side(const std::string& text);

Morphism chromatic_left_hopf(const HopfContext& ctx);
/// c^l of cop(H) with its tensor legs reversed.
Morphism chromatic_right_hopf(const HopfContext& ctx);
/// The closed formula for c^r, assembled directly from H's data.
Morphism chromatic_right_hopf_direct(const HopfContext& ctx);
/// Throws NotSpherical unless H is unimodular and `pivot` is a pivot.
Morphism chromatic_spherical(const HopfContext& ctx, const PivotData& pivot);

/// The chromatic map of H for the given side; the spherical side searches for a pivot.
Morphism chromatic_hopf(const HopfContext& ctx, ChromaticSide side);

/// f: P -> H (dim H x dim P) and g: H -> P (dim P x dim H).
struct RetractPair {
  Matrix f;
  Matrix g;
};

struct RetractFamily {
  ModuleRef P;
  std::vector<RetractPair> maps;
};

/// Every f_i, g_i H-linear and sum g_i f_i = id_P. Throws RetractError.
void validate_retract_family(const HopfContext& ctx, const RetractFamily& family);

/// P = H with the single pair (id, id).
RetractFamily regular_family(const HopfContext& ctx);
/// P = H^(+)copies with the inclusion/projection pairs.
RetractFamily direct_sum_family(const HopfContext& ctx, std::size_t copies);

/// Splits an idempotent H-linear endomorphism e of H^(+)copies through its image.
RetractFamily split_idempotent(const HopfContext& ctx, const Matrix& e, std::size_t copies = 1);

/// A nontrivial idempotent of H (neither 0 nor 1): an idempotent basis element,
/// or the averaging idempotent of a non-unit grouplike basis element.
std::optional<Vector> find_idempotent(const HopfAlgebra& h);

/// x |-> x e on H; H-linear for the left regular action.
Matrix right_multiplication(const HopfAlgebra& h, const Vector& e);

/// The summand H e for the idempotent found by find_idempotent, if any.
std::optional<RetractFamily> idempotent_summand(const HopfContext& ctx);

/// Extends a chromatic map of H to P along the family.
Morphism chromatic_retract(const HopfContext& ctx, const Morphism& c_h, const RetractFamily& family,
                           ChromaticSide side);

/// The left-hand side of the defining identity, a composite X (x) P -> X (x) P
/// (P (x) X -> P (x) X on the right side) with G = H.
MorphismExpr chromatic_identity_expr(const HopfContext& ctx, const Morphism& c_p, const ModuleRef& P,
                                     const ModuleRef& X, ChromaticSide side,
                                     const std::optional<PivotData>& pivot = std::nullopt);

struct IdentityReport {
  std::string algebra;
  ChromaticSide side = ChromaticSide::left;
  std::string P;
  std::string X;
  bool equal = false;      // the composite is the identity
  bool h_linear = false;   // c_P is a morphism of H-mod
  std::optional<EntryDiff> mismatch;
  std::string expected;  // at the mismatch
  std::string actual;
  double millis = 0;

  bool holds() const { return equal && h_linear; }
};

IdentityReport verify_chromatic_identity(const HopfContext& ctx, const Morphism& c_p, const ModuleRef& P,
                                         const ModuleRef& X, ChromaticSide side,
                                         const std::optional<PivotData>& pivot = std::nullopt);

/// Lambda^l_P and Lambda^r_P as matrices on P.
bool lambda_sides_agree(const HopfContext& ctx, const ModuleRef& P);

/// The same module structure regarded over another algebra with identical
/// multiplication (cop(H) or op-free rebuilds of H).
ModuleRef transport_module(const ModuleRef& m, const HopfRef& target);

}  // namespace hopfchrom
