#pragma once

// Integrals, cointegrals, distinguished grouplikes, unimodularity and pivots.

#include <optional>
#include <span>
#include <vector>

#include "hopfchrom/hopf.hpp"

namespace hopfchrom {

enum class Side { left, right };

/// The scalar data every chromatic map is built from.
struct IntegralData {
  Vector cointegral;       // Lambda: h Lambda = eps(h) Lambda
  DualElement integral;    // lambda: lambda(h_(1)) h_(2) = lambda(h) 1, lambda(Lambda) = 1
  DualElement alpha;       // alpha_H: Lambda S(h) = alpha_H(h) Lambda
  Vector distinguished;    // a: lambda(h_(2)) h_(1) = lambda(h) a
};

/// A grouplike g with S^2(h) = g h g^-1 and lambda(h_(2)) h_(1) = lambda(h) g^2.
struct PivotData {
  Vector g;
  Vector g_inverse;
};

/// Left: {v : h v = eps(h) v}; right: {v : v h = eps(h) v}. Basis as columns.
/// Throws CorruptData unless the space is one-dimensional.
Matrix cointegral_space(const HopfAlgebra& h, Side side);

/// Right: {lambda : lambda(h_(1)) h_(2) = lambda(h) 1}; left: legs swapped.
/// Basis of H* as columns. Throws CorruptData unless one-dimensional.
Matrix integral_space(const HopfAlgebra& h, Side side);

/// {x : h x = chi(h) x for all h} for a character chi (no dimension check).
Matrix character_left_ideal(const HopfAlgebra& h, const DualElement& chi);

/// Computes Lambda, lambda normalized by lambda(Lambda) = 1, alpha_H and the
/// distinguished grouplike a, then re-checks every invariant.
IntegralData normalized_pair(const HopfAlgebra& h);

/// Throws CorruptData naming the first failed invariant.
void verify_integral_data(const HopfAlgebra& h, const IntegralData& data);

bool is_unimodular(const HopfAlgebra& h, const IntegralData& data);
bool is_unimodular(const HopfAlgebra& h);

/// {v : S^2(h) v = v h for all basis h}.
Matrix pivot_intertwiner_space(const HopfAlgebra& h);

struct PivotCheck {
  bool grouplike = false;
  bool intertwines = false;  // S^2(h) g = g h
  bool balanced = false;     // lambda(h_(2)) h_(1) = lambda(h) g^2
  bool ok() const { return grouplike && intertwines && balanced; }
};
PivotCheck check_pivot(const HopfAlgebra& h, const IntegralData& data, const Vector& g);

struct PivotSearch {
  std::vector<PivotData> candidates;  // sorted: unit first, then basis order
  bool exhaustive = false;            // false: other pivots may exist
};

struct PivotSearchOptions {
  std::vector<Vector> hints;
  /// Over GF(p), enumerate the intertwiner space when p^dim stays below this.
  std::size_t exhaust_limit = std::size_t{1} << 16;
};

/// Pivots inside the intertwiner space: solved exactly when it has dimension
/// <= 2, otherwise by testing the unit, the basis elements and the hints, and by
/// enumeration over small finite fields.
PivotSearch pivot_candidates(const HopfAlgebra& h, const IntegralData& data, const PivotSearchOptions& options = {});

struct SphericalVerdict {
  bool spherical = false;
  std::optional<PivotData> pivot;
};

/// H-mod is spherical iff H is unimodular and has a pivot. Throws
/// PivotSearchInconclusive when the search cannot decide.
SphericalVerdict is_spherical_hmod(const HopfAlgebra& h, const IntegralData& data,
                                   const PivotSearchOptions& options = {});

}  // namespace hopfchrom
