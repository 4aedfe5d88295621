#pragma once

// Generators for the standard corpus: group algebras and their duals,
// Sweedler's H4 and the Taft algebras.

#include <string>
#include <vector>

#include "hopfchrom/hopf.hpp"

namespace hopfchrom {

class GroupTable {
 public:
  /// Validates associativity, identity and inverses exhaustively.
  static GroupTable make(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> names);
  static GroupTable cyclic(std::size_t n);
  /// S3 with elements e, (12), (13), (23), (123), (132).
  static GroupTable symmetric3();

  std::size_t order() const { return cayley_.size(); }
  std::size_t product(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  GroupTable() = default;
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
};

HopfAlgebra group_algebra(const GroupTable& g, const Field& field, const std::string& name = "");
HopfAlgebra dual_group_algebra(const GroupTable& g, const Field& field, const std::string& name = "");

/// Basis g^i x^j at index i*n + j, with q the primitive n-th root of unity
/// chosen by primitive_root_of_unity.
HopfAlgebra taft(std::size_t n, const Field& field);
HopfAlgebra taft(std::size_t n, const Scalar& q);

/// Basis {1, g, x, gx}. Throws FieldError in characteristic 2.
HopfAlgebra sweedler_h4(const Field& field);

/// group:Zn, group:S3, dualgroup:Zn, dualgroup:S3, sweedler, taft:n. Throws ParseError.
HopfAlgebra builtin(const std::string& name, const Field& field);
std::vector<std::string> builtin_names();

}  // namespace hopfchrom
