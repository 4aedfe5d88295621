#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include <memory>
#include <string>
#include <vector>

#include "hopfchrom/field.hpp"
#include "hopfchrom/matrix.hpp"

namespace hopfchrom {

/// Raw structure constants, before validation.
///
/// mult:    e_i e_j = sum_k mult[(i*n + j)*n + k] e_k
/// comult:  Delta(e_k) = sum_{i,j} comult[(k*n + i)*n + j] e_i (x) e_j
/// antipode: S(e_j) = sum_i antipode(i, j) e_i
struct HopfData {
  std::string name;
  Field field;
  std::vector<std::string> basis_names;
  std::vector<Scalar> mult;
  Vector unit;
  std::vector<Scalar> comult;
  Vector counit;
  Matrix antipode;

  /// All-zero data of dimension n with basis names e0, e1, ...
  static HopfData zeros(std::string name, const Field& field, std::size_t n);

  std::size_t dim() const { return basis_names.size(); }
  Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim() + j) * dim() + k]; }
  Scalar& c(std::size_t k, std::size_t i, std::size_t j) { return comult[(k * dim() + i) * dim() + j]; }
};

/// Stable axiom names reported by AxiomError::axiom().
namespace axiom {
inline constexpr const char* shape = "shape";
inline constexpr const char* associativity = "associativity";
inline constexpr const char* unitality = "unitality";
inline constexpr const char* coassociativity = "coassociativity";
inline constexpr const char* counitality = "counitality";
inline constexpr const char* counit_multiplicative = "counit multiplicativity";
inline constexpr const char* comult_multiplicative = "comultiplication multiplicativity";
inline constexpr const char* antipode = "antipode axiom";
inline constexpr const char* antipode_invertible = "antipode invertibility";
}  // namespace axiom

/// Runs the full axiom suite in the order of the `axiom` names above and throws
/// AxiomError for the first violation, naming the basis indices involved.
void verify_hopf_axioms(const HopfData& data);

/// A validated Hopf algebra. There is no unchecked constructor.
class HopfAlgebra {
 public:
  static HopfAlgebra make(HopfData data);

  const std::string& name() const { return data_.name; }
  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.basis_names.size(); }
  const std::vector<std::string>& basis_names() const { return data_.basis_names; }
  const HopfData& data() const { return data_; }

  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.mult[(i * dim() + j) * dim() + k];
  }
  const Scalar& comult(std::size_t k, std::size_t i, std::size_t j) const {
    return data_.comult[(k * dim() + i) * dim() + j];
  }
  const Vector& unit() const { return data_.unit; }
  const Vector& counit() const { return data_.counit; }
  const Matrix& antipode() const { return data_.antipode; }
  const Matrix& antipode_inverse() const { return antipode_inverse_; }

  /// Matrix of x -> e_i x.
  const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
  /// Matrix of x -> x e_i.
  const Matrix& right_mult(std::size_t i) const { return right_mult_[i]; }

  Vector basis_element(std::size_t i) const { return unit_vector(field(), dim(), i); }
  Vector zero() const { return zero_vector(field(), dim()); }

  /// Human-readable linear combination of basis names.
  std::string format(const Vector& a) const;

 private:
  explicit HopfAlgebra(HopfData data);

  HopfData data_;
  Matrix antipode_inverse_;
  std::vector<Matrix> left_mult_;
  std::vector<Matrix> right_mult_;
};

using HopfRef = std::shared_ptr<const HopfAlgebra>;

/// An element of H* in the dual basis.
struct DualElement {
  Vector coeffs;

  Scalar operator()(const Vector& h) const;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

Vector multiply(const HopfAlgebra& h, const Vector& a, const Vector& b);
Scalar counit_apply(const HopfAlgebra& h, const Vector& a);
Vector antipode_apply(const HopfAlgebra& h, const Vector& a);
Vector antipode_inverse_apply(const HopfAlgebra& h, const Vector& a);
const Matrix& antipode_inverse(const HopfAlgebra& h);

/// Delta(a) as a vector of length n^2, index i*n + j.
Vector coproduct(const HopfAlgebra& h, const Vector& a);

/// Iterated coproduct Delta^(k)(a), a rank-(k+1) tensor flattened row-major.
/// Delta^(0) = id and Delta^(k) = (Delta (x) id^(k-1)) Delta^(k-1).
Vector coproduct_iter(const HopfAlgebra& h, std::size_t k, const Vector& a);

/// Iterated coproduct where step s splits leg `legs[s]` (legs[s] <= s). Every
/// choice agrees with coproduct_iter by coassociativity.
Vector coproduct_iter_legs(const HopfAlgebra& h, const std::vector<std::size_t>& legs, const Vector& a);

/// Matrix of Delta^(k): n^(k+1) x n.
Matrix coproduct_iter_matrix(const HopfAlgebra& h, std::size_t k);

bool is_grouplike(const HopfAlgebra& h, const Vector& a);

/// H*: convolution product, unit epsilon, comultiplication dual to the
/// product, counit evaluation at 1, antipode S^T.
HopfAlgebra dual_hopf(const HopfAlgebra& h);
/// Opposite coproduct, antipode S^-1.
HopfAlgebra cop(const HopfAlgebra& h);
/// Opposite product, antipode S^-1.
HopfAlgebra op(const HopfAlgebra& h);

}  // namespace hopfchrom
