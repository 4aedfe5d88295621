#pragma once

// The monoidal category H-mod: finite-dimensional left H-modules given by
// action matrices, tensor products through Delta, left/right duals and
// (co)evaluations, Hom spaces and the Lambda transformations.
//
// Tensor words are flat lists of modules; a word's vector space is the
// left-nested Kronecker product of its factors and the empty word is the
// monoidal unit (dimension 1).

#include <memory>
#include <string>
#include <vector>

#include "hopfchrom/hopf.hpp"
#include "hopfchrom/integrals.hpp"

namespace hopfchrom {

class HModule {
 public:
  /// Validates rho(1) = id and rho(e_i) rho(e_j) = sum_k m_ijk rho(e_k).
  static HModule make(HopfRef algebra, std::vector<Matrix> action, std::string label);

  const HopfAlgebra& algebra() const { return *algebra_; }
  const HopfRef& algebra_ref() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }

  /// rho(h) for an arbitrary element h.
  Matrix act(const Vector& h) const;

  /// Constructs without validation; for modules derived from validated ones.
  static HModule trusted(HopfRef algebra, std::vector<Matrix> action, std::string label);

 private:
  HModule(HopfRef algebra, std::vector<Matrix> action, std::string label);

  HopfRef algebra_;
  std::vector<Matrix> action_;
  std::size_t dim_;
  std::string label_;
};

using ModuleRef = std::shared_ptr<const HModule>;
using TensorWord = std::vector<ModuleRef>;

/// Throws ModuleError naming the failed axiom and basis indices.
void validate_module(const HopfAlgebra& h, const std::vector<Matrix>& action);

std::size_t word_dim(const TensorWord& word);
/// Same length, same algebra, and factor-by-factor equal labels and dimensions.
bool same_word(const TensorWord& a, const TensorWord& b);
std::string word_label(const TensorWord& word);

/// Action of h on the tensor product of the word (through iterated Delta);
/// epsilon(h) on the empty word.
Matrix word_action(const HopfAlgebra& h, const TensorWord& word, const Vector& element);
/// word_action for every basis element at once.
std::vector<Matrix> word_basis_actions(const HopfAlgebra& h, const TensorWord& word);

ModuleRef regular_module(const HopfRef& h);
ModuleRef trivial_module(const HopfRef& h);
/// k with h acting by alpha_H(h).
ModuleRef alpha_module(const HopfRef& h, const IntegralData& data);
ModuleRef tensor_module(const ModuleRef& m, const ModuleRef& n);
/// Left dual: h acts by rho(S(h))^T; right dual: rho(S^-1(h))^T.
ModuleRef dual_module(const ModuleRef& m, Side side);
ModuleRef direct_sum(const ModuleRef& m, const ModuleRef& n);
/// H^(+)copies with block-diagonal regular action.
ModuleRef regular_power(const HopfRef& h, std::size_t copies);

/// A linear map between tensor words, matrix of size dim(target) x dim(source).
struct Morphism {
  TensorWord source;
  TensorWord target;
  Matrix matrix;
  std::string name;
};

Morphism identity_morphism(const Field& field, const TensorWord& word);

/// rho_target(h) F == F rho_source(h) for every basis element h.
bool is_h_linear(const HopfAlgebra& h, const Morphism& f);
void require_h_linear(const HopfAlgebra& h, const Morphism& f);

struct Evaluations {
  Morphism ev;          // ld(M) (x) M -> 1
  Morphism coev;        // 1 -> M (x) ld(M)
  Morphism ev_tilde;    // M (x) rd(M) -> 1
  Morphism coev_tilde;  // 1 -> rd(M) (x) M
};
Evaluations evaluation_morphisms(const ModuleRef& m);

/// Basis of Hom_H(M, N), each a dim(N) x dim(M) matrix.
std::vector<Matrix> hom_space(const HModule& m, const HModule& n);

/// An algebra together with its integral data and standard modules.
struct HopfContext {
  HopfRef algebra;
  IntegralData integrals;
  ModuleRef regular;
  ModuleRef trivial;
  ModuleRef alpha;

  static HopfContext make(HopfRef algebra);
  static HopfContext make(HopfAlgebra algebra) {
    return make(std::make_shared<const HopfAlgebra>(std::move(algebra)));
  }
  const HopfAlgebra& h() const { return *algebra; }
};

/// Left: word (x) alpha -> word acting by S^-1(Lambda).
/// Right: alpha (x) word -> word acting by S(Lambda).
Morphism lambda_transform(const HopfContext& ctx, const TensorWord& word, Side side);

/// The endomorphism of the word given by S^-1(Lambda); the Lambda transformation
/// with the (trivial) alpha leg absorbed, for unimodular H.
Morphism lambda_endo(const HopfContext& ctx, const TensorWord& word);

/// 1 -> ld(M) (x) M built from coev_{ld(M)} and the pivotal isomorphism
/// M -> ld(ld(M)), m -> g m.
Morphism pivotal_coev_tilde(const HopfContext& ctx, const ModuleRef& m, const PivotData& pivot);

}  // namespace hopfchrom
