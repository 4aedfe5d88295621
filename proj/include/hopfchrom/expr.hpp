#pragma once

// Typed composites and tensor products of morphisms. Expressions are type
// checked when built and evaluated by pushing matrices through the tree, so
// large Kronecker factors are never formed for identity legs.

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>

#include "hopfchrom/hmod.hpp"

namespace hopfchrom {

class MorphismExpr {
 public:
  enum class Kind { primitive, identity, compose, tensor };

  static MorphismExpr primitive(Morphism m);
  static MorphismExpr identity(const Field& field, TensorWord word);
  /// after o before: `before` is applied first. Throws TypeMismatch.
  static MorphismExpr compose(const MorphismExpr& after, const MorphismExpr& before);
  static MorphismExpr tensor(const MorphismExpr& left, const MorphismExpr& right);

  Kind kind() const;
  const TensorWord& source() const;
  const TensorWord& target() const;
  const Field& field() const;

  /// Diagrammatic text: compositions as "first ; second", tensors with "*".
  std::string describe() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit MorphismExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct MorphismExpr::Node {
  Kind kind;
  Field field;
  TensorWord source;
  TensorWord target;
  std::optional<Morphism> morphism;  // primitive
  std::optional<MorphismExpr> a;     // compose: after; tensor: left
  std::optional<MorphismExpr> b;     // compose: before; tensor: right
};

/// Composes a chain given in application order: chain(f, g, h) = h o g o f.
MorphismExpr chain(std::initializer_list<MorphismExpr> steps);
MorphismExpr tensor_all(std::initializer_list<MorphismExpr> factors);

/// matrix(expr) * m without materializing matrix(expr).
Matrix apply(const MorphismExpr& expr, const Matrix& m);
Morphism evaluate(const MorphismExpr& expr);

/// Exact equality; throws TypeMismatch when the words differ.
bool morphisms_equal(const Morphism& f, const Morphism& g);

/// Re-expresses a map on A1 (x) ... (x) Ak -> B1 (x) ... (x) Bl as the map on
/// the reversed words Ak (x) ... (x) A1 -> Bl (x) ... (x) B1.
Matrix reverse_factors(const Matrix& m, const std::vector<std::size_t>& source_dims,
                       const std::vector<std::size_t>& target_dims);

}  // namespace hopfchrom
