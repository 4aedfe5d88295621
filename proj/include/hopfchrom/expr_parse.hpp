#pragma once

// Text syntax for morphism expressions.
//
//   expr    := tensor (';' tensor)*        f ; g  applies f first
//   tensor  := atom ('*' atom)*            binds tighter than ';'
//   atom    := '(' expr ')' | prim
//   prim    := id(M, ...) | ev(M) | coev(M) | evt(M) | coevt(M) | pcoevt(M)
//            | lamL(M, ...) | lamR(M, ...) | lamT(M, ...)
//            | cL | cR | cSph    (optionally with a module argument, e.g. cL(He))
//   M       := name | ld(M) | rd(M)
//
// Module names come from the environment: H, k and alpha always, He when H
// has a nontrivial idempotent summand, and any extra modules supplied.

#include <map>
#include <optional>
#include <string>

#include "hopfchrom/chromatic.hpp"
#include "hopfchrom/expr.hpp"

namespace hopfchrom {

class ExprEnvironment {
 public:
  explicit ExprEnvironment(const HopfContext& ctx);

  void add_module(const std::string& name, ModuleRef m);
  void add_family(const std::string& name, RetractFamily family);
  /// Overrides the chromatic map of H used for one side (e.g. a perturbed copy).
  void set_chromatic(ChromaticSide side, Morphism c);

  const HopfContext& context() const { return ctx_; }
  ModuleRef module(const std::string& name) const;
  const RetractFamily& family(const std::string& name) const;
  const Morphism& chromatic(ChromaticSide side) const;
  const PivotData& pivot() const;

 private:
  const HopfContext& ctx_;
  std::map<std::string, ModuleRef> modules_;
  std::map<std::string, RetractFamily> families_;
  mutable std::map<ChromaticSide, Morphism> chromatic_;
  mutable std::optional<PivotData> pivot_;
};

/// Throws ParseError with the character offset, or TypeMismatch.
MorphismExpr parse_expr(const std::string& text, const ExprEnvironment& env);

}  // namespace hopfchrom
