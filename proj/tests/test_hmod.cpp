#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hopfchrom/errors.hpp"
#include "hopfchrom/expr.hpp"
#include "hopfchrom/hmod.hpp"
#include "oracles.hpp"

using namespace hopfchrom;

namespace {

const corpus::Entry& entry(const std::string& label) {
  for (const auto& e : corpus::all())
    if (e.label == label) return e;
  throw std::runtime_error("no corpus entry " + label);
}

std::vector<Matrix> regular_actions(const HopfAlgebra& h) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h.dim(); ++i) acts.push_back(h.left_mult(i));
  return acts;
}

MorphismExpr prim(const Morphism& m) { return MorphismExpr::primitive(m); }
MorphismExpr id(const ModuleRef& m) { return MorphismExpr::identity(m->algebra().field(), {m}); }

}  // namespace

TEST(ModuleMake, RegularActionIsAccepted) {
  const auto& e = entry("H4");
  EXPECT_NO_THROW(HModule::make(e.algebra, regular_actions(*e.algebra), "H"));
}

TEST(ModuleMake, CorruptedActionIsRejected) {
  const auto& e = entry("H4");
  auto acts = regular_actions(*e.algebra);
  acts[2](0, 0) += e.algebra->field().one();
  EXPECT_THROW(HModule::make(e.algebra, acts, "bad"), ModuleError);
  auto unit_broken = regular_actions(*e.algebra);
  unit_broken[0](1, 1) += e.algebra->field().one();
  EXPECT_THROW(HModule::make(e.algebra, unit_broken, "bad"), ModuleError);
  auto too_few = regular_actions(*e.algebra);
  too_few.pop_back();
  EXPECT_THROW(HModule::make(e.algebra, too_few, "bad"), ModuleError);
}

TEST(ModuleMake, AlphaModuleForH4) {
  const auto& e = entry("H4");
  const HopfContext ctx = HopfContext::make(e.algebra);
  const Field& f = e.algebra->field();
  EXPECT_EQ(ctx.alpha->dim(), 1u);
  EXPECT_EQ(ctx.alpha->action(1)(0, 0), -f.one());
  EXPECT_TRUE(ctx.alpha->action(2)(0, 0).is_zero());
}

TEST(HomSpace, Dimensions) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    EXPECT_EQ(hom_space(*ctx.trivial, *ctx.trivial).size(), 1u) << e.label;
    // End_H(H) is H^op through right multiplications
    EXPECT_EQ(hom_space(*ctx.regular, *ctx.regular).size(), e.algebra->dim()) << e.label;
    // Hom_H(k, H) is the space of left cointegrals
    EXPECT_EQ(hom_space(*ctx.trivial, *ctx.regular).size(), oracle::left_cointegral_dim(e.algebra->data())) << e.label;
  }
}

TEST(HomSpace, BasisMapsAreHLinear) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    for (const Matrix& f : hom_space(*ctx.regular, *ctx.regular))
      EXPECT_TRUE(is_h_linear(ctx.h(), {{ctx.regular}, {ctx.regular}, f, "f"})) << e.label;
  }
}

TEST(HomSpace, H4TrivialToAlphaIsZero) {
  const HopfContext ctx = HopfContext::make(entry("H4").algebra);
  EXPECT_TRUE(hom_space(*ctx.trivial, *ctx.alpha).empty());
}

TEST(HLinearity, NonLinearMapIsReported) {
  const HopfContext ctx = HopfContext::make(entry("H4").algebra);
  Matrix m(ctx.h().field(), 4, 4);
  m(0, 0) = ctx.h().field().one();
  const Morphism f{{ctx.regular}, {ctx.regular}, m, "proj"};
  EXPECT_FALSE(is_h_linear(ctx.h(), f));
  EXPECT_THROW(require_h_linear(ctx.h(), f), NotHLinear);
}

TEST(Duals, ActionsUseTheAntipode) {
  for (const auto& e : corpus::all()) {
    const HopfAlgebra& h = *e.algebra;
    const ModuleRef H = regular_module(e.algebra);
    const ModuleRef l = dual_module(H, Side::left), r = dual_module(H, Side::right);
    const ModuleRef rl = dual_module(r, Side::left), lr = dual_module(l, Side::right);
    const ModuleRef ll = dual_module(l, Side::left);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vector x = h.basis_element(i);
      EXPECT_EQ(l->action(i), H->act(antipode_apply(h, x)).transpose());
      EXPECT_EQ(r->action(i), H->act(antipode_inverse_apply(h, x)).transpose());
      EXPECT_EQ(rl->action(i), H->action(i)) << e.label;
      EXPECT_EQ(lr->action(i), H->action(i)) << e.label;
      EXPECT_EQ(ll->action(i), H->act(antipode_apply(h, antipode_apply(h, x)))) << e.label;
    }
    EXPECT_NO_THROW(validate_module(h, l->actions()));
    EXPECT_NO_THROW(validate_module(h, r->actions()));
    EXPECT_EQ(l->label(), "ld(H)");
  }
}

TEST(Tensor, ActionThroughCoproductIsAModule) {
  for (const auto& e : corpus::all()) {
    const HopfAlgebra& h = *e.algebra;
    const ModuleRef H = regular_module(e.algebra);
    const auto acts = word_basis_actions(h, {H, H});
    EXPECT_NO_THROW(validate_module(h, acts)) << e.label;
    // e_k acts by sum c_kij e_i (x) e_j
    for (std::size_t k = 0; k < h.dim(); ++k) {
      Matrix expect(h.field(), h.dim() * h.dim(), h.dim() * h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
          if (!h.comult(k, i, j).is_zero()) expect += kron(h.left_mult(i), h.left_mult(j)).scaled(h.comult(k, i, j));
      EXPECT_EQ(acts[k], expect) << e.label << " " << k;
    }
    EXPECT_EQ(word_action(h, {}, h.unit()), Matrix::identity(h.field(), 1));
  }
}

TEST(Tensor, ThreeFoldWordMatchesNestedModule) {
  const auto& e = entry("T3");
  const HopfAlgebra& h = *e.algebra;
  const HopfContext ctx = HopfContext::make(e.algebra);
  const ModuleRef nested = tensor_module(tensor_module(ctx.alpha, ctx.regular), ctx.alpha);
  const auto flat = word_basis_actions(h, {ctx.alpha, ctx.regular, ctx.alpha});
  for (std::size_t i = 0; i < h.dim(); ++i) EXPECT_EQ(flat[i], nested->action(i));
}

TEST(Words, EqualityAndLabels) {
  const HopfContext ctx = HopfContext::make(entry("kZ2").algebra);
  EXPECT_TRUE(same_word({ctx.regular, ctx.trivial}, {regular_module(ctx.algebra), ctx.trivial}));
  EXPECT_FALSE(same_word({ctx.regular}, {ctx.trivial}));
  EXPECT_FALSE(same_word({ctx.trivial}, {ctx.alpha}));
  EXPECT_EQ(word_dim({}), 1u);
  EXPECT_EQ(word_dim({ctx.regular, ctx.regular, ctx.trivial}), 4u);
  EXPECT_EQ(word_label({}), "1");
}

TEST(Evaluations, AreHLinear) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    for (const ModuleRef& m : {ctx.regular, ctx.alpha, tensor_module(ctx.regular, ctx.alpha)}) {
      const Evaluations ev = evaluation_morphisms(m);
      for (const Morphism* f : {&ev.ev, &ev.coev, &ev.ev_tilde, &ev.coev_tilde})
        EXPECT_TRUE(is_h_linear(ctx.h(), *f)) << e.label << " " << f->name;
    }
  }
}

TEST(Evaluations, ZigzagIdentities) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    const ModuleRef M = ctx.regular;
    const ModuleRef l = dual_module(M, Side::left), r = dual_module(M, Side::right);
    const Evaluations ev = evaluation_morphisms(M);
    const Field& f = ctx.h().field();
    const auto check = [&](const MorphismExpr& z, const ModuleRef& on) {
      EXPECT_EQ(evaluate(z).matrix, Matrix::identity(f, on->dim())) << e.label << " " << z.describe();
    };
    check(chain({MorphismExpr::tensor(prim(ev.coev), id(M)), MorphismExpr::tensor(id(M), prim(ev.ev))}), M);
    check(chain({MorphismExpr::tensor(id(l), prim(ev.coev)), MorphismExpr::tensor(prim(ev.ev), id(l))}), l);
    check(chain({MorphismExpr::tensor(id(M), prim(ev.coev_tilde)), MorphismExpr::tensor(prim(ev.ev_tilde), id(M))}), M);
    check(chain({MorphismExpr::tensor(prim(ev.coev_tilde), id(r)), MorphismExpr::tensor(id(r), prim(ev.ev_tilde))}), r);
  }
}

TEST(Lambda, GroupAlgebraZ2Examples) {
  const HopfContext ctx = HopfContext::make(entry("kZ2").algebra);
  const Field& f = ctx.h().field();
  const Scalar c = ctx.integrals.cointegral[0];
  ASSERT_EQ(ctx.integrals.cointegral[1], c);
  // Lambda = c (e + a) acts on k[Z2] by c times the all-ones matrix
  Matrix ones(f, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = c;
  EXPECT_EQ(lambda_transform(ctx, {ctx.regular}, Side::left).matrix, ones);
  EXPECT_EQ(lambda_transform(ctx, {ctx.regular}, Side::right).matrix, ones);
  // and on k by eps(Lambda) = 2c
  EXPECT_EQ(lambda_transform(ctx, {ctx.trivial}, Side::left).matrix(0, 0), c * f.from_int(2));
}

TEST(Lambda, WordsAndActingElement) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    const HopfAlgebra& h = ctx.h();
    const Morphism l = lambda_transform(ctx, {ctx.regular}, Side::left);
    const Morphism r = lambda_transform(ctx, {ctx.regular}, Side::right);
    EXPECT_TRUE(same_word(l.source, {ctx.regular, ctx.alpha}));
    EXPECT_TRUE(same_word(r.source, {ctx.alpha, ctx.regular}));
    EXPECT_TRUE(same_word(l.target, {ctx.regular}));
    EXPECT_EQ(l.matrix, ctx.regular->act(antipode_inverse_apply(h, ctx.integrals.cointegral))) << e.label;
    EXPECT_EQ(r.matrix, ctx.regular->act(antipode_apply(h, ctx.integrals.cointegral))) << e.label;
    EXPECT_TRUE(is_h_linear(h, l)) << e.label;
    EXPECT_TRUE(is_h_linear(h, r)) << e.label;
  }
}

TEST(Lambda, EndoRequiresUnimodularity) {
  const HopfContext h4 = HopfContext::make(entry("H4").algebra);
  EXPECT_THROW(lambda_endo(h4, {h4.regular}), NotSpherical);
  const HopfContext z3 = HopfContext::make(entry("kZ3").algebra);
  EXPECT_EQ(lambda_endo(z3, {z3.regular}).matrix, lambda_transform(z3, {z3.regular}, Side::left).matrix);
}

TEST(Lambda, NaturalityAgainstEndH) {
  for (const auto& e : corpus::all()) {
    const HopfContext ctx = HopfContext::make(e.algebra);
    const Matrix l = lambda_transform(ctx, {ctx.regular}, Side::left).matrix;
    const Matrix r = lambda_transform(ctx, {ctx.regular}, Side::right).matrix;
    for (const Matrix& f : hom_space(*ctx.regular, *ctx.regular)) {
      EXPECT_EQ(l * f, f * l) << e.label;
      EXPECT_EQ(r * f, f * r) << e.label;
    }
  }
}

TEST(PivotalCoevaluation, IsHLinearAndHasTheExpectedShape) {
  const HopfContext ctx = HopfContext::make(entry("kS3").algebra);
  const SphericalVerdict v = is_spherical_hmod(ctx.h(), ctx.integrals);
  ASSERT_TRUE(v.pivot);
  const Morphism p = pivotal_coev_tilde(ctx, ctx.regular, *v.pivot);
  EXPECT_TRUE(p.source.empty());
  EXPECT_TRUE(same_word(p.target, {dual_module(ctx.regular, Side::left), ctx.regular}));
  EXPECT_TRUE(is_h_linear(ctx.h(), p));
}
