#include "hopfchrom/chromatic.hpp"

#include <chrono>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

std::string to_string(ChromaticSide side) {
  switch (side) {
    case ChromaticSide::left:
      return "left";
    case ChromaticSide::right:
      return "right";
    case ChromaticSide::spherical:
      return "spherical";
  }
  return {};
}

ChromaticSide parse_chromatic_side(const std::string& text) {
  if (text == "left") return ChromaticSide::left;
  if (text == "right") return ChromaticSide::right;
  if (text == "spherical") return ChromaticSide::spherical;
  throw ParseError("side", "expected left, right or spherical, got '" + text + "'");
}

namespace {

// table[a * n + x] = lambda(S(e_a) e_x)
std::vector<Scalar> antipode_pairing(const HopfAlgebra& h, const DualElement& lambda) {
  const std::size_t n = h.dim();
  std::vector<Scalar> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector sa = antipode_apply(h, h.basis_element(a));
    for (std::size_t x = 0; x < n; ++x) table.push_back(lambda(multiply(h, sa, h.basis_element(x))));
  }
  return table;
}

ModuleRef double_dual(const ModuleRef& m, Side side) { return dual_module(dual_module(m, side), side); }

}  // namespace

Morphism chromatic_left_hopf(const HopfContext& ctx) {
  const HopfAlgebra& h = ctx.h();
  const std::size_t n = h.dim();
  const auto& alpha = ctx.integrals.alpha.coeffs;
  const auto pairing = antipode_pairing(h, ctx.integrals.integral);
  Matrix c(h.field(), n * n, n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const Vector d3 = coproduct_iter(h, 3, h.basis_element(y));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (alpha[b].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const Scalar& coeff = d3[((a * n + b) * n + k) * n + l];
            if (coeff.is_zero()) continue;
            const Scalar w = coeff * alpha[b];
            for (std::size_t x = 0; x < n; ++x)
              if (!pairing[a * n + x].is_zero()) c(k * n + l, x * n + y).add_product(w, pairing[a * n + x]);
          }
      }
  }
  return {{double_dual(ctx.regular, Side::left), ctx.regular}, {ctx.alpha, ctx.regular, ctx.regular}, std::move(c), "cL"};
}

Morphism chromatic_right_hopf(const HopfContext& ctx) {
  const std::size_t n = ctx.h().dim();
  const HopfContext mirror = HopfContext::make(cop(ctx.h()));
  Matrix c = reverse_factors(chromatic_left_hopf(mirror).matrix, {n, n}, {1, n, n});
  return {{ctx.regular, double_dual(ctx.regular, Side::right)}, {ctx.regular, ctx.regular, ctx.alpha}, std::move(c), "cR"};
}

Morphism chromatic_right_hopf_direct(const HopfContext& ctx) {
  const HopfAlgebra& h = ctx.h();
  const std::size_t n = h.dim();
  const auto& alpha = ctx.integrals.alpha.coeffs;
  const auto pairing = antipode_pairing(h, ctx.integrals.integral);
  Matrix c(h.field(), n * n, n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const Vector d3 = coproduct_iter(h, 3, h.basis_element(y));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < n; ++a) {
          if (alpha[a].is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& coeff = d3[((k * n + l) * n + a) * n + b];
            if (coeff.is_zero()) continue;
            const Scalar w = coeff * alpha[a];
            for (std::size_t x = 0; x < n; ++x)
              if (!pairing[x * n + b].is_zero()) c(k * n + l, y * n + x).add_product(w, pairing[x * n + b]);
          }
        }
  }
  return {{ctx.regular, double_dual(ctx.regular, Side::right)}, {ctx.regular, ctx.regular, ctx.alpha}, std::move(c),
          "cR"};
}

Morphism chromatic_spherical(const HopfContext& ctx, const PivotData& pivot) {
  const HopfAlgebra& h = ctx.h();
  if (!is_unimodular(h, ctx.integrals)) throw NotSpherical(h.name() + " is not unimodular");
  if (!check_pivot(h, ctx.integrals, pivot.g).ok()) throw NotSpherical("the given element is not a pivot of " + h.name());
  const std::size_t n = h.dim();
  std::vector<Scalar> pairing;
  pairing.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector sa = antipode_apply(h, h.basis_element(a));
    for (std::size_t x = 0; x < n; ++x)
      pairing.push_back(ctx.integrals.integral(multiply(h, multiply(h, sa, pivot.g), h.basis_element(x))));
  }
  Matrix c(h.field(), n * n, n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const Vector d2 = coproduct_iter(h, 2, h.basis_element(y));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& coeff = d2[(a * n + k) * n + l];
          if (coeff.is_zero()) continue;
          for (std::size_t x = 0; x < n; ++x)
            if (!pairing[a * n + x].is_zero()) c(k * n + l, x * n + y).add_product(coeff, pairing[a * n + x]);
        }
  }
  return {{ctx.regular, ctx.regular}, {ctx.regular, ctx.regular}, std::move(c), "cSph"};
}

Morphism chromatic_hopf(const HopfContext& ctx, ChromaticSide side) {
  switch (side) {
    case ChromaticSide::left:
      return chromatic_left_hopf(ctx);
    case ChromaticSide::right:
      return chromatic_right_hopf(ctx);
    case ChromaticSide::spherical: {
      const SphericalVerdict v = is_spherical_hmod(ctx.h(), ctx.integrals);
      if (!v.spherical) throw NotSpherical(ctx.h().name() + " is not spherical");
      return chromatic_spherical(ctx, *v.pivot);
    }
  }
  throw Error("unknown side");
}

void validate_retract_family(const HopfContext& ctx, const RetractFamily& family) {
  const HopfAlgebra& h = ctx.h();
  const std::size_t n = h.dim();
  if (!family.P) throw RetractError("retract family without a module");
  const std::size_t p = family.P->dim();
  Matrix sum(h.field(), p, p);
  for (std::size_t i = 0; i < family.maps.size(); ++i) {
    const auto& [f, g] = family.maps[i];
    const std::string tag = "pair " + std::to_string(i);
    if (f.rows() != n || f.cols() != p || g.rows() != p || g.cols() != n) throw RetractError(tag + " has wrong shape");
    for (std::size_t b = 0; b < n; ++b) {
      if (!(ctx.regular->action(b) * f == f * family.P->action(b)))
        throw RetractError(tag + ": f is not H-linear at " + h.basis_names()[b]);
      if (!(family.P->action(b) * g == g * ctx.regular->action(b)))
        throw RetractError(tag + ": g is not H-linear at " + h.basis_names()[b]);
    }
    sum += g * f;
  }
  if (!(sum == Matrix::identity(h.field(), p))) throw RetractError("sum of g_i f_i is not the identity of P");
}

RetractFamily regular_family(const HopfContext& ctx) {
  const Matrix id = Matrix::identity(ctx.h().field(), ctx.h().dim());
  return {ctx.regular, {{id, id}}};
}

RetractFamily direct_sum_family(const HopfContext& ctx, std::size_t copies) {
  const std::size_t n = ctx.h().dim();
  const Field& f = ctx.h().field();
  RetractFamily fam{regular_power(ctx.algebra, copies), {}};
  for (std::size_t i = 0; i < copies; ++i) {
    Matrix proj(f, n, n * copies), incl(f, n * copies, n);
    for (std::size_t k = 0; k < n; ++k) {
      proj(k, i * n + k) = f.one();
      incl(i * n + k, k) = f.one();
    }
    fam.maps.push_back({std::move(proj), std::move(incl)});
  }
  return fam;
}

RetractFamily split_idempotent(const HopfContext& ctx, const Matrix& e, std::size_t copies) {
  const HopfAlgebra& h = ctx.h();
  const Field& f = h.field();
  const std::size_t n = h.dim(), big = n * copies;
  if (e.rows() != big || e.cols() != big) throw RetractError("idempotent has the wrong size");
  if (!(e * e == e)) throw RetractError("e o e != e");
  const ModuleRef whole = regular_power(ctx.algebra, copies);
  for (std::size_t b = 0; b < n; ++b)
    if (!(whole->action(b) * e == e * whole->action(b)))
      throw RetractError("idempotent is not H-linear at " + h.basis_names()[b]);

  const Matrix c = column_space(e);
  const std::size_t r = c.cols();
  Matrix left_inverse(f, r, big);
  if (r > 0) {
    const auto rows = rref(c.transpose()).pivots;
    Matrix square(f, r, r), select(f, r, big);
    for (std::size_t i = 0; i < r; ++i) {
      select(i, rows[i]) = f.one();
      for (std::size_t j = 0; j < r; ++j) square(i, j) = c(rows[i], j);
    }
    left_inverse = invert(square) * select;
  }
  std::vector<Matrix> acts;
  for (std::size_t b = 0; b < n; ++b) acts.push_back(left_inverse * whole->action(b) * c);
  auto P = std::make_shared<const HModule>(HModule::make(ctx.algebra, std::move(acts), "im(e)"));

  RetractFamily fam{P, {}};
  if (r == 0) return fam;
  const Matrix g_full = left_inverse * e;
  for (std::size_t i = 0; i < copies; ++i) fam.maps.push_back({c.block(i * n, 0, n, r), g_full.block(0, i * n, r, n)});
  validate_retract_family(ctx, fam);
  return fam;
}

Matrix right_multiplication(const HopfAlgebra& h, const Vector& e) {
  Matrix r(h.field(), h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!e[i].is_zero()) r += h.right_mult(i).scaled(e[i]);
  return r;
}

std::optional<Vector> find_idempotent(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Vector zero = h.zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = h.basis_element(i);
    if (e != h.unit() && multiply(h, e, e) == e) return e;
  }
  const Field& f = h.field();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector c = h.basis_element(i);
    if (c == h.unit() || !is_grouplike(h, c)) continue;
    Vector sum = h.unit(), power = c;
    std::size_t order = 1;
    while (power != h.unit() && order <= 4 * n) {
      for (std::size_t k = 0; k < n; ++k) sum[k] += power[k];
      power = multiply(h, power, c);
      ++order;
    }
    if (power != h.unit()) continue;
    const Scalar k = f.from_int(static_cast<long>(order));
    if (k.is_zero()) continue;
    for (auto& s : sum) s /= k;
    if (sum != zero && sum != h.unit()) return sum;
  }
  return std::nullopt;
}

std::optional<RetractFamily> idempotent_summand(const HopfContext& ctx) {
  const auto e = find_idempotent(ctx.h());
  if (!e) return std::nullopt;
  RetractFamily fam = split_idempotent(ctx, right_multiplication(ctx.h(), *e), 1);
  auto acts = fam.P->actions();
  fam.P = std::make_shared<const HModule>(HModule::trusted(ctx.algebra, std::move(acts), "He"));
  return fam;
}

Morphism chromatic_retract(const HopfContext& ctx, const Morphism& c_h, const RetractFamily& family,
                           ChromaticSide side) {
  validate_retract_family(ctx, family);
  const Field& f = ctx.h().field();
  const std::size_t n = ctx.h().dim(), p = family.P->dim();
  const Matrix id = Matrix::identity(f, n);
  Morphism out = c_h;
  const ModuleRef& P = family.P;
  switch (side) {
    case ChromaticSide::left:
      out.source = {double_dual(ctx.regular, Side::left), P};
      out.target = {ctx.alpha, ctx.regular, P};
      break;
    case ChromaticSide::right:
      out.source = {P, double_dual(ctx.regular, Side::right)};
      out.target = {P, ctx.regular, ctx.alpha};
      break;
    case ChromaticSide::spherical:
      out.source = {ctx.regular, P};
      out.target = {ctx.regular, P};
      break;
  }
  if (c_h.matrix.rows() != n * n || c_h.matrix.cols() != n * n)
    throw TypeMismatch("chromatic map of H has shape " + std::to_string(c_h.matrix.rows()) + "x" +
                       std::to_string(c_h.matrix.cols()));
  out.matrix = Matrix(f, n * p, n * p);
  for (const auto& [fi, gi] : family.maps) {
    if (side == ChromaticSide::right)
      out.matrix += kron(gi, id) * c_h.matrix * kron(fi, id);
    else
      out.matrix += kron(id, gi) * c_h.matrix * kron(id, fi);
  }
  out.name = c_h.name + "[" + P->label() + "]";
  return out;
}

MorphismExpr chromatic_identity_expr(const HopfContext& ctx, const Morphism& c_p, const ModuleRef& P,
                                     const ModuleRef& X, ChromaticSide side, const std::optional<PivotData>& pivot) {
  using E = MorphismExpr;
  const Field& f = ctx.h().field();
  const ModuleRef& G = ctx.regular;
  auto id = [&](TensorWord w) { return E::identity(f, std::move(w)); };
  auto prim = [](Morphism m) { return E::primitive(std::move(m)); };
  const Evaluations eg = evaluation_morphisms(G);

  switch (side) {
    case ChromaticSide::left: {
      const ModuleRef ldG = dual_module(G, Side::left);
      const Evaluations eld = evaluation_morphisms(ldG);
      return chain({tensor_all({id({X}), prim(eld.coev), id({P})}),
                    E::tensor(id({X, ldG}), prim(c_p)),
                    E::tensor(prim(lambda_transform(ctx, {X, ldG}, Side::left)), id({G, P})),
                    tensor_all({id({X}), prim(eg.ev), id({P})})});
    }
    case ChromaticSide::right: {
      const ModuleRef rdG = dual_module(G, Side::right);
      const Evaluations erd = evaluation_morphisms(rdG);
      return chain({tensor_all({id({P}), prim(erd.coev_tilde), id({X})}),
                    E::tensor(prim(c_p), id({rdG, X})),
                    E::tensor(id({P, G}), prim(lambda_transform(ctx, {rdG, X}, Side::right))),
                    tensor_all({id({P}), prim(eg.ev_tilde), id({X})})});
    }
    case ChromaticSide::spherical: {
      PivotData pv;
      if (pivot) {
        pv = *pivot;
      } else {
        const SphericalVerdict v = is_spherical_hmod(ctx.h(), ctx.integrals);
        if (!v.spherical) throw NotSpherical(ctx.h().name() + " is not spherical");
        pv = *v.pivot;
      }
      const ModuleRef ldG = dual_module(G, Side::left);
      return chain({tensor_all({id({X}), prim(pivotal_coev_tilde(ctx, G, pv)), id({P})}),
                    E::tensor(prim(lambda_endo(ctx, {X, ldG})), prim(c_p)),
                    tensor_all({id({X}), prim(eg.ev), id({P})})});
    }
  }
  throw Error("unknown side");
}

IdentityReport verify_chromatic_identity(const HopfContext& ctx, const Morphism& c_p, const ModuleRef& P,
                                         const ModuleRef& X, ChromaticSide side,
                                         const std::optional<PivotData>& pivot) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.algebra = ctx.h().name();
  report.side = side;
  report.P = P->label();
  report.X = X->label();
  report.h_linear = is_h_linear(ctx.h(), c_p);
  const MorphismExpr expr = chromatic_identity_expr(ctx, c_p, P, X, side, pivot);
  const Matrix lhs = evaluate(expr).matrix;
  const Matrix id = Matrix::identity(ctx.h().field(), lhs.rows());
  report.mismatch = first_difference(lhs, id);
  report.equal = !report.mismatch.has_value();
  if (report.mismatch) {
    report.expected = id(report.mismatch->row, report.mismatch->col).to_string();
    report.actual = lhs(report.mismatch->row, report.mismatch->col).to_string();
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool lambda_sides_agree(const HopfContext& ctx, const ModuleRef& P) {
  return lambda_transform(ctx, {P}, Side::left).matrix == lambda_transform(ctx, {P}, Side::right).matrix;
}

ModuleRef transport_module(const ModuleRef& m, const HopfRef& target) {
  const HopfAlgebra& src = m->algebra();
  if (src.dim() != target->dim() || !(src.field() == target->field()) || src.data().mult != target->data().mult)
    throw ModuleError("cannot transport " + m->label() + " to an algebra with a different multiplication");
  auto acts = m->actions();
  return std::make_shared<const HModule>(HModule::trusted(target, std::move(acts), m->label()));
}

}  // namespace hopfchrom
