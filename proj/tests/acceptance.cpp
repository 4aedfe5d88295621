// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "hopfchrom/chromatic.hpp"
#include "hopfchrom/errors.hpp"
#include "hopfchrom/integrals.hpp"
#include "oracles.hpp"

using namespace hopfchrom;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) {
    o.ok = false;
    o.detail << "took " << secs << " s, limit " << limit_s << " s; ";
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << std::fixed
            << std::setprecision(2) << secs << " s] " << o.detail.str() << std::endl;
}

const corpus::Entry& entry(const std::string& label) {
  for (const auto& e : corpus::all())
    if (e.label == label) return e;
  throw std::runtime_error("no corpus entry " + label);
}

HopfData mutate(const HopfData& d, std::size_t pick) {
  HopfData m = d;
  const std::size_t n = d.dim(), n3 = n * n * n;
  const Scalar one = d.field.one();
  pick %= 2 * n3 + 2 * n + n * n;
  if (pick < n3)
    m.mult[pick] += one;
  else if ((pick -= n3) < n3)
    m.comult[pick] += one;
  else if ((pick -= n3) < n)
    m.unit[pick] += one;
  else if ((pick -= n) < n)
    m.counit[pick] += one;
  else {
    pick -= n;
    m.antipode(pick / n, pick % n) += one;
  }
  return m;
}

std::vector<RetractFamily> projectives(const HopfContext& ctx) {
  std::vector<RetractFamily> out{regular_family(ctx)};
  if (auto s = idempotent_summand(ctx)) out.push_back(std::move(*s));
  return out;
}

std::vector<ModuleRef> objects(const HopfContext& ctx) { return {ctx.trivial, ctx.regular, ctx.alpha}; }

oracle::Vec as_vec(const Vector& v) { return oracle::Vec(v.begin(), v.end()); }

/// Oracle: is v a left cointegral, h v = eps(h) v for every basis h?
bool oracle_left_cointegral(const oracle::Algebra& A, const Vector& v) {
  for (std::size_t i = 0; i < A.n; ++i) {
    oracle::Vec expect = as_vec(v);
    for (auto& s : expect) s *= A.d.counit[i];
    if (A.mul(A.e(i), as_vec(v)) != expect) return false;
  }
  return true;
}

bool oracle_right_cointegral(const oracle::Algebra& A, const Vector& v) {
  for (std::size_t i = 0; i < A.n; ++i) {
    oracle::Vec expect = as_vec(v);
    for (auto& s : expect) s *= A.d.counit[i];
    if (A.mul(as_vec(v), A.e(i)) != expect) return false;
  }
  return true;
}

/// Oracle: lambda(h1) h2 = lambda(h) 1 for every basis h.
bool oracle_right_integral(const oracle::Algebra& A, const Vector& lambda) {
  for (std::size_t h = 0; h < A.n; ++h) {
    oracle::Vec lhs = oracle::zeros(A.f, A.n);
    for (std::size_t a = 0; a < A.n; ++a)
      for (std::size_t b = 0; b < A.n; ++b) lhs[b] += A.c(h, a, b) * lambda[a];
    oracle::Vec rhs = A.one();
    for (auto& s : rhs) s *= lambda[h];
    if (lhs != rhs) return false;
  }
  return true;
}

std::size_t oracle_span_rank(const std::vector<Vector>& vs) {
  oracle::Rows rows;
  for (const auto& v : vs) rows.push_back(as_vec(v));
  return oracle::rank(rows);
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column_vector(j));
  return out;
}

bool same_span(const Matrix& a, const Matrix& b) {
  auto all = columns(a);
  const auto cb = columns(b);
  const std::size_t ra = oracle_span_rank(all), rb = oracle_span_rank(cb);
  all.insert(all.end(), cb.begin(), cb.end());
  return ra == rb && oracle_span_rank(all) == ra;
}

}  // namespace

int main() {
  const auto& corpus = corpus::all();

  criterion(1, "Hopf axiom suite and named single-entry mutations", 5, [&](Outcome& o) {
    std::mt19937 rng(11);
    std::size_t mutations = 0;
    for (const auto& e : corpus) {
      const HopfData& d = e.algebra->data();
      bool passes = true;
      try {
        verify_hopf_axioms(d);
      } catch (const AxiomError&) {
        passes = false;
      }
      o.require(passes && !oracle::first_violation(d), e.label + " fails the axioms");
      for (int t = 0; t < 10; ++t) {
        const HopfData m = mutate(d, rng());
        const auto expected = oracle::first_violation(m);
        std::string named;
        try {
          verify_hopf_axioms(m);
        } catch (const AxiomError& err) {
          named = err.axiom();
        }
        o.require(expected && named == *expected, e.label + " mutation " + std::to_string(t) + " named '" + named + "'");
        ++mutations;
      }
    }
    o.detail << corpus.size() << " algebras, " << mutations << " mutations";
  });

  criterion(2, "integral and cointegral spaces are one-dimensional; lambda(Lambda) = 1", 2, [&](Outcome& o) {
    for (const auto& e : corpus) {
      const HopfData& d = e.algebra->data();
      o.require(oracle::left_cointegral_dim(d) == 1 && oracle::right_cointegral_dim(d) == 1, e.label + " cointegrals");
      o.require(oracle::integral_dim(d, true) == 1 && oracle::integral_dim(d, false) == 1, e.label + " integrals");
      const HopfAlgebra& h = *e.algebra;
      o.require(cointegral_space(h, Side::left).cols() == 1 && cointegral_space(h, Side::right).cols() == 1 &&
                    integral_space(h, Side::left).cols() == 1 && integral_space(h, Side::right).cols() == 1,
                e.label + " library spaces");
      const IntegralData n = normalized_pair(h);
      const oracle::Algebra A(d);
      o.require(oracle_left_cointegral(A, n.cointegral) && oracle_right_integral(A, n.integral.coeffs),
                e.label + " normalized pair");
      o.require(n.integral(n.cointegral).is_one(), e.label + " lambda(Lambda)");
    }
    o.detail << corpus.size() << " algebras";
  });

  criterion(3, "Sweedler H4 ground truth", 1, [&](Outcome& o) {
    const HopfAlgebra& h = *entry("H4").algebra;
    const Field& f = h.field();
    const oracle::Algebra A(h.data());
    const IntegralData d = normalized_pair(h);
    const Vector x_plus_gx{f.zero(), f.zero(), f.one(), f.one()};
    o.require(oracle_left_cointegral(A, x_plus_gx) && oracle::left_cointegral_dim(h.data()) == 1, "x + gx cointegral");
    o.require(oracle_span_rank({d.cointegral, x_plus_gx}) == 1, "Lambda in span(x + gx)");
    const Vector x_star{f.zero(), f.zero(), f.one(), f.zero()};
    o.require(oracle_right_integral(A, x_star), "x* is a right integral");
    o.require(d.integral.coeffs == x_star, "lambda = x*");
    // Lambda S(g) = alpha(g) Lambda
    const oracle::Vec lsg = A.mul(as_vec(d.cointegral), A.S(A.e(1)));
    oracle::Vec minus = as_vec(d.cointegral);
    for (auto& s : minus) s = -s;
    o.require(lsg == minus && d.alpha.coeffs[1] == -f.one(), "alpha(g) = -1");
    // lambda(h2) h1 = lambda(h) a with a = g
    bool a_is_g = d.distinguished == h.basis_element(1);
    for (std::size_t i = 0; i < 4; ++i) {
      oracle::Vec lhs = oracle::zeros(f, 4);
      for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) lhs[p] += A.c(i, p, q) * x_star[q];
      oracle::Vec rhs = A.e(1);
      for (auto& s : rhs) s *= x_star[i];
      a_is_g = a_is_g && lhs == rhs;
    }
    o.require(a_is_g, "distinguished a = g");
    o.require(!is_unimodular(h, d), "not unimodular");
    o.require(!is_spherical_hmod(h, d).spherical, "not spherical");
    o.detail << "Lambda = " << h.format(d.cointegral) << ", lambda = x*, alpha(g) = -1, a = g";
  });

  criterion(4, "left, right and spherical chromatic identities", 60, [&](Outcome& o) {
    std::size_t checked = 0;
    double largest_ms = 0;
    for (const auto& e : corpus) {
      const HopfContext ctx = HopfContext::make(e.algebra);
      o.require(idempotent_summand(ctx).has_value(), e.label + " has no idempotent summand");
      for (const ChromaticSide side : {ChromaticSide::left, ChromaticSide::right}) {
        const Morphism c = chromatic_hopf(ctx, side);
        for (const RetractFamily& fam : projectives(ctx)) {
          const Morphism cp = chromatic_retract(ctx, c, fam, side);
          for (const ModuleRef& X : objects(ctx)) {
            const IdentityReport r = verify_chromatic_identity(ctx, cp, fam.P, X, side);
            o.require(r.holds(), e.label + " " + to_string(side) + " P=" + fam.P->label() + " X=" + X->label());
            if (e.label == "T3" && X == ctx.regular) largest_ms = std::max(largest_ms, r.millis);
            ++checked;
          }
        }
      }
    }
    for (const char* label : {"kZ2", "kZ3", "kS3"}) {
      const HopfContext ctx = HopfContext::make(entry(label).algebra);
      const SphericalVerdict v = is_spherical_hmod(ctx.h(), ctx.integrals);
      o.require(v.spherical && v.pivot.has_value(), std::string(label) + " spherical verdict");
      if (!v.pivot) continue;
      const Morphism c = chromatic_spherical(ctx, *v.pivot);
      for (const RetractFamily& fam : projectives(ctx)) {
        const Morphism cp = chromatic_retract(ctx, c, fam, ChromaticSide::spherical);
        for (const ModuleRef& X : objects(ctx)) {
          o.require(verify_chromatic_identity(ctx, cp, fam.P, X, ChromaticSide::spherical, v.pivot).holds(),
                    std::string(label) + " spherical P=" + fam.P->label() + " X=" + X->label());
          ++checked;
        }
      }
      if (std::string(label) == "kZ2") {
        const auto expect = oracle::diagonal_copy_matrix(ctx.h().field(), 2);
        bool same = true;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) same = same && c.matrix(i, j) == expect[i][j];
        o.require(same, "k[Z2] spherical map is not delta_ab b (x) b");
      }
    }
    o.detail << checked << " identities; largest T3 instance " << std::fixed << std::setprecision(0) << largest_ms
             << " ms";
  });

  criterion(5, "Lambda^l = Lambda^r on unimodular pivotal algebras", 2, [&](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& e : corpus) {
      const HopfContext ctx = HopfContext::make(e.algebra);
      if (!is_unimodular(ctx.h(), ctx.integrals)) continue;
      if (pivot_candidates(ctx.h(), ctx.integrals).candidates.empty()) continue;
      for (const RetractFamily& fam : projectives(ctx)) {
        o.require(lambda_sides_agree(ctx, fam.P), e.label + " P=" + fam.P->label());
        ++checked;
      }
    }
    o.require(checked >= 8, "fewer unimodular pivotal algebras than expected");
    o.detail << checked << " projectives";
  });

  criterion(6, "integral identity suite", 5, [&](Outcome& o) {
    for (const auto& e : corpus) {
      const HopfAlgebra& h = *e.algebra;
      const oracle::Algebra A(h.data());
      const IntegralData d = normalized_pair(h);
      const std::size_t n = h.dim();
      auto lambda = [&](const oracle::Vec& v) {
        Scalar s = h.field().zero();
        for (std::size_t i = 0; i < n; ++i) s += d.integral.coeffs[i] * v[i];
        return s;
      };
      auto alpha = [&](const oracle::Vec& v) {
        Scalar s = h.field().zero();
        for (std::size_t i = 0; i < n; ++i) s += d.alpha.coeffs[i] * v[i];
        return s;
      };
      // lambda(ab) = alpha(S(b1)) lambda(S^2(b2) a)
      bool radford = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const oracle::Vec db = A.delta(A.e(j));
          Scalar rhs = h.field().zero();
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
              if (!db[p * n + q].is_zero())
                rhs += db[p * n + q] * alpha(A.S(A.e(p))) * lambda(A.mul(A.S(A.S(A.e(q))), A.e(i)));
          radford = radford && lambda(A.mul(A.e(i), A.e(j))) == rhs;
        }
      o.require(radford, e.label + " lambda(ab) formula");
      const oracle::Vec dl = A.delta(as_vec(d.cointegral));
      oracle::Vec r = oracle::zeros(h.field(), n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) r[q] += lambda(A.e(p)) * dl[p * n + q];
      o.require(r == A.one(), e.label + " lambda(Lambda1) Lambda2 = 1");
      o.require(oracle_right_cointegral(A, antipode_inverse_apply(h, d.cointegral)), e.label + " S^-1(Lambda)");
      // {v : v h = eps(h) v} and {x : h x = alpha(h) x}
      o.require(same_span(cointegral_space(h, Side::right), character_left_ideal(h, d.alpha)) &&
                    oracle_right_cointegral(A, cointegral_space(h, Side::right).column_vector(0)),
                e.label + " right cointegral characterizations");
    }
    o.detail << corpus.size() << " algebras, all basis pairs";
  });

  criterion(7, "cop dictionary", 30, [&](Outcome& o) {
    std::size_t compared = 0;
    for (const auto& e : corpus) {
      const HopfAlgebra& h = *e.algebra;
      const HopfContext ctx = HopfContext::make(e.algebra);
      const HopfContext cc = HopfContext::make(cop(h));
      const IntegralData& d = ctx.integrals;
      const IntegralData& dc = cc.integrals;
      o.require(dc.cointegral == d.cointegral, e.label + " Lambda^cop = Lambda");
      Vector lambda_s = h.zero();
      for (std::size_t i = 0; i < h.dim(); ++i) lambda_s[i] = d.integral(antipode_apply(h, h.basis_element(i)));
      const oracle::Algebra Ac(cc.h().data());
      o.require(oracle_right_integral(Ac, lambda_s) && oracle::integral_dim(cc.h().data(), true) == 1,
                e.label + " lambda o S spans the right integrals of cop(H)");
      o.require(dc.alpha == d.alpha, e.label + " alpha^cop = alpha");

      const std::size_t n = h.dim();
      const Morphism cl_cop = chromatic_left_hopf(cc);
      Morphism cr = chromatic_right_hopf_direct(ctx);
      o.require(cr.matrix == reverse_factors(cl_cop.matrix, {n, n}, {1, n, n}), e.label + " c^r vs c^l of cop");
      Morphism bad_cop = cl_cop;
      bad_cop.matrix(0, 0) += h.field().one();
      Morphism bad = cr;
      bad.matrix = reverse_factors(bad_cop.matrix, {n, n}, {1, n, n});
      const std::vector<RetractFamily> fams = projectives(ctx), fams_cop = projectives(cc);
      o.require(fams.size() == fams_cop.size(), e.label + " summands differ");
      for (std::size_t k = 0; k < std::min(fams.size(), fams_cop.size()); ++k)
        for (const auto& [left, right] : std::vector<std::pair<Morphism, Morphism>>{{cl_cop, cr}, {bad_cop, bad}}) {
          const Morphism rp = chromatic_retract(ctx, right, fams[k], ChromaticSide::right);
          const Morphism lp = chromatic_retract(cc, left, fams_cop[k], ChromaticSide::left);
          for (const ModuleRef& X : objects(ctx)) {
            const ModuleRef Xc = transport_module(X, cc.algebra);
            const IdentityReport rr = verify_chromatic_identity(ctx, rp, fams[k].P, X, ChromaticSide::right);
            const IdentityReport lr = verify_chromatic_identity(cc, lp, fams_cop[k].P, Xc, ChromaticSide::left);
            const Matrix rm = evaluate(chromatic_identity_expr(ctx, rp, fams[k].P, X, ChromaticSide::right)).matrix;
            const Matrix lm = evaluate(chromatic_identity_expr(cc, lp, fams_cop[k].P, Xc, ChromaticSide::left)).matrix;
            const std::size_t dx = X->dim(), dp = fams[k].P->dim();
            o.require(rr.holds() == lr.holds() && rm == reverse_factors(lm, {dx, dp}, {dx, dp}),
                      e.label + " P=" + fams[k].P->label() + " X=" + X->label());
            ++compared;
          }
        }
    }
    o.detail << compared << " right/left verification pairs";
  });

  criterion(8, "negative controls", 5, [&](Outcome& o) {
    std::size_t perturbations = 0;
    std::ostringstream survivors;
    for (const auto& e : corpus) {
      const HopfContext ctx = HopfContext::make(e.algebra);
      std::vector<ChromaticSide> sides{ChromaticSide::left, ChromaticSide::right};
      std::optional<PivotData> pivot;
      if (is_unimodular(ctx.h(), ctx.integrals)) {
        const auto v = is_spherical_hmod(ctx.h(), ctx.integrals);
        if (v.pivot) {
          pivot = v.pivot;
          sides.push_back(ChromaticSide::spherical);
        }
      }
      for (const ChromaticSide side : sides) {
        const Morphism c = side == ChromaticSide::spherical ? chromatic_spherical(ctx, *pivot) : chromatic_hopf(ctx, side);
        std::size_t alive = 0;
        for (std::size_t i = 0; i < c.matrix.rows(); ++i)
          for (std::size_t j = 0; j < c.matrix.cols(); ++j) {
            Morphism p = c;
            p.matrix(i, j) += ctx.h().field().one();
            bool rejected = false;
            for (const ModuleRef& X : objects(ctx)) {
              if (verify_chromatic_identity(ctx, p, ctx.regular, X, side, pivot).holds()) continue;
              rejected = true;
              break;
            }
            alive += !rejected;
            ++perturbations;
          }
        if (alive) survivors << (survivors.str().empty() ? "" : ", ") << e.label << " " << to_string(side) << " " << alive;
      }
    }
    o.require(survivors.str().empty(), "perturbations still satisfying the identity and H-linearity: " + survivors.str());

    // pivot candidates violating exactly one condition
    struct Case {
      const char* label;
      Vector g;
      int broken;  // 0 grouplike, 1 intertwines, 2 balanced
    };
    const HopfAlgebra& z2 = *entry("kZ2").algebra;
    Vector minus_e = z2.zero();
    minus_e[0] = -z2.field().one();
    const std::vector<Case> cases{{"kZ2", minus_e, 0},
                                  {"kS3", entry("kS3").algebra->basis_element(1), 1},
                                  {"kZ3", entry("kZ3").algebra->basis_element(1), 2},
                                  {"T3", entry("T3").algebra->basis_element(6), 2},
                                  {"T3", entry("T3").algebra->basis_element(3), 1}};
    for (const Case& k : cases) {
      const HopfAlgebra& h = *entry(k.label).algebra;
      const IntegralData d = normalized_pair(h);
      const PivotCheck pc = check_pivot(h, d, k.g);
      const bool flags[3] = {pc.grouplike, pc.intertwines, pc.balanced};
      bool exactly_one = true;
      for (int t = 0; t < 3; ++t) exactly_one = exactly_one && flags[t] == (t != k.broken);
      o.require(exactly_one && !pc.ok(), std::string(k.label) + " candidate " + h.format(k.g));
      for (const PivotData& p : pivot_candidates(h, d).candidates)
        o.require(!(p.g == k.g), std::string(k.label) + " search returned " + h.format(k.g));
    }
    o.detail << perturbations << " perturbations, " << cases.size() << " pivot candidates; ";
  });

  criterion(9, "naturality of Lambda^l and Lambda^r", 5, [&](Outcome& o) {
    std::size_t maps = 0;
    for (const auto& e : corpus) {
      const HopfContext ctx = HopfContext::make(e.algebra);
      const HopfAlgebra& h = ctx.h();
      const Matrix l = lambda_transform(ctx, {ctx.regular}, Side::left).matrix;
      const Matrix r = lambda_transform(ctx, {ctx.regular}, Side::right).matrix;
      std::vector<Matrix> basis = hom_space(*ctx.regular, *ctx.regular);
      o.require(basis.size() == h.dim(), e.label + " End_H(H) dimension");
      // right multiplications by basis elements span End_H(H) as well
      for (std::size_t i = 0; i < h.dim(); ++i) basis.push_back(h.right_mult(i));
      for (const Matrix& f : basis) {
        o.require(l * f == f * l, e.label + " Lambda^l");
        o.require(r * f == f * r, e.label + " Lambda^r");
        ++maps;
      }
    }
    o.detail << maps << " endomorphisms";
  });

  return failures == 0 ? 0 : 1;
}
