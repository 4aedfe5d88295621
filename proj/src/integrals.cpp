#include "hopfchrom/integrals.hpp"

#include <algorithm>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

namespace {

Matrix require_one_dimensional(Matrix space, const std::string& what) {
  if (space.cols() != 1) {
    throw CorruptData(what + " space has dimension " + std::to_string(space.cols()) + " (expected 1)");
  }
  return space;
}

// Stack the rows of each block into one tall system.
Matrix stack(const Field& f, std::size_t cols, const std::vector<Matrix>& blocks) {
  Matrix out(f, 0, cols);
  for (const auto& b : blocks) out = out.vstack(b);
  return out;
}

Vector scaled(Vector v, const Scalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

Matrix cointegral_space(const HopfAlgebra& h, Side side) {
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(h.field(), n);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& mult = side == Side::left ? h.left_mult(i) : h.right_mult(i);
    blocks.push_back(mult - id.scaled(h.counit()[i]));
  }
  return require_one_dimensional(nullspace(stack(h.field(), n, blocks)),
                                 side == Side::left ? "left cointegral" : "right cointegral");
}

Matrix integral_space(const HopfAlgebra& h, Side side) {
  const std::size_t n = h.dim();
  // Row (i, k): coefficient of e_k in lambda(leg) other_leg - lambda(e_i) 1.
  Matrix system(h.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) {
        Scalar entry = side == Side::right ? h.comult(i, a, k) : h.comult(i, k, a);
        if (a == i) entry -= h.unit()[k];
        system(i * n + k, a) = entry;
      }
  return require_one_dimensional(nullspace(system), side == Side::right ? "right integral" : "left integral");
}

Matrix character_left_ideal(const HopfAlgebra& h, const DualElement& chi) {
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(h.field(), n);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(h.left_mult(i) - id.scaled(chi.coeffs[i]));
  return nullspace(stack(h.field(), n, blocks));
}

IntegralData normalized_pair(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const Vector cointegral = cointegral_space(h, Side::left).column_vector(0);
  DualElement integral{integral_space(h, Side::right).column_vector(0)};

  const Scalar pairing = integral(cointegral);
  if (pairing.is_zero()) throw CorruptData("lambda(Lambda) = 0");
  integral.coeffs = scaled(integral.coeffs, pairing.inv());

  // alpha_H(h) from Lambda S(h) = alpha_H(h) Lambda, one 1-unknown system per basis element.
  const Matrix lambda_column = Matrix::column(f, cointegral);
  DualElement alpha{zero_vector(f, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Vector rhs = multiply(h, cointegral, antipode_apply(h, h.basis_element(i)));
    try {
      alpha.coeffs[i] = solve(lambda_column, rhs).at(0);
    } catch (const NoSolution&) {
      throw CorruptData("Lambda S(" + h.basis_names()[i] + ") is not a multiple of Lambda");
    }
  }

  // a from lambda(h_(2)) h_(1) = lambda(h) a, rows indexed by (basis h, coordinate k).
  Matrix system(f, n * n, n);
  Vector rhs = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      system(i * n + k, k) = integral.coeffs[i];
      for (std::size_t b = 0; b < n; ++b)
        if (!h.comult(i, k, b).is_zero()) rhs[i * n + k].add_product(h.comult(i, k, b), integral.coeffs[b]);
    }
  Vector distinguished;
  try {
    distinguished = solve(system, rhs);
  } catch (const NoSolution&) {
    throw CorruptData("no distinguished grouplike element solves lambda(h_(2))h_(1) = lambda(h)a");
  }

  IntegralData data{cointegral, std::move(integral), std::move(alpha), std::move(distinguished)};
  verify_integral_data(h, data);
  return data;
}

void verify_integral_data(const HopfAlgebra& h, const IntegralData& d) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  auto fail = [](const std::string& what) { throw CorruptData("integral invariant failed: " + what); };
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = h.basis_element(i);
    const auto& name = h.basis_names()[i];
    if (multiply(h, e, d.cointegral) != scaled(d.cointegral, h.counit()[i])) fail("h Lambda = eps(h) Lambda at " + name);

    const Vector delta = coproduct(h, e);
    Vector right_leg = zero_vector(f, n), left_leg = zero_vector(f, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = delta[a * n + b];
        if (c.is_zero()) continue;
        right_leg[b].add_product(c, d.integral.coeffs[a]);
        left_leg[a].add_product(c, d.integral.coeffs[b]);
      }
    if (right_leg != scaled(h.unit(), d.integral.coeffs[i])) fail("lambda(h_(1))h_(2) = lambda(h)1 at " + name);
    if (left_leg != scaled(d.distinguished, d.integral.coeffs[i])) fail("lambda(h_(2))h_(1) = lambda(h)a at " + name);

    if (multiply(h, d.cointegral, antipode_apply(h, e)) != scaled(d.cointegral, d.alpha.coeffs[i]))
      fail("Lambda S(h) = alpha(h) Lambda at " + name);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = h.basis_element(j);
      if (!(d.alpha(multiply(h, e, ej)) == d.alpha.coeffs[i] * d.alpha.coeffs[j]))
        fail("alpha multiplicative at " + name + ", " + h.basis_names()[j]);
    }
  }
  if (!d.integral(d.cointegral).is_one()) fail("lambda(Lambda) = 1");
  if (!d.alpha(h.unit()).is_one()) fail("alpha(1) = 1");
  if (!is_grouplike(h, d.distinguished)) fail("distinguished element is grouplike");
}

bool is_unimodular(const HopfAlgebra& h, const IntegralData& data) { return data.alpha.coeffs == h.counit(); }

bool is_unimodular(const HopfAlgebra& h) { return is_unimodular(h, normalized_pair(h)); }

Matrix pivot_intertwiner_space(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix system(h.field(), 0, n);
  const Matrix s2 = h.antipode() * h.antipode();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector s2h = s2.column_vector(i);
    Matrix left(h.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (!s2h[j].is_zero()) left += h.left_mult(j).scaled(s2h[j]);
    system = system.vstack(left - h.right_mult(i));
  }
  return nullspace(system);
}

PivotCheck check_pivot(const HopfAlgebra& h, const IntegralData& data, const Vector& g) {
  PivotCheck check;
  const std::size_t n = h.dim();
  if (g.size() != n) return check;
  check.grouplike = is_grouplike(h, g);
  const Matrix s2 = h.antipode() * h.antipode();
  check.intertwines = true;
  for (std::size_t i = 0; i < n && check.intertwines; ++i) {
    if (multiply(h, s2.column_vector(i), g) != multiply(h, g, h.basis_element(i))) check.intertwines = false;
  }
  const Vector g2 = multiply(h, g, g);
  check.balanced = true;
  for (std::size_t i = 0; i < n && check.balanced; ++i) {
    const Vector delta = coproduct(h, h.basis_element(i));
    Vector left_leg = zero_vector(h.field(), n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!delta[a * n + b].is_zero()) left_leg[a].add_product(delta[a * n + b], data.integral.coeffs[b]);
    if (left_leg != scaled(g2, data.integral.coeffs[i])) check.balanced = false;
  }
  return check;
}

namespace {

// Roots in the field of a*s^2 + b*s + c with a != 0. nullopt when they
// cannot be decided (square roots in cyclotomic fields).
std::optional<std::vector<Scalar>> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Field f = a.field();
  std::vector<Scalar> roots;
  auto value = [&](const Scalar& s) { return (a * s + b) * s + c; };
  if (f.is_finite() && f.characteristic() <= 1'000'000) {
    for (std::uint64_t r = 0; r < f.characteristic(); ++r) {
      const Scalar s = f.from_int(static_cast<long>(r));
      if (value(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  const Scalar two = f.from_int(2);
  const Scalar disc = b * b - f.from_int(4) * a * c;
  std::optional<Scalar> root;
  if (disc.is_zero()) {
    root = f.zero();
  } else if (f.kind() == FieldSpec::Kind::rationals) {
    const mpq_class& q = disc.rational();
    if (q > 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
      root = f.from_rational(mpq_class(num, den));
    }
  } else if (f.is_finite()) {
    // Large prime: Euler criterion, then Tonelli-Shanks.
    const std::uint64_t p = f.characteristic();
    if (!disc.pow(static_cast<long>((p - 1) / 2)).is_one()) return roots;
    std::uint64_t q = p - 1;
    long s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Scalar z = f.from_int(2);
    while (z.pow(static_cast<long>((p - 1) / 2)).is_one()) z += f.one();
    Scalar m_c = z.pow(static_cast<long>(q));
    Scalar t = disc.pow(static_cast<long>(q));
    Scalar r = disc.pow(static_cast<long>((q + 1) / 2));
    long m = s;
    while (!t.is_one()) {
      long i = 0;
      Scalar tt = t;
      while (!tt.is_one()) {
        tt *= tt;
        ++i;
      }
      Scalar bb = m_c.pow(1L << (m - i - 1));
      r *= bb;
      m_c = bb * bb;
      t *= m_c;
      m = i;
    }
    root = r;
  } else {
    return std::nullopt;
  }
  if (!root) return roots;
  const Scalar denom = (two * a).inv();
  roots.push_back((-b + *root) * denom);
  if (!root->is_zero()) roots.push_back((-b - *root) * denom);
  return roots;
}

bool less_candidate(const Vector& x, const Vector& y, const Vector& unit) {
  const bool xu = x == unit, yu = y == unit;
  if (xu != yu) return xu;
  auto first_nonzero = [](const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
    return v.size();
  };
  const auto fx = first_nonzero(x), fy = first_nonzero(y);
  if (fx != fy) return fx < fy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto sx = x[i].to_string(), sy = y[i].to_string();
    if (sx != sy) return sx < sy;
  }
  return false;
}

}  // namespace

PivotSearch pivot_candidates(const HopfAlgebra& h, const IntegralData& data, const PivotSearchOptions& options) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const Matrix space = pivot_intertwiner_space(h);
  const std::size_t d = space.cols();

  std::vector<Vector> trials;
  PivotSearch result;
  result.exhaustive = true;

  if (d == 1) {
    const Vector b = space.column_vector(0);
    const Scalar e = counit_apply(h, b);
    if (!e.is_zero()) trials.push_back(scaled(b, e.inv()));
  } else if (d == 2) {
    Vector b1 = space.column_vector(0), b2 = space.column_vector(1);
    Scalar e1 = counit_apply(h, b1), e2 = counit_apply(h, b2);
    if (e2.is_zero()) {
      std::swap(b1, b2);
      std::swap(e1, e2);
    }
    if (!e2.is_zero()) {
      // eps(v) = 1 cuts the plane to the line v(s) = s w + v0.
      Vector w = b1;
      const Scalar ratio = e1 * e2.inv();
      for (std::size_t i = 0; i < n; ++i) w[i] -= ratio * b2[i];
      const Vector v0 = scaled(b2, e2.inv());
      const Vector dw = coproduct(h, w), dv0 = coproduct(h, v0);
      // Delta(v) - v(x)v = A s^2 + B s + C coordinatewise.
      std::optional<std::vector<Scalar>> roots;
      bool quadratic = false, all_zero = true;
      for (std::size_t x = 0; x < n * n && !quadratic; ++x) {
        const std::size_t i = x / n, j = x % n;
        const Scalar a = -(w[i] * w[j]);
        const Scalar b = dw[x] - (w[i] * v0[j] + v0[i] * w[j]);
        const Scalar c = dv0[x] - v0[i] * v0[j];
        if (!a.is_zero()) {
          quadratic = true;
          roots = quadratic_roots(a, b, c);
          if (!roots) result.exhaustive = false;
        } else if (!b.is_zero() || !c.is_zero()) {
          all_zero = false;
        }
      }
      if (!quadratic) {
        // Every coordinate is at most linear in s.
        for (std::size_t x = 0; x < n * n && !roots; ++x) {
          const std::size_t i = x / n, j = x % n;
          const Scalar b = dw[x] - (w[i] * v0[j] + v0[i] * w[j]);
          const Scalar c = dv0[x] - v0[i] * v0[j];
          if (!b.is_zero()) roots = std::vector<Scalar>{-c * b.inv()};
          else if (!c.is_zero()) roots = std::vector<Scalar>{};
        }
        if (all_zero) throw CorruptData("a whole line of grouplike elements");
      }
      if (roots) {
        for (const auto& s : *roots) {
          Vector v = v0;
          for (std::size_t i = 0; i < n; ++i) v[i] += s * w[i];
          trials.push_back(std::move(v));
        }
      }
    }
  } else if (d > 2) {
    result.exhaustive = false;
    trials.push_back(h.unit());
    for (std::size_t i = 0; i < n; ++i) trials.push_back(h.basis_element(i));
    for (const auto& hint : options.hints) trials.push_back(hint);
    if (f.is_finite()) {
      std::size_t total = 1;
      bool small = true;
      for (std::size_t k = 0; k < d && small; ++k) {
        if (total > options.exhaust_limit / f.characteristic()) small = false;
        total *= f.characteristic();
      }
      if (small) {
        std::vector<std::uint64_t> digits(d, 0);
        for (std::size_t count = 0; count < total; ++count) {
          Vector v = zero_vector(f, n);
          for (std::size_t k = 0; k < d; ++k) {
            if (digits[k] == 0) continue;
            const Scalar c = f.from_int(static_cast<long>(digits[k]));
            for (std::size_t i = 0; i < n; ++i) v[i] += c * space(i, k);
          }
          if (counit_apply(h, v).is_one()) trials.push_back(std::move(v));
          for (std::size_t k = 0; k < d; ++k) {
            if (++digits[k] < f.characteristic()) break;
            digits[k] = 0;
          }
        }
        result.exhaustive = true;
      }
    }
  }

  for (const auto& v : trials) {
    if (!check_pivot(h, data, v).ok()) continue;
    const bool seen = std::any_of(result.candidates.begin(), result.candidates.end(),
                                  [&](const PivotData& p) { return p.g == v; });
    if (!seen) result.candidates.push_back(PivotData{v, antipode_apply(h, v)});
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [&](const PivotData& x, const PivotData& y) { return less_candidate(x.g, y.g, h.unit()); });
  return result;
}

SphericalVerdict is_spherical_hmod(const HopfAlgebra& h, const IntegralData& data, const PivotSearchOptions& options) {
  if (!is_unimodular(h, data)) return {};
  const PivotSearch search = pivot_candidates(h, data, options);
  if (!search.candidates.empty()) return {true, search.candidates.front()};
  if (!search.exhaustive) throw PivotSearchInconclusive("pivot search inconclusive for " + h.name());
  return {};
}

}  // namespace hopfchrom
