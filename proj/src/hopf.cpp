#include "hopfchrom/hopf.hpp"

#include <sstream>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

HopfData HopfData::zeros(std::string name, const Field& field, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return HopfData{std::move(name),
                  field,
                  std::move(names),
                  std::vector<Scalar>(n * n * n, field.zero()),
                  zero_vector(field, n),
                  std::vector<Scalar>(n * n * n, field.zero()),
                  zero_vector(field, n),
                  Matrix(field, n, n)};
}

namespace {

// Dense helpers over raw data, shared by the axiom suite and the public API.
struct Tables {
  const HopfData& d;
  std::size_t n;

  explicit Tables(const HopfData& data) : d(data), n(data.dim()) {}

  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return d.mult[(i * n + j) * n + k]; }
  const Scalar& c(std::size_t k, std::size_t i, std::size_t j) const { return d.comult[(k * n + i) * n + j]; }

  Vector mul(const Vector& a, const Vector& b) const {
    Vector out = zero_vector(d.field, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        const Scalar ab = a[i] * b[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!m(i, j, k).is_zero()) out[k].add_product(ab, m(i, j, k));
      }
    }
    return out;
  }

  Vector delta(const Vector& a) const {
    Vector out = zero_vector(d.field, n * n);
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k].is_zero()) continue;
      for (std::size_t ij = 0; ij < n * n; ++ij) {
        const Scalar& x = d.comult[k * n * n + ij];
        if (!x.is_zero()) out[ij].add_product(a[k], x);
      }
    }
    return out;
  }

  // Apply Delta to leg `leg` of a tensor with `legs` legs.
  Vector delta_leg(const Vector& t, std::size_t legs, std::size_t leg) const {
    std::size_t before = 1, after = 1;
    for (std::size_t s = 0; s < leg; ++s) before *= n;
    for (std::size_t s = leg + 1; s < legs; ++s) after *= n;
    Vector out = zero_vector(d.field, t.size() * n);
    for (std::size_t b = 0; b < before; ++b)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < after; ++a) {
          const Scalar& x = t[(b * n + k) * after + a];
          if (x.is_zero()) continue;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              const Scalar& y = c(k, i, j);
              if (!y.is_zero()) out[((b * n + i) * n + j) * after + a].add_product(x, y);
            }
        }
    return out;
  }

  Scalar eps(const Vector& a) const {
    Scalar s = d.field.zero();
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) s.add_product(a[i], d.counit[i]);
    return s;
  }

  Vector antipode(const Vector& a) const { return d.antipode * a; }

  // Product in H (x) H.
  Vector mul2(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(d.field, n * n);
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t b1 = 0; b1 < n; ++b1) {
        const Scalar& xv = x[a1 * n + b1];
        if (xv.is_zero()) continue;
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            const Scalar& yv = y[a2 * n + b2];
            if (yv.is_zero()) continue;
            const Scalar coeff = xv * yv;
            for (std::size_t a = 0; a < n; ++a) {
              if (m(a1, a2, a).is_zero()) continue;
              const Scalar ca = coeff * m(a1, a2, a);
              for (std::size_t b = 0; b < n; ++b)
                if (!m(b1, b2, b).is_zero()) out[a * n + b].add_product(ca, m(b1, b2, b));
            }
          }
      }
    return out;
  }

  std::string name(std::size_t i) const { return d.basis_names[i]; }
};

std::string index_tuple(std::size_t flat, std::size_t n, std::size_t legs, const HopfData& d) {
  std::vector<std::size_t> idx(legs);
  for (std::size_t s = legs; s-- > 0;) {
    idx[s] = flat % n;
    flat /= n;
  }
  std::string out;
  for (std::size_t s = 0; s < legs; ++s) {
    if (s) out += "(x)";
    out += d.basis_names[idx[s]];
  }
  return out;
}

// Index of the first differing coordinate, or npos.
std::size_t first_diff(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return i;
  return static_cast<std::size_t>(-1);
}
constexpr std::size_t npos = static_cast<std::size_t>(-1);

void check_shape(const HopfData& d) {
  const std::size_t n = d.dim();
  auto fail = [](const std::string& what) { throw AxiomError(axiom::shape, what); };
  if (n == 0) fail("dimension must be positive");
  if (d.mult.size() != n * n * n) fail("multiplication tensor must have n^3 entries");
  if (d.comult.size() != n * n * n) fail("comultiplication tensor must have n^3 entries");
  if (d.unit.size() != n) fail("unit must have n entries");
  if (d.counit.size() != n) fail("counit must have n entries");
  if (d.antipode.rows() != n || d.antipode.cols() != n) fail("antipode must be n x n");
  auto same = [&](const Scalar& s) { return s.field() == d.field; };
  for (const auto& s : d.mult)
    if (!same(s)) fail("multiplication entry in the wrong field");
  for (const auto& s : d.comult)
    if (!same(s)) fail("comultiplication entry in the wrong field");
  for (const auto& s : d.unit)
    if (!same(s)) fail("unit entry in the wrong field");
  for (const auto& s : d.counit)
    if (!same(s)) fail("counit entry in the wrong field");
  if (!(d.antipode.field() == d.field)) fail("antipode over the wrong field");
}

}  // namespace

void verify_hopf_axioms(const HopfData& d) {
  check_shape(d);
  const Tables t(d);
  const std::size_t n = t.n;
  const Field& f = d.field;
  auto e = [&](std::size_t i) { return unit_vector(f, n, i); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = t.mul(e(i), e(j));
      for (std::size_t l = 0; l < n; ++l) {
        const Vector lhs = t.mul(ij, e(l));
        const Vector rhs = t.mul(e(i), t.mul(e(j), e(l)));
        if (auto k = first_diff(lhs, rhs); k != npos) {
          throw AxiomError(axiom::associativity, "(" + t.name(i) + "*" + t.name(j) + ")*" + t.name(l) + " != " +
                                                     t.name(i) + "*(" + t.name(j) + "*" + t.name(l) +
                                                     ") at coefficient of " + t.name(k));
        }
      }
    }

  for (std::size_t i = 0; i < n; ++i) {
    if (auto k = first_diff(t.mul(d.unit, e(i)), e(i)); k != npos)
      throw AxiomError(axiom::unitality, "1*" + t.name(i) + " != " + t.name(i) + " at coefficient of " + t.name(k));
    if (auto k = first_diff(t.mul(e(i), d.unit), e(i)); k != npos)
      throw AxiomError(axiom::unitality, t.name(i) + "*1 != " + t.name(i) + " at coefficient of " + t.name(k));
  }

  for (std::size_t k = 0; k < n; ++k) {
    const Vector dk = t.delta(e(k));
    const Vector left = t.delta_leg(dk, 2, 0);
    const Vector right = t.delta_leg(dk, 2, 1);
    if (auto x = first_diff(left, right); x != npos) {
      throw AxiomError(axiom::coassociativity,
                       "on " + t.name(k) + " at coefficient of " + index_tuple(x, n, 3, d));
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = t.c(k, i, j);
        if (c.is_zero()) continue;
        left[j].add_product(c, d.counit[i]);
        right[i].add_product(c, d.counit[j]);
      }
    if (auto x = first_diff(left, e(k)); x != npos)
      throw AxiomError(axiom::counitality,
                       "(eps (x) id)Delta(" + t.name(k) + ") != " + t.name(k) + " at coefficient of " + t.name(x));
    if (auto x = first_diff(right, e(k)); x != npos)
      throw AxiomError(axiom::counitality,
                       "(id (x) eps)Delta(" + t.name(k) + ") != " + t.name(k) + " at coefficient of " + t.name(x));
  }

  if (!t.eps(d.unit).is_one()) throw AxiomError(axiom::counit_multiplicative, "eps(1) != 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(t.eps(t.mul(e(i), e(j))) == d.counit[i] * d.counit[j]))
        throw AxiomError(axiom::counit_multiplicative,
                         "eps(" + t.name(i) + "*" + t.name(j) + ") != eps(" + t.name(i) + ")eps(" + t.name(j) + ")");

  {
    Vector uu = zero_vector(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) uu[i * n + j] = d.unit[i] * d.unit[j];
    if (auto x = first_diff(t.delta(d.unit), uu); x != npos)
      throw AxiomError(axiom::comult_multiplicative, "Delta(1) != 1(x)1 at coefficient of " + index_tuple(x, n, 2, d));
  }
  {
    std::vector<Vector> deltas;
    for (std::size_t i = 0; i < n; ++i) deltas.push_back(t.delta(e(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector lhs = t.delta(t.mul(e(i), e(j)));
        const Vector rhs = t.mul2(deltas[i], deltas[j]);
        if (auto x = first_diff(lhs, rhs); x != npos)
          throw AxiomError(axiom::comult_multiplicative, "Delta(" + t.name(i) + "*" + t.name(j) + ") != Delta(" +
                                                             t.name(i) + ")Delta(" + t.name(j) +
                                                             ") at coefficient of " + index_tuple(x, n, 2, d));
      }
  }

  for (std::size_t k = 0; k < n; ++k) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = t.c(k, i, j);
        if (c.is_zero()) continue;
        const Vector si = t.antipode(e(i));
        const Vector sj = t.antipode(e(j));
        const Vector l = t.mul(si, e(j));
        const Vector r = t.mul(e(i), sj);
        for (std::size_t x = 0; x < n; ++x) {
          if (!l[x].is_zero()) left[x].add_product(c, l[x]);
          if (!r[x].is_zero()) right[x].add_product(c, r[x]);
        }
      }
    Vector expected = d.unit;
    for (auto& s : expected) s *= d.counit[k];
    if (auto x = first_diff(left, expected); x != npos)
      throw AxiomError(axiom::antipode, "S(" + t.name(k) + "_(1))" + t.name(k) + "_(2) != eps(" + t.name(k) +
                                            ")1 at coefficient of " + t.name(x));
    if (auto x = first_diff(right, expected); x != npos)
      throw AxiomError(axiom::antipode, t.name(k) + "_(1)S(" + t.name(k) + "_(2)) != eps(" + t.name(k) +
                                            ")1 at coefficient of " + t.name(x));
  }

  try {
    (void)invert(d.antipode);
  } catch (const SingularMatrix&) {
    throw AxiomError(axiom::antipode_invertible, "antipode matrix is singular");
  }
}

// --- HopfAlgebra -----------------------------------------------------------------

HopfAlgebra HopfAlgebra::make(HopfData data) {
  verify_hopf_axioms(data);
  return HopfAlgebra(std::move(data));
}

HopfAlgebra::HopfAlgebra(HopfData data)
    : data_(std::move(data)), antipode_inverse_(invert(data_.antipode)) {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(field(), n, n), r(field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        l(k, j) = mult(i, j, k);
        r(k, j) = mult(j, i, k);
      }
    left_mult_.push_back(std::move(l));
    right_mult_.push_back(std::move(r));
  }
}

std::string HopfAlgebra::format(const Vector& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i].is_one()) {
      os << basis_names()[i];
    } else {
      os << "(" << a[i] << ")" << basis_names()[i];
    }
  }
  return first ? "0" : os.str();
}

Scalar DualElement::operator()(const Vector& h) const {
  if (h.size() != coeffs.size()) throw DimensionMismatch("dual pairing: length mismatch");
  Scalar s = coeffs.empty() ? Field::rationals().zero() : coeffs[0].field().zero();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero() && !coeffs[i].is_zero()) s.add_product(coeffs[i], h[i]);
  return s;
}

Vector multiply(const HopfAlgebra& h, const Vector& a, const Vector& b) {
  if (a.size() != h.dim() || b.size() != h.dim()) throw DimensionMismatch("multiply: vector length");
  return Tables(h.data()).mul(a, b);
}

Scalar counit_apply(const HopfAlgebra& h, const Vector& a) { return Tables(h.data()).eps(a); }

Vector antipode_apply(const HopfAlgebra& h, const Vector& a) { return h.antipode() * a; }

Vector antipode_inverse_apply(const HopfAlgebra& h, const Vector& a) { return h.antipode_inverse() * a; }

const Matrix& antipode_inverse(const HopfAlgebra& h) { return h.antipode_inverse(); }

Vector coproduct(const HopfAlgebra& h, const Vector& a) {
  if (a.size() != h.dim()) throw DimensionMismatch("coproduct: vector length");
  return Tables(h.data()).delta(a);
}

Vector coproduct_iter_legs(const HopfAlgebra& h, const std::vector<std::size_t>& legs, const Vector& a) {
  if (a.size() != h.dim()) throw DimensionMismatch("coproduct_iter: vector length");
  const Tables t(h.data());
  Vector v = a;
  for (std::size_t s = 0; s < legs.size(); ++s) {
    if (legs[s] > s) throw DimensionMismatch("coproduct_iter: leg index out of range");
    v = t.delta_leg(v, s + 1, legs[s]);
  }
  return v;
}

Vector coproduct_iter(const HopfAlgebra& h, std::size_t k, const Vector& a) {
  return coproduct_iter_legs(h, std::vector<std::size_t>(k, 0), a);
}

Matrix coproduct_iter_matrix(const HopfAlgebra& h, std::size_t k) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < h.dim(); ++i) cols.push_back(coproduct_iter(h, k, h.basis_element(i)));
  std::size_t rows = 1;
  for (std::size_t s = 0; s <= k; ++s) rows *= h.dim();
  return Matrix::from_columns(h.field(), rows, cols);
}

bool is_grouplike(const HopfAlgebra& h, const Vector& a) {
  if (a.size() != h.dim()) return false;
  if (!counit_apply(h, a).is_one()) return false;
  const std::size_t n = h.dim();
  const Vector d = coproduct(h, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(d[i * n + j] == a[i] * a[j])) return false;
  return true;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  HopfData d = HopfData::zeros("dual(" + h.name() + ")", h.field(), n);
  for (std::size_t i = 0; i < n; ++i) d.basis_names[i] = h.basis_names()[i] + "*";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.m(i, j, k) = h.comult(k, i, j);
        d.c(k, i, j) = h.mult(i, j, k);
      }
  d.unit = h.counit();
  d.counit = h.unit();
  d.antipode = h.antipode().transpose();
  return HopfAlgebra::make(std::move(d));
}

HopfAlgebra cop(const HopfAlgebra& h) {
  HopfData d = h.data();
  d.name = "cop(" + h.name() + ")";
  const std::size_t n = h.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.c(k, i, j) = h.comult(k, j, i);
  d.antipode = h.antipode_inverse();
  return HopfAlgebra::make(std::move(d));
}

HopfAlgebra op(const HopfAlgebra& h) {
  HopfData d = h.data();
  d.name = "op(" + h.name() + ")";
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.m(i, j, k) = h.mult(j, i, k);
  d.antipode = h.antipode_inverse();
  return HopfAlgebra::make(std::move(d));
}

}  // namespace hopfchrom
