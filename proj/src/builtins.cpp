#include "hopfchrom/builtins.hpp"

#include <array>
#include <charconv>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

GroupTable GroupTable::make(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> names) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error("empty group table");
  if (names.size() != n) throw Error("group table needs one name per element");
  for (const auto& row : cayley) {
    if (row.size() != n) throw Error("group table is not square");
    for (auto v : row)
      if (v >= n) throw Error("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw Error("group table is not associative at (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error("group table has no identity");
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<std::size_t> inv;
    for (std::size_t b = 0; b < n && !inv; ++b)
      if (cayley[a][b] == *identity && cayley[b][a] == *identity) inv = b;
    if (!inv) throw Error("element " + names[a] + " has no inverse");
    inverse[a] = *inv;
  }
  GroupTable g;
  g.cayley_ = std::move(cayley);
  g.inverse_ = std::move(inverse);
  g.identity_ = *identity;
  g.names_ = std::move(names);
  return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
  }
  return make(std::move(t), std::move(names));
}

GroupTable GroupTable::symmetric3() {
  using Perm = std::array<std::size_t, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm ab{};
      for (std::size_t i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      for (std::size_t c = 0; c < 6; ++c)
        if (perms[c] == ab) t[a][b] = c;
    }
  return make(std::move(t), {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

HopfAlgebra group_algebra(const GroupTable& g, const Field& field, const std::string& name) {
  const std::size_t n = g.order();
  HopfData d = HopfData::zeros(name.empty() ? "k[G" + std::to_string(n) + "]" : name, field, n);
  d.basis_names = g.names();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) d.m(a, b, g.product(a, b)) = field.one();
    d.c(a, a, a) = field.one();
    d.counit[a] = field.one();
    d.antipode(g.inverse(a), a) = field.one();
  }
  d.unit[g.identity()] = field.one();
  return HopfAlgebra::make(std::move(d));
}

HopfAlgebra dual_group_algebra(const GroupTable& g, const Field& field, const std::string& name) {
  const HopfAlgebra kg = group_algebra(g, field);
  HopfData d = dual_hopf(kg).data();
  d.name = name.empty() ? "k[G" + std::to_string(g.order()) + "]*" : name;
  for (std::size_t i = 0; i < d.dim(); ++i) d.basis_names[i] = "d_" + g.names()[i];
  return HopfAlgebra::make(std::move(d));
}

namespace {

std::string taft_name(std::size_t i, std::size_t j) {
  std::string s;
  if (i == 1) s += "g";
  if (i > 1) s += "g^" + std::to_string(i);
  if (j == 1) s += "x";
  if (j > 1) s += "x^" + std::to_string(j);
  return s.empty() ? "1" : s;
}

}  // namespace

HopfAlgebra taft(std::size_t n, const Scalar& q) {
  if (n < 2) throw Error("Taft algebra needs n >= 2");
  const Field field = q.field();
  for (std::size_t k = 1; k < n; ++k)
    if (q.pow(static_cast<long>(k)).is_one()) throw FieldError("q is not a primitive root of unity of order " + std::to_string(n));
  if (!q.pow(static_cast<long>(n)).is_one()) throw FieldError("q^n != 1");

  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  HopfData d = HopfData::zeros("T" + std::to_string(n), field, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.basis_names[idx(i, j)] = taft_name(i, j);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          if (b + e < n) d.m(idx(a, b), idx(c, e), idx((a + c) % n, b + e)) = q.pow(static_cast<long>(b * c));
  d.unit[0] = field.one();
  for (std::size_t a = 0; a < n; ++a) d.counit[idx(a, 0)] = field.one();

  auto mul = [&](const Vector& u, const Vector& v) {
    Vector r = zero_vector(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (v[j].is_zero()) continue;
        const Scalar uv = u[i] * v[j];
        for (std::size_t k = 0; k < dim; ++k)
          if (!d.m(i, j, k).is_zero()) r[k].add_product(uv, d.m(i, j, k));
      }
    }
    return r;
  };
  auto mul2 = [&](const Vector& u, const Vector& v) {
    Vector r = zero_vector(field, dim * dim);
    for (std::size_t i1 = 0; i1 < dim; ++i1)
      for (std::size_t i2 = 0; i2 < dim; ++i2) {
        const Scalar& a = u[i1 * dim + i2];
        if (a.is_zero()) continue;
        for (std::size_t j1 = 0; j1 < dim; ++j1)
          for (std::size_t j2 = 0; j2 < dim; ++j2) {
            const Scalar& b = v[j1 * dim + j2];
            if (b.is_zero()) continue;
            const Scalar ab = a * b;
            for (std::size_t k1 = 0; k1 < dim; ++k1) {
              if (d.m(i1, j1, k1).is_zero()) continue;
              for (std::size_t k2 = 0; k2 < dim; ++k2)
                if (!d.m(i2, j2, k2).is_zero()) r[k1 * dim + k2].add_product(ab, d.m(i1, j1, k1) * d.m(i2, j2, k2));
            }
          }
      }
    return r;
  };

  const std::size_t g = idx(1, 0), x = idx(0, 1), ginv = idx(n - 1, 0);
  Vector dg = zero_vector(field, dim * dim), dx = zero_vector(field, dim * dim);
  dg[g * dim + g] = field.one();
  dx[x * dim + 0] = field.one();
  dx[g * dim + x] = field.one();
  Vector sg = unit_vector(field, dim, ginv);
  Vector sx = mul(unit_vector(field, dim, ginv), unit_vector(field, dim, x));
  for (auto& s : sx) s = -s;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector delta = zero_vector(field, dim * dim);
      delta[0] = field.one();
      Vector anti = unit_vector(field, dim, 0);
      for (std::size_t k = 0; k < a; ++k) {
        delta = mul2(delta, dg);
        anti = mul(sg, anti);
      }
      for (std::size_t k = 0; k < b; ++k) {
        delta = mul2(delta, dx);
        anti = mul(sx, anti);
      }
      const std::size_t e = idx(a, b);
      for (std::size_t i = 0; i < dim; ++i) {
        d.antipode(i, e) = anti[i];
        for (std::size_t j = 0; j < dim; ++j) d.c(e, i, j) = delta[i * dim + j];
      }
    }
  return HopfAlgebra::make(std::move(d));
}

HopfAlgebra taft(std::size_t n, const Field& field) {
  if (n < 2) throw Error("Taft algebra needs n >= 2");
  return taft(n, primitive_root_of_unity(field, static_cast<unsigned>(n)));
}

HopfAlgebra sweedler_h4(const Field& field) {
  if (field.characteristic() == 2) throw FieldError("Sweedler's algebra needs characteristic != 2");
  const HopfData t = taft(2, -field.one()).data();
  // Taft order {1, x, g, gx} -> {1, g, x, gx}
  const std::array<std::size_t, 4> old = {0, 2, 1, 3};
  HopfData d = HopfData::zeros("H4", field, 4);
  d.basis_names = {"1", "g", "x", "gx"};
  for (std::size_t i = 0; i < 4; ++i) {
    d.unit[i] = t.unit[old[i]];
    d.counit[i] = t.counit[old[i]];
    for (std::size_t j = 0; j < 4; ++j) {
      d.antipode(i, j) = t.antipode(old[i], old[j]);
      for (std::size_t k = 0; k < 4; ++k) {
        d.m(i, j, k) = t.mult[(old[i] * 4 + old[j]) * 4 + old[k]];
        d.c(k, i, j) = t.comult[(old[k] * 4 + old[i]) * 4 + old[j]];
      }
    }
  }
  return HopfAlgebra::make(std::move(d));
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& name) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw ParseError("builtin", "bad order in '" + name + "'");
  return v;
}

GroupTable parse_group(const std::string& spec, const std::string& name) {
  if (spec == "S3") return GroupTable::symmetric3();
  if (spec.size() > 1 && spec[0] == 'Z') return GroupTable::cyclic(parse_count(spec.substr(1), name));
  throw ParseError("builtin", "unknown group in '" + name + "' (expected Zn or S3)");
}

}  // namespace

HopfAlgebra builtin(const std::string& name, const Field& field) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (kind == "group" && !arg.empty()) return group_algebra(parse_group(arg, name), field, "k[" + arg + "]");
  if (kind == "dualgroup" && !arg.empty())
    return dual_group_algebra(parse_group(arg, name), field, "k[" + arg + "]*");
  if (kind == "sweedler" && arg.empty()) return sweedler_h4(field);
  if (kind == "taft" && !arg.empty()) return taft(parse_count(arg, name), field);
  throw ParseError("builtin", "unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"group:Zn", "group:S3", "dualgroup:Zn", "dualgroup:S3", "sweedler", "taft:n"};
}

}  // namespace hopfchrom
