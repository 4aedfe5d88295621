#include "hopfchrom/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <tuple>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

namespace detail {

struct FieldData {
  FieldSpec spec;
  std::size_t degree = 1;
  // Monic defining polynomial of Q(zeta_n), low degree first (size degree + 1).
  std::vector<mpq_class> modulus;
};

}  // namespace detail

namespace {

using Poly = std::vector<mpq_class>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Reduces a modulo the monic polynomial `mod`, padding to exactly deg(mod) coefficients.
void reduce_mod(Poly& a, const Poly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (a[k] == 0) continue;
    const mpq_class c = a[k];
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * mod[i];
  }
  a.resize(d, mpq_class(0));
}

// Polynomial long division over Q; divisor must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    const mpq_class c = a[k] / lead;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
  }
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpq_class parse_rational(std::string_view literal) {
  std::string_view s = strip(literal);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("", "malformed rational literal \"" + std::string(literal) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(literal) + "\"");
  if (!s.empty() && s.front() == '-') n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::uint64_t residue_of(const mpq_class& q, std::uint64_t p) {
  auto reduce = [p](const mpz_class& z) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  const std::uint64_t num = reduce(q.get_num());
  const std::uint64_t den = reduce(q.get_den());
  if (den == 0) throw DivisionByZero("denominator divisible by the characteristic");
  return mulmod(num, powmod(den, p - 2, p), p);
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// --- FieldSpec ---------------------------------------------------------------

FieldSpec FieldSpec::parse(std::string_view text) {
  const std::string_view s = strip(text);
  if (s == "Q") return rationals();
  auto number_after = [&](std::string_view prefix) -> std::uint64_t {
    const std::string_view rest = s.substr(prefix.size());
    if (!all_digits(rest) || rest.size() > 18) {
      throw ParseError("field", "bad field spelling \"" + std::string(text) + "\"");
    }
    return std::stoull(std::string(rest));
  };
  if (s.rfind("GF:", 0) == 0) return prime_field(number_after("GF:"));
  if (s.rfind("Cyc:", 0) == 0) return cyclotomic(static_cast<unsigned>(number_after("Cyc:")));
  throw ParseError("field", "unknown field \"" + std::string(text) + "\" (expected Q, GF:p or Cyc:n)");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "GF(" + std::to_string(p) + ")";
    case Kind::cyclotomic:
      return "Q(zeta_" + std::to_string(n) + ")";
  }
  return "?";
}

// --- primes and cyclotomic polynomials -------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw FieldError("cyclotomic conductor must be >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly num(n + 1, mpq_class(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto phi_d = cyclotomic_polynomial(d);
    Poly div(phi_d.begin(), phi_d.end());
    auto [q, r] = divmod(num, div);
    num = q;
  }
  std::vector<mpz_class> out;
  out.reserve(num.size());
  for (const auto& c : num) out.push_back(c.get_num());
  return out;
}

// --- Field -------------------------------------------------------------------

Field Field::make(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::rationals:
      break;
    case FieldSpec::Kind::prime_field:
      if (!is_prime(spec.p)) throw FieldError("GF(" + std::to_string(spec.p) + "): modulus is not prime");
      if (spec.p >= (std::uint64_t{1} << 62)) throw FieldError("prime modulus too large");
      break;
    case FieldSpec::Kind::cyclotomic:
      if (spec.n < 1) throw FieldError("cyclotomic conductor must be >= 1");
      break;
  }
  FieldSpec key = spec;
  if (key.kind != FieldSpec::Kind::prime_field) key.p = 0;
  if (key.kind != FieldSpec::Kind::cyclotomic) key.n = 0;

  static std::mutex mutex;
  static std::map<std::tuple<int, std::uint64_t, unsigned>, std::unique_ptr<detail::FieldData>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{static_cast<int>(key.kind), key.p, key.n}];
  if (!slot) {
    auto data = std::make_unique<detail::FieldData>();
    data->spec = key;
    if (key.kind == FieldSpec::Kind::cyclotomic) {
      const auto phi = cyclotomic_polynomial(key.n);
      data->modulus.assign(phi.begin(), phi.end());
      data->degree = phi.size() - 1;
    }
    slot = std::move(data);
  }
  return Field(slot.get());
}

const FieldSpec& Field::spec() const { return data_->spec; }
std::size_t Field::degree() const { return data_->degree; }
std::uint64_t Field::characteristic() const { return kind() == FieldSpec::Kind::prime_field ? spec().p : 0; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const { return from_rational(mpq_class(value)); }

Scalar Field::from_rational(const mpq_class& value) const {
  switch (kind()) {
    case FieldSpec::Kind::rationals:
      return Scalar(data_, value);
    case FieldSpec::Kind::prime_field:
      return Scalar(data_, residue_of(value, spec().p));
    case FieldSpec::Kind::cyclotomic: {
      Poly c(data_->degree, mpq_class(0));
      c[0] = value;
      return Scalar(data_, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

Scalar Field::parse(std::string_view literal) const {
  const std::string_view s = strip(literal);
  switch (kind()) {
    case FieldSpec::Kind::rationals:
      return from_rational(parse_rational(s));
    case FieldSpec::Kind::prime_field: {
      const mpq_class q = parse_rational(s);
      try {
        return from_rational(q);
      } catch (const DivisionByZero&) {
        throw ParseError("", "denominator vanishes in " + spec().to_string() + ": \"" + std::string(literal) + "\"");
      }
    }
    case FieldSpec::Kind::cyclotomic: {
      if (s.empty() || s.front() != '[') return from_rational(parse_rational(s));
      if (s.back() != ']') throw ParseError("", "unterminated coefficient list \"" + std::string(literal) + "\"");
      Poly coeffs;
      std::string_view inner = s.substr(1, s.size() - 2);
      if (!strip(inner).empty()) {
        while (true) {
          const auto comma = inner.find(',');
          coeffs.push_back(parse_rational(inner.substr(0, comma)));
          if (comma == std::string_view::npos) break;
          inner.remove_prefix(comma + 1);
        }
      }
      reduce_mod(coeffs, data_->modulus);
      return Scalar(data_, std::move(coeffs));
    }
  }
  throw FieldError("unknown field kind");
}

Scalar Field::zeta() const {
  if (kind() != FieldSpec::Kind::cyclotomic) throw FieldError(spec().to_string() + " has no distinguished zeta");
  Poly c{mpq_class(0), mpq_class(1)};
  reduce_mod(c, data_->modulus);
  return Scalar(data_, std::move(c));
}

// --- Scalar ------------------------------------------------------------------

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldError("mixed fields: " + field_->spec.to_string() + " vs " + other.field_->spec.to_string());
  }
}

bool Scalar::is_zero() const {
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      return std::get<mpq_class>(repr_) == 0;
    case FieldSpec::Kind::prime_field:
      return std::get<std::uint64_t>(repr_) == 0;
    case FieldSpec::Kind::cyclotomic: {
      const auto& c = std::get<Poly>(repr_);
      return std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == field().one(); }

Scalar Scalar::operator-() const {
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      return Scalar(field_, mpq_class(-std::get<mpq_class>(repr_)));
    case FieldSpec::Kind::prime_field: {
      const auto r = std::get<std::uint64_t>(repr_);
      return Scalar(field_, r == 0 ? r : field_->spec.p - r);
    }
    case FieldSpec::Kind::cyclotomic: {
      Poly c = std::get<Poly>(repr_);
      for (auto& x : c) x = -x;
      return Scalar(field_, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->spec.to_string());
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      return Scalar(field_, mpq_class(1 / std::get<mpq_class>(repr_)));
    case FieldSpec::Kind::prime_field: {
      const auto p = field_->spec.p;
      return Scalar(field_, powmod(std::get<std::uint64_t>(repr_), p - 2, p));
    }
    case FieldSpec::Kind::cyclotomic: {
      // Extended Euclid against the (irreducible) defining polynomial.
      Poly r0 = field_->modulus;
      Poly r1 = std::get<Poly>(repr_);
      trim(r1);
      Poly s0, s1{mpq_class(1)};
      while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 is a nonzero constant.
      const mpq_class c = r0.at(0);
      for (auto& x : s0) x /= c;
      reduce_mod(s0, field_->modulus);
      return Scalar(field_, std::move(s0));
    }
  }
  throw FieldError("unknown field kind");
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inv() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1 : static_cast<unsigned long>(exponent);
  Scalar result = field().one();
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      std::get<mpq_class>(repr_) += std::get<mpq_class>(other.repr_);
      break;
    case FieldSpec::Kind::prime_field: {
      auto& r = std::get<std::uint64_t>(repr_);
      r += std::get<std::uint64_t>(other.repr_);
      if (r >= field_->spec.p) r -= field_->spec.p;
      break;
    }
    case FieldSpec::Kind::cyclotomic: {
      auto& c = std::get<Poly>(repr_);
      const auto& o = std::get<Poly>(other.repr_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += o[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      std::get<mpq_class>(repr_) *= std::get<mpq_class>(other.repr_);
      break;
    case FieldSpec::Kind::prime_field: {
      auto& r = std::get<std::uint64_t>(repr_);
      r = mulmod(r, std::get<std::uint64_t>(other.repr_), field_->spec.p);
      break;
    }
    case FieldSpec::Kind::cyclotomic: {
      Poly prod = poly_mul(std::get<Poly>(repr_), std::get<Poly>(other.repr_));
      reduce_mod(prod, field_->modulus);
      repr_ = std::move(prod);
      break;
    }
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      std::get<mpq_class>(repr_) += std::get<mpq_class>(a.repr_) * std::get<mpq_class>(b.repr_);
      break;
    case FieldSpec::Kind::prime_field: {
      const auto p = field_->spec.p;
      auto& r = std::get<std::uint64_t>(repr_);
      r = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(std::get<std::uint64_t>(a.repr_)) * std::get<std::uint64_t>(b.repr_) + r) % p);
      break;
    }
    case FieldSpec::Kind::cyclotomic:
      *this += a * b;
      break;
  }
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.repr_ == b.repr_; }

std::string Scalar::to_string() const {
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals:
      return std::get<mpq_class>(repr_).get_str();
    case FieldSpec::Kind::prime_field:
      return std::to_string(std::get<std::uint64_t>(repr_));
    case FieldSpec::Kind::cyclotomic: {
      std::string out = "[";
      const auto& c = std::get<Poly>(repr_);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += c[i].get_str();
      }
      return out + "]";
    }
  }
  return "?";
}

Scalar Scalar::canonical() const {
  switch (field_->spec.kind) {
    case FieldSpec::Kind::rationals: {
      mpq_class q = std::get<mpq_class>(repr_);
      q.canonicalize();
      return Scalar(field_, std::move(q));
    }
    case FieldSpec::Kind::prime_field:
      return Scalar(field_, std::get<std::uint64_t>(repr_) % field_->spec.p);
    case FieldSpec::Kind::cyclotomic: {
      Poly c = std::get<Poly>(repr_);
      for (auto& x : c) x.canonicalize();
      reduce_mod(c, field_->modulus);
      return Scalar(field_, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

std::uint64_t Scalar::residue() const {
  if (field_->spec.kind != FieldSpec::Kind::prime_field) throw FieldError("residue() of a non prime-field scalar");
  return std::get<std::uint64_t>(repr_);
}

const mpq_class& Scalar::rational() const {
  if (field_->spec.kind != FieldSpec::Kind::rationals) throw FieldError("rational() of a non-rational scalar");
  return std::get<mpq_class>(repr_);
}

const std::vector<mpq_class>& Scalar::coefficients() const {
  if (field_->spec.kind != FieldSpec::Kind::cyclotomic) throw FieldError("coefficients() of a non-cyclotomic scalar");
  return std::get<Poly>(repr_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// --- roots of unity ------------------------------------------------------------

namespace {

bool has_exact_order(const Scalar& q, unsigned n) {
  if (!q.pow(n).is_one()) return false;
  for (unsigned t : prime_divisors(n)) {
    if (q.pow(n / t).is_one()) return false;
  }
  return true;
}

}  // namespace

Scalar primitive_root_of_unity(const Field& field, unsigned n) {
  if (n < 1) throw FieldError("root of unity order must be >= 1");
  switch (field.kind()) {
    case FieldSpec::Kind::rationals:
      if (n == 1) return field.one();
      if (n == 2) return -field.one();
      throw FieldError("Q has no primitive root of unity of order " + std::to_string(n));
    case FieldSpec::Kind::prime_field: {
      const auto p = field.spec().p;
      if ((p - 1) % n != 0) {
        throw FieldError(field.spec().to_string() + " has no primitive root of unity of order " +
                         std::to_string(n) + " (n does not divide p-1)");
      }
      for (std::uint64_t r = 1; r < p; ++r) {
        const Scalar q = field.from_int(static_cast<long>(r));
        if (has_exact_order(q, n)) return q;
      }
      throw FieldError("no primitive root found");
    }
    case FieldSpec::Kind::cyclotomic: {
      const unsigned m = field.spec().n;
      if (n == m) return field.zeta();
      // The roots of unity of Q(zeta_m) form a cyclic group of order lcm(m, 2).
      const unsigned order = m % 2 == 0 ? m : 2 * m;
      if (order % n != 0) {
        throw FieldError(field.spec().to_string() + " has no primitive root of unity of order " + std::to_string(n));
      }
      const Scalar generator = m % 2 == 0 ? field.zeta() : -field.zeta();
      return generator.pow(order / n);
    }
  }
  throw FieldError("unknown field kind");
}

}  // namespace hopfchrom
