#pragma once

// Exact scalar arithmetic over Q, GF(p) and cyclotomic fields Q(zeta_n).
//
// A Field is a cheap handle onto an interned, immutable field context; two
// handles compare equal iff they describe the same field. Scalars carry their
// field handle and are always kept in canonical form, so equality of scalars
// is equality of representations.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hopfchrom {

struct FieldSpec {
  enum class Kind { rationals, prime_field, cyclotomic };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;  // prime_field only
  unsigned n = 0;       // cyclotomic only

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p) { return {Kind::prime_field, p, 0}; }
  static FieldSpec cyclotomic(unsigned n) { return {Kind::cyclotomic, 0, n}; }

  /// Parses the command-line spelling: "Q", "GF:p" or "Cyc:n".
  static FieldSpec parse(std::string_view text);

  /// "Q", "GF(p)" or "Q(zeta_n)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Scalar;

namespace detail {
struct FieldData;
}

class Field {
 public:
  /// Validates the spec (p prime, n >= 1) and returns the interned field.
  static Field make(const FieldSpec& spec);
  static Field rationals() { return make(FieldSpec::rationals()); }

  const FieldSpec& spec() const;
  FieldSpec::Kind kind() const { return spec().kind; }

  /// Degree over the prime field's fraction field: phi(n) for Q(zeta_n), 1 otherwise.
  std::size_t degree() const;
  /// Characteristic: p for GF(p), 0 otherwise.
  std::uint64_t characteristic() const;
  bool is_finite() const { return kind() == FieldSpec::Kind::prime_field; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  /// Parses a scalar literal: "a/b" or "a" over Q, a decimal residue over
  /// GF(p), "[c0,c1,...]" (or a plain rational) over Q(zeta_n).
  Scalar parse(std::string_view literal) const;

  /// The generator zeta_n of Q(zeta_n). Throws FieldError for other kinds.
  Scalar zeta() const;

  const detail::FieldData* data() const { return data_; }

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;

  friend class Scalar;
};

class Scalar {
 public:
  Field field() const { return Field(field_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other) { return *this *= other.inv(); }

  /// this += a * b, without a temporary for the product where possible.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality. Scalars of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical serialized form (see Field::parse).
  std::string to_string() const;

  /// Re-normalizes the representation; a no-op on values produced by this API.
  Scalar canonical() const;

  /// Residue in [0, p) for GF(p) scalars.
  std::uint64_t residue() const;
  /// Value of a rational scalar.
  const mpq_class& rational() const;
  /// Coefficients c0..c_{phi(n)-1} of a cyclotomic scalar.
  const std::vector<mpq_class>& coefficients() const;

 private:
  using Repr = std::variant<std::uint64_t, mpq_class, std::vector<mpq_class>>;
  Scalar(const detail::FieldData* field, Repr repr) : field_(field), repr_(std::move(repr)) {}

  void require_same_field(const Scalar& other) const;

  const detail::FieldData* field_;
  Repr repr_;

  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A primitive n-th root of unity: the smallest such residue in GF(p), -1 in Q
/// for n = 2, and zeta_n (or the appropriate power of it) in Q(zeta_m).
/// Throws FieldError when the field has none.
Scalar primitive_root_of_unity(const Field& field, unsigned n);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

}  // namespace hopfchrom
