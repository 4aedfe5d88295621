#include <random>

#include <gtest/gtest.h>

#include "hopfchrom/errors.hpp"
#include "hopfchrom/field.hpp"

using namespace hopfchrom;

namespace {

Field gf(std::uint64_t p) { return Field::make(FieldSpec::prime_field(p)); }
Field cyc(unsigned n) { return Field::make(FieldSpec::cyclotomic(n)); }

std::vector<Field> sample_fields() { return {Field::rationals(), gf(7), gf(101), cyc(3), cyc(4), cyc(5)}; }

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Scalar s = f.from_int(num(rng)) / f.from_int(f.is_finite() ? 1 : den(rng));
  if (f.kind() == FieldSpec::Kind::cyclotomic) {
    Scalar z = f.zeta();
    for (int k = 1; k < 3; ++k) s += f.from_int(num(rng)) * z.pow(k);
  }
  return s;
}

}  // namespace

TEST(FieldMake, RationalsHaveDistinctZeroAndOne) {
  const Field q = Field::rationals();
  EXPECT_FALSE(q.zero() == q.one());
  EXPECT_EQ(q.characteristic(), 0u);
}

TEST(FieldMake, PrimeFieldOfOrderSeven) {
  const Field f = gf(7);
  EXPECT_EQ(f.characteristic(), 7u);
  EXPECT_TRUE(f.from_int(7).is_zero());
  EXPECT_EQ(f.from_int(-1).residue(), 6u);
}

TEST(FieldMake, RejectsInvalidSpecs) {
  EXPECT_THROW(gf(6), FieldError);
  EXPECT_THROW(gf(1), FieldError);
  EXPECT_THROW(cyc(0), FieldError);
}

TEST(FieldMake, InternsEqualSpecs) {
  EXPECT_TRUE(gf(7) == gf(7));
  EXPECT_FALSE(gf(7) == gf(11));
  EXPECT_TRUE(cyc(4) == cyc(4));
}

TEST(FieldSpecParse, CommandLineSpellings) {
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("GF:7"), FieldSpec::prime_field(7));
  EXPECT_EQ(FieldSpec::parse("Cyc:5"), FieldSpec::cyclotomic(5));
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_THROW(FieldSpec::parse("GF:"), ParseError);
}

TEST(ScalarArithmetic, Examples) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.parse("3/2").inv(), q.parse("2/3"));
  const Field f = gf(7);
  EXPECT_TRUE((f.from_int(3) * f.from_int(5)).is_one());
  const Field c = cyc(4);
  EXPECT_EQ(c.zeta() * c.zeta(), -c.one());
}

TEST(ScalarArithmetic, InverseOfZeroThrows) {
  for (const Field& f : sample_fields()) EXPECT_THROW(f.zero().inv(), DivisionByZero) << f.spec().to_string();
}

TEST(ScalarArithmetic, MixedFieldsThrow) {
  EXPECT_THROW(Field::rationals().one() + gf(7).one(), FieldError);
  EXPECT_FALSE(Field::rationals().one() == gf(7).one());
}

TEST(ScalarParse, Literals) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.parse("-4/6").to_string(), "-2/3");
  EXPECT_EQ(q.parse("5").to_string(), "5");
  EXPECT_THROW(q.parse("1/0"), ParseError);
  EXPECT_THROW(q.parse("abc"), ParseError);
  EXPECT_EQ(gf(7).parse("10").to_string(), "3");
  // zeta_4^2 = -1, so [0,0,1] reduces to [-1,0]
  EXPECT_EQ(cyc(4).parse("[0,0,1]"), -cyc(4).one());
}

TEST(ScalarParse, RoundTripsThroughToString) {
  std::mt19937 rng(7);
  for (const Field& f : sample_fields())
    for (int t = 0; t < 30; ++t) {
      const Scalar s = random_scalar(f, rng);
      EXPECT_EQ(f.parse(s.to_string()), s) << s.to_string();
    }
}

TEST(ScalarProperties, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(2024);
  for (const Field& f : sample_fields()) {
    for (int t = 0; t < 60; ++t) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one()) << f.spec().to_string() << " " << a.to_string();
    }
  }
}

TEST(ScalarProperties, CanonicalFormIsIdempotent) {
  std::mt19937 rng(99);
  for (const Field& f : sample_fields())
    for (int t = 0; t < 30; ++t) {
      const Scalar s = random_scalar(f, rng);
      EXPECT_EQ(s.canonical(), s);
      EXPECT_EQ(s.canonical().canonical().to_string(), s.canonical().to_string());
    }
}

TEST(PrimitiveRoot, ExamplesAndErrors) {
  EXPECT_EQ(primitive_root_of_unity(gf(7), 3).residue(), 2u);
  EXPECT_EQ(primitive_root_of_unity(Field::rationals(), 2), -Field::rationals().one());
  EXPECT_THROW(primitive_root_of_unity(Field::rationals(), 3), FieldError);
  EXPECT_THROW(primitive_root_of_unity(gf(7), 4), FieldError);
  EXPECT_EQ(primitive_root_of_unity(cyc(5), 5), cyc(5).zeta());
}

TEST(PrimitiveRoot, ExactOrderExhaustively) {
  struct Case {
    Field f;
    unsigned n;
  };
  std::vector<Case> cases;
  for (std::uint64_t p : {7u, 11u, 13u, 31u})
    for (unsigned n = 1; n < p; ++n)
      if ((p - 1) % n == 0) cases.push_back({gf(p), n});
  for (unsigned m : {3u, 4u, 6u, 8u, 12u})
    for (unsigned n = 1; n <= m; ++n)
      if (m % n == 0 || (m % 2 == 1 && (2 * m) % n == 0)) cases.push_back({cyc(m), n});
  for (const auto& [f, n] : cases) {
    const Scalar q = primitive_root_of_unity(f, n);
    EXPECT_TRUE(q.pow(n).is_one()) << f.spec().to_string() << " n=" << n;
    for (unsigned k = 1; k < n; ++k) EXPECT_FALSE(q.pow(k).is_one()) << f.spec().to_string() << " n=" << n << " k=" << k;
  }
}

TEST(Cyclotomic, PolynomialCoefficients) {
  const auto phi6 = cyclotomic_polynomial(6);  // x^2 - x + 1
  ASSERT_EQ(phi6.size(), 3u);
  EXPECT_EQ(phi6[0], 1);
  EXPECT_EQ(phi6[1], -1);
  EXPECT_EQ(phi6[2], 1);
  EXPECT_EQ(cyc(12).degree(), 4u);
}

TEST(Primality, SmallAndLarge) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_TRUE(is_prime(18446744073709551557ull));
}
