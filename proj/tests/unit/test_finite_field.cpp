#include <doctest.h>

#include <random>

#include "carpets/errors.hpp"
#include "carpets/finite_field.hpp"
#include "oracles.hpp"

using namespace carpets;

TEST_CASE("prime field arithmetic") {
  const FieldSpec f3 = FieldSpec::prime(3);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  for (Code x = 0; x < 3; ++x) CHECK(f3.add(0, x) == x);
  CHECK(FieldSpec::prime(5).inv(3) == 2);
  CHECK(f3.from_integer(-1) == 2);
  CHECK(f3.from_integer(-7) == 2);
  CHECK_THROWS_AS(f3.inv(0), DomainError);
}

TEST_CASE("GF(9) with x^2 + 1") {
  const FieldSpec f = FieldSpec::parse("3^2/1,0,1");
  const Code x = 3;
  CHECK(f.add(5, 8) == 1);
  CHECK(f.mul(x, x) == 2);
  CHECK(f.inv(x) == 6);        // 2x
  CHECK(f.frobenius(x) == 6);  // x^3 = -x
  CHECK(f.degree_over_prime(2) == 1);
  CHECK(f.degree_over_prime(x) == 2);
  CHECK(decode(7, f).coeffs() == std::vector<std::uint32_t>{1, 2});
  CHECK(encode(decode(7, f)) == 7);
  CHECK_THROWS_AS(decode(9, f), UsageError);
  CHECK_THROWS_AS(decode(-1, f), UsageError);
}

TEST_CASE("GF(361) with x^2 + 1") {
  const FieldSpec f = FieldSpec::parse("19^2/1,0,1");
  CHECK(f.order() == 361);
  CHECK(f.mul(19, 19) == 18);
  CHECK(encode(FieldElement(f, f.from_digits(std::vector<std::uint32_t>{5, 1}))) == 24);
  CHECK(encode(FieldElement(f, 0)) == 0);
  CHECK(f.degree_over_prime(19) == 2);
  for (Code a = 0; a < f.order(); a += 7) CHECK(f.frobenius(f.frobenius(a)) == a);
}

TEST_CASE("descriptors and default moduli") {
  CHECK(FieldSpec::parse("7").descriptor() == "7^1/0,1");
  CHECK(FieldSpec::parse("19^2/1,0,1").descriptor() == "19^2/1,0,1");
  // smallest monic irreducible, constant term compared first
  CHECK(FieldSpec::parse("2^2").descriptor() == "2^2/1,1,1");
  CHECK(FieldSpec::parse("3^2").descriptor() == "3^2/1,0,1");
  CHECK(FieldSpec::parse("5^2").descriptor() == "5^2/1,1,1");
  CHECK(FieldSpec::parse("2^3").descriptor() == "2^3/1,0,1,1");
  CHECK(FieldSpec::parse("3^4").descriptor() == "3^4/1,0,1,1,1");

  CHECK_THROWS_AS(FieldSpec::parse("4"), UsageError);
  CHECK_THROWS_AS(FieldSpec::parse("3^2/2,0,1"), UsageError);  // x^2 + 2 = (x-1)(x+1)
  CHECK_THROWS_AS(FieldSpec::parse("3^2/1,0,2"), UsageError);  // not monic
  CHECK_THROWS_AS(FieldSpec::parse("3^2/1,0"), UsageError);
  CHECK_THROWS_AS(FieldSpec::parse("abc"), UsageError);
  CHECK_THROWS_AS(FieldSpec::parse("2^40"), UsageError);
}

TEST_CASE("mismatched fields are a usage error") {
  const FieldElement a(FieldSpec::prime(3), 1);
  const FieldElement b(FieldSpec::prime(5), 1);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a * b, UsageError);
  CHECK_THROWS_AS(FieldElement(FieldSpec::prime(3), 3), UsageError);
}

TEST_CASE("arithmetic matches the polynomial oracle") {
  struct Case {
    const char* descriptor;
    oracle::PolyField reference;
  };
  const Case cases[] = {
      {"2^2/1,1,1", {2, {1, 1, 1}}},
      {"3^2/1,0,1", {3, {1, 0, 1}}},
      {"5^2/2,0,1", {5, {2, 0, 1}}},
      {"2^3/1,1,0,1", {2, {1, 1, 0, 1}}},
      {"7^2", {7, {1, 0, 1}}},
      {"5^2", {5, {1, 1, 1}}},
      {"3^3/1,2,0,1", {3, {1, 2, 0, 1}}},
  };
  for (const Case& c : cases) {
    const FieldSpec f = FieldSpec::parse(c.descriptor);
    CAPTURE(c.descriptor);
    REQUIRE(f.order() == c.reference.order());
    for (Code a = 0; a < f.order(); ++a) {
      CHECK(f.frobenius(a) == c.reference.pow(a, c.reference.p));
      if (a != 0) CHECK(f.inv(a) == c.reference.inv_by_search(a));
      for (Code b = 0; b < f.order(); ++b) {
        CHECK(f.add(a, b) == c.reference.add(a, b));
        CHECK(f.mul(a, b) == c.reference.mul(a, b));
      }
    }
  }
}

TEST_CASE("field axioms and Frobenius on random samples") {
  std::mt19937 rng(7);
  for (const char* d : {"19^2/1,0,1", "2^5", "5^3", "101", "3^4"}) {
    const FieldSpec f = FieldSpec::parse(d);
    std::uniform_int_distribution<Code> pick(0, f.order() - 1);
    for (int s = 0; s < 300; ++s) {
      const Code a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(a) == f.pow(a, f.order() - 2));
      }
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius_power(a, f.degree()) == a);
      const unsigned t = f.degree_over_prime(a);
      CHECK(f.degree() % t == 0);
      CHECK(f.frobenius_power(a, t) == a);
    }
  }
}

TEST_CASE("encode/decode round trip") {
  for (const char* d : {"2", "3^2", "19^2/1,0,1", "2^10", "101"}) {
    const FieldSpec f = FieldSpec::parse(d);
    for (Code n = 0; n < f.order(); ++n) {
      const FieldElement e = decode(n, f);
      CHECK(encode(e) == n);
      CHECK(f.from_digits(e.coeffs()) == n);
    }
  }
}

TEST_CASE("primality and irreducibility helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(poly::is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(poly::is_irreducible({1, 0, 1}, 5));  // x^2 + 1 = (x-2)(x+2) mod 5
  CHECK(poly::is_irreducible({1, 1, 0, 0, 1}, 2));
  CHECK_FALSE(poly::is_irreducible({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
}
