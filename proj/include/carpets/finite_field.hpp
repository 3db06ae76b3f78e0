#ifndef CARPETS_FINITE_FIELD_HPP
#define CARPETS_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carpets {

// Base-p integer encoding of a field element: sum coeffs[i] * p^i, constant
// term least significant. Every element has exactly one code in [0, q).
using Code = std::uint32_t;

inline constexpr unsigned kMaxExtensionDegree = 31;

bool is_prime(std::uint64_t n);

// Polynomial helpers over GF(p); coefficient vectors are constant-term-first.
namespace poly {
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p);
Poly rem(Poly a, const Poly& modulus, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
bool is_irreducible(const Poly& modulus, std::uint64_t p);
}  // namespace poly

/// GF(p^k) with an explicit monic irreducible modulus.
///
/// The object is a cheap handle to immutable shared state; copies compare
/// equal when p, k and the modulus agree. All arithmetic works on codes so
/// that dense matrices can store plain integers. Use FieldElement when the
/// field identity has to travel with the value.
class FieldSpec {
 public:
  /// `modulus` holds k + 1 coefficients, constant term first, leading 1.
  /// Throws UsageError unless p is prime, the polynomial is monic of degree
  /// k and irreducible. For k = 1 the modulus is normalised to x.
  FieldSpec(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  static FieldSpec prime(std::uint32_t p);
  /// Lexicographically smallest monic irreducible of degree k, comparing
  /// coefficient tuples constant term first.
  static FieldSpec with_default_modulus(std::uint32_t p, unsigned k);
  /// "p" | "p^k" | "p^k/c0,c1,...,ck"
  static FieldSpec parse(std::string_view descriptor);

  /// Always the fully qualified "p^k/c0,...,ck" form.
  std::string descriptor() const;

  std::uint32_t characteristic() const { return data_->p; }
  unsigned degree() const { return data_->k; }
  Code order() const { return data_->q; }
  std::span<const std::uint32_t> modulus() const { return data_->modulus; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  bool contains(Code a) const { return a < data_->q; }
  bool in_prime_subfield(Code a) const { return a < data_->p; }
  /// Image of an integer in the prime subfield.
  Code from_integer(std::int64_t n) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Extended Euclid on polynomials. Throws DomainError for 0.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  Code frobenius(Code a) const;
  Code frobenius_power(Code a, unsigned times) const;
  /// Smallest t >= 1 with frobenius^t(a) == a.
  unsigned degree_over_prime(Code a) const;

  std::vector<std::uint32_t> digits(Code a) const;
  Code from_digits(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    std::uint32_t p;
    unsigned k;
    Code q;
    std::vector<std::uint32_t> modulus;
  };
  std::shared_ptr<const Data> data_;
};

/// A field element that carries its field. Arithmetic between elements of
/// different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Code code);

  const FieldSpec& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.digits(code_); }
  bool is_zero() const { return code_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  FieldSpec field_;
  Code code_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a);
unsigned degree_over_prime(const FieldElement& a);
Code encode(const FieldElement& a);
/// Throws UsageError when n is not in [0, q).
FieldElement decode(std::int64_t n, const FieldSpec& field);

}  // namespace carpets

#endif  // CARPETS_FINITE_FIELD_HPP
