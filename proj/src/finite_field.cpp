#include "carpets/finite_field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

using Digits = std::array<std::uint64_t, kMaxExtensionDegree>;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw DomainError("element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
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

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "' in field descriptor");
  }
  return value;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// poly

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly rem(Poly a, const Poly& modulus, std::uint64_t p) {
  trim(a);
  Poly m = modulus;
  trim(m);
  if (m.empty()) throw DomainError("polynomial division by zero");
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return rem(std::move(prod), modulus, p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  base = rem(std::move(base), modulus, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, modulus, p);
    base = mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}
}  // namespace

bool is_irreducible(const Poly& modulus, std::uint64_t p) {
  Poly f = modulus;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;

  // frob[j] = x^(p^j) mod f
  std::vector<Poly> frob(k + 1);
  frob[0] = rem(Poly{0, 1}, f, p);
  for (unsigned j = 1; j <= k; ++j) frob[j] = pow_mod(frob[j - 1], p, f, p);

  const Poly x = rem(Poly{0, 1}, f, p);
  if (frob[k] != x) return false;

  for (unsigned t : prime_divisors(k)) {
    Poly h = frob[k / t];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    const Poly g = gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::FieldSpec(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxExtensionDegree) throw UsageError("extension degree out of range");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
      throw UsageError("field order p^k exceeds 2^31");
    }
  }

  if (modulus.size() != k + 1 || modulus.back() != 1) {
    throw UsageError("modulus must be monic of degree " + std::to_string(k));
  }
  for (auto c : modulus) {
    if (c >= p) throw UsageError("modulus coefficient out of range [0, p)");
  }
  if (k == 1) {
    modulus = {0, 1};
  } else {
    poly::Poly f(modulus.begin(), modulus.end());
    if (!poly::is_irreducible(f, p)) throw UsageError("modulus is reducible over GF(p)");
  }

  data_ = std::make_shared<const Data>(Data{p, k, static_cast<Code>(q), std::move(modulus)});
}

FieldSpec FieldSpec::prime(std::uint32_t p) { return FieldSpec(p, 1, {0, 1}); }

FieldSpec FieldSpec::with_default_modulus(std::uint32_t p, unsigned k) {
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (k > kMaxExtensionDegree) throw UsageError("extension degree out of range");

  // Odometer over (c0, ..., c_{k-1}) with c0 the most significant position.
  std::vector<std::uint32_t> coeffs(k + 1, 0);
  coeffs[k] = 1;
  while (true) {
    poly::Poly f(coeffs.begin(), coeffs.end());
    if (poly::is_irreducible(f, p)) return FieldSpec(p, k, coeffs);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && ++coeffs[pos] == p) {
      coeffs[pos] = 0;
      --pos;
    }
    if (pos < 0) throw InternalError("no irreducible polynomial found");
  }
}

FieldSpec FieldSpec::parse(std::string_view descriptor) {
  std::string_view head = descriptor;
  std::string_view tail;
  bool has_modulus = false;
  if (auto slash = descriptor.find('/'); slash != std::string_view::npos) {
    head = descriptor.substr(0, slash);
    tail = descriptor.substr(slash + 1);
    has_modulus = true;
  }

  std::uint32_t p = 0;
  unsigned k = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret), "characteristic");
    k = parse_uint(head.substr(caret + 1), "degree");
  } else {
    p = parse_uint(head, "characteristic");
  }

  if (!has_modulus) return with_default_modulus(p, k);

  std::vector<std::uint32_t> modulus;
  while (true) {
    auto comma = tail.find(',');
    modulus.push_back(parse_uint(tail.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    tail.remove_prefix(comma + 1);
  }
  return FieldSpec(p, k, std::move(modulus));
}

std::string FieldSpec::descriptor() const {
  std::ostringstream out;
  out << data_->p << '^' << data_->k << '/';
  for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
    if (i) out << ',';
    out << data_->modulus[i];
  }
  return out.str();
}

Code FieldSpec::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  n %= p;
  if (n < 0) n += p;
  return static_cast<Code>(n);
}

std::vector<std::uint32_t> FieldSpec::digits(Code a) const {
  std::vector<std::uint32_t> out(data_->k);
  for (auto& d : out) {
    d = a % data_->p;
    a /= data_->p;
  }
  return out;
}

Code FieldSpec::from_digits(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->k) throw UsageError("coefficient vector has wrong length");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= data_->p) throw UsageError("coefficient out of range [0, p)");
    code = code * data_->p + coeffs[i];
  }
  return static_cast<Code>(code);
}

Code FieldSpec::add(Code a, Code b) const {
  const std::uint32_t p = data_->p;
  if (data_->k == 1) {
    const Code s = a + b;
    return s >= p ? s - p : s;
  }
  Code result = 0;
  Code scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    Code d = a % p + b % p;
    if (d >= p) d -= p;
    result += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return result;
}

Code FieldSpec::neg(Code a) const {
  const std::uint32_t p = data_->p;
  if (data_->k == 1) return a == 0 ? 0 : p - a;
  Code result = 0;
  Code scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    const Code d = a % p;
    result += (d == 0 ? 0 : p - d) * scale;
    scale *= p;
    a /= p;
  }
  return result;
}

Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldSpec::mul(Code a, Code b) const {
  const std::uint64_t p = data_->p;
  if (data_->k == 1) return static_cast<Code>(std::uint64_t{a} * b % p);

  const unsigned k = data_->k;
  Digits da{}, db{};
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a % p;
    db[i] = b % p;
    a = static_cast<Code>(a / p);
    b = static_cast<Code>(b / p);
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  // Reduce with the monic modulus: x^k = -(c0 + c1 x + ... + c_{k-1} x^{k-1}).
  const auto& m = data_->modulus;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) {
      prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
    }
  }
  std::uint64_t code = 0;
  for (unsigned i = k; i-- > 0;) code = code * p + prod[i];
  return static_cast<Code>(code);
}

Code FieldSpec::inv(Code a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  const std::uint64_t p = data_->p;
  if (data_->k == 1) return static_cast<Code>(inv_mod(a, p));

  // Extended Euclid: keep s with s * a == r (mod modulus).
  using poly::Poly;
  const auto d = digits(a);
  Poly r0(data_->modulus.begin(), data_->modulus.end());
  Poly r1(d.begin(), d.end());
  poly::trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    // One polynomial long division step r0 = quot * r1 + rem.
    Poly quot(r0.size() - r1.size() + 1, 0);
    Poly rem = r0;
    const std::uint64_t lead_inv = inv_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::uint64_t c = rem.back() * lead_inv % p;
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) {
        rem[shift + j] = (rem[shift + j] + (p - c) * r1[j]) % p;
      }
      poly::trim(rem);
    }
    // s2 = s0 - quot * s1
    Poly s2(std::max(s0.size(), quot.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (std::size_t i = 0; i < quot.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) {
        s2[i + j] = (s2[i + j] + (p - quot[i]) * s1[j] % p) % p;
      }
    }
    poly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  const std::uint64_t scale = inv_mod(r1.at(0), p);
  std::vector<std::uint32_t> out(data_->k, 0);
  for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(s1[i] * scale % p);
  }
  return from_digits(out);
}

Code FieldSpec::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Code FieldSpec::frobenius(Code a) const {
  if (data_->k == 1) return a;
  return pow(a, data_->p);
}

Code FieldSpec::frobenius_power(Code a, unsigned times) const {
  times %= data_->k;
  for (unsigned t = 0; t < times; ++t) a = frobenius(a);
  return a;
}

unsigned FieldSpec::degree_over_prime(Code a) const {
  unsigned t = 1;
  for (Code b = frobenius(a); b != a; b = frobenius(b)) ++t;
  return t;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
         a.data_->modulus == b.data_->modulus;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldSpec field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code_)) throw UsageError("element code out of range for field");
}

namespace {
const FieldSpec& common_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw UsageError("operands belong to different fields: " + a.field().descriptor() +
                     " vs " + b.field().descriptor());
  }
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.add(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.sub(a.code_, b.code_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.mul(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, a.field_.neg(a.code_)); }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return FieldElement(a.field(), a.field().inv(a.code())); }
FieldElement frobenius(const FieldElement& a) {
  return FieldElement(a.field(), a.field().frobenius(a.code()));
}
unsigned degree_over_prime(const FieldElement& a) { return a.field().degree_over_prime(a.code()); }
Code encode(const FieldElement& a) { return a.code(); }

FieldElement decode(std::int64_t n, const FieldSpec& field) {
  if (n < 0 || n >= static_cast<std::int64_t>(field.order())) {
    throw UsageError("encoding " + std::to_string(n) + " out of range for " + field.descriptor());
  }
  return FieldElement(field, static_cast<Code>(n));
}

}  // namespace carpets
