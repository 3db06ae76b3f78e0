#ifndef CARPETS_TESTS_ORACLES_HPP
#define CARPETS_TESTS_ORACLES_HPP

// Slow reference implementations used only by the tests. Nothing here calls
// into the library's arithmetic.

#include <cstdint>
#include <vector>

namespace oracle {

// GF(p^k) with elements as coefficient vectors (constant term first) and
// schoolbook multiplication followed by long division.
struct PolyField {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;  // monic, degree k

  unsigned k() const { return static_cast<unsigned>(modulus.size() - 1); }

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (unsigned i = 0; i < k(); ++i) q *= p;
    return q;
  }

  std::vector<std::uint32_t> unpack(std::uint32_t code) const {
    std::vector<std::uint32_t> c(k());
    for (unsigned i = 0; i < k(); ++i) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  }

  std::uint32_t pack(const std::vector<std::uint32_t>& c) const {
    std::uint32_t code = 0;
    for (unsigned i = k(); i-- > 0;) code = code * p + c[i];
    return code;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (unsigned i = 0; i < k(); ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * k(), 0);
    for (unsigned i = 0; i < k(); ++i) {
      for (unsigned j = 0; j < k(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    for (unsigned top = 2 * k() - 1; top >= k() && top < 2 * k(); --top) {
      const std::uint64_t c = prod[top];
      if (c == 0) continue;
      for (unsigned i = 0; i <= k(); ++i) {
        const unsigned at = top - k() + i;
        prod[at] = (prod[at] + (p - c) * modulus[i]) % p;
      }
    }
    std::vector<std::uint32_t> out(k());
    for (unsigned i = 0; i < k(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::uint32_t inv_by_search(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < order(); ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }
};

inline PolyField prime_field(std::uint32_t p) { return {p, {0, 1}}; }

// a(i,j) = a(i-1,j) + m a(i-1,j-1) + a(i,j-1) on an n x n grid, row-major.
inline std::vector<std::uint32_t> recurrence(const PolyField& f, std::uint32_t m, std::size_t n) {
  std::vector<std::uint32_t> a(n * n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      a[i * n + j] = f.add(f.add(a[(i - 1) * n + j], f.mul(m, a[(i - 1) * n + j - 1])), a[i * n + j - 1]);
    }
  }
  return a;
}

}  // namespace oracle

#endif  // CARPETS_TESTS_ORACLES_HPP
