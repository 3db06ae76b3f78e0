#include "carpets/carpet.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "carpets/errors.hpp"

namespace carpets {

std::size_t dense_entry_limit() {
  if (const char* env = std::getenv("CARPETS_DENSE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultDenseEntryLimit;
}

void check_dense(std::uint64_t side) {
  const std::size_t limit = dense_entry_limit();
  if (side > limit || side > limit / side) {
    throw CapacityError("dense matrix of side " + std::to_string(side) + " exceeds the " +
                        std::to_string(limit) +
                        "-entry guard; use entry_at or stream_rows instead");
  }
}

namespace {

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
  // p is prime and a is nonzero mod p.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, Code fill)
    : field_(std::move(field)), rows_(rows), cols_(cols), codes_(rows * cols, fill) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> codes)
    : field_(std::move(field)), rows_(rows), cols_(cols), codes_(std::move(codes)) {
  if (codes_.size() != rows_ * cols_) throw UsageError("matrix data does not match its shape");
  for (Code c : codes_) {
    if (!field_.contains(c)) throw UsageError("matrix entry out of range for field");
  }
}

CarpetParams::CarpetParams(FieldSpec f, FieldElement m_, unsigned d)
    : field(std::move(f)), m(std::move(m_)), depth(d) {
  if (!(m.field() == field)) throw UsageError("m does not belong to the carpet field");
  if (depth < 1) throw UsageError("depth must be at least 1");
}

std::uint64_t CarpetParams::side() const {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < depth; ++i) {
    if (s > UINT64_MAX / p()) throw CapacityError("p^depth does not fit in 64 bits");
    s *= p();
  }
  return s;
}

SupportMatrix::SupportMatrix(std::size_t side, std::vector<std::uint8_t> bits)
    : side_(side), bits_(std::move(bits)) {
  if (bits_.size() != side_ * side_) throw UsageError("support data does not match its side");
}

std::size_t SupportMatrix::count_nonzero() const {
  return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }));
}

// ---------------------------------------------------------------------------

CarpetMatrix generate_recurrence(const CarpetParams& params) {
  const std::uint64_t side64 = params.side();
  check_dense(side64);
  const auto side = static_cast<std::size_t>(side64);
  const FieldSpec& f = params.field;
  const Code m = params.m.code();

  Matrix a(f, side, side, 1);
  for (std::size_t i = 1; i < side; ++i) {
    for (std::size_t j = 1; j < side; ++j) {
      a(i, j) = f.add(f.add(a(i - 1, j), f.mul(m, a(i - 1, j - 1))), a(i, j - 1));
    }
  }
  return CarpetMatrix{params, std::move(a)};
}

Matrix fundamental_block(const FieldSpec& field, Code m) {
  return generate_recurrence(CarpetParams(field, m, 1)).values;
}

CarpetMatrix tensor_construction(const CarpetParams& params) {
  check_dense(params.side());
  const Matrix block = fundamental_block(params.field, params.m.code());
  Matrix acc = block;
  for (unsigned t = 1; t < params.depth; ++t) acc = frobenius_matrix(acc);
  // acc = phi^(d-1)(F); append phi^(d-2)(F), ..., F on the right.
  for (unsigned t = params.depth - 1; t-- > 0;) {
    Matrix factor = block;
    for (unsigned s = 0; s < t; ++s) factor = frobenius_matrix(factor);
    acc = tensor_product(acc, factor);
  }
  return CarpetMatrix{params, std::move(acc)};
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    result = result * num % p * inv_mod_u64(den, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

FieldElement closed_form_f(std::uint64_t n, std::uint64_t k, const FieldElement& m) {
  const FieldSpec& f = m.field();
  const std::uint32_t p = f.characteristic();
  Code sum = 0;
  Code m_pow = 1;
  for (std::uint64_t a = 0; a <= std::min(n, k); ++a) {
    const std::uint64_t c = std::uint64_t{binomial_mod_p(n, a, p)} * binomial_mod_p(n + k - a, k - a, p) % p;
    if (c != 0) sum = f.add(sum, f.mul(m_pow, static_cast<Code>(c)));
    m_pow = f.mul(m_pow, m.code());
  }
  return FieldElement(f, sum);
}

std::vector<FieldElement> last_row(const FieldSpec& field, const FieldElement& m) {
  if (!(m.field() == field)) throw UsageError("m does not belong to the field");
  const Code minus_m = field.neg(m.code());
  std::vector<FieldElement> out;
  out.reserve(field.characteristic());
  Code power = 1;
  for (std::uint32_t i = 0; i < field.characteristic(); ++i) {
    out.emplace_back(field, power);
    power = field.mul(power, minus_m);
  }
  return out;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw UsageError("tensor product of matrices over different fields");
  const FieldSpec& f = a.field();
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Code s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
      }
    }
  }
  return out;
}

Matrix frobenius_matrix(const Matrix& a) {
  const FieldSpec& f = a.field();
  std::vector<Code> codes(a.codes().begin(), a.codes().end());
  if (f.degree() > 1) {
    for (auto& c : codes) c = f.frobenius(c);
  }
  return Matrix(f, a.rows(), a.cols(), std::move(codes));
}

Matrix mirror(const Matrix& a) {
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, a.cols() - 1 - j) = a(i, j);
  }
  return out;
}

Matrix row_rescale_O(const CarpetMatrix& block) {
  if (block.params.depth != 1) throw DomainError("row rescale is defined on the fundamental block only");
  if (block.params.m.is_zero()) throw DomainError("row rescale needs m != 0");
  const FieldSpec& f = block.params.field;
  const Code step = f.inv(f.neg(block.params.m.code()));
  Matrix out = block.values;
  Code scale = 1;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = f.mul(out(i, j), scale);
    scale = f.mul(scale, step);
  }
  return out;
}

SupportMatrix support(const Matrix& a) {
  if (a.rows() != a.cols()) throw UsageError("support needs a square matrix");
  std::vector<std::uint8_t> bits(a.codes().size());
  std::transform(a.codes().begin(), a.codes().end(), bits.begin(),
                 [](Code c) { return static_cast<std::uint8_t>(c != 0); });
  return SupportMatrix(a.rows(), std::move(bits));
}

SupportMatrix support(const CarpetMatrix& a) { return support(a.values); }

// ---------------------------------------------------------------------------
// EntryOracle

EntryOracle::EntryOracle(const CarpetParams& params)
    : params_(params),
      side_(params.side()),
      p_(params.p()),
      period_(std::min(params.depth, degree_over_prime(params.m))) {
  // phi^t(F) = F(p, phi^t(m)) repeats with the period of m under Frobenius,
  // so only the first min(d, period) conjugates are distinct tables.
  const FieldSpec& f = params.field;
  Matrix block = fundamental_block(f, params.m.code());
  conjugates_.reserve(std::size_t{period_} * p_ * p_);
  for (unsigned t = 0; t < period_; ++t) {
    conjugates_.insert(conjugates_.end(), block.codes().begin(), block.codes().end());
    block = frobenius_matrix(block);
  }
}

Code EntryOracle::operator()(std::uint64_t i, std::uint64_t j) const {
  if (i >= side_ || j >= side_) {
    throw UsageError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside carpet of side " +
                     std::to_string(side_));
  }
  const FieldSpec& f = params_.field;
  const std::size_t stride = std::size_t{p_} * p_;
  Code result = 1;
  for (unsigned level = 0; level < params_.depth; ++level) {
    const std::size_t t = period_ == 1 ? 0 : level % period_;
    const Code factor = conjugates_[t * stride + (i % p_) * p_ + (j % p_)];
    if (factor == 0) return 0;
    result = f.mul(result, factor);
    i /= p_;
    j /= p_;
  }
  return result;
}

std::vector<Code> EntryOracle::row(std::uint64_t i) const {
  if (i >= side_) throw UsageError("row index outside carpet");
  std::vector<std::uint32_t> digits(params_.depth);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(i % p_);
    i /= p_;
  }
  const FieldSpec& f = params_.field;
  const std::size_t stride = std::size_t{p_} * p_;
  std::vector<Code> cur{1};
  cur.reserve(static_cast<std::size_t>(side_));
  for (unsigned level = params_.depth; level-- > 0;) {
    const std::size_t t = period_ == 1 ? 0 : level % period_;
    const Code* factor_row = conjugates_.data() + t * stride + std::size_t{digits[level]} * p_;
    std::vector<Code> next(cur.size() * p_);
    for (std::size_t a = 0; a < cur.size(); ++a) {
      for (std::uint32_t b = 0; b < p_; ++b) next[a * p_ + b] = f.mul(cur[a], factor_row[b]);
    }
    cur = std::move(next);
  }
  return cur;
}

FieldElement entry_at(const CarpetParams& params, std::uint64_t i, std::uint64_t j) {
  return FieldElement(params.field, EntryOracle(params)(i, j));
}

// ---------------------------------------------------------------------------
// RowStream

namespace {
const CarpetParams& check_stream_depth(const CarpetParams& params) {
  if (params.depth > kMaxStreamDepth) {
    throw CapacityError("stream depth " + std::to_string(params.depth) + " exceeds the cap of " +
                        std::to_string(kMaxStreamDepth));
  }
  return params;
}
}  // namespace

RowStream::RowStream(const CarpetParams& params) : oracle_(check_stream_depth(params)) {}

bool RowStream::next(std::vector<Code>& row) {
  if (done()) return false;
  row = oracle_.row(next_++);
  return true;
}

RowStream stream_rows(const CarpetParams& params) { return RowStream(params); }

}  // namespace carpets
