#ifndef CARPETS_CARPET_HPP
#define CARPETS_CARPET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "carpets/finite_field.hpp"

namespace carpets {

inline constexpr std::size_t kDefaultDenseEntryLimit = std::size_t{1} << 26;
inline constexpr unsigned kMaxStreamDepth = 12;

/// Dense materialization guard. Reads CARPETS_DENSE_LIMIT from the
/// environment when set, otherwise 2^26 entries.
std::size_t dense_entry_limit();
/// CapacityError when a side x side dense matrix exceeds the guard.
void check_dense(std::uint64_t side);

/// Dense row-major matrix of field codes.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, Code fill = 0);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> codes);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Code> codes() const { return codes_; }
  std::span<const Code> row(std::size_t i) const { return {codes_.data() + i * cols_, cols_}; }

  Code operator()(std::size_t i, std::size_t j) const { return codes_[i * cols_ + j]; }
  Code& operator()(std::size_t i, std::size_t j) { return codes_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.codes_ == b.codes_ && a.field_ == b.field_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> codes_;
};

struct CarpetParams {
  CarpetParams(FieldSpec field, FieldElement m, unsigned depth);
  CarpetParams(const FieldSpec& field, Code m, unsigned depth)
      : CarpetParams(field, FieldElement(field, m), depth) {}

  FieldSpec field;
  FieldElement m;
  unsigned depth;

  std::uint32_t p() const { return field.characteristic(); }
  /// p^depth. Throws CapacityError if it does not fit in 64 bits.
  std::uint64_t side() const;
};

struct CarpetMatrix {
  CarpetParams params;
  Matrix values;

  std::size_t side() const { return values.rows(); }
  Code operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

/// 0/1 shadow of a square matrix: bit set iff the entry is nonzero.
class SupportMatrix {
 public:
  SupportMatrix(std::size_t side, std::vector<std::uint8_t> bits);

  std::size_t side() const { return side_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * side_ + j] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t count_nonzero() const;

  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

 private:
  std::size_t side_;
  std::vector<std::uint8_t> bits_;
};

// Generation. All three routes produce the same matrix; the recurrence is
// the reference definition.
CarpetMatrix generate_recurrence(const CarpetParams& params);
CarpetMatrix tensor_construction(const CarpetParams& params);
/// Fundamental block F(p, m), i.e. depth 1.
Matrix fundamental_block(const FieldSpec& field, Code m);

/// Sum over a of m^a C(n,a) C(n+k-a, k-a) with binomials reduced mod p.
FieldElement closed_form_f(std::uint64_t n, std::uint64_t k, const FieldElement& m);
/// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// (1, -m, (-m)^2, ..., (-m)^(p-1))
std::vector<FieldElement> last_row(const FieldSpec& field, const FieldElement& m);

Matrix tensor_product(const Matrix& a, const Matrix& b);
Matrix frobenius_matrix(const Matrix& a);
/// Column reversal.
Matrix mirror(const Matrix& a);
/// Divides row i of a fundamental block by (-m)^i. DomainError for m = 0
/// or depth != 1.
Matrix row_rescale_O(const CarpetMatrix& block);

SupportMatrix support(const Matrix& a);
SupportMatrix support(const CarpetMatrix& a);

/// Random access into M_d through the digit product of Frobenius
/// conjugates of the fundamental block. Construction costs
/// O(p^2 * min(d, k)); each query is O(d) multiplications.
class EntryOracle {
 public:
  explicit EntryOracle(const CarpetParams& params);

  const CarpetParams& params() const { return params_; }
  std::uint64_t side() const { return side_; }
  /// UsageError when i or j is outside [0, p^d).
  Code operator()(std::uint64_t i, std::uint64_t j) const;
  /// Row i of M_d as the Kronecker product of the per-digit rows.
  std::vector<Code> row(std::uint64_t i) const;

 private:
  CarpetParams params_;
  std::uint64_t side_;
  std::uint32_t p_;
  unsigned period_;
  // conjugates_[t] holds phi^t(F) for t < period_, each p*p row-major.
  std::vector<Code> conjugates_;
};

FieldElement entry_at(const CarpetParams& params, std::uint64_t i, std::uint64_t j);

/// Row-by-row producer of M_d with O(p^d) working memory. Depth is capped
/// at kMaxStreamDepth.
class RowStream {
 public:
  explicit RowStream(const CarpetParams& params);

  std::uint64_t side() const { return oracle_.side(); }
  std::uint64_t next_index() const { return next_; }
  bool done() const { return next_ >= oracle_.side(); }
  /// Fills `row` with the next row; returns false once exhausted.
  bool next(std::vector<Code>& row);

 private:
  EntryOracle oracle_;
  std::uint64_t next_ = 0;
};

RowStream stream_rows(const CarpetParams& params);

}  // namespace carpets

#endif  // CARPETS_CARPET_HPP
