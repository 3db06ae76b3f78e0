#ifndef CARPETS_ANALYSIS_HPP
#define CARPETS_ANALYSIS_HPP

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "carpets/carpet.hpp"
#include "carpets/finite_field.hpp"

namespace carpets {

using BigInt = boost::multiprecision::cpp_int;

struct Cell {
  std::uint32_t i;
  std::uint32_t j;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// ---------------------------------------------------------------------------
// Symmetries of the square

/// The eight isometries of the square acting on matrix indices. Rotations
/// are clockwise in the usual picture of a matrix (row 0 on top).
enum class Isometry : std::uint8_t {
  kIdentity,
  kRotate90,
  kRotate180,
  kRotate270,
  kReflectMainDiagonal,  // (i, j) -> (j, i)
  kReflectAntiDiagonal,  // (i, j) -> (n-j, n-i)
  kReflectRows,          // (i, j) -> (n-i, j)
  kReflectColumns,       // (i, j) -> (i, n-j)
};

inline constexpr std::array<Isometry, 8> kAllIsometries = {
    Isometry::kIdentity,           Isometry::kRotate90,
    Isometry::kRotate180,          Isometry::kRotate270,
    Isometry::kReflectMainDiagonal, Isometry::kReflectAntiDiagonal,
    Isometry::kReflectRows,        Isometry::kReflectColumns,
};

/// Bit t set iff kAllIsometries[t] is in the set.
using IsometrySet = std::bitset<8>;

std::string_view isometry_name(Isometry g);
Cell apply(Isometry g, Cell c, std::uint32_t side);
IsometrySet isometry_set(std::initializer_list<Isometry> members);
std::vector<Isometry> members(IsometrySet set);
/// Closure under composition, identity included.
bool is_subgroup(IsometrySet set);

enum class SymmetryLabel { kPascalS2, kFullSquareD8, kCrossD8, kKleinK4 };

std::string_view label_name(SymmetryLabel label);
/// The isometry group each label stands for.
IsometrySet label_subgroup(SymmetryLabel label);

struct SymmetryClass {
  SymmetryLabel label;
  IsometrySet subgroup;
};

/// Brute force: every isometry that fixes the support pointwise.
IsometrySet symmetry_subgroup(const SupportMatrix& support);

/// Case analysis for m in the prime subfield:
/// 0 -> Pascal (S2), -1 -> full square (D8), 1 -> cross (D8), else Klein K4.
/// DomainError when m is not in GF(p).
SymmetryClass classify_symmetry(const FieldSpec& field, Code m);

// ---------------------------------------------------------------------------
// Zeros

/// The unique k in (0, p-1] with a(1,k) = 0, i.e. k = -(m+1)^{-1}; nothing
/// for m = -1. DomainError when m is outside the prime subfield.
std::optional<std::uint32_t> first_row_zero_index(const FieldSpec& field, Code m);

bool has_zeros(const FieldSpec& field, Code m);

enum class RegularKind {
  kNone,             // no structural zero set applies (m = -1 or m outside GF(p))
  kCross,            // m = 1
  kOddMainDiagonal,  // m = -2
  kOddAntiDiagonal,  // m = -1/2
  kFirstRowOrbit,    // any other m in GF(p)
};

std::string_view regular_kind_name(RegularKind kind);

/// Zeros of F(p, m) split into regular and sporadic. Regular zeros are the
/// structural set of the case (cross, odd diagonal) intersected with the
/// zeros; for the remaining m in GF(p) the structural set is the orbit of
/// the first-row zero under the block's symmetry group.
struct ZeroReport {
  RegularKind kind = RegularKind::kNone;
  std::vector<Cell> zeros;
  std::vector<Cell> regular;
  std::vector<Cell> sporadic;
};

ZeroReport zero_report(const FieldSpec& field, Code m);

/// Cross, odd-diagonal and first-row-orbit index sets, without intersecting
/// them with the actual zeros.
std::vector<Cell> cross_cells(std::uint32_t p);
std::vector<Cell> odd_main_diagonal(std::uint32_t p);
std::vector<Cell> odd_anti_diagonal(std::uint32_t p);

std::size_t count_zeros(const Matrix& block);

struct ZeroCountBounds {
  std::uint32_t p;
  std::size_t required;
  std::vector<std::pair<Code, std::size_t>> counts;  // (m, zero count), m != -1
  bool passed;
};

/// Minimum zero counts: 2 for p > 3, 3 for p = 7, 4 for p >= 11, and the
/// single first-row zero otherwise.
ZeroCountBounds zero_count_bounds_check(std::uint32_t p);

std::vector<std::pair<Cell, Cell>> edge_adjacent_zeros(const FieldSpec& field, Code m);

// ---------------------------------------------------------------------------
// Dimension and scans

struct Dimension {
  std::size_t count;  // nonzero cells of the block
  std::size_t side;
  double ln_ratio;    // ln(count) / ln(side)
};

/// DomainError for an all-zero support.
Dimension fractal_dimension(const SupportMatrix& block);

inline constexpr std::uint64_t kScanFieldLimit = 1'000'000;

/// Canonical encodings of every m whose carpet has zeros, up to m ~ 1/m and
/// m ~ phi(m). The canonical member is the smallest encoding of the orbit.
std::vector<Code> scan_field(const FieldSpec& field);
Code canonical_representative(const FieldSpec& field, Code m);

// ---------------------------------------------------------------------------
// Integer identities

/// sum_{a=0}^{n} (-2)^a C(n,a) C(2n-a, n-a)
BigInt central_sum_S(std::uint64_t n);
/// f(n, k) over the integers with m = 1.
BigInt delannoy(std::uint64_t n, std::uint64_t k);
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace carpets

#endif  // CARPETS_ANALYSIS_HPP
