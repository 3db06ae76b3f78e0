#include "carpets/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "carpets/errors.hpp"

namespace carpets {

// ---------------------------------------------------------------------------
// Isometries

std::string_view isometry_name(Isometry g) {
  switch (g) {
    case Isometry::kIdentity: return "identity";
    case Isometry::kRotate90: return "rotate90";
    case Isometry::kRotate180: return "rotate180";
    case Isometry::kRotate270: return "rotate270";
    case Isometry::kReflectMainDiagonal: return "reflect_main_diagonal";
    case Isometry::kReflectAntiDiagonal: return "reflect_anti_diagonal";
    case Isometry::kReflectRows: return "reflect_rows";
    case Isometry::kReflectColumns: return "reflect_columns";
  }
  return "?";
}

Cell apply(Isometry g, Cell c, std::uint32_t side) {
  const std::uint32_t n = side - 1;
  switch (g) {
    case Isometry::kIdentity: return c;
    case Isometry::kRotate90: return {c.j, n - c.i};
    case Isometry::kRotate180: return {n - c.i, n - c.j};
    case Isometry::kRotate270: return {n - c.j, c.i};
    case Isometry::kReflectMainDiagonal: return {c.j, c.i};
    case Isometry::kReflectAntiDiagonal: return {n - c.j, n - c.i};
    case Isometry::kReflectRows: return {n - c.i, c.j};
    case Isometry::kReflectColumns: return {c.i, n - c.j};
  }
  return c;
}

IsometrySet isometry_set(std::initializer_list<Isometry> list) {
  IsometrySet set;
  for (Isometry g : list) set.set(static_cast<std::size_t>(g));
  return set;
}

std::vector<Isometry> members(IsometrySet set) {
  std::vector<Isometry> out;
  for (Isometry g : kAllIsometries) {
    if (set.test(static_cast<std::size_t>(g))) out.push_back(g);
  }
  return out;
}

namespace {

// Composition g after h, identified by its action on a 3x3 grid.
Isometry compose(Isometry g, Isometry h) {
  for (Isometry t : kAllIsometries) {
    bool same = true;
    for (std::uint32_t i = 0; i < 3 && same; ++i) {
      for (std::uint32_t j = 0; j < 3 && same; ++j) {
        same = apply(t, {i, j}, 3) == apply(g, apply(h, {i, j}, 3), 3);
      }
    }
    if (same) return t;
  }
  throw InternalError("isometries are not closed under composition");
}

}  // namespace

bool is_subgroup(IsometrySet set) {
  if (!set.test(static_cast<std::size_t>(Isometry::kIdentity))) return false;
  for (Isometry g : members(set)) {
    for (Isometry h : members(set)) {
      if (!set.test(static_cast<std::size_t>(compose(g, h)))) return false;
    }
  }
  return true;
}

std::string_view label_name(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::kPascalS2: return "PASCAL_S2";
    case SymmetryLabel::kFullSquareD8: return "FULL_SQUARE_D8";
    case SymmetryLabel::kCrossD8: return "CROSS_D8";
    case SymmetryLabel::kKleinK4: return "KLEIN_K4";
  }
  return "?";
}

IsometrySet label_subgroup(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::kPascalS2:
      return isometry_set({Isometry::kIdentity, Isometry::kReflectMainDiagonal});
    case SymmetryLabel::kKleinK4:
      return isometry_set({Isometry::kIdentity, Isometry::kReflectMainDiagonal,
                           Isometry::kReflectAntiDiagonal, Isometry::kRotate180});
    case SymmetryLabel::kFullSquareD8:
    case SymmetryLabel::kCrossD8:
      return IsometrySet{}.set();
  }
  return {};
}

IsometrySet symmetry_subgroup(const SupportMatrix& support) {
  const auto side = static_cast<std::uint32_t>(support.side());
  IsometrySet out;
  for (Isometry g : kAllIsometries) {
    bool fixed = true;
    for (std::uint32_t i = 0; i < side && fixed; ++i) {
      for (std::uint32_t j = 0; j < side && fixed; ++j) {
        const Cell c = apply(g, {i, j}, side);
        fixed = support(i, j) == support(c.i, c.j);
      }
    }
    if (fixed) out.set(static_cast<std::size_t>(g));
  }
  return out;
}

namespace {
void require_prime_subfield(const FieldSpec& field, Code m, const char* what) {
  if (!field.contains(m)) throw UsageError("m is not an element of the field");
  if (!field.in_prime_subfield(m)) {
    throw DomainError(std::string(what) + " is only defined for m in the prime subfield GF(p)");
  }
}
}  // namespace

SymmetryClass classify_symmetry(const FieldSpec& field, Code m) {
  require_prime_subfield(field, m, "symmetry classification");
  const Code minus_one = field.neg(1);
  SymmetryLabel label;
  if (m == 0) {
    label = SymmetryLabel::kPascalS2;
  } else if (m == minus_one) {
    label = SymmetryLabel::kFullSquareD8;
  } else if (m == 1) {
    label = SymmetryLabel::kCrossD8;
  } else {
    label = SymmetryLabel::kKleinK4;
  }
  return {label, label_subgroup(label)};
}

// ---------------------------------------------------------------------------
// Zeros

std::optional<std::uint32_t> first_row_zero_index(const FieldSpec& field, Code m) {
  require_prime_subfield(field, m, "the first-row zero");
  const Code m_plus_one = field.add(m, 1);
  if (m_plus_one == 0) return std::nullopt;
  const Code k = field.neg(field.inv(m_plus_one));
  return k;
}

bool has_zeros(const FieldSpec& field, Code m) {
  const std::uint32_t p = field.characteristic();
  const std::uint32_t half = (p - 1) / 2;
  if (m != 0 && field.degree_over_prime(m) > half) return false;

  // For m != 0 the zero set is invariant under both diagonal reflections, so
  // some zero has its row index <= (p-1)/2.
  const std::uint32_t rows_to_scan = m == 0 ? p - 1 : half;
  std::vector<Code> prev(p, 1), cur(p, 1);
  for (std::uint32_t i = 1; i <= rows_to_scan; ++i) {
    cur[0] = 1;
    for (std::uint32_t j = 1; j < p; ++j) {
      cur[j] = field.add(field.add(prev[j], field.mul(m, prev[j - 1])), cur[j - 1]);
      if (cur[j] == 0) return true;
    }
    std::swap(prev, cur);
  }
  return false;
}

std::string_view regular_kind_name(RegularKind kind) {
  switch (kind) {
    case RegularKind::kNone: return "none";
    case RegularKind::kCross: return "cross";
    case RegularKind::kOddMainDiagonal: return "odd_main_diagonal";
    case RegularKind::kOddAntiDiagonal: return "odd_anti_diagonal";
    case RegularKind::kFirstRowOrbit: return "first_row_orbit";
  }
  return "?";
}

std::vector<Cell> cross_cells(std::uint32_t p) {
  std::set<Cell> cells;
  const std::uint32_t mid = (p - 1) / 2;
  for (std::uint32_t i = 1; i < p; i += 2) {
    cells.insert({mid, i});
    cells.insert({i, mid});
  }
  return {cells.begin(), cells.end()};
}

std::vector<Cell> odd_main_diagonal(std::uint32_t p) {
  std::vector<Cell> out;
  for (std::uint32_t i = 1; i + 1 < p; i += 2) out.push_back({i, i});
  return out;
}

std::vector<Cell> odd_anti_diagonal(std::uint32_t p) {
  std::vector<Cell> out;
  for (std::uint32_t i = 1; i < p; i += 2) out.push_back({i, p - 1 - i});
  return out;
}

std::size_t count_zeros(const Matrix& block) {
  return static_cast<std::size_t>(std::count(block.codes().begin(), block.codes().end(), Code{0}));
}

ZeroReport zero_report(const FieldSpec& field, Code m) {
  const std::uint32_t p = field.characteristic();
  const Matrix block = fundamental_block(field, m);

  ZeroReport report;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      if (block(i, j) == 0) report.zeros.push_back({i, j});
    }
  }

  std::vector<Cell> structural;
  const Code minus_one = field.neg(1);
  if (!field.in_prime_subfield(m) || m == minus_one) {
    report.kind = RegularKind::kNone;
  } else if (m == 1 && p % 2 == 1) {
    report.kind = RegularKind::kCross;
    structural = cross_cells(p);
  } else if (p >= 5 && m == field.from_integer(-2)) {
    report.kind = RegularKind::kOddMainDiagonal;
    structural = odd_main_diagonal(p);
  } else if (p >= 5 && m == field.neg(field.inv(field.from_integer(2)))) {
    report.kind = RegularKind::kOddAntiDiagonal;
    structural = odd_anti_diagonal(p);
  } else {
    report.kind = RegularKind::kFirstRowOrbit;
    const auto k = first_row_zero_index(field, m);
    const IsometrySet group = symmetry_subgroup(support(block));
    std::set<Cell> orbit;
    for (Isometry g : members(group)) orbit.insert(apply(g, {1, *k}, p));
    structural.assign(orbit.begin(), orbit.end());
  }

  std::sort(structural.begin(), structural.end());
  for (const Cell& c : report.zeros) {
    if (std::binary_search(structural.begin(), structural.end(), c)) {
      report.regular.push_back(c);
    } else {
      report.sporadic.push_back(c);
    }
  }
  return report;
}

ZeroCountBounds zero_count_bounds_check(std::uint32_t p) {
  const FieldSpec field = FieldSpec::prime(p);
  ZeroCountBounds out{p, 1, {}, true};
  if (p >= 11) {
    out.required = 4;
  } else if (p == 7) {
    out.required = 3;
  } else if (p > 3) {
    out.required = 2;
  }
  for (Code m = 0; m < p; ++m) {
    if (m == field.neg(1)) continue;
    const std::size_t zeros = count_zeros(fundamental_block(field, m));
    out.counts.emplace_back(m, zeros);
    if (zeros < out.required) out.passed = false;
  }
  return out;
}

std::vector<std::pair<Cell, Cell>> edge_adjacent_zeros(const FieldSpec& field, Code m) {
  const Matrix block = fundamental_block(field, m);
  const auto p = static_cast<std::uint32_t>(block.rows());
  std::vector<std::pair<Cell, Cell>> out;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      if (block(i, j) != 0) continue;
      if (j + 1 < p && block(i, j + 1) == 0) out.push_back({{i, j}, {i, j + 1}});
      if (i + 1 < p && block(i + 1, j) == 0) out.push_back({{i, j}, {i + 1, j}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension and scans

Dimension fractal_dimension(const SupportMatrix& block) {
  const std::size_t count = block.count_nonzero();
  if (count == 0) throw DomainError("fractal dimension of an all-zero block");
  if (block.side() < 2) throw DomainError("fractal dimension needs a block of side >= 2");
  return {count, block.side(),
          std::log(static_cast<double>(count)) / std::log(static_cast<double>(block.side()))};
}

Code canonical_representative(const FieldSpec& field, Code m) {
  if (m == 0) return 0;
  Code best = m;
  for (Code start : {m, field.inv(m)}) {
    Code c = start;
    do {
      best = std::min(best, c);
      c = field.frobenius(c);
    } while (c != start);
  }
  return best;
}

std::vector<Code> scan_field(const FieldSpec& field) {
  if (field.order() > kScanFieldLimit) {
    throw CapacityError("field scan is limited to q <= " + std::to_string(kScanFieldLimit));
  }
  std::set<Code> found;
  for (Code m = 0; m < field.order(); ++m) {
    if (has_zeros(field, m)) found.insert(canonical_representative(field, m));
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Integer identities

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt central_sum_S(std::uint64_t n) {
  BigInt sum = 0;
  BigInt power = 1;  // (-2)^a
  for (std::uint64_t a = 0; a <= n; ++a) {
    sum += power * binomial(n, a) * binomial(2 * n - a, n - a);
    power *= -2;
  }
  return sum;
}

BigInt delannoy(std::uint64_t n, std::uint64_t k) {
  std::vector<BigInt> prev(k + 1, 1), cur(k + 1, 1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    cur[0] = 1;
    for (std::uint64_t j = 1; j <= k; ++j) cur[j] = prev[j] + prev[j - 1] + cur[j - 1];
    std::swap(prev, cur);
  }
  return prev[k];
}

}  // namespace carpets
