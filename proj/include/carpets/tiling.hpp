#ifndef CARPETS_TILING_HPP
#define CARPETS_TILING_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "carpets/analysis.hpp"
#include "carpets/carpet.hpp"
#include "carpets/finite_field.hpp"

namespace carpets {

// Coloured tiles that assemble the carpet of a quadrant. Tiles are
// combinatorial: a kind plus named colour regions, colour 0 being white.
//
//   kPascal     north, west, big south-east = north + west     (m = 0)
//   kTypeOne    single body coloured 1, the corner tile        (m != 0)
//   kTypeTwo    single body coloured 1, laid along both axes   (m != 0)
//   kTypeThree  west x, north-west y, north z, body x + m y + z (m != 0)
enum class TileKind { kTypeOne, kTypeTwo, kTypeThree, kPascal };

std::string_view tile_kind_name(TileKind kind);

struct Tile {
  TileKind kind;
  Code west = 0;
  Code northwest = 0;
  Code north = 0;
  Code body = 0;  // big body, or big south-east for Pascal tiles
};

enum class TileCase { kMZero, kMNonzero };

std::string_view tile_case_name(TileCase c);

struct TileSet {
  FieldSpec field;
  Code m;
  TileCase tile_case;
  std::uint64_t r;  // |GF(p)[m]|
  std::vector<Tile> tiles;
};

/// m = 0: one Pascal tile per (north, west) in GF(p)^2.
/// m != 0: one corner tile, one axis tile, one interior tile per
/// (west, north-west, north) in GF(p)[m]^3.
/// DomainError unless m != -1 and F(p, m) has a zero.
TileSet build_tile_set(const FieldSpec& field, Code m);

/// Elements of the subfield GF(p)[m] generated by m, ascending.
std::vector<Code> generated_subfield(const FieldSpec& field, Code m);

struct Assembly {
  Matrix colors;                  // p^d x p^d, compares equal to M_d
  std::size_t tiles_placed = 0;
  std::vector<Cell> ambiguous;    // cells where more than one tile matched
};

/// Lays the corner and axis tiles, then fills row by row; every interior
/// tile is looked up from its already-placed neighbours. For m = 0 the
/// axis colour 1 supplies row 0 and column 0 and the tile at grid cell
/// (a, b) colours entry (a + 1, b + 1). InternalError when no tile fits.
Assembly assemble(const TileSet& tiles, unsigned depth);

/// Side of the largest all-zero axis-aligned square.
std::size_t largest_empty_square(const SupportMatrix& support);

/// largest_empty_square(delta(M_d)) for d = 1..d_max. DomainError when the
/// carpet has no zeros.
std::vector<std::size_t> aperiodicity_witness(const FieldSpec& field, Code m, unsigned d_max);

}  // namespace carpets

#endif  // CARPETS_TILING_HPP
