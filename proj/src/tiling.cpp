#include "carpets/tiling.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "carpets/errors.hpp"

namespace carpets {

std::string_view tile_kind_name(TileKind kind) {
  switch (kind) {
    case TileKind::kTypeOne: return "TYPE_ONE";
    case TileKind::kTypeTwo: return "TYPE_TWO";
    case TileKind::kTypeThree: return "TYPE_THREE";
    case TileKind::kPascal: return "PASCAL";
  }
  return "?";
}

std::string_view tile_case_name(TileCase c) {
  return c == TileCase::kMZero ? "m_zero" : "m_nonzero";
}

std::vector<Code> generated_subfield(const FieldSpec& field, Code m) {
  const unsigned degree = field.degree_over_prime(m);
  std::vector<Code> out;
  for (Code c = 0; c < field.order(); ++c) {
    if (field.frobenius_power(c, degree) == c) out.push_back(c);
  }
  return out;
}

TileSet build_tile_set(const FieldSpec& field, Code m) {
  if (!field.contains(m)) throw UsageError("m is not an element of the field");
  if (m == field.neg(1)) throw DomainError("m = -1 gives the full square; there is no tiling");
  if (!has_zeros(field, m)) throw DomainError("the fundamental block has no zeros");

  TileSet set{field, m, m == 0 ? TileCase::kMZero : TileCase::kMNonzero, 0, {}};
  if (m == 0) {
    const std::uint32_t p = field.characteristic();
    set.r = p;
    set.tiles.reserve(std::size_t{p} * p);
    for (Code north = 0; north < p; ++north) {
      for (Code west = 0; west < p; ++west) {
        set.tiles.push_back({TileKind::kPascal, west, 0, north, field.add(north, west)});
      }
    }
    return set;
  }

  const std::vector<Code> colours = generated_subfield(field, m);
  set.r = colours.size();
  set.tiles.reserve(colours.size() * colours.size() * colours.size() + 2);
  set.tiles.push_back({TileKind::kTypeOne, 0, 0, 0, 1});
  set.tiles.push_back({TileKind::kTypeTwo, 0, 0, 0, 1});
  for (Code x : colours) {
    for (Code y : colours) {
      for (Code z : colours) {
        set.tiles.push_back({TileKind::kTypeThree, x, y, z, field.add(field.add(x, field.mul(m, y)), z)});
      }
    }
  }
  return set;
}

namespace {

const Tile& find_kind(const TileSet& set, TileKind kind) {
  auto it = std::find_if(set.tiles.begin(), set.tiles.end(), [&](const Tile& t) { return t.kind == kind; });
  if (it == set.tiles.end()) throw InternalError("tile set lacks a " + std::string(tile_kind_name(kind)) + " tile");
  return *it;
}

}  // namespace

Assembly assemble(const TileSet& set, unsigned depth) {
  const CarpetParams params(set.field, set.m, depth);
  const std::uint64_t side64 = params.side();
  check_dense(side64);
  const auto side = static_cast<std::size_t>(side64);
  Assembly out{Matrix(set.field, side, side, 0), 0, {}};
  Matrix& colors = out.colors;

  using Key = std::tuple<Code, Code, Code>;
  std::map<Key, std::vector<std::size_t>> index;
  for (std::size_t t = 0; t < set.tiles.size(); ++t) {
    const Tile& tile = set.tiles[t];
    if (tile.kind == TileKind::kPascal || tile.kind == TileKind::kTypeThree) {
      index[{tile.west, tile.northwest, tile.north}].push_back(t);
    }
  }

  auto place = [&](std::size_t i, std::size_t j, Key key) {
    auto it = index.find(key);
    if (it == index.end() || it->second.empty()) {
      throw InternalError("no tile matches the neighbours of cell (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
    if (it->second.size() > 1) {
      out.ambiguous.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    colors(i, j) = set.tiles[it->second.front()].body;
    ++out.tiles_placed;
  };

  if (set.tile_case == TileCase::kMZero) {
    // Axis edges carry colour 1 and become row 0 and column 0.
    for (std::size_t k = 0; k < side; ++k) colors(0, k) = colors(k, 0) = 1;
    for (std::size_t i = 1; i < side; ++i) {
      for (std::size_t j = 1; j < side; ++j) {
        const Code north = colors(i - 1, j);
        const Code west = colors(i, j - 1);
        place(i, j, {west, 0, north});
      }
    }
    return out;
  }

  colors(0, 0) = find_kind(set, TileKind::kTypeOne).body;
  ++out.tiles_placed;
  const Code axis = find_kind(set, TileKind::kTypeTwo).body;
  for (std::size_t k = 1; k < side; ++k) {
    colors(0, k) = axis;  // along Ox
    colors(k, 0) = axis;  // along Oy, rotated
    out.tiles_placed += 2;
  }
  for (std::size_t i = 1; i < side; ++i) {
    for (std::size_t j = 1; j < side; ++j) {
      place(i, j, {colors(i, j - 1), colors(i - 1, j - 1), colors(i - 1, j)});
    }
  }
  return out;
}

std::size_t largest_empty_square(const SupportMatrix& support) {
  const std::size_t n = support.side();
  std::vector<std::size_t> prev(n + 1, 0), cur(n + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cur[j + 1] = support(i, j) ? 0 : 1 + std::min({prev[j], prev[j + 1], cur[j]});
      best = std::max(best, cur[j + 1]);
    }
    std::swap(prev, cur);
  }
  return best;
}

std::vector<std::size_t> aperiodicity_witness(const FieldSpec& field, Code m, unsigned d_max) {
  if (!has_zeros(field, m)) throw DomainError("the carpet has no zeros, so no white areas grow");
  std::vector<std::size_t> sides;
  for (unsigned d = 1; d <= d_max; ++d) {
    const CarpetMatrix carpet = tensor_construction(CarpetParams(field, m, d));
    sides.push_back(largest_empty_square(support(carpet)));
  }
  return sides;
}

}  // namespace carpets
