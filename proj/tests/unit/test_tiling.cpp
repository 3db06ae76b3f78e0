#include <doctest.h>

#include <algorithm>
#include <map>

#include "carpets/errors.hpp"
#include "carpets/tiling.hpp"
#include "oracles.hpp"

using namespace carpets;

TEST_CASE("tile catalogs") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const TileSet pascal = build_tile_set(f3, 0);
  CHECK(pascal.tile_case == TileCase::kMZero);
  CHECK(pascal.tiles.size() == 9);
  for (const Tile& t : pascal.tiles) {
    CHECK(t.kind == TileKind::kPascal);
    CHECK(t.body == f3.add(t.north, t.west));
  }

  const TileSet cross = build_tile_set(f3, 1);
  CHECK(cross.tile_case == TileCase::kMNonzero);
  CHECK(cross.r == 3);
  CHECK(cross.tiles.size() == 29);
  std::size_t interior = 0;
  for (const Tile& t : cross.tiles) {
    if (t.kind != TileKind::kTypeThree) continue;
    ++interior;
    CHECK(t.body == f3.add(f3.add(t.west, f3.mul(1, t.northwest)), t.north));
  }
  CHECK(interior == 27);

  const FieldSpec f9 = FieldSpec::parse("3^2/1,0,1");
  if (has_zeros(f9, 3)) {
    const TileSet ext = build_tile_set(f9, 3);
    CHECK(ext.r == 9);
    CHECK(ext.tiles.size() == 2 + 9 * 9 * 9);
  } else {
    CHECK_THROWS_AS(build_tile_set(f9, 3), DomainError);
  }

  CHECK_THROWS_AS(build_tile_set(f3, 2), DomainError);                 // m = -1
  CHECK_THROWS_AS(build_tile_set(FieldSpec::prime(2), 1), DomainError);  // no zeros
}

TEST_CASE("generated subfield") {
  CHECK(generated_subfield(FieldSpec::prime(7), 3).size() == 7);
  CHECK(generated_subfield(FieldSpec::parse("3^2"), 3).size() == 9);
  // GF(16) has 2 elements generating GF(2), 2 more generating GF(4), 12 generating all of it
  const FieldSpec f16 = FieldSpec::parse("2^4");
  std::map<std::size_t, int> sizes;
  for (Code m = 0; m < 16; ++m) {
    const auto sub = generated_subfield(f16, m);
    ++sizes[sub.size()];
    for (Code a : sub) {
      for (Code b : sub) CHECK(std::find(sub.begin(), sub.end(), f16.mul(a, b)) != sub.end());
    }
  }
  CHECK(sizes == std::map<std::size_t, int>{{2, 2}, {4, 2}, {16, 12}});
}

TEST_CASE("assembly reproduces the recurrence") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const Assembly a = assemble(build_tile_set(f3, 1), 2);
  CHECK(a.ambiguous.empty());
  CHECK(std::vector<Code>(a.colors.codes().begin(), a.colors.codes().end()) ==
        oracle::recurrence(oracle::prime_field(3), 1, 9));

  const Assembly pascal = assemble(build_tile_set(f3, 0), 2);
  CHECK(pascal.ambiguous.empty());
  CHECK(pascal.colors(1, 1) == 2);  // the tile at the corner: west 1, north 1, south-east 2
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) CHECK(pascal.colors(i, j) == binomial_mod_p(i + j, i, 3));
  }

  const FieldSpec f4 = FieldSpec::parse("2^2");
  for (Code m = 0; m < 4; ++m) {
    if (m == 1 || !has_zeros(f4, m)) continue;
    const Assembly e = assemble(build_tile_set(f4, m), 3);
    CHECK(e.ambiguous.empty());
    CHECK(e.colors == generate_recurrence(CarpetParams(f4, m, 3)).values);
  }
}

TEST_CASE("largest empty square and the aperiodicity witness") {
  CHECK(largest_empty_square(SupportMatrix(4, std::vector<std::uint8_t>(16, 1))) == 0);
  const FieldSpec f3 = FieldSpec::prime(3);
  CHECK(largest_empty_square(support(generate_recurrence(CarpetParams(f3, 1, 2)))) == 3);
  CHECK(largest_empty_square(support(generate_recurrence(CarpetParams(f3, 1, 3)))) == 9);
  CHECK(aperiodicity_witness(f3, 1, 3) == std::vector<std::size_t>{1, 3, 9});

  const auto pascal = aperiodicity_witness(FieldSpec::prime(5), 0, 2);
  REQUIRE(pascal.size() == 2);
  CHECK(pascal[0] < pascal[1]);
  CHECK_THROWS_AS(aperiodicity_witness(FieldSpec::prime(2), 1, 3), DomainError);
}
