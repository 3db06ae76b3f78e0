#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "carpets/errors.hpp"
#include "carpets/render.hpp"

using namespace carpets;

#ifndef CARPETS_TEST_DATA
#define CARPETS_TEST_DATA "tests/data"
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("PBM output") {
  CHECK(to_pbm(SupportMatrix(1, {1})) == "P1\n1 1\n1\n");
  CHECK(to_pbm(support(fundamental_block(FieldSpec::prime(3), 1))) == "P1\n3 3\n111\n101\n111\n");

  const std::string golden = read_file(CARPETS_TEST_DATA "/sierpinski_d3.pbm");
  REQUIRE_FALSE(golden.empty());
  const CarpetParams params(FieldSpec::prime(3), 1, 3);
  CHECK(to_pbm(support(generate_recurrence(params))) == golden);
  std::ostringstream streamed;
  write_pbm(streamed, stream_rows(params));
  CHECK(streamed.str() == golden);

  // wide rows are wrapped at 70 characters
  const std::string wide = to_pbm(support(generate_recurrence(CarpetParams(FieldSpec::prime(3), 1, 5))));
  std::istringstream lines(wide);
  std::string line;
  while (std::getline(lines, line)) CHECK(line.size() <= 70);
}

TEST_CASE("PBM nesting: the top-left quadrant of depth d+1 is depth d") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) {
      for (unsigned d = 1; d + 1 <= 4; ++d) {
        const SupportMatrix small = support(generate_recurrence(CarpetParams(f, m, d)));
        const SupportMatrix big = support(generate_recurrence(CarpetParams(f, m, d + 1)));
        for (std::size_t i = 0; i < small.side(); ++i) {
          for (std::size_t j = 0; j < small.side(); ++j) CHECK(big(i, j) == small(i, j));
        }
      }
    }
  }
}

TEST_CASE("palettes") {
  const Palette two = default_palette(FieldSpec::prime(2), false);
  CHECK(two.at(0) == kWhite);
  CHECK(two.at(1) == kBlack);

  const Palette sym = default_palette(FieldSpec::prime(5), true);
  CHECK(sym.at(0) == kWhite);
  CHECK(sym.at(1) == sym.at(4));
  CHECK(sym.at(2) == sym.at(3));
  CHECK(sym.at(1) != sym.at(2));

  const Palette seven = default_palette(FieldSpec::prime(7), false);
  std::set<Rgb> distinct;
  for (Code k = 1; k < 7; ++k) distinct.insert(seven.at(k));
  CHECK(distinct.size() == 6);
  CHECK(distinct.count(kWhite) == 0);
  CHECK(seven.at(1) == Rgb{255, 0, 0});

  CHECK(default_palette(FieldSpec::parse("3^2"), false).at(0) == kWhite);
  CHECK_THROWS_AS(default_palette(FieldSpec::parse("3^2"), true), UsageError);
  Palette p;
  CHECK_THROWS_AS(p.set(0, kBlack), UsageError);
  CHECK_THROWS_AS(p.at(3), UsageError);

  CHECK(hue_to_rgb(0.0) == Rgb{255, 0, 0});
  CHECK(hue_to_rgb(1.0 / 3) == Rgb{0, 255, 0});
  CHECK(hue_to_rgb(2.0 / 3) == Rgb{0, 0, 255});
}

TEST_CASE("PPM output") {
  const FieldSpec f3 = FieldSpec::prime(3);
  Palette palette;
  palette.set(1, kBlack);
  palette.set(2, {255, 0, 0});
  const Matrix m2 = generate_recurrence(CarpetParams(f3, 1, 2)).values;
  const std::string ppm = to_ppm(m2, palette);
  const std::string header = "P6\n9 9\n255\n";
  REQUIRE(ppm.size() == header.size() + 9 * 9 * 3);
  CHECK(ppm.compare(0, header.size(), header) == 0);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      const std::size_t at = header.size() + 3 * (9 * i + j);
      const bool white = static_cast<unsigned char>(ppm[at]) == 255 && static_cast<unsigned char>(ppm[at + 1]) == 255 &&
                         static_cast<unsigned char>(ppm[at + 2]) == 255;
      CHECK(white == (m2(i, j) == 0));
      // symmetric across the main diagonal
      const std::size_t mirrored = header.size() + 3 * (9 * j + i);
      CHECK(ppm.compare(at, 3, ppm, mirrored, 3) == 0);
    }
  }

  const Matrix zeros(f3, 1, 4, 0);
  CHECK(to_ppm(zeros, palette) == "P6\n4 1\n255\n" + std::string(12, '\xff'));
  CHECK_THROWS_AS(to_ppm(m2, Palette()), UsageError);

  std::ostringstream streamed;
  write_ppm(streamed, stream_rows(CarpetParams(f3, 1, 2)), palette);
  CHECK(streamed.str() == ppm);
}

TEST_CASE("symmetric palette gives m = 1 images the full square symmetry") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    const FieldSpec f = FieldSpec::prime(p);
    const Palette palette = default_palette(f, true);
    const Matrix m = generate_recurrence(CarpetParams(f, 1, 2)).values;
    const std::size_t n = m.rows() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        const Rgb& c = palette.at(m(i, j));
        CHECK(c == palette.at(m(j, i)));
        CHECK(c == palette.at(m(i, n - j)));
        CHECK(c == palette.at(m(n - i, j)));
      }
    }
  }
}
