#ifndef CARPETS_RENDER_HPP
#define CARPETS_RENDER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "carpets/carpet.hpp"
#include "carpets/finite_field.hpp"

namespace carpets {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kWhite = {255, 255, 255};
inline constexpr Rgb kBlack = {0, 0, 0};

/// Colour per element code. Code 0 is always white.
class Palette {
 public:
  Palette() { colors_[0] = kWhite; }

  /// UsageError when trying to recolour 0.
  void set(Code code, Rgb color);
  bool contains(Code code) const { return colors_.count(code) != 0; }
  /// UsageError when the code has no colour.
  const Rgb& at(Code code) const;
  const std::map<Code, Rgb>& entries() const { return colors_; }

 private:
  std::map<Code, Rgb> colors_;
};

/// HSV with full saturation and value; `turns` in [0, 1).
Rgb hue_to_rgb(double turns);

/// 0 -> white, nonzero codes k -> hue (k-1)/(q-1). GF(2) is black on
/// white. With `symmetric` (prime fields only) the hue index is folded so
/// that k and p-k share a colour.
Palette default_palette(const FieldSpec& field, bool symmetric);

/// Plain PBM (P1): 1 = black = nonzero. Raster lines never exceed 70
/// characters; a matrix row longer than that wraps onto several lines.
std::string to_pbm(const SupportMatrix& support);
/// Same bytes as to_pbm(support(M_d)) without materializing the matrix.
void write_pbm(std::ostream& out, RowStream rows);

/// Binary PPM (P6), maxval 255.
std::string to_ppm(const Matrix& matrix, const Palette& palette);
void write_ppm(std::ostream& out, RowStream rows, const Palette& palette);

}  // namespace carpets

#endif  // CARPETS_RENDER_HPP
