#include "carpets/render.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

constexpr std::size_t kPbmLineWidth = 70;

void pbm_header(std::ostream& out, std::uint64_t width, std::uint64_t height) {
  out << "P1\n" << width << ' ' << height << '\n';
}

template <typename IsSet>
void pbm_row(std::ostream& out, std::size_t width, IsSet is_set) {
  std::string line;
  line.reserve(kPbmLineWidth + 1);
  for (std::size_t j = 0; j < width; ++j) {
    line.push_back(is_set(j) ? '1' : '0');
    if (line.size() == kPbmLineWidth || j + 1 == width) {
      line.push_back('\n');
      out << line;
      line.clear();
    }
  }
}

void ppm_header(std::ostream& out, std::uint64_t width, std::uint64_t height) {
  out << "P6\n" << width << ' ' << height << "\n255\n";
}

void ppm_row(std::ostream& out, std::span<const Code> row, const Palette& palette) {
  std::string bytes;
  bytes.reserve(row.size() * 3);
  for (Code c : row) {
    const Rgb& rgb = palette.at(c);
    bytes.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  }
  out << bytes;
}

}  // namespace

void Palette::set(Code code, Rgb color) {
  if (code == 0 && color != kWhite) throw UsageError("zero is always white");
  colors_[code] = color;
}

const Rgb& Palette::at(Code code) const {
  auto it = colors_.find(code);
  if (it == colors_.end()) throw UsageError("palette has no colour for element " + std::to_string(code));
  return it->second;
}

Rgb hue_to_rgb(double turns) {
  turns -= std::floor(turns);
  const double h6 = turns * 6.0;
  const int sector = std::min(5, static_cast<int>(std::floor(h6)));
  const double f = h6 - sector;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1; g = f; b = 0; break;
    case 1: r = 1 - f; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = f; break;
    case 3: r = 0; g = 1 - f; b = 1; break;
    case 4: r = f; g = 0; b = 1; break;
    default: r = 1; g = 0; b = 1 - f; break;
  }
  auto channel = [](double x) { return static_cast<std::uint8_t>(std::lround(x * 255.0)); };
  return {channel(r), channel(g), channel(b)};
}

Palette default_palette(const FieldSpec& field, bool symmetric) {
  if (symmetric && field.degree() > 1) {
    throw UsageError("the symmetric palette is defined for prime fields only");
  }
  Palette palette;
  const Code q = field.order();
  if (q == 2) {
    palette.set(1, kBlack);
    return palette;
  }
  if (symmetric) {
    const Code p = q;
    const double classes = (p - 1) / 2;
    for (Code k = 1; k < p; ++k) {
      const Code folded = std::min(k, p - k);
      palette.set(k, hue_to_rgb((folded - 1) / classes));
    }
    return palette;
  }
  for (Code k = 1; k < q; ++k) {
    palette.set(k, hue_to_rgb(static_cast<double>(k - 1) / static_cast<double>(q - 1)));
  }
  return palette;
}

std::string to_pbm(const SupportMatrix& support) {
  std::ostringstream out;
  const std::size_t n = support.side();
  pbm_header(out, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    pbm_row(out, n, [&](std::size_t j) { return support(i, j); });
  }
  return out.str();
}

void write_pbm(std::ostream& out, RowStream rows) {
  const auto n = static_cast<std::size_t>(rows.side());
  pbm_header(out, n, n);
  std::vector<Code> row;
  while (rows.next(row)) {
    pbm_row(out, n, [&](std::size_t j) { return row[j] != 0; });
  }
}

std::string to_ppm(const Matrix& matrix, const Palette& palette) {
  std::ostringstream out;
  ppm_header(out, matrix.cols(), matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) ppm_row(out, matrix.row(i), palette);
  return out.str();
}

void write_ppm(std::ostream& out, RowStream rows, const Palette& palette) {
  const auto n = rows.side();
  ppm_header(out, n, n);
  std::vector<Code> row;
  while (rows.next(row)) ppm_row(out, row, palette);
}

}  // namespace carpets
