#include "carpets/io.hpp"

#include <sstream>

#include "carpets/errors.hpp"

namespace carpets {

using nlohmann::json;

namespace {

std::string modulus_text(const FieldSpec& field) {
  std::string out;
  for (std::size_t i = 0; i < field.modulus().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(field.modulus()[i]);
  }
  return out;
}

void write_row(std::ostream& out, std::span<const Code> row) {
  std::string line;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) line += ' ';
    line += std::to_string(row[j]);
  }
  line += '\n';
  out << line;
}

}  // namespace

std::string matrix_header(const CarpetParams& params) {
  std::ostringstream out;
  out << params.field.characteristic() << ' ' << params.field.degree() << ' ' << modulus_text(params.field)
      << ' ' << params.m.code() << ' ' << params.depth;
  return out.str();
}

void write_matrix_text(std::ostream& out, const CarpetMatrix& matrix) {
  out << matrix_header(matrix.params) << '\n';
  for (std::size_t i = 0; i < matrix.values.rows(); ++i) write_row(out, matrix.values.row(i));
}

void write_matrix_text(std::ostream& out, RowStream rows, const CarpetParams& params) {
  out << matrix_header(params) << '\n';
  std::vector<Code> row;
  while (rows.next(row)) write_row(out, row);
}

CarpetMatrix read_matrix_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw UsageError("matrix text: missing header");
  std::istringstream fields(header);
  std::uint32_t p = 0, m = 0;
  unsigned k = 0, depth = 0;
  std::string modulus;
  if (!(fields >> p >> k >> modulus >> m >> depth)) throw UsageError("matrix text: malformed header");

  const FieldSpec field = FieldSpec::parse(std::to_string(p) + "^" + std::to_string(k) + "/" + modulus);
  const CarpetParams params(field, m, depth);
  const std::uint64_t side = params.side();
  check_dense(side);

  std::vector<Code> codes;
  codes.reserve(static_cast<std::size_t>(side * side));
  std::uint64_t value = 0;
  while (codes.size() < side * side && in >> value) {
    if (value >= field.order()) throw UsageError("matrix text: entry out of range");
    codes.push_back(static_cast<Code>(value));
  }
  if (codes.size() != side * side) throw UsageError("matrix text: expected " + std::to_string(side * side) + " entries");
  return CarpetMatrix{params, Matrix(field, side, side, std::move(codes))};
}

// ---------------------------------------------------------------------------

json params_json(const FieldSpec& field, Code m) {
  return {{"field", field.descriptor()},
          {"p", field.characteristic()},
          {"k", field.degree()},
          {"m", m}};
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.i, c.j});
  return out;
}

json isometries_json(IsometrySet set) {
  json out = json::array();
  for (Isometry g : members(set)) out.push_back(std::string(isometry_name(g)));
  return out;
}

json symmetry_json(const SupportMatrix& block, const FieldSpec& field, Code m) {
  const IsometrySet group = symmetry_subgroup(block);
  json out = {{"isometries", isometries_json(group)}, {"order", group.count()}};
  if (field.in_prime_subfield(m)) {
    out["label"] = std::string(label_name(classify_symmetry(field, m).label));
  } else {
    out["label"] = nullptr;
  }
  return out;
}

json zeros_json(const ZeroReport& report) {
  return {{"zeros", cells_json(report.zeros)},
          {"regular", cells_json(report.regular)},
          {"regular_kind", std::string(regular_kind_name(report.kind))},
          {"sporadic", cells_json(report.sporadic)}};
}

json dimension_json(const Dimension& dim) {
  return {{"count", dim.count}, {"side", dim.side}, {"ln_ratio", dim.ln_ratio}};
}

json analysis_report(const FieldSpec& field, Code m, bool include_scan) {
  const SupportMatrix block = support(fundamental_block(field, m));
  json out = {{"params", params_json(field, m)}};
  out.update(zeros_json(zero_report(field, m)));
  out["symmetry"] = symmetry_json(block, field, m);
  out["dimension"] = dimension_json(fractal_dimension(block));
  if (include_scan) out["scan"] = scan_field(field);
  return out;
}

json tile_set_json(const TileSet& set) {
  json tiles = json::array();
  for (const Tile& t : set.tiles) {
    json regions;
    switch (t.kind) {
      case TileKind::kPascal:
        regions = {{"north", t.north}, {"west", t.west}, {"big_southeast", t.body}};
        break;
      case TileKind::kTypeThree:
        regions = {{"west", t.west}, {"northwest", t.northwest}, {"north", t.north}, {"big_body", t.body}};
        break;
      case TileKind::kTypeOne:
      case TileKind::kTypeTwo:
        regions = {{"body", t.body}};
        break;
    }
    tiles.push_back({{"kind", std::string(tile_kind_name(t.kind))}, {"regions", regions}});
  }
  return {{"case", std::string(tile_case_name(set.tile_case))},
          {"r", set.r},
          {"params", params_json(set.field, set.m)},
          {"tiles", tiles}};
}

}  // namespace carpets
