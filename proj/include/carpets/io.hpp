#ifndef CARPETS_IO_HPP
#define CARPETS_IO_HPP

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "carpets/analysis.hpp"
#include "carpets/carpet.hpp"
#include "carpets/tiling.hpp"

namespace carpets {

// Matrix text format:
//
//   p k c0,c1,...,ck m d
//   <p^d lines of p^d space-separated element codes>
//
// The modulus is written constant term first, exactly as in the field
// descriptor.
std::string matrix_header(const CarpetParams& params);
void write_matrix_text(std::ostream& out, const CarpetMatrix& matrix);
void write_matrix_text(std::ostream& out, RowStream rows, const CarpetParams& params);
/// UsageError on malformed input.
CarpetMatrix read_matrix_text(std::istream& in);

// JSON reports.
nlohmann::json params_json(const FieldSpec& field, Code m);
nlohmann::json cells_json(const std::vector<Cell>& cells);
nlohmann::json isometries_json(IsometrySet set);
nlohmann::json symmetry_json(const SupportMatrix& block, const FieldSpec& field, Code m);
nlohmann::json zeros_json(const ZeroReport& report);
nlohmann::json dimension_json(const Dimension& dim);
/// params, zeros, regular, sporadic, symmetry, dimension and, when asked
/// for, scan.
nlohmann::json analysis_report(const FieldSpec& field, Code m, bool include_scan);
nlohmann::json tile_set_json(const TileSet& set);

}  // namespace carpets

#endif  // CARPETS_IO_HPP
