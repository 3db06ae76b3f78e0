// carpets: command-line front end.
//
//   carpets generate  --field 3 --m 1 --depth 2 [--method recurrence|tensor|stream] [-o FILE]
//   carpets classify  --field 7 --m 3
//   carpets zeros     --field 13 --m 1
//   carpets dimension --field 5 --m 1
//   carpets scan      --field 19^2/1,0,1
//   carpets tiles     --field 3 --m 1 [--assemble D]
//   carpets verify    [--check NAME] [--p P] [--dmax D]
//   carpets render    --field 3 --m 1 --depth 3 --format pbm|ppm [--symmetric] [-o FILE]
//
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 capacity guard.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "carpets/analysis.hpp"
#include "carpets/carpet.hpp"
#include "carpets/errors.hpp"
#include "carpets/finite_field.hpp"
#include "carpets/io.hpp"
#include "carpets/render.hpp"
#include "carpets/tiling.hpp"
#include "carpets/verify.hpp"

namespace {

using namespace carpets;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

struct Options {
  std::string field = "3";
  std::string m = "1";
  unsigned depth = 1;
  std::string method = "recurrence";
  std::string output;
  std::string format = "pbm";
  bool symmetric = false;
  unsigned assemble_depth = 0;
  std::string check;
  std::optional<std::uint32_t> verify_p;
  std::optional<unsigned> verify_dmax;
};

// Negative values are read as integers mapped into the prime subfield, so
// "--m -1" means -1 in any field.
Code parse_m(const FieldSpec& field, const std::string& text) {
  std::int64_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("m must be an integer encoding, got '" + text + "'");
  }
  if (value < 0) return field.from_integer(value);
  return decode(value, field).code();
}

// Runs fn with an output stream bound to the -o path, or stdout.
template <typename Fn>
void with_output(const std::string& path, bool binary, Fn fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw UsageError("write to '" + path + "' failed");
}

void emit_json(const Options& opt, const json& report) {
  with_output(opt.output, false, [&](std::ostream& out) { out << report.dump(2) << '\n'; });
}

int cmd_generate(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const CarpetParams params(field, parse_m(field, opt.m), opt.depth);
  if (opt.method == "stream") {
    with_output(opt.output, false, [&](std::ostream& out) { write_matrix_text(out, stream_rows(params), params); });
    return kOk;
  }
  const CarpetMatrix matrix =
      opt.method == "tensor" ? tensor_construction(params) : generate_recurrence(params);
  with_output(opt.output, false, [&](std::ostream& out) { write_matrix_text(out, matrix); });
  return kOk;
}

int cmd_classify(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const Code m = parse_m(field, opt.m);
  const SupportMatrix block = support(fundamental_block(field, m));
  json report = {{"params", params_json(field, m)}};
  report.update(symmetry_json(block, field, m));
  emit_json(opt, report);
  return kOk;
}

int cmd_zeros(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const Code m = parse_m(field, opt.m);
  json report = {{"params", params_json(field, m)}};
  report.update(zeros_json(zero_report(field, m)));
  json adjacent = json::array();
  for (const auto& [a, b] : edge_adjacent_zeros(field, m)) adjacent.push_back({{a.i, a.j}, {b.i, b.j}});
  report["edge_adjacent"] = adjacent;
  emit_json(opt, report);
  return kOk;
}

int cmd_dimension(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const Code m = parse_m(field, opt.m);
  json report = {{"params", params_json(field, m)}};
  report.update(dimension_json(fractal_dimension(support(fundamental_block(field, m)))));
  emit_json(opt, report);
  return kOk;
}

int cmd_scan(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  emit_json(opt, {{"field", field.descriptor()}, {"carpets_with_zeros", scan_field(field)}});
  return kOk;
}

int cmd_tiles(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const Code m = parse_m(field, opt.m);
  const TileSet set = build_tile_set(field, m);
  json report = tile_set_json(set);
  if (opt.assemble_depth > 0) {
    const Assembly assembled = assemble(set, opt.assemble_depth);
    const CarpetMatrix expected = generate_recurrence(CarpetParams(field, m, opt.assemble_depth));
    report["assembly"] = {{"depth", opt.assemble_depth},
                          {"tiles_placed", assembled.tiles_placed},
                          {"ambiguous", cells_json(assembled.ambiguous)},
                          {"matches_recurrence", assembled.colors == expected.values}};
  }
  emit_json(opt, report);
  return kOk;
}

int cmd_verify(const Options& opt) {
  VerifyBounds bounds;
  bounds.only_p = opt.verify_p;
  if (opt.verify_dmax) {
    bounds.tensor_dmax = *opt.verify_dmax;
    bounds.extension_dmax = std::min(bounds.extension_dmax, *opt.verify_dmax);
    bounds.symmetry_dmax = *opt.verify_dmax;
    bounds.tiling_dmax = *opt.verify_dmax;
  }
  std::vector<CheckResult> results;
  if (opt.check.empty()) {
    results = run_all(bounds);
  } else {
    results.push_back(run_check(opt.check, bounds));
  }
  json checks = json::array();
  bool all_passed = true;
  for (const CheckResult& r : results) {
    checks.push_back(to_json(r));
    all_passed = all_passed && r.passed;
  }
  emit_json(opt, {{"passed", all_passed}, {"checks", checks}});
  return all_passed ? kOk : kVerifyFailed;
}

int cmd_render(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const CarpetParams params(field, parse_m(field, opt.m), opt.depth);
  if (opt.format == "pbm") {
    with_output(opt.output, false, [&](std::ostream& out) { write_pbm(out, stream_rows(params)); });
  } else {
    const Palette palette = default_palette(field, opt.symmetric);
    with_output(opt.output, true, [&](std::ostream& out) { write_ppm(out, stream_rows(params), palette); });
  }
  return kOk;
}

void add_carpet_flags(CLI::App* cmd, Options& opt, bool with_depth) {
  cmd->add_option("--field", opt.field, "field descriptor: p, p^k or p^k/c0,...,ck")->required();
  cmd->add_option("--m", opt.m, "parameter m as an element encoding")->required();
  if (with_depth) cmd->add_option("--depth,-d", opt.depth, "depth d >= 1")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar carpets over finite fields"};
  app.require_subcommand(1);
  Options opt;

  auto* generate = app.add_subcommand("generate", "write the matrix M_d in text form");
  add_carpet_flags(generate, opt, true);
  generate->add_option("--method", opt.method)->check(CLI::IsMember({"recurrence", "tensor", "stream"}));

  auto* classify = app.add_subcommand("classify", "symmetry group of the fundamental block");
  add_carpet_flags(classify, opt, false);

  auto* zeros = app.add_subcommand("zeros", "zero set split into regular and sporadic zeros");
  add_carpet_flags(zeros, opt, false);

  auto* dimension = app.add_subcommand("dimension", "similarity dimension from the nonzero count");
  add_carpet_flags(dimension, opt, false);

  auto* scan = app.add_subcommand("scan", "canonical m whose carpet has zeros");
  scan->add_option("--field", opt.field)->required();

  auto* tiles = app.add_subcommand("tiles", "tile catalog, optionally assembled to a depth");
  add_carpet_flags(tiles, opt, false);
  tiles->add_option("--assemble", opt.assemble_depth, "assemble the quadrant to this depth");

  auto* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--check", opt.check)->check(CLI::IsMember(check_names()));
  verify->add_option("--p", opt.verify_p, "restrict prime loops to this p");
  verify->add_option("--dmax", opt.verify_dmax, "maximum depth for depth-dependent checks")
      ->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "write a PBM or PPM image of M_d");
  add_carpet_flags(render, opt, true);
  render->add_option("--format", opt.format)->check(CLI::IsMember({"pbm", "ppm"}));
  render->add_flag("--symmetric", opt.symmetric, "fold colours so that k and p-k match");

  for (auto* cmd : {generate, classify, zeros, dimension, scan, tiles, verify, render}) {
    cmd->add_option("-o,--output", opt.output, "output path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(opt);
    if (*classify) return cmd_classify(opt);
    if (*zeros) return cmd_zeros(opt);
    if (*dimension) return cmd_dimension(opt);
    if (*scan) return cmd_scan(opt);
    if (*tiles) return cmd_tiles(opt);
    if (*verify) return cmd_verify(opt);
    if (*render) return cmd_render(opt);
  } catch (const CapacityError& e) {
    std::cerr << "carpets: " << e.what() << '\n';
    return kCapacity;
  } catch (const InternalError& e) {
    std::cerr << "carpets: internal error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "carpets: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "carpets: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
