#ifndef CARPETS_VERIFY_HPP
#define CARPETS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "carpets/analysis.hpp"

namespace carpets {

// Machine checks of the structural identities, run over a finite parameter
// grid. Each check reports the number of cases examined and the first
// counterexample it met.

struct VerifyBounds {
  std::optional<std::uint32_t> only_p;  // restrict every prime loop to this p
  unsigned tensor_dmax = 3;
  unsigned extension_dmax = 2;
  std::uint32_t tensor_pmax = 7;
  std::uint32_t duality_pmax = 31;
  std::uint32_t symmetry_pmax = 31;
  std::uint32_t symmetry_depth_pmax = 7;
  unsigned symmetry_dmax = 3;
  std::uint32_t diagonal_pmax = 101;
  std::uint64_t central_sum_nmax = 200;
  std::uint32_t cross_pmax = 101;
  std::uint32_t delannoy_pmax = 13;
  std::uint64_t delannoy_path_nmax = 6;
  std::uint32_t bounds_pmax = 101;
  std::uint32_t tiling_pmax = 7;
  unsigned tiling_dmax = 2;
  std::uint32_t sporadic_pmax = 599;
};

struct CheckResult {
  std::string name;
  std::string statement;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Lattice paths from (0,0) to (n,k) with unit South, East and South-East
/// steps, counted by explicit enumeration.
std::uint64_t count_lattice_paths(std::uint64_t n, std::uint64_t k);

/// Names accepted by run_check, in the order run_all uses.
const std::vector<std::string>& check_names();

/// UsageError for an unknown name.
CheckResult run_check(std::string_view name, const VerifyBounds& bounds);
std::vector<CheckResult> run_all(const VerifyBounds& bounds);

nlohmann::json to_json(const CheckResult& result);

}  // namespace carpets

#endif  // CARPETS_VERIFY_HPP
