#include <doctest.h>

#include "carpets/errors.hpp"
#include "carpets/verify.hpp"

using namespace carpets;

TEST_CASE("lattice path enumeration") {
  CHECK(count_lattice_paths(0, 0) == 1);
  CHECK(count_lattice_paths(1, 1) == 3);
  CHECK(count_lattice_paths(2, 2) == 13);
  CHECK(count_lattice_paths(3, 0) == 1);
}

TEST_CASE("primes") {
  CHECK(primes_up_to(20) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_up_to(101).size() == 26);
}

TEST_CASE("every check passes at default bounds") {
  const auto results = run_all(VerifyBounds{});
  REQUIRE(results.size() == check_names().size());
  for (const CheckResult& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.cases > 0);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("single checks and restricted primes") {
  VerifyBounds bounds;
  bounds.only_p = 5;
  bounds.tensor_dmax = 3;
  const CheckResult tensor = run_check("tensor", bounds);
  CHECK(tensor.passed);
  CHECK(tensor.cases > 0);
  CHECK(run_check("delannoy", VerifyBounds{}).passed);
  CHECK_THROWS_AS(run_check("nonsense", VerifyBounds{}), UsageError);
  const auto json = to_json(tensor);
  CHECK(json["name"] == "tensor");
  CHECK(json["counterexample"].is_null());
}
