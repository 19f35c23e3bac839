#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "psmono/mobius.hpp"

namespace psmono {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_err = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool pass = false;
  std::vector<CheckResult> checks;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_degree = -1;             // -1: suite default
  std::optional<double> tolerance;  // override of the suite's main tolerance
};

/// Registered suite names, in acceptance order.
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// Sampling helpers shared by the suites and the tests.
Omega random_omega(std::mt19937_64& rng, const SliceContext& ctx);
Multivector random_integer_multivector(std::mt19937_64& rng, int n, int lo = -3, int hi = 3);
Point random_point_in_ball(std::mt19937_64& rng, const SliceContext& ctx,
                           const std::vector<double>& center, double radius,
                           double min_trailing = 0.0);

/// Random right-coefficient combination of CK stems of monomials with
/// |k| <= max_degree; the backbone test family of generalized partial-slice
/// monogenic polynomials.
StemPolynomial random_fueter_combination(std::mt19937_64& rng, const SliceContext& ctx,
                                         int max_degree, int terms = 4);

}  // namespace psmono
