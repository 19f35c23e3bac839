// Acceptance suite: runs every verification suite at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code 0 only when all
// criteria hold, including the stated runtime budgets.

#include <chrono>
#include <cstdio>
#include <string>

#include "psmono/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* summary;
  double time_budget_s;  // <= 0: no stated budget
};

constexpr Criterion kCriteria[] = {
    {1, "clifford", "generator relations, associativity, involutions, inverses", 5.0},
    {2, "fueter-monogenicity", "slice operator annihilates the Fueter family", 30.0},
    {3, "fueter-recursion", "recursion matches the permutation-sum oracle", 0.0},
    {4, "fueter-derivatives", "coordinate and radial derivative identities", 0.0},
    {5, "ck-consistency", "CK extension of monomials induces the Fueter family", 0.0},
    {6, "representation", "two-point reconstruction and slot independence", 0.0},
    {7, "gsr-bridge", "Cauchy-Riemann residuals and induced monogenicity", 0.0},
    {8, "kernel", "symbolic kernel monogenicity and homogeneity", 0.0},
    {9, "cauchy", "quadrature reproduction on and off the slice", 60.0},
    {10, "cauchy-pompeiu", "boundary minus solid reproduces non-monogenic stems", 0.0},
    {11, "laurent", "pairings match Taylor data; kernel series converges", 0.0},
    {12, "global-operators", "spherical Dirac and global operator identities", 0.0},
    {13, "grav-invariance", "cocycle, orbit preservation, conformal invariance", 60.0},
};

}  // namespace

int main(int argc, char** argv) {
  psmono::SuiteOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  int failures = 0;
  for (const auto& criterion : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    psmono::SuiteReport report;
    std::string error;
    try {
      report = psmono::run_suite(criterion.suite, options);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = error.empty() && report.pass;
    std::string note;
    if (!error.empty()) note = " exception: " + error;
    if (criterion.time_budget_s > 0 && elapsed > criterion.time_budget_s) {
      pass = false;
      note += " over time budget of " + std::to_string(criterion.time_budget_s) + "s";
    }
    double worst = 0.0;
    for (const auto& check : report.checks) {
      if (!check.pass)
        note += " [" + check.name + " max_err=" + std::to_string(check.max_err) + "]";
      worst = std::max(worst, check.tolerance > 0 ? check.max_err / check.tolerance : 0.0);
    }

    std::printf("[%s] %02d %-20s %-58s (%.2fs)%s\n", pass ? "PASS" : "FAIL",
                criterion.number, criterion.suite, criterion.summary, elapsed,
                note.c_str());
    failures += pass ? 0 : 1;
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
