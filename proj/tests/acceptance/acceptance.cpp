// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qwalk/verification.hpp"

using namespace qwalk;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<CheckResult>()> run;
};

bool report(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> parts;
  std::string error;
  try {
    parts = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = error.empty() && !parts.empty() && elapsed <= c.budget_seconds;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  double worst = 0.0;
  for (const auto& p : parts) {
    ok = ok && p.passed();
    cases += p.cases;
    failures += p.failures;
    worst = std::max(worst, p.worst_deviation);
  }

  char line[256];
  std::snprintf(line, sizeof line, "%s criterion %d: %s [%llu cases, %llu violations, %.2f s / %.0f s budget",
                ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                static_cast<unsigned long long>(cases), static_cast<unsigned long long>(failures),
                elapsed, c.budget_seconds);
  std::cout << line;
  if (worst > 0) std::cout << ", worst deviation " << worst;
  std::cout << "]\n";
  if (!error.empty()) std::cout << "    error: " << error << '\n';
  for (const auto& p : parts) {
    if (p.passed()) continue;
    std::cout << "    " << p.summary() << '\n';
    for (const auto& s : p.samples) std::cout << "      " << s << '\n';
  }
  std::cout.flush();
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example K, C, S_theta, U_theta at eta = pi/2, exact", 1.0,
       [] { return std::vector<CheckResult>{check_worked_example()}; }},
      {2, "exact operator identities, orders 2-4, five angles", 120.0,
       [] {
         return std::vector<CheckResult>{
             check_operator_identities(digraphs_with_arcs(2, 4), sweep_angles())};
       }},
      {3, "spectral mapping vs direct eigenvalues within 1e-8, connected orders <= 4", 600.0,
       [] {
         return std::vector<CheckResult>{
             check_spectral_mapping(digraphs_with_arcs(2, 4), regime_angles(), 1e-8)};
       }},
      {4, "closed-form spectrum of Y_{a,n-a}, n = 3..8, exact and within 1e-8", 600.0,
       [] { return std::vector<CheckResult>{check_Y_spectrum(3, 8, sweep_angles(), 1e-8)}; }},
      {5, "square-support regimes and trace on regular k >= 3 digraphs <= 6, (U^2)^- identity on "
          "regular graphs <= 7",
       600.0,
       [] {
         auto [regimes, trace] =
             check_square_support_regimes(regular_digraphs(6, 3), regime_angles());
         return std::vector<CheckResult>{regimes, trace,
                                         check_square_negative_identity(regular_graphs(7, 3))};
       }},
      {6, "square supports of G and G^-1 share polynomials, orders <= 4", 600.0,
       [] {
         return std::vector<CheckResult>{check_transpose_invariance(
             digraphs_with_arcs(2, 4), {Angle(1, 2), Angle(2, 3)})};
       }},
      {7, "six cospectral tables, orders 2-5, every cell", 1800.0,
       [] { return std::vector<CheckResult>{check_table_reproduction(2, 5)}; }},
      {8, "Y_{a,6-a} at eta = 2pi/3: square supports pair a with 6-a, H_eta merges all", 600.0,
       [] { return std::vector<CheckResult>{check_half_identification(6, Angle(2, 3))}; }},
      {9, "invariant battery", 900.0, [] { return run_invariant_suite(); }},
  };

  bool all = true;
  for (const auto& c : criteria) all = report(c) && all;
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
