#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/cyclotomic.hpp"
#include "qwalk/digraph.hpp"

namespace qwalk {

/// Outcome of one sweep: how many cases ran and which of them failed.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// The first few failure descriptions.
  std::vector<std::string> samples;
  /// Largest floating deviation seen, for tolerance-based checks.
  double worst_deviation = 0.0;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what);
  /// One line: "name: N cases, F failures (t s)".
  std::string summary() const;
};

// -- sweep inputs ---------------------------------------------------------

/// 0, pi/3, pi/2, 2pi/3, pi.
std::vector<Angle> sweep_angles();
/// pi/3, pi/2, 2pi/3: one angle per regime.
std::vector<Angle> regime_angles();

/// Non-isomorphic digraphs of orders lo..hi that have at least one arc.
std::vector<Digraph> digraphs_with_arcs(int lo, int hi, int jobs = 1);
/// Non-isomorphic k-regular digraphs with k >= min_degree, orders 2..max_order.
std::vector<Digraph> regular_digraphs(int max_order, int min_degree, int jobs = 1);
/// Non-isomorphic undirected k-regular graphs (every edge a digon) with
/// k >= min_degree, orders 2..max_order.
std::vector<Digraph> regular_graphs(int max_order, int min_degree);

/// The four-vertex example digraph with arcs listed in the published order
/// a, a^-1, b, b^-1, c, c^-1, d, d^-1.
std::pair<Digraph, SymmetricArcIndex> worked_example();

// -- checks ---------------------------------------------------------------

/// K, C, S_theta and U_theta of the example at eta = pi/2 against the
/// published matrices, entry by entry.
CheckResult check_worked_example();

/// Exact operator identities: KK* = I, C self-adjoint involution, S^2 = I,
/// S_theta self-adjoint unitary, U_theta unitary, K S_theta K* = normalized
/// H_eta, D_theta S_theta = S, D_theta U_theta = Grover U, U_{-eta}(G) =
/// U_eta(G^-1), the regular route for k >= 3, the incidence identities and
/// self-adjointness of H_eta.
CheckResult check_operator_identities(const std::vector<Digraph>& digraphs,
                                      const std::vector<Angle>& etas);

/// Spec(U_theta) from the mapping route against a direct complex eigensolve;
/// weakly connected inputs only.
CheckResult check_spectral_mapping(const std::vector<Digraph>& digraphs,
                                   const std::vector<Angle>& etas, double tolerance);

/// Floating eigenvalues of the normalized matrix stay within [-1, 1] and their
/// +-1 multiplicities equal the cycle classification.
CheckResult check_normalized_spectrum(const std::vector<Digraph>& digraphs,
                                      const std::vector<Angle>& etas, double tolerance);

/// Closed-form Spec(U_theta(Y_{a,n-a})) for every a, checked through exact
/// multiplicities and through both floating routes.
CheckResult check_Y_spectrum(int n_min, int n_max, const std::vector<Angle>& etas,
                             double tolerance);

/// The three-regime description of the square support for both signs, and
/// the trace identity (|E| below pi/2, number of digons from pi/2 on).
/// Returns {regime check, trace check}.
std::pair<CheckResult, CheckResult> check_square_support_regimes(
    const std::vector<Digraph>& regular, const std::vector<Angle>& etas);

/// (U^2)^- = S U^+ + U^+ S for undirected regular graphs.
CheckResult check_square_negative_identity(const std::vector<Digraph>& graphs);

/// Square supports of G and G^-1 coincide, together with their characteristic
/// polynomials.
CheckResult check_transpose_invariance(const std::vector<Digraph>& digraphs,
                                       const std::vector<Angle>& etas);

/// Every cell of the six reference tables for orders lo..hi, plus the
/// composition rows summing to the number of classes.
CheckResult check_table_reproduction(int lo, int hi, int jobs = 1);

/// Square-support classes of Y_{a,n-a} separate a from every b except n-a,
/// while all of them share one H_eta polynomial.
CheckResult check_half_identification(int n, const Angle& eta);

// -- invariant battery ----------------------------------------------------

struct SuiteOptions {
  /// Largest order of the exhaustive operator and spectrum sweeps.
  int max_order = 4;
  /// Largest order of regular digraphs in the support sweeps.
  int regular_max_order = 5;
  /// Largest order of undirected regular graphs.
  int graph_max_order = 7;
  /// Largest order for table reproduction; 0 skips the tables.
  int table_max_order = 5;
  int jobs = 1;
  std::uint64_t seed = 0x5eed2024;
};

/// Runs every invariant check in a fixed order. `on_result` fires after each.
std::vector<CheckResult> run_invariant_suite(
    const SuiteOptions& options = {},
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace qwalk
