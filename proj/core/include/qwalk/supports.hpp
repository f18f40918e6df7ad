#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/digraph.hpp"
#include "qwalk/op_matrix.hpp"

namespace qwalk {

enum class Sign { Plus = 1, Minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
std::string to_string(Sign s);

/// Where eta sits in [0, pi]: below, at, or above pi/2.
enum class EtaRegime { Acute, Right, Obtuse };

/// Throws PreconditionError unless 0 <= eta <= pi.
EtaRegime regime_of(const Angle& eta);
std::string to_string(EtaRegime r);

/// 0/1 matrix on the arc space together with what it is the support of.
struct SupportMatrix {
  IntMatrix matrix;
  Sign sign = Sign::Plus;
  int power = 1;
  Angle eta;
};

/// 1 where the real part of the entry has the requested sign, tested exactly.
IntMatrix support(const OpMatrix& m, Sign sign);

/// Support of Re(D_theta U_theta^n), computed from exact matrix powers.
SupportMatrix power_support(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta,
                            int n, Sign sign);
SupportMatrix power_support(const Digraph& g, const Angle& eta, int n, Sign sign);

/// Support of Re(D_theta U_theta^2) without matrix arithmetic.
///
/// Only z = (t(b), o(a)) can contribute to the (a, b) entry of
/// U D_theta^{-1} U, so its real part is cos theta(z) U_{az} U_{zb}. The sign of
/// each factor is read off the degrees. Valid for every digraph, eta in [-pi, pi].
IntMatrix square_support_fast(const Digraph& g, const SymmetricArcIndex& index,
                              const Angle& eta, Sign sign);

/// Entrywise check of the three-regime description of the square support in
/// terms of (U^2)^+-, R and J, where U is the Grover matrix of G^pm.
struct SquareRegimeReport {
  bool precondition_met = false;
  std::string precondition_note;
  bool probed = false;
  EtaRegime regime = EtaRegime::Acute;
  Sign sign = Sign::Plus;
  /// Violating (a, b) arc-index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  /// Trace of the evaluated support.
  long long support_trace = 0;

  bool holds() const { return (precondition_met || probed) && violations.empty(); }
  std::string to_json() const;
};

/// Requires a k-regular digraph with k >= 3. With `probe`, other digraphs are
/// still evaluated and the report is marked as an empirical probe.
SquareRegimeReport verify_square_support_regimes(const Digraph& g, const Angle& eta, Sign sign,
                                                 bool probe = false);
/// Both signs from one evaluation of D_theta U_theta^2: {+, -}.
std::array<SquareRegimeReport, 2> verify_square_support_regimes(const Digraph& g,
                                                                const Angle& eta,
                                                                bool probe = false);

/// Tr(U_theta^(2,+)) / 2.
long long digon_count_via_trace(const Digraph& g, const Angle& eta);

struct IdentityReport {
  bool precondition_met = false;
  std::string precondition_note;
  std::vector<std::pair<std::size_t, std::size_t>> violations;

  bool holds() const { return precondition_met && violations.empty(); }
  std::string to_json() const;
};

/// (U^2)^- = S U^+ + U^+ S for an undirected k-regular graph with k >= 3.
IdentityReport verify_square_negative_identity(const Digraph& g);

/// Arc pairs (a, b) for which a single z carries the (a, b) entry of U^2.
enum class PairClass {
  Equal,         // a = b
  SameOrigin,    // o(a) = o(b), a != b
  SameTerminus,  // t(a) = t(b), a != b
  Linked,        // t(b) adjacent to o(a), none of the above
  None,
};

PairClass classify_arc_pair(const Digraph& g, const SymmetricArcIndex& index, std::size_t a,
                            std::size_t b);
std::string to_string(PairClass c);

/// 0/1 grid preceded by a header naming the arcs in index order.
std::string dump_support(const IntMatrix& m, const SymmetricArcIndex& index);

}  // namespace qwalk
