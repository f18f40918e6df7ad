#include "qwalk/supports.hpp"

#include <sstream>

#include <json.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {
namespace {

/// Sign of U_{xy} for the Grover matrix when the Kronecker term is present:
/// 2/deg - [inverse pair].
int grover_sign(int deg, bool inverse_pair) {
  if (!inverse_pair) return 1;
  if (deg == 1) return 1;
  if (deg == 2) return 0;
  return -1;
}

IntMatrix op_to_int(const OpMatrix& m) {
  IntMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.at(i, j) = 1;
  return out;
}

nlohmann::ordered_json violations_json(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [a, b] : v) arr.push_back({a, b});
  return arr;
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

EtaRegime regime_of(const Angle& eta) {
  if (!eta.in_principal_range()) {
    throw PreconditionError("eta must lie in [0, pi]; use the transpose for negative angles");
  }
  switch (eta.cos_sign()) {
    case 1: return EtaRegime::Acute;
    case 0: return EtaRegime::Right;
    default: return EtaRegime::Obtuse;
  }
}

std::string to_string(EtaRegime r) {
  switch (r) {
    case EtaRegime::Acute: return "acute";
    case EtaRegime::Right: return "right";
    case EtaRegime::Obtuse: return "obtuse";
  }
  return "?";
}

IntMatrix support(const OpMatrix& m, Sign sign) {
  if (!m.is_square()) throw PreconditionError("support needs a square matrix");
  IntMatrix out(m.rows());
  const int want = static_cast<int>(sign);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && m(i, j).real_part_sign() == want) out.at(i, j) = 1;
  return out;
}

SupportMatrix power_support(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta,
                            int n, Sign sign) {
  if (n < 1) throw PreconditionError("power must be at least 1");
  const OpMatrix u = build_U_theta(g, index, eta);
  OpMatrix acc = build_D_theta(g, index, eta);
  for (int i = 0; i < n; ++i) acc = acc * u;
  return {support(acc, sign), sign, n, eta};
}

SupportMatrix power_support(const Digraph& g, const Angle& eta, int n, Sign sign) {
  return power_support(g, SymmetricArcIndex(g), eta, n, sign);
}

IntMatrix square_support_fast(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta,
                              Sign sign) {
  const std::size_t m = index.size();
  IntMatrix out(m);
  const int want = static_cast<int>(sign);
  const int cos_one_way = eta.cos_sign();
  for (std::size_t a = 0; a < m; ++a) {
    const int oa = index.origin(a);
    const int deg_oa = g.degree(oa);
    for (std::size_t b = 0; b < m; ++b) {
      const int tb = index.terminus(b);
      if (tb == oa) continue;
      const int z = index.find(tb, oa);
      if (z < 0) continue;
      const auto zu = static_cast<std::size_t>(z);
      const int rot = g.is_digon(tb, oa) ? 1 : cos_one_way;
      const int s = rot * grover_sign(deg_oa, SymmetricArcIndex::inverse(zu) == a) *
                    grover_sign(g.degree(tb), SymmetricArcIndex::inverse(b) == zu);
      if (s == want) out.at(a, b) = 1;
    }
  }
  return out;
}

namespace {

struct SquareParts {
  OpMatrix dtu2;       // D_theta U_theta^2
  OpMatrix grover_sq;  // U^2 of G^pm
  IntMatrix r;
};

SquareParts square_parts(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta) {
  const OpMatrix u = build_U_theta(g, index, eta);
  const OpMatrix grover = build_grover_U(g, index);
  return {build_D_theta(g, index, eta) * u * u, grover * grover, op_to_int(build_R(g, index))};
}

void compare_regime(const SquareParts& parts, SquareRegimeReport& rep) {
  const IntMatrix lhs = support(parts.dtu2, rep.sign);
  const IntMatrix same = support(parts.grover_sq, rep.sign);
  IntMatrix rhs;
  switch (rep.regime) {
    case EtaRegime::Acute: rhs = same; break;
    case EtaRegime::Right: rhs = same.hadamard(parts.r); break;
    case EtaRegime::Obtuse: {
      const IntMatrix other = support(parts.grover_sq, opposite(rep.sign));
      rhs = same.hadamard(parts.r) +
            other.hadamard(IntMatrix::all_ones(lhs.size()) - parts.r);
      break;
    }
  }
  rep.support_trace = lhs.trace();
  for (std::size_t a = 0; a < lhs.size(); ++a)
    for (std::size_t b = 0; b < lhs.size(); ++b)
      if (lhs(a, b) != rhs(a, b)) rep.violations.emplace_back(a, b);
}

/// Fills the precondition fields; false when nothing should be evaluated.
bool regime_precondition(const Digraph& g, bool probe, SquareRegimeReport& rep) {
  if (g.arc_count() == 0) {
    rep.precondition_note = "no arcs";
    return false;
  }
  const auto k = is_regular(g);
  if (k && *k >= 3) {
    rep.precondition_met = true;
    return true;
  }
  rep.precondition_note = "needs a k-regular digraph with k >= 3";
  rep.probed = probe;
  return probe;
}

}  // namespace

SquareRegimeReport verify_square_support_regimes(const Digraph& g, const Angle& eta, Sign sign,
                                                 bool probe) {
  SquareRegimeReport rep;
  rep.sign = sign;
  rep.regime = regime_of(eta);
  if (!regime_precondition(g, probe, rep)) return rep;
  const SymmetricArcIndex index(g);
  compare_regime(square_parts(g, index, eta), rep);
  return rep;
}

std::array<SquareRegimeReport, 2> verify_square_support_regimes(const Digraph& g,
                                                                const Angle& eta, bool probe) {
  std::array<SquareRegimeReport, 2> reps;
  reps[0].sign = Sign::Plus;
  reps[1].sign = Sign::Minus;
  const EtaRegime regime = regime_of(eta);
  bool run = true;
  for (auto& rep : reps) {
    rep.regime = regime;
    run = regime_precondition(g, probe, rep);
  }
  if (!run) return reps;
  const SymmetricArcIndex index(g);
  const SquareParts parts = square_parts(g, index, eta);
  for (auto& rep : reps) compare_regime(parts, rep);
  return reps;
}

std::string SquareRegimeReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = "square-support-regimes";
  j["precondition_met"] = precondition_met;
  if (!precondition_note.empty()) j["precondition_note"] = precondition_note;
  j["probe"] = probed;
  j["regime"] = to_string(regime);
  j["sign"] = to_string(sign);
  j["violations"] = violations_json(violations);
  j["holds"] = holds();
  return j.dump();
}

long long digon_count_via_trace(const Digraph& g, const Angle& eta) {
  const SymmetricArcIndex index(g);
  return power_support(g, index, eta, 2, Sign::Plus).matrix.trace() / 2;
}

IdentityReport verify_square_negative_identity(const Digraph& g) {
  IdentityReport rep;
  const auto k = is_regular(g);
  if (!g.is_graph() || g.arc_count() == 0) {
    rep.precondition_note = "needs an undirected graph (every arc in a digon)";
    return rep;
  }
  if (!k || *k < 3) {
    rep.precondition_note = "needs a k-regular graph with k >= 3";
    return rep;
  }
  rep.precondition_met = true;
  const SymmetricArcIndex index(g);
  const OpMatrix u = build_grover_U(g, index);
  const IntMatrix u_plus = support(u, Sign::Plus);
  const IntMatrix s = op_to_int(build_S(g, index));
  const IntMatrix lhs = support(u * u, Sign::Minus);
  const IntMatrix rhs = s * u_plus + u_plus * s;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = 0; b < index.size(); ++b)
      if (lhs(a, b) != rhs(a, b)) rep.violations.emplace_back(a, b);
  return rep;
}

std::string IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = "square-negative-identity";
  j["precondition_met"] = precondition_met;
  if (!precondition_note.empty()) j["precondition_note"] = precondition_note;
  j["violations"] = violations_json(violations);
  j["holds"] = holds();
  return j.dump();
}

PairClass classify_arc_pair(const Digraph& g, const SymmetricArcIndex& index, std::size_t a,
                            std::size_t b) {
  if (a == b) return PairClass::Equal;
  if (index.origin(a) == index.origin(b)) return PairClass::SameOrigin;
  if (index.terminus(a) == index.terminus(b)) return PairClass::SameTerminus;
  const int tb = index.terminus(b);
  const int oa = index.origin(a);
  if (tb != oa && g.adjacent(tb, oa)) return PairClass::Linked;
  return PairClass::None;
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Equal: return "i";
    case PairClass::SameOrigin: return "ii";
    case PairClass::SameTerminus: return "iii";
    case PairClass::Linked: return "iv";
    case PairClass::None: return "none";
  }
  return "?";
}

std::string dump_support(const IntMatrix& m, const SymmetricArcIndex& index) {
  std::ostringstream os;
  os << "#";
  for (const auto& arc : index.arcs()) os << ' ' << arc.from << "->" << arc.to;
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace qwalk
