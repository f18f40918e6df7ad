#include <doctest.h>

#include <cmath>

#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/supports.hpp"
#include "qwalk/verification.hpp"

using namespace qwalk;

namespace {

// Sign pattern of U_theta^2 from floating matrices.
IntMatrix float_square_support(const Digraph& g, const Angle& eta, Sign sign) {
  const SymmetricArcIndex idx(g);
  const Eigen::MatrixXcd u = build_U_theta(g, idx, eta).to_complex();
  const Eigen::MatrixXcd d = build_D_theta(g, idx, eta).to_complex();
  const Eigen::MatrixXcd m = d * u * u;
  IntMatrix out(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const double re = m(a, b).real();
      out.at(a, b) = sign == Sign::Plus ? re > 1e-12 : re < -1e-12;
    }
  return out;
}

}  // namespace

TEST_CASE("support of simple matrices") {
  const IntMatrix id = support(OpMatrix::identity(IndexSpace::Arc, 4), Sign::Plus);
  CHECK(id == IntMatrix::identity(4));
  CHECK(support(OpMatrix::identity(IndexSpace::Arc, 4), Sign::Minus).is_zero());
}

TEST_CASE("Grover supports of regular graphs") {
  const Digraph k4 = make_complete(4);
  const SymmetricArcIndex idx(k4);
  const OpMatrix u = build_grover_U(k4, idx);
  const IntMatrix s = support(build_S(k4, idx), Sign::Plus);
  const SqrtScaledMatrix k = build_K(k4, idx);
  // k S K*K - S has integer entries for a 3-regular graph
  const OpMatrix kk = (k.adjoint() * k).to_exact();
  const OpMatrix expected = (build_S(k4, idx) * kk).scaled(CycScalar(3)) - build_S(k4, idx);
  CHECK(support(u, Sign::Plus) == support(expected, Sign::Plus));
  for (const Digraph& g : regular_graphs(6, 3)) {
    const SymmetricArcIndex gi(g);
    CHECK(support(build_grover_U(g, gi), Sign::Minus) == support(build_S(g, gi), Sign::Plus));
  }
  CHECK_FALSE(s.is_zero());
}

TEST_CASE("first power is the support of the walk") {
  for (const Digraph& g : digraphs_with_arcs(3, 3))
    for (const Angle& eta : sweep_angles())
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const SymmetricArcIndex idx(g);
        CHECK(power_support(g, idx, eta, 1, sign).matrix ==
              support(build_grover_U(g, idx), sign));
      }
}

TEST_CASE("digon-free digraphs have no positive square support at a right angle") {
  const Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(power_support(tri, Angle(1, 2), 2, Sign::Plus).matrix.is_zero());
  const Digraph tour(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 1}, {2, 3}});
  CHECK(power_support(tour, Angle(1, 2), 2, Sign::Plus).matrix.is_zero());
}

TEST_CASE("fast square support matches matrix powers") {
  for (const Digraph& g : digraphs_with_arcs(2, 4))
    for (const Angle& eta : sweep_angles())
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const SymmetricArcIndex idx(g);
        CHECK(square_support_fast(g, idx, eta, sign) ==
              power_support(g, idx, eta, 2, sign).matrix);
      }
}

TEST_CASE("square supports against floating sign scan") {
  const auto [g, idx] = worked_example();
  for (const Angle& eta : sweep_angles())
    for (Sign sign : {Sign::Plus, Sign::Minus})
      CHECK(power_support(g, eta, 2, sign).matrix == float_square_support(g, eta, sign));
  for (const Digraph& h : {make_Y(2, 3), make_Y(2, 5), make_complete(4)})
    for (const Angle& eta : sweep_angles())
      CHECK(power_support(h, eta, 2, Sign::Plus).matrix == float_square_support(h, eta, Sign::Plus));
}

TEST_CASE("square-support regimes on regular digraphs") {
  const auto acute = verify_square_support_regimes(make_complete(4), Angle(1, 3), Sign::Plus);
  CHECK(acute.precondition_met);
  CHECK(acute.regime == EtaRegime::Acute);
  CHECK(acute.holds());
  const auto obtuse = verify_square_support_regimes(make_Y(4, 4), Angle(2, 3), Sign::Plus);
  CHECK(obtuse.regime == EtaRegime::Obtuse);
  CHECK(obtuse.holds());
  CHECK(regime_of(Angle(1, 2)) == EtaRegime::Right);
  for (const Digraph& g : regular_digraphs(5, 3)) {
    for (const auto& rep : verify_square_support_regimes(g, Angle(1, 2))) {
      CHECK(rep.precondition_met);
      CHECK(rep.violations.empty());
    }
  }
  const auto rejected = verify_square_support_regimes(make_cycle(3), Angle(1, 2), Sign::Plus);
  CHECK_FALSE(rejected.precondition_met);
  CHECK_FALSE(rejected.holds());
  const auto probed = verify_square_support_regimes(make_cycle(3), Angle(1, 2), Sign::Plus, true);
  CHECK(probed.probed);
  CHECK(probed.to_json().find("probe") != std::string::npos);
}

TEST_CASE("digon count from the square trace") {
  for (int n = 4; n <= 6; ++n) {
    CHECK(digon_count_via_trace(make_complete(n), Angle(1, 1)) == n * (n - 1) / 2);
    for (int a = 0; a <= n; ++a) {
      const Digraph y = make_Y(a, n);
      if (is_regular(y).value_or(0) < 3) continue;
      CHECK(digon_count_via_trace(y, Angle(2, 3)) == static_cast<long long>(digons(y).size()));
    }
  }
  CHECK(digon_count_via_trace(make_complete(4), Angle(1, 4)) == 6);
}

TEST_CASE("digon count outside the regular hypothesis follows the sign scan") {
  // The trace formula needs k >= 3; these inputs fall outside it.
  const Digraph k3 = make_complete(3);
  CHECK(2 * digon_count_via_trace(k3, Angle(1, 1)) ==
        float_square_support(k3, Angle(1, 1), Sign::Plus).trace());
  const auto [g, idx] = worked_example();
  CHECK(2 * digon_count_via_trace(g, Angle(1, 2)) ==
        float_square_support(g, Angle(1, 2), Sign::Plus).trace());
  const Digraph y = make_Y(2, 3);
  CHECK(2 * digon_count_via_trace(y, Angle(2, 3)) ==
        float_square_support(y, Angle(2, 3), Sign::Plus).trace());
}

TEST_CASE("negative square identity on regular graphs") {
  CHECK(verify_square_negative_identity(make_complete(4)).holds());
  CHECK(verify_square_negative_identity(make_complete(5)).holds());
  const auto rep = verify_square_negative_identity(make_cycle(3));
  CHECK_FALSE(rep.precondition_met);
  for (const Digraph& g : regular_graphs(7, 3)) CHECK(verify_square_negative_identity(g).holds());
}

TEST_CASE("arc pair classes") {
  const auto [g, idx] = worked_example();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    CHECK(classify_arc_pair(g, idx, a, a) == PairClass::Equal);
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const PairClass c = classify_arc_pair(g, idx, a, b);
      if (a != b && idx.origin(a) == idx.origin(b)) CHECK(c == PairClass::SameOrigin);
      if (a != b && idx.origin(a) != idx.origin(b) && idx.terminus(a) == idx.terminus(b))
        CHECK(c == PairClass::SameTerminus);
    }
  }
  CHECK_FALSE(dump_support(IntMatrix::identity(idx.size()), idx).empty());
}
