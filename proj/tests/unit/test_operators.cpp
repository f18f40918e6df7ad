#include <doctest.h>

#include <cmath>
#include <complex>

#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/verification.hpp"

using namespace qwalk;

namespace {

const std::vector<Digraph>& sample_digraphs() {
  static const std::vector<Digraph> pool = [] {
    std::vector<Digraph> v = digraphs_with_arcs(2, 4);
    v.push_back(make_complete(5));
    v.push_back(make_Y(2, 5));
    v.push_back(make_cycle(6));
    return v;
  }();
  return pool;
}

// Grover matrix straight from its entrywise definition.
OpMatrix grover_by_definition(const Digraph& g, const SymmetricArcIndex& idx) {
  const Digraph u = underlying(g);
  OpMatrix m(IndexSpace::Arc, idx.size(), IndexSpace::Arc, idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      Rational v = 0;
      if (idx.terminus(b) == idx.origin(a)) v += Rational(2, u.degree(idx.origin(a)));
      if (idx.arc(a).from == idx.arc(b).to && idx.arc(a).to == idx.arc(b).from) v -= 1;
      m.set(a, b, CycScalar(v));
    }
  return m;
}

}  // namespace

TEST_CASE("worked example matrices") {
  const CheckResult r = check_worked_example();
  for (const auto& s : r.samples) INFO(s);
  CHECK(r.passed());
}

TEST_CASE("K on small graphs") {
  const Digraph k2(2, {{0, 1}, {1, 0}});
  const OpMatrix k = build_K(k2).to_exact();
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  CHECK(k(0, 0) + k(0, 1) == CycScalar(1));
  CHECK(k(0, 0) + k(1, 0) == CycScalar(1));
  CHECK(k(0, 0) * k(0, 1) == CycScalar(0));
  for (const Digraph& g : sample_digraphs()) {
    const SqrtScaledMatrix kk = build_K(g);
    CHECK((kk * kk.adjoint()).to_exact() ==
          OpMatrix::identity(IndexSpace::Vertex, active_vertices(g).size()));
  }
  CHECK_THROWS_AS(build_K(Digraph(3)), PreconditionError);
}

TEST_CASE("coin, shift and transfer identities") {
  for (const Digraph& g : sample_digraphs()) {
    const SymmetricArcIndex idx(g);
    const std::size_t m = idx.size();
    const OpMatrix id = OpMatrix::identity(IndexSpace::Arc, m);
    const OpMatrix c = build_C(g, idx);
    CHECK(c * c == id);
    CHECK(c.is_self_adjoint());
    const OpMatrix s = build_S(g, idx);
    CHECK(s * s == id);
    CHECK(build_S_theta(g, idx, Angle(0, 1)) == s);
    CHECK(build_U_theta(g, idx, Angle(0, 1)) == build_grover_U(g, idx));
    CHECK(build_grover_U(g, idx) == grover_by_definition(g, idx));
    for (const Angle& eta : sweep_angles()) {
      const OpMatrix st = build_S_theta(g, idx, eta);
      CHECK(st.is_unitary());
      const OpMatrix u = build_U_theta(g, idx, eta);
      CHECK(u == st * c);
      CHECK(u.is_unitary());
      CHECK(build_D_theta(g, idx, eta) * u == build_grover_U(g, idx));
      if (g.is_graph()) CHECK(st == s);
    }
    const auto [f_t, f_o] = build_F(g, idx);
    CHECK(s * f_t.transposed() == f_o.transposed());
  }
}

TEST_CASE("degree-one arcs have unit coin diagonal") {
  const auto [g, idx] = worked_example();
  const OpMatrix c = build_C(g, idx);
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (underlying(g).degree(idx.terminus(a)) == 1) CHECK(c(a, a) == CycScalar(1));
}

TEST_CASE("regular route agrees with the general construction") {
  for (int n = 4; n <= 6; ++n) {
    const Digraph k = make_complete(n);
    const SymmetricArcIndex idx(k);
    for (const Angle& eta : sweep_angles())
      CHECK(build_U_theta_regular(k, idx, eta) == build_U_theta(k, idx, eta));
  }
  const Digraph y = make_Y(2, 5);
  const SymmetricArcIndex idx(y);
  CHECK(build_U_theta_regular(y, idx, Angle(1, 2)) == build_U_theta(y, idx, Angle(1, 2)));
}

TEST_CASE("eta-Hermitian adjacency") {
  const Angle eta(1, 2);
  const OpMatrix h2 = build_H_eta(Digraph(2, {{0, 1}, {1, 0}}), eta);
  CHECK(h2(0, 1) == CycScalar(1));
  for (int n = 2; n <= 6; ++n) {
    const OpMatrix h = build_H_eta(make_complete(n), eta);
    CHECK(h == OpMatrix::all_ones(IndexSpace::Vertex, n) - OpMatrix::identity(IndexSpace::Vertex, n));
  }
  const OpMatrix h = build_H_eta(Digraph(2, {{0, 1}}), eta);
  const CycScalar i = make_root(Angle(1, 2));
  CHECK(h(0, 1) == i);
  CHECK(h(1, 0) == -i);
  CHECK(h(0, 0).is_zero());
}

TEST_CASE("normalized Hermitian matrix factors through the walk") {
  for (const Digraph& g : sample_digraphs()) {
    for (const Angle& eta : regime_angles()) {
      const SqrtScaledMatrix ht = build_H_tilde(g, eta);
      CHECK(ht.is_self_adjoint());
      const SymmetricArcIndex idx(g);
      const SqrtScaledMatrix k = build_K(g, idx);
      const SqrtScaledMatrix product = k * SqrtScaledMatrix(build_S_theta(g, idx, eta)) * k.adjoint();
      CHECK(product == ht);
    }
  }
}

TEST_CASE("digon indicator") {
  CHECK(build_R(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})) == OpMatrix::zero(IndexSpace::Arc, 6));
  const auto [g, idx] = worked_example();
  const OpMatrix r = build_R(g, idx);
  int ones = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const int z0 = idx.terminus(b);
      const int z1 = idx.origin(a);
      const bool expected = g.has_arc(z0, z1) && g.has_arc(z1, z0);
      CHECK(r(a, b) == CycScalar(expected ? 1 : 0));
      ones += expected;
    }
  CHECK(ones > 0);
}

TEST_CASE("float builders match exact builders") {
  for (const Digraph& g : sample_digraphs()) {
    if (!weakly_connected(g)) continue;
    const Angle eta(2, 3);
    const Eigen::MatrixXcd exact = build_U_theta(g, eta).to_complex();
    const Eigen::MatrixXcd approx = build_U_theta_float(g, eta.radians());
    CHECK((exact - approx).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::MatrixXcd ht = build_H_tilde(g, eta).to_complex();
    CHECK((ht - build_H_tilde_float(g, eta.radians())).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("dump formatting") {
  const std::string d = dump_matrix(build_H_eta(Digraph(2, {{0, 1}}), Angle(1, 2)));
  CHECK(d.find('i') != std::string::npos);
  CHECK_FALSE(dump_matrix(build_K(make_complete(3)), true).empty());
}
