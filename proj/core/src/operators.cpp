#include "qwalk/operators.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

void require_arcs(const SymmetricArcIndex& index) {
  if (index.size() == 0) {
    throw PreconditionError("no arcs: the walk operators are undefined on an empty digraph");
  }
}

void require_match(const Digraph& g, const SymmetricArcIndex& index) {
  if (index.order() != g.order() || index.size() != 2 * edge_count(g)) {
    throw PreconditionError("arc index does not belong to this digraph");
  }
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

bool is_square_number(long long v) {
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  return r * r == v;
}

}  // namespace

std::vector<int> active_vertices(const Digraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

SqrtScaledMatrix build_K(const Digraph& g, const SymmetricArcIndex& index) {
  require_match(g, index);
  require_arcs(index);
  const auto active = active_vertices(g);
  std::vector<int> row_of(g.order(), -1);
  for (std::size_t r = 0; r < active.size(); ++r) row_of[active[r]] = static_cast<int>(r);

  OpMatrix core(IndexSpace::Vertex, active.size(), IndexSpace::Arc, index.size());
  for (std::size_t a = 0; a < index.size(); ++a) core.set(row_of[index.terminus(a)], a, 1);
  std::vector<long long> row_scale;
  for (int v : active) row_scale.push_back(g.degree(v));
  return SqrtScaledMatrix(std::move(row_scale), std::move(core),
                          std::vector<long long>(index.size(), 1));
}

SqrtScaledMatrix build_K(const Digraph& g) { return build_K(g, SymmetricArcIndex(g)); }

OpMatrix build_C(const Digraph& g, const SymmetricArcIndex& index) {
  require_match(g, index);
  require_arcs(index);
  const std::size_t m = index.size();
  OpMatrix c(IndexSpace::Arc, m, IndexSpace::Arc, m);
  for (std::size_t a = 0; a < m; ++a) {
    const int t = index.terminus(a);
    const Rational w(2, g.degree(t));
    for (std::size_t b = 0; b < m; ++b) {
      if (index.terminus(b) != t) continue;
      c.set(a, b, a == b ? CycScalar(w - Rational(1)) : CycScalar(w));
    }
  }
  return c;
}

OpMatrix build_C(const Digraph& g) { return build_C(g, SymmetricArcIndex(g)); }

OpMatrix build_S_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta) {
  require_match(g, index);
  require_arcs(index);
  const EtaFunction theta(g, index, eta);
  const std::size_t m = index.size();
  OpMatrix s(IndexSpace::Arc, m, IndexSpace::Arc, m);
  for (std::size_t b = 0; b < m; ++b) s.set(SymmetricArcIndex::inverse(b), b, theta.phase(b));
  return s;
}

OpMatrix build_S_theta(const Digraph& g, const Angle& eta) {
  return build_S_theta(g, SymmetricArcIndex(g), eta);
}

OpMatrix build_D_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta) {
  require_match(g, index);
  require_arcs(index);
  const EtaFunction theta(g, index, eta);
  const std::size_t m = index.size();
  OpMatrix d(IndexSpace::Arc, m, IndexSpace::Arc, m);
  for (std::size_t a = 0; a < m; ++a) d.set(a, a, theta.phase(a));
  return d;
}

OpMatrix build_D_theta(const Digraph& g, const Angle& eta) {
  return build_D_theta(g, SymmetricArcIndex(g), eta);
}

OpMatrix build_S(const Digraph& g, const SymmetricArcIndex& index) {
  return build_S_theta(g, index, Angle(0, 1));
}

OpMatrix build_S(const Digraph& g) { return build_S(g, SymmetricArcIndex(g)); }

OpMatrix build_U_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta) {
  return build_S_theta(g, index, eta) * build_C(g, index);
}

OpMatrix build_U_theta(const Digraph& g, const Angle& eta) {
  return build_U_theta(g, SymmetricArcIndex(g), eta);
}

OpMatrix build_grover_U(const Digraph& g, const SymmetricArcIndex& index) {
  require_match(g, index);
  require_arcs(index);
  const std::size_t m = index.size();
  OpMatrix u(IndexSpace::Arc, m, IndexSpace::Arc, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const int t = index.terminus(b);
      Rational v(0);
      if (t == index.origin(a)) v += Rational(2, g.degree(t));
      if (a == SymmetricArcIndex::inverse(b)) v -= Rational(1);
      if (!v.is_zero()) u.set(a, b, CycScalar(v));
    }
  }
  return u;
}

OpMatrix build_grover_U(const Digraph& g) { return build_grover_U(g, SymmetricArcIndex(g)); }

OpMatrix build_H_eta(const Digraph& g, const Angle& eta) {
  const int n = g.order();
  const CycScalar w = make_root(eta);
  const CycScalar wc = w.conj();
  OpMatrix h(IndexSpace::Vertex, n, IndexSpace::Vertex, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.is_digon(x, y)) {
        h.set(x, y, 1);
      } else if (g.has_arc(x, y)) {
        h.set(x, y, w);
      } else if (g.has_arc(y, x)) {
        h.set(x, y, wc);
      }
    }
  }
  return h;
}

OpMatrix build_H(const Digraph& g) { return build_H_eta(g, Angle(1, 2)); }

SqrtScaledMatrix build_H_tilde(const Digraph& g, const Angle& eta) {
  const auto active = active_vertices(g);
  if (active.empty()) {
    throw PreconditionError("no arcs: the normalized matrix needs a vertex of positive degree");
  }
  const OpMatrix h = build_H_eta(g, eta);
  OpMatrix core(IndexSpace::Vertex, active.size(), IndexSpace::Vertex, active.size());
  std::vector<long long> scale;
  for (std::size_t i = 0; i < active.size(); ++i) {
    scale.push_back(g.degree(active[i]));
    for (std::size_t j = 0; j < active.size(); ++j) core.set(i, j, h(active[i], active[j]));
  }
  return SqrtScaledMatrix(scale, std::move(core), scale);
}

OpMatrix build_D(const Digraph& g) {
  const int n = g.order();
  OpMatrix d(IndexSpace::Vertex, n, IndexSpace::Vertex, n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 0) d.set(v, v, g.degree(v));
  return d;
}

std::pair<OpMatrix, OpMatrix> build_F(const Digraph& g, const SymmetricArcIndex& index) {
  require_match(g, index);
  const auto n = static_cast<std::size_t>(g.order());
  OpMatrix ft(IndexSpace::Vertex, n, IndexSpace::Arc, index.size());
  OpMatrix fo(IndexSpace::Vertex, n, IndexSpace::Arc, index.size());
  for (std::size_t a = 0; a < index.size(); ++a) {
    ft.set(index.terminus(a), a, 1);
    fo.set(index.origin(a), a, 1);
  }
  return {std::move(ft), std::move(fo)};
}

std::pair<OpMatrix, OpMatrix> build_F(const Digraph& g) { return build_F(g, SymmetricArcIndex(g)); }

OpMatrix build_R(const Digraph& g, const SymmetricArcIndex& index) {
  require_match(g, index);
  const std::size_t m = index.size();
  OpMatrix r(IndexSpace::Arc, m, IndexSpace::Arc, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const int x = index.terminus(b);
      const int y = index.origin(a);
      if (x != y && g.is_digon(x, y)) r.set(a, b, 1);
    }
  }
  return r;
}

OpMatrix build_R(const Digraph& g) { return build_R(g, SymmetricArcIndex(g)); }

OpMatrix build_U_theta_regular(const Digraph& g, const SymmetricArcIndex& index,
                               const Angle& eta) {
  const auto k = is_regular(g);
  if (!k || *k < 1) throw PreconditionError("the regular construction needs a regular digraph");
  const auto [ft, fo] = build_F(g, index);
  OpMatrix inner = (fo.transposed() * ft).scaled(CycScalar(Rational(2, *k)));
  inner -= build_S(g, index);
  OpMatrix d_inv = build_D_theta(g, index, eta.negated());
  return d_inv * inner;
}

std::string dump_matrix(const OpMatrix& m, bool with_float) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " | ";
      os << m(i, j).to_string();
      if (with_float) os << " [" << complex_text(m(i, j).to_complex()) << "]";
    }
    os << '\n';
  }
  return os.str();
}

std::string dump_matrix(const SqrtScaledMatrix& m, bool with_float) {
  std::ostringstream os;
  const Eigen::MatrixXcd f = m.to_complex();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " | ";
      const CycScalar& x = m.core()(i, j);
      const long long p = m.row_scale()[i] * m.col_scale()[j];
      if (x.is_zero() || p == 1) {
        os << x.to_string();
      } else if (is_square_number(p)) {
        const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(p))));
        os << (x * CycScalar(Rational(1, r))).to_string();
      } else {
        os << "(" << x.to_string() << ")/sqrt(" << p << ")";
      }
      if (with_float) {
        os << " [" << complex_text(f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
           << "]";
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qwalk
