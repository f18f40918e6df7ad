#include "qwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {
namespace {

using cd = std::complex<double>;

void require_walkable(const Digraph& g) {
  if (g.arc_count() == 0) throw PreconditionError("no arcs: U_theta is undefined on an empty digraph");
  if (!weakly_connected(g)) {
    throw PreconditionError(
        "the spectral mapping needs a weakly connected digraph; compute the spectrum of each "
        "weak component separately");
  }
}

bool spectrum_is_real(const std::vector<cd>& v) {
  return std::all_of(v.begin(), v.end(), [](cd z) { return std::abs(z.imag()) <= kClusterGap; });
}

/// Distance from x to the nearest multiple of 2 pi.
double dist_2pi(double x) {
  const double two_pi = 2 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0) r += two_pi;
  return std::min(r, two_pi - r);
}

std::vector<cd> assemble(const std::vector<double>& h_tilde, int m_plus, int m_minus,
                         long long big_plus, long long big_minus) {
  std::vector<cd> out;
  const int n = static_cast<int>(h_tilde.size());
  for (int i = 0; i < n; ++i) {
    if (i < m_minus) {
      out.emplace_back(-1.0, 0.0);
    } else if (i >= n - m_plus) {
      out.emplace_back(1.0, 0.0);
    } else {
      const auto [z1, z2] = phi_inverse(std::clamp(h_tilde[i], -1.0, 1.0));
      out.push_back(z1);
      out.push_back(z2);
    }
  }
  out.insert(out.end(), static_cast<std::size_t>(big_plus), cd(1.0, 0.0));
  out.insert(out.end(), static_cast<std::size_t>(big_minus), cd(-1.0, 0.0));
  return out;
}

}  // namespace

std::string to_string(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::Eigensolver: return "eigensolver";
    case SpectrumSource::SpectralMapping: return "spectral-mapping";
    case SpectrumSource::ClosedForm: return "closed-form";
    case SpectrumSource::DirectComplex: return "direct-complex";
  }
  return "?";
}

int SpectrumSummary::total_multiplicity() const {
  int t = 0;
  for (const auto& e : eigs) t += e.multiplicity;
  return t;
}

std::vector<cd> SpectrumSummary::expanded() const {
  std::vector<cd> out;
  for (const auto& e : eigs) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

std::string SpectrumSummary::to_json() const {
  nlohmann::ordered_json j;
  j["eigs"] = nlohmann::ordered_json::array();
  for (const auto& e : eigs) {
    j["eigs"].push_back({{"re", e.value.real()}, {"im", e.value.imag()}, {"mult", e.multiplicity}});
  }
  j["source"] = to_string(source);
  return j.dump();
}

SpectrumSummary cluster(const std::vector<cd>& values, SpectrumSource source, double gap) {
  struct Group {
    cd sum;
    int count;
    cd rep;
  };
  std::vector<Group> groups;
  for (cd z : values) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return std::abs(g.rep - z) <= gap; });
    if (it == groups.end()) {
      groups.push_back({z, 1, z});
    } else {
      it->sum += z;
      ++it->count;
    }
  }
  SpectrumSummary s;
  s.source = source;
  for (const auto& g : groups) {
    cd mean = g.sum / static_cast<double>(g.count);
    if (std::abs(mean.imag()) < 1e-14) mean.imag(0.0);
    if (std::abs(mean.real()) < 1e-14) mean.real(0.0);
    s.eigs.push_back({mean, g.count});
  }
  const bool real = spectrum_is_real(values);
  std::sort(s.eigs.begin(), s.eigs.end(), [real](const Eigenvalue& a, const Eigenvalue& b) {
    if (real) return a.value.real() < b.value.real();
    const double aa = std::arg(a.value), ab = std::arg(b.value);
    if (aa != ab) return aa < ab;
    return std::abs(a.value) < std::abs(b.value);
  });
  return s;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    const double residual = (m * vecs.col(k) - vals(k) * vecs.col(k)).norm();
    if (residual > kResidualBound) {
      throw std::runtime_error("Hermitian eigensolver residual " + std::to_string(residual) +
                               " exceeds bound");
    }
  }
  std::vector<double> out(vals.data(), vals.data() + vals.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> hermitian_eigenvalues(const OpMatrix& m) {
  if (!m.is_self_adjoint()) throw PreconditionError("matrix is not self-adjoint");
  return hermitian_eigenvalues(m.to_complex());
}

std::vector<double> hermitian_eigenvalues(const SqrtScaledMatrix& m) {
  if (!m.is_self_adjoint()) throw PreconditionError("matrix is not self-adjoint");
  return hermitian_eigenvalues(m.to_complex());
}

SpectrumSummary eig_hermitian(const OpMatrix& m) {
  const auto vals = hermitian_eigenvalues(m);
  return cluster(std::vector<cd>(vals.begin(), vals.end()), SpectrumSource::Eigensolver);
}

SpectrumSummary eig_hermitian(const SqrtScaledMatrix& m) {
  const auto vals = hermitian_eigenvalues(m);
  return cluster(std::vector<cd>(vals.begin(), vals.end()), SpectrumSource::Eigensolver);
}

std::pair<cd, cd> phi_inverse(double mu) {
  if (std::abs(mu) > 1 + 1e-12) {
    throw PreconditionError("phi inverse is only defined on [-1, 1], got " + std::to_string(mu));
  }
  mu = std::clamp(mu, -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1 - mu * mu));
  return {cd(mu, s), cd(mu, -s)};
}

MappingMultiplicities mapping_multiplicities(const Digraph& g, const Angle& eta) {
  MappingMultiplicities out;
  out.cycles = classify_cycles(g, eta);
  const auto edges = static_cast<long long>(edge_count(g));
  const long long n = g.order();
  out.big_m_plus = std::max(0LL, edges - n + out.cycles.m_plus);
  out.big_m_minus = std::max(0LL, edges - n + out.cycles.m_minus);
  return out;
}

SpectrumSummary spectrum_U_via_mapping(const Digraph& g, const Angle& eta) {
  require_walkable(g);
  const auto mult = mapping_multiplicities(g, eta);
  const auto h = hermitian_eigenvalues(build_H_tilde(g, eta));
  return cluster(assemble(h, mult.cycles.m_plus, mult.cycles.m_minus, mult.big_m_plus,
                          mult.big_m_minus),
                 SpectrumSource::SpectralMapping);
}

SpectrumSummary spectrum_U_via_mapping(const Digraph& g, double eta) {
  require_walkable(g);
  const auto base = classify_cycles(g, Angle(0, 1));
  bool integral = true;
  bool half_on_odd = true;
  for (const auto& c : base.cycles) {
    const double angle = eta * static_cast<double>(c.weight);
    const double tol = 1e-12 * std::max(1.0, std::abs(angle));
    if (dist_2pi(angle) > tol) integral = false;
    if (dist_2pi(angle - std::numbers::pi * c.length) > tol) half_on_odd = false;
  }
  int m_plus = 0;
  int m_minus = 0;
  if (integral) {
    m_plus = 1;
    m_minus = base.bipartite ? 1 : 0;
  } else if (!base.bipartite && half_on_odd) {
    m_minus = 1;
  }
  const auto edges = static_cast<long long>(edge_count(g));
  const long long n = g.order();
  const auto h = hermitian_eigenvalues(build_H_tilde_float(g, eta));
  return cluster(assemble(h, m_plus, m_minus, std::max(0LL, edges - n + m_plus),
                          std::max(0LL, edges - n + m_minus)),
                 SpectrumSource::SpectralMapping);
}

SpectrumSummary spectrum_U_direct(const Digraph& g, const Angle& eta) {
  if (g.arc_count() == 0) throw PreconditionError("no arcs: U_theta is undefined on an empty digraph");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(build_U_theta(g, eta).to_complex());
  const auto& vals = solver.eigenvalues();
  return cluster(std::vector<cd>(vals.data(), vals.data() + vals.size()),
                 SpectrumSource::DirectComplex);
}

SpectrumSummary spectrum_U_direct(const Digraph& g, double eta) {
  if (g.arc_count() == 0) throw PreconditionError("no arcs: U_theta is undefined on an empty digraph");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(build_U_theta_float(g, eta));
  const auto& vals = solver.eigenvalues();
  return cluster(std::vector<cd>(vals.data(), vals.data() + vals.size()),
                 SpectrumSource::DirectComplex);
}

Eigen::MatrixXcd build_U_theta_float(const Digraph& g, double eta) {
  const SymmetricArcIndex index(g);
  const EtaFunction theta(g, index, Angle(1, 2));
  const auto m = static_cast<Eigen::Index>(index.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(m, m);
  // (S_theta C)_{ab} = e^{i theta(a^{-1})} C_{a^{-1} b}
  for (Eigen::Index a = 0; a < m; ++a) {
    const auto ai = static_cast<std::size_t>(SymmetricArcIndex::inverse(a));
    const cd phase = std::polar(1.0, theta.sign(ai) * eta);
    const int t = index.terminus(ai);
    for (Eigen::Index b = 0; b < m; ++b) {
      if (index.terminus(b) != t) continue;
      double c = 2.0 / g.degree(t);
      if (static_cast<std::size_t>(b) == ai) c -= 1.0;
      u(a, b) = phase * c;
    }
  }
  return u;
}

Eigen::MatrixXcd build_H_tilde_float(const Digraph& g, double eta) {
  const auto active = active_vertices(g);
  const auto n = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const int x = active[i], y = active[j];
      cd v = 0;
      if (g.is_digon(x, y)) {
        v = 1;
      } else if (g.has_arc(x, y)) {
        v = std::polar(1.0, eta);
      } else if (g.has_arc(y, x)) {
        v = std::polar(1.0, -eta);
      }
      h(i, j) = v / std::sqrt(static_cast<double>(g.degree(x)) * g.degree(y));
    }
  }
  return h;
}

double multiset_distance(std::vector<cd> a, std::vector<cd> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0;
  for (cd z : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<cd> poly_from_roots(const std::vector<cd>& roots) {
  std::vector<cd> p{1.0};
  for (cd r : roots) {
    std::vector<cd> next(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p.swap(next);
  }
  return p;
}

std::string charpoly_json(const CharPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c.is_rational() && c.rational_value().is_integer() && c.rational_value().is_small()) {
      j.push_back(std::stoll(c.rational_value().to_string()));
    } else {
      j.push_back(c.is_rational() ? c.rational_value().to_string() : c.to_string());
    }
  }
  return j.dump();
}

}  // namespace qwalk
