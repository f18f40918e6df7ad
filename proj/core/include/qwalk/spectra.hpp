#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/charpoly.hpp"
#include "qwalk/cycles.hpp"
#include "qwalk/digraph.hpp"
#include "qwalk/op_matrix.hpp"

namespace qwalk {

/// Gap below which floating eigenvalues are reported as one cluster.
inline constexpr double kClusterGap = 1e-7;
/// Per-pair residual bound accepted from the Hermitian solver.
inline constexpr double kResidualBound = 1e-10;

enum class SpectrumSource { Eigensolver, SpectralMapping, ClosedForm, DirectComplex };

std::string to_string(SpectrumSource s);

struct Eigenvalue {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Eigenvalue multiset grouped into clusters, ordered by argument then modulus
/// for unit-circle spectra and by real part for real spectra.
struct SpectrumSummary {
  std::vector<Eigenvalue> eigs;
  SpectrumSource source = SpectrumSource::Eigensolver;

  int total_multiplicity() const;
  /// Every eigenvalue repeated by multiplicity.
  std::vector<std::complex<double>> expanded() const;
  std::string to_json() const;
};

/// Groups values lying within `gap` of each other.
SpectrumSummary cluster(const std::vector<std::complex<double>>& values, SpectrumSource source,
                        double gap = kClusterGap);

/// Sorted real eigenvalues of an exactly self-adjoint matrix. Throws
/// PreconditionError on non-self-adjoint input and std::runtime_error when the
/// solver residual exceeds kResidualBound.
std::vector<double> hermitian_eigenvalues(const OpMatrix& m);
std::vector<double> hermitian_eigenvalues(const SqrtScaledMatrix& m);
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m);

SpectrumSummary eig_hermitian(const OpMatrix& m);
SpectrumSummary eig_hermitian(const SqrtScaledMatrix& m);

/// phi(z) = (z + 1/z) / 2 inverted on [-1, 1]: mu +- i sqrt(1 - mu^2).
/// Throws PreconditionError for |mu| > 1 + 1e-12.
std::pair<std::complex<double>, std::complex<double>> phi_inverse(double mu);

/// M_eps = max{0, |E| - |V| + m_eps}.
struct MappingMultiplicities {
  CycleClassification cycles;
  long long big_m_plus = 0;
  long long big_m_minus = 0;
};
MappingMultiplicities mapping_multiplicities(const Digraph& g, const Angle& eta);

/// Spec(U_theta) assembled from the normalized Hermitian spectrum. Requires a
/// weakly connected digraph with at least one arc.
SpectrumSummary spectrum_U_via_mapping(const Digraph& g, const Angle& eta);
/// Same assembly for a real eta given in radians; the +-1 multiplicities
/// come from the fundamental cycle weights with tolerance 1e-12.
SpectrumSummary spectrum_U_via_mapping(const Digraph& g, double eta);

/// Validation route: general complex eigensolve of the floating image of U_theta.
SpectrumSummary spectrum_U_direct(const Digraph& g, const Angle& eta);
SpectrumSummary spectrum_U_direct(const Digraph& g, double eta);

/// Floating builders for a real eta in radians.
Eigen::MatrixXcd build_U_theta_float(const Digraph& g, double eta);
Eigen::MatrixXcd build_H_tilde_float(const Digraph& g, double eta);

/// Largest distance in a greedy nearest-neighbour matching of two multisets;
/// +infinity when the sizes differ.
double multiset_distance(std::vector<std::complex<double>> a,
                         std::vector<std::complex<double>> b);

/// Monic polynomial with the given roots, constant term first.
std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots);

std::string charpoly_json(const CharPoly& p);

}  // namespace qwalk
