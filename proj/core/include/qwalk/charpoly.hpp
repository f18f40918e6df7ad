#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qwalk/digraph.hpp"
#include "qwalk/op_matrix.hpp"

namespace qwalk {

enum class CoeffRing { Integer, Rational, Cyclotomic };

std::string to_string(CoeffRing r);

/// Monic characteristic polynomial det(x I - M), constant term first.
class CharPoly {
 public:
  CharPoly() = default;
  /// Throws PreconditionError unless the leading coefficient is 1.
  explicit CharPoly(std::vector<CycScalar> coeffs);

  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<CycScalar>& coeffs() const noexcept { return coeffs_; }
  CoeffRing ring() const noexcept { return ring_; }
  bool is_real() const;

  /// Exact value at x.
  CycScalar evaluate(const CycScalar& x) const;
  std::vector<std::complex<double>> float_coeffs() const;
  /// "x^3 - 3*x - 2" style rendering.
  std::string to_string() const;

  friend bool operator==(const CharPoly& lhs, const CharPoly& rhs);

 private:
  std::vector<CycScalar> coeffs_;
  CoeffRing ring_ = CoeffRing::Integer;
};

/// Division-free (Berkowitz) characteristic polynomial over the exact field.
/// Self-adjoint input is additionally checked to produce real coefficients.
CharPoly charpoly_exact(const OpMatrix& m);
/// Characteristic polynomial of the represented matrix; needs equal row and
/// column scales (it is computed from the similar matrix diag(s)^{-1} core).
CharPoly charpoly_exact(const SqrtScaledMatrix& m);
CharPoly charpoly_exact(const IntMatrix& m);

/// Integer coefficients (constant term first) of an integer matrix, using
/// overflow-checked 64- and 128-bit arithmetic before falling back to GMP.
std::vector<mpz_class> charpoly_integer(const IntMatrix& m);

/// Integer coefficients of det(x I - H_eta(g)) when e^{i eta} generates a
/// field of degree at most two (eta a multiple of pi/2 or pi/3); nullopt
/// otherwise. Such coefficients are real elements of Z[zeta] and hence integers.
std::optional<std::vector<mpz_class>> charpoly_hermitian_small(const Digraph& g,
                                                               const Angle& eta);

/// Canonical byte string; equal keys iff equal polynomials.
std::string cospectral_key(const CharPoly& p);
std::string cospectral_key(const std::vector<mpz_class>& integer_coeffs);

/// CharPoly from integer coefficients, constant term first.
CharPoly from_integer_coeffs(const std::vector<mpz_class>& coeffs);

}  // namespace qwalk
