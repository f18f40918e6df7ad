#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qwalk/rational.hpp"

namespace qwalk {

/// A rotation angle p*pi/q with gcd(p, q) = 1 and q >= 1.
///
/// The numerator is reduced modulo 2q into (-q, q], so every angle names a
/// distinct point of the unit circle. Walk operators only ever use
/// in_principal_range() angles for the support theorems; negative angles are
/// accepted because U_{-eta}(G) equals U_eta of the transpose.
class Angle {
 public:
  Angle() = default;
  Angle(long long p, long long q);

  long long p() const noexcept { return p_; }
  long long q() const noexcept { return q_; }

  /// 0 <= eta <= pi.
  bool in_principal_range() const noexcept { return p_ >= 0; }
  Angle negated() const { return Angle(-p_, q_); }
  double radians() const;

  /// Order of the cyclotomic field that holds e^{i eta}: 2q.
  int field_order() const;

  /// Sign of cos(eta): +1 below pi/2, 0 at pi/2, -1 above (for |eta| <= pi).
  int cos_sign() const noexcept;

  /// Parses "p/q" or "p" (a multiple of pi).
  static Angle parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  long long p_ = 0;
  long long q_ = 1;
};

/// The cyclotomic field Q(zeta_N) in its power basis 1, zeta, ..., zeta^{phi(N)-1}.
///
/// Instances are interned and immortal; compare by pointer.
class CycField {
 public:
  static const CycField& get(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  /// Coordinates of zeta^k for 0 <= k < order.
  const std::vector<std::int64_t>& power(int k) const { return powers_[k]; }

 private:
  explicit CycField(int order);

  int order_;
  int degree_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Exact element of Q(zeta_N).
///
/// Binary operations between elements of different fields lift both operands
/// into Q(zeta_lcm). Values are immutable once built.
class CycScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  /// Zero of Q.
  CycScalar();
  CycScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  CycScalar(long long value);        // NOLINT(google-explicit-constructor)
  CycScalar(const CycField& field, Coeffs coeffs);

  static CycScalar zero(const CycField& field);
  static CycScalar one(const CycField& field);
  /// zeta_N^k.
  static CycScalar root_of_unity(int order, long long k);

  const CycField& field() const noexcept { return *field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const noexcept;
  /// Only valid when is_rational().
  const Rational& rational_value() const;

  /// The same value expressed in Q(zeta_order); order must be a multiple of
  /// the current field order.
  CycScalar lifted(int order) const;
  /// The same value in the smallest cyclotomic subfield containing it.
  CycScalar canonical() const;

  CycScalar conj() const;
  CycScalar inverse() const;
  CycScalar operator-() const;

  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
  friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
  friend CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs);
  friend CycScalar operator/(const CycScalar& lhs, const CycScalar& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const CycScalar& lhs, const CycScalar& rhs);

  /// Exact sign of the real part.
  int real_part_sign() const;
  /// True when the value equals its conjugate.
  bool is_real() const { return *this == conj(); }

  std::complex<double> to_complex() const;
  /// "a/b*zeta(N)^k + ..." with the constant term first; "0" for zero.
  std::string to_string() const;

 private:
  const CycField* field_;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& value);

/// e^{i eta} as an exact field element.
CycScalar make_root(const Angle& angle);

/// Exact sign of Re(x).
inline int real_part_sign(const CycScalar& x) { return x.real_part_sign(); }
inline std::complex<double> to_float(const CycScalar& x) { return x.to_complex(); }

}  // namespace qwalk
