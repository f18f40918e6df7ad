#include "qwalk/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

using IntPoly = std::vector<std::int64_t>;  // constant term first

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  }
  return quot;
}

const IntPoly& cyclotomic_polynomial(int n) {
  static std::map<int, IntPoly> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// Solves A y = b over Q for a (rows x cols) matrix, returning any solution or
/// nullopt when the system is inconsistent. Columns are assumed independent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rational inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> y(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = b[i];
  return y;
}

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

/// Sign of sum_k c_k cos(2 pi k / n) for a value known to be nonzero.
int sign_of_real_sum(const CycScalar::Coeffs& c, int n) {
  const double kPi = std::acos(-1.0);
  double magnitude = 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    double ck = c[k].to_double();
    magnitude += std::fabs(ck);
    sum += ck * std::cos(2.0 * kPi * static_cast<double>(k) / n);
  }
  // Conversion, cos, product and summation each cost at most a few ulps per
  // term; the bound is proportional to the total magnitude.
  const double terms = static_cast<double>(c.size()) + 4.0;
  double bound = magnitude * terms * std::ldexp(1.0, -50);
  if (std::fabs(sum) > bound) return sum > 0 ? 1 : -1;

  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    MpfrValue acc(prec), term(prec), angle(prec), coeff(prec);
    mpfr_set_zero(acc.get(), 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      mpfr_const_pi(angle.get(), MPFR_RNDN);
      mpfr_mul_ui(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
      mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
      mpq_class q = c[k].to_mpq();
      mpfr_set_q(coeff.get(), q.get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), coeff.get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    // |error| <= magnitude * (terms + 4) * 2^(6 - prec): generous for the
    // handful of correctly rounded operations per term.
    MpfrValue err(prec);
    mpfr_set_d(err.get(), magnitude * terms, MPFR_RNDU);
    mpfr_mul_2si(err.get(), err.get(), 6 - static_cast<long>(prec), MPFR_RNDU);
    if (mpfr_cmpabs(acc.get(), err.get()) > 0) return mpfr_sgn(acc.get()) > 0 ? 1 : -1;
  }
  throw std::logic_error("real_part_sign: precision escalation did not terminate");
}

}  // namespace

// ---------------------------------------------------------------- Angle

Angle::Angle(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("Angle: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g == 0) g = 1;
  p /= g;
  q /= g;
  if (p == 0) q = 1;
  p = floor_mod(p, 2 * q);
  if (p > q) p -= 2 * q;
  p_ = p;
  q_ = q;
}

double Angle::radians() const {
  return std::acos(-1.0) * static_cast<double>(p_) / static_cast<double>(q_);
}

int Angle::field_order() const { return static_cast<int>(2 * q_); }

int Angle::cos_sign() const noexcept {
  long long twice = 2 * (p_ < 0 ? -p_ : p_);
  if (twice < q_) return 1;
  if (twice == q_) return 0;
  return -1;
}

Angle Angle::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> long long {
    skip_ws();
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer in angle '" + text + "'", 1, i + 1);
    try {
      return std::stoll(text.substr(start, i - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range in angle '" + text + "'", 1, start + 1);
    }
  };
  long long p = read_int(true);
  long long q = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    q = read_int(false);
    if (q == 0) throw ParseError("zero denominator in angle '" + text + "'", 1, i);
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters in angle '" + text + "'", 1, i + 1);
  return Angle(p, q);
}

std::string Angle::to_string() const {
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

// ---------------------------------------------------------------- CycField

CycField::CycField(int order) : order_(order) {
  const IntPoly& phi = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(phi.size()) - 1;
  powers_.reserve(order);
  IntPoly cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce modulo phi (monic)
    std::int64_t top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < degree_; ++j) cur[j] -= top * phi[j];
    }
  }
}

const CycField& CycField::get(int order) {
  if (order < 1) throw std::invalid_argument("CycField: order must be positive");
  static std::map<int, std::unique_ptr<CycField>> registry;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = registry.find(order);
  if (it == registry.end()) {
    it = registry.emplace(order, std::unique_ptr<CycField>(new CycField(order))).first;
  }
  return *it->second;
}

// ---------------------------------------------------------------- CycScalar

CycScalar::CycScalar() : field_(&CycField::get(1)), coeffs_(1) {}

CycScalar::CycScalar(const Rational& value) : field_(&CycField::get(1)), coeffs_{value} {}

CycScalar::CycScalar(long long value) : CycScalar(Rational(value)) {}

CycScalar::CycScalar(const CycField& field, Coeffs coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field.degree()) {
    throw std::invalid_argument("CycScalar: coefficient count does not match field degree");
  }
}

CycScalar CycScalar::zero(const CycField& field) {
  return CycScalar(field, Coeffs(field.degree()));
}

CycScalar CycScalar::one(const CycField& field) {
  Coeffs c(field.degree());
  c[0] = Rational(1);
  return CycScalar(field, std::move(c));
}

CycScalar CycScalar::root_of_unity(int order, long long k) {
  const CycField& f = CycField::get(order);
  const auto& pw = f.power(static_cast<int>(floor_mod(k, order)));
  Coeffs c(f.degree());
  for (int j = 0; j < f.degree(); ++j) c[j] = Rational(pw[j]);
  return CycScalar(f, std::move(c));
}

bool CycScalar::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycScalar::is_one() const { return is_rational() && coeffs_[0].is_one(); }

bool CycScalar::is_rational() const noexcept {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

const Rational& CycScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycScalar: value is not rational");
  return coeffs_[0];
}

CycScalar CycScalar::lifted(int order) const {
  const int n = field_->order();
  if (order == n) return *this;
  if (order % n != 0) throw std::invalid_argument("CycScalar: cannot lift into a non-extension");
  const CycField& f = CycField::get(order);
  const int step = order / n;
  Coeffs out(f.degree());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& pw = f.power(static_cast<int>((j * step) % order));
    for (int m = 0; m < f.degree(); ++m) {
      if (pw[m] != 0) out[m] += coeffs_[j] * Rational(pw[m]);
    }
  }
  return CycScalar(f, std::move(out));
}

CycScalar CycScalar::canonical() const {
  if (is_rational()) return CycScalar(coeffs_[0]);
  const int n = field_->order();
  for (int m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    const CycField& sub = CycField::get(m);
    const int step = n / m;
    std::vector<std::vector<Rational>> a(field_->degree(),
                                         std::vector<Rational>(sub.degree()));
    for (int j = 0; j < sub.degree(); ++j) {
      const auto& pw = field_->power((j * step) % n);
      for (int r = 0; r < field_->degree(); ++r) a[r][j] = Rational(pw[r]);
    }
    std::vector<Rational> b(coeffs_.begin(), coeffs_.end());
    if (auto y = solve_linear(std::move(a), std::move(b))) {
      return CycScalar(sub, Coeffs(y->begin(), y->end()));
    }
  }
  return *this;
}

CycScalar CycScalar::conj() const {
  const int n = field_->order();
  const int d = field_->degree();
  if (d == 1) return *this;
  Coeffs out(d);
  for (int k = 0; k < d; ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& pw = field_->power((n - k) % n);
    for (int m = 0; m < d; ++m) {
      if (pw[m] != 0) out[m] += coeffs_[k] * Rational(pw[m]);
    }
  }
  return CycScalar(*field_, std::move(out));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
  const int d = field_->degree();
  if (is_rational()) {
    Coeffs c(d);
    c[0] = coeffs_[0].inverse();
    return CycScalar(*field_, std::move(c));
  }
  // Column j of the multiplication-by-x matrix is x * zeta^j.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (int j = 0; j < d; ++j) {
    CycScalar col = *this * root_of_unity(field_->order(), j);
    for (int r = 0; r < d; ++r) a[r][j] = col.coeffs_[r];
  }
  std::vector<Rational> b(d);
  b[0] = Rational(1);
  auto y = solve_linear(std::move(a), std::move(b));
  if (!y) throw std::logic_error("CycScalar: singular multiplication matrix");
  return CycScalar(*field_, Coeffs(y->begin(), y->end()));
}

CycScalar CycScalar::operator-() const {
  Coeffs c(coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -coeffs_[k];
  return CycScalar(*field_, std::move(c));
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  if (field_ != rhs.field_) {
    const int l = std::lcm(field_->order(), rhs.field_->order());
    *this = lifted(l);
    if (rhs.field_->order() != l) return *this += rhs.lifted(l);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!rhs.coeffs_[k].is_zero()) coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  if (field_ != rhs.field_) {
    const int l = std::lcm(field_->order(), rhs.field_->order());
    *this = lifted(l);
    if (rhs.field_->order() != l) return *this -= rhs.lifted(l);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!rhs.coeffs_[k].is_zero()) coeffs_[k] -= rhs.coeffs_[k];
  }
  return *this;
}

CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs) {
  if (lhs.field_ != rhs.field_) {
    // Rational operands scale coefficientwise without lifting.
    if (rhs.field_->degree() == 1 && rhs.is_rational()) {
      CycScalar::Coeffs c(lhs.coeffs_.size());
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!lhs.coeffs_[k].is_zero()) c[k] = lhs.coeffs_[k] * rhs.coeffs_[0];
      }
      return CycScalar(*lhs.field_, std::move(c));
    }
    if (lhs.field_->degree() == 1 && lhs.is_rational()) return rhs * lhs;
    const int l = std::lcm(lhs.field_->order(), rhs.field_->order());
    return lhs.lifted(l) * rhs.lifted(l);
  }
  const CycField& f = *lhs.field_;
  const int d = f.degree();
  const int n = f.order();
  if (d == 1) return CycScalar(f, CycScalar::Coeffs{lhs.coeffs_[0] * rhs.coeffs_[0]});
  boost::container::small_vector<Rational, 8> acc(2 * d - 1);
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      acc[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      any = true;
    }
  }
  CycScalar::Coeffs out(d);
  if (!any) return CycScalar(f, std::move(out));
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (acc[k].is_zero()) continue;
    if (k < d) {
      out[k] += acc[k];
      continue;
    }
    const auto& pw = f.power(k % n);
    for (int m = 0; m < d; ++m) {
      if (pw[m] != 0) out[m] += acc[k] * Rational(pw[m]);
    }
  }
  return CycScalar(f, std::move(out));
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const CycScalar& lhs, const CycScalar& rhs) {
  if (lhs.field_ == rhs.field_) {
    for (std::size_t k = 0; k < lhs.coeffs_.size(); ++k) {
      if (!(lhs.coeffs_[k] == rhs.coeffs_[k])) return false;
    }
    return true;
  }
  if (lhs.is_rational() && rhs.is_rational()) return lhs.coeffs_[0] == rhs.coeffs_[0];
  const int l = std::lcm(lhs.field_->order(), rhs.field_->order());
  return lhs.lifted(l) == rhs.lifted(l);
}

int CycScalar::real_part_sign() const {
  if (is_rational()) return coeffs_[0].sign();
  // x + conj(x) = 2 Re(x) lies in the real subfield; zero there is exact.
  CycScalar twice_re = *this + conj();
  if (twice_re.is_zero()) return 0;
  if (twice_re.is_rational()) return twice_re.coeffs_[0].sign();
  return sign_of_real_sum(twice_re.coeffs_, field_->order());
}

std::complex<double> CycScalar::to_complex() const {
  const long double kTwoPi = 2.0L * std::acos(-1.0L);
  long double re = 0.0L;
  long double im = 0.0L;
  const int n = field_->order();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    long double c = coeffs_[k].to_double();
    if (k == 0) {
      re += c;
      continue;
    }
    long double a = kTwoPi * static_cast<long double>(k) / n;
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  const int n = field_->order();
  if (n == 4) {
    // Gaussian rationals print as a+bi.
    const Rational& re = coeffs_[0];
    const Rational& im = coeffs_[1];
    if (!re.is_zero()) os << re.to_string();
    if (!im.is_zero()) {
      if (!re.is_zero() && im.sign() > 0) os << '+';
      if (im == Rational(-1)) {
        os << '-';
      } else if (!im.is_one()) {
        os << im.to_string();
      }
      os << 'i';
    }
    return re.is_zero() && im.is_zero() ? "0" : os.str();
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k].to_string();
    if (k > 0) os << "*zeta(" << n << ")^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& value) {
  return os << value.to_string();
}

CycScalar make_root(const Angle& angle) {
  return CycScalar::root_of_unity(angle.field_order(), angle.p());
}

}  // namespace qwalk
