#include "qwalk/charpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

struct Overflow {};

/// Integer wrapper whose arithmetic throws Overflow instead of wrapping.
template <class I>
struct Checked {
  I v = 0;
  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
};

template <class I>
bool is_zero(const Checked<I>& x) { return x.v == 0; }
bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero(const CycScalar& x) { return x.is_zero(); }

/// a + b zeta in Z[zeta] with zeta^2 = S zeta + T, on checked 64-bit integers.
template <int S, int T>
struct QuadInt {
  Checked<long long> a, b;
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    const Checked<long long> bd = x.b * y.b;
    return {x.a * y.a + Checked<long long>{T} * bd,
            x.a * y.b + x.b * y.a + Checked<long long>{S} * bd};
  }
};

template <int S, int T>
bool is_zero(const QuadInt<S, T>& x) { return x.a.v == 0 && x.b.v == 0; }

/// Berkowitz recurrence; returns det(x I - A) with the leading coefficient first.
template <class R, class Entry>
std::vector<R> berkowitz(std::size_t n, const Entry& entry, const R& zero, const R& one) {
  std::vector<R> poly{one};
  std::vector<R> v, w, t, next;
  for (std::size_t k = 0; k < n; ++k) {
    t.assign(k + 2, zero);
    t[0] = one;
    t[1] = zero - entry(k, k);
    v.resize(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = entry(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      R s = zero;
      for (std::size_t i = 0; i < k; ++i) {
        if (is_zero(v[i])) continue;
        const R r = entry(k, i);
        if (!is_zero(r)) s = s + r * v[i];
      }
      t[j + 2] = zero - s;
      if (j + 1 == k) break;
      w.assign(k, zero);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          if (is_zero(v[l])) continue;
          const R m = entry(i, l);
          if (!is_zero(m)) w[i] = w[i] + m * v[l];
        }
      }
      v.swap(w);
    }
    next.assign(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) {
        if (is_zero(t[i - j]) || is_zero(poly[j])) continue;
        next[i] = next[i] + t[i - j] * poly[j];
      }
    }
    poly.swap(next);
  }
  return poly;
}

mpz_class to_mpz(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

template <int S, int T>
std::optional<std::vector<mpz_class>> quad_charpoly(const Digraph& g,
                                                     const std::vector<QuadInt<S, T>>& powers,
                                                     long long p, long long order) {
  using Q = QuadInt<S, T>;
  const int n = g.order();
  auto root = [&](long long k) { return powers[static_cast<std::size_t>(((k % order) + order) % order)]; };
  const Q one{{1}, {0}};
  const Q zero{{0}, {0}};
  const Q fwd = root(p);
  const Q bwd = root(-p);
  std::vector<Q> h(static_cast<std::size_t>(n) * n, zero);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (g.is_digon(x, y)) {
        h[x * n + y] = one;
      } else if (g.has_arc(x, y)) {
        h[x * n + y] = fwd;
      } else if (g.has_arc(y, x)) {
        h[x * n + y] = bwd;
      }
    }
  try {
    auto poly = berkowitz<Q>(
        n, [&](std::size_t i, std::size_t j) { return h[i * n + j]; }, zero, one);
    std::vector<mpz_class> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i].b.v != 0) throw std::logic_error("Hermitian charpoly has a non-real coefficient");
      out[poly.size() - 1 - i] = mpz_class(static_cast<long>(poly[i].a.v));
    }
    return out;
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

}  // namespace

std::string to_string(CoeffRing r) {
  switch (r) {
    case CoeffRing::Integer: return "integer";
    case CoeffRing::Rational: return "rational";
    case CoeffRing::Cyclotomic: return "cyclotomic";
  }
  return "?";
}

CharPoly::CharPoly(std::vector<CycScalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || !coeffs_.back().is_one()) {
    throw PreconditionError("characteristic polynomial must be monic");
  }
  ring_ = CoeffRing::Integer;
  for (auto& c : coeffs_) {
    c = c.canonical();
    if (!c.is_rational()) {
      ring_ = CoeffRing::Cyclotomic;
    } else if (ring_ == CoeffRing::Integer && !c.rational_value().is_integer()) {
      ring_ = CoeffRing::Rational;
    }
  }
}

bool CharPoly::is_real() const {
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

CycScalar CharPoly::evaluate(const CycScalar& x) const {
  CycScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::complex<double>> CharPoly::float_coeffs() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const CycScalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational_value();
      negative = r.sign() < 0;
      coef = (negative ? -r : r).to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool unit = coef == "1";
    if (k == 0) {
      os << coef;
    } else {
      if (!unit) os << coef << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

bool operator==(const CharPoly& lhs, const CharPoly& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
  return true;
}

CharPoly charpoly_exact(const OpMatrix& m) {
  if (!m.is_square()) throw PreconditionError("characteristic polynomial needs a square matrix");
  auto poly = berkowitz<CycScalar>(
      m.rows(), [&](std::size_t i, std::size_t j) -> const CycScalar& { return m(i, j); },
      CycScalar(), CycScalar(1));
  std::reverse(poly.begin(), poly.end());
  CharPoly out(std::move(poly));
  if (m.is_self_adjoint() && !out.is_real()) {
    throw std::logic_error("self-adjoint matrix produced a non-real characteristic polynomial");
  }
  return out;
}

CharPoly charpoly_exact(const SqrtScaledMatrix& m) {
  auto poly = charpoly_exact(m.similar_unscaled());
  if (m.is_self_adjoint() && !poly.is_real()) {
    throw std::logic_error("self-adjoint matrix produced a non-real characteristic polynomial");
  }
  return poly;
}

std::vector<mpz_class> charpoly_integer(const IntMatrix& m) {
  const std::size_t n = m.size();
  try {
    using C = Checked<long long>;
    auto poly = berkowitz<C>(
        n, [&](std::size_t i, std::size_t j) { return C{m(i, j)}; }, C{0}, C{1});
    std::vector<mpz_class> out;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) out.emplace_back(static_cast<long>(it->v));
    return out;
  } catch (const Overflow&) {
  }
  try {
    using C = Checked<__int128>;
    auto poly = berkowitz<C>(
        n, [&](std::size_t i, std::size_t j) { return C{m(i, j)}; }, C{0}, C{1});
    std::vector<mpz_class> out;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) out.push_back(to_mpz(it->v));
    return out;
  } catch (const Overflow&) {
  }
  auto poly = berkowitz<mpz_class>(
      n, [&](std::size_t i, std::size_t j) { return mpz_class(static_cast<long>(m(i, j))); },
      mpz_class(0), mpz_class(1));
  std::reverse(poly.begin(), poly.end());
  return poly;
}

CharPoly charpoly_exact(const IntMatrix& m) { return from_integer_coeffs(charpoly_integer(m)); }

CharPoly from_integer_coeffs(const std::vector<mpz_class>& coeffs) {
  std::vector<CycScalar> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(Rational(mpq_class(z)));
  return CharPoly(std::move(c));
}

std::optional<std::vector<mpz_class>> charpoly_hermitian_small(const Digraph& g,
                                                               const Angle& eta) {
  if (eta.q() == 1 || eta.q() == 2) {
    // Z[i]: zeta_4^2 = -1; e^{i eta} = zeta_4^{p (2 / q)}.
    using Q = QuadInt<0, -1>;
    const std::vector<Q> powers{{{1}, {0}}, {{0}, {1}}, {{-1}, {0}}, {{0}, {-1}}};
    return quad_charpoly<0, -1>(g, powers, eta.p() * (2 / eta.q()), 4);
  }
  if (eta.q() == 3) {
    // Z[zeta_6]: zeta^2 = zeta - 1.
    using Q = QuadInt<1, -1>;
    const std::vector<Q> powers{{{1}, {0}},  {{0}, {1}},  {{-1}, {1}},
                                {{-1}, {0}}, {{0}, {-1}}, {{1}, {-1}}};
    return quad_charpoly<1, -1>(g, powers, eta.p(), 6);
  }
  return std::nullopt;
}

std::string cospectral_key(const CharPoly& p) {
  std::string key;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) key += ',';
    const CycScalar& c = p.coeffs()[i];
    key += c.is_rational() ? c.rational_value().to_string() : "[" + c.to_string() + "]";
  }
  return key;
}

std::string cospectral_key(const std::vector<mpz_class>& integer_coeffs) {
  std::string key;
  for (std::size_t i = 0; i < integer_coeffs.size(); ++i) {
    if (i) key += ',';
    key += integer_coeffs[i].get_str();
  }
  return key;
}

}  // namespace qwalk
