#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qwalk/cyclotomic.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/rational.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = 3.14159265358979323846;

CycScalar random_scalar(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<long long> exponent(0, order - 1);
  CycScalar x = CycScalar::zero(CycField::get(order));
  for (int t = 0; t < 3; ++t)
    x += CycScalar(Rational(coef(rng), den(rng))) * CycScalar::root_of_unity(order, exponent(rng));
  return x;
}

}  // namespace

TEST_CASE("rational arithmetic agrees with mpq") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int t = 0; t < 500; ++t) {
    const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    const mpq_class qx{mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))};
    const mpq_class qy{mpz_class(static_cast<long>(c)), mpz_class(static_cast<long>(d))};
    mpq_class sx = qx, sy = qy;
    sx.canonicalize();
    sy.canonicalize();
    CHECK((x + y).to_mpq() == mpq_class(sx + sy));
    CHECK((x - y).to_mpq() == mpq_class(sx - sy));
    CHECK((x * y).to_mpq() == mpq_class(sx * sy));
    if (!y.is_zero()) CHECK((x / y).to_mpq() == mpq_class(sx / sy));
    CHECK(((x <=> y) < 0) == (sx < sy));
  }
}

TEST_CASE("rational overflow promotes to big representation") {
  Rational x(1LL << 62);
  const Rational y = x * x * x;
  CHECK_FALSE(y.is_small());
  CHECK(y.to_mpq() == mpq_class(mpz_class(1) << 186));
  CHECK((y / (x * x)) == x);
  CHECK((y / (x * x)).is_small());
}

TEST_CASE("rational normalization and errors") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(3, 9).to_string() == "1/3");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("angle normalization and parsing") {
  CHECK(Angle(3, 2) == Angle(-1, 2));
  CHECK(Angle(2, 4) == Angle(1, 2));
  CHECK(Angle(-1, 1) == Angle(1, 1));
  CHECK(Angle::parse("2/3") == Angle(2, 3));
  CHECK(Angle::parse("1") == Angle(1, 1));
  CHECK(Angle::parse("0") == Angle(0, 1));
  CHECK_THROWS_AS(Angle::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Angle::parse("abc"), ParseError);
  CHECK(Angle(1, 3).radians() == doctest::Approx(kPi / 3));
}

TEST_CASE("roots of unity") {
  CHECK(make_root(Angle(0, 1)).is_one());
  const CycScalar i = make_root(Angle(1, 2));
  CHECK(i * i == CycScalar(-1));
  const CycScalar z = make_root(Angle(1, 3));
  const CycScalar two_re = z + z.conj();
  REQUIRE(two_re.is_rational());
  CHECK(two_re.rational_value() == Rational(1));
  CHECK(two_re.to_complex().real() == doctest::Approx(2 * std::cos(kPi / 3)));
  CHECK((make_root(Angle(1, 1)) == CycScalar(-1)));
}

TEST_CASE("exact sign of the real part") {
  CHECK(make_root(Angle(1, 2)).real_part_sign() == 0);
  CHECK(make_root(Angle(2, 3)).real_part_sign() == (std::cos(2 * kPi / 3) < 0 ? -1 : 1));
  CHECK((CycScalar(1) + make_root(Angle(1, 3))).real_part_sign() == 1);
  // cos(2pi/5) - cos(pi/5) + 1/2 vanishes exactly
  const CycScalar z5 = make_root(Angle(2, 5));
  const CycScalar w5 = make_root(Angle(1, 5));
  const CycScalar r = (z5 + z5.conj() - w5 - w5.conj()) * CycScalar(Rational(1, 2)) +
                      CycScalar(Rational(1, 2));
  CHECK(r.is_zero());
  CHECK(r.real_part_sign() == 0);
}

TEST_CASE("float conversion") {
  CHECK(CycScalar(1).to_complex() == std::complex<double>(1.0, 0.0));
  const auto i = make_root(Angle(1, 2)).to_complex();
  CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-15);
  const auto v = (CycScalar(Rational(1, 3)) * make_root(Angle(2, 3))).to_complex();
  CHECK(std::abs(v - std::complex<double>(-1.0 / 6, std::sqrt(3.0) / 6)) < 1e-15);
}

TEST_CASE("field laws on random cyclotomic scalars") {
  std::mt19937_64 rng(11);
  for (int order : {4, 6, 8, 12}) {
    for (int t = 0; t < 40; ++t) {
      const CycScalar a = random_scalar(rng, order);
      const CycScalar b = random_scalar(rng, order);
      const CycScalar c = random_scalar(rng, order);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar(1));
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
      const int expected = std::abs(a.to_complex().real()) < 1e-12
                               ? 0
                               : (a.to_complex().real() > 0 ? 1 : -1);
      CHECK(a.real_part_sign() == expected);
    }
  }
}

TEST_CASE("mixed-field arithmetic lifts to a common field") {
  const CycScalar i = make_root(Angle(1, 2));
  const CycScalar w = make_root(Angle(2, 3));
  const CycScalar p = i * w;
  CHECK(p == make_root(Angle(1, 2)) * make_root(Angle(2, 3)));
  CHECK(std::abs(p.to_complex() - std::polar(1.0, kPi / 2 + 2 * kPi / 3)) < 1e-12);
  CHECK(p.canonical() == p);
}
