#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qwalk/charpoly.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/verification.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Faddeev-LeVerrier over exact rationals, an algorithm independent of the
// division-free one used by the library.
std::vector<mpz_class> faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<mpq_class>>;
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  Mat am(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) am[i][j] = a(i, j);
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Mat m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    const Mat am_k = mul(am, m);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am_k[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    m = am_k;
  }
  std::vector<mpz_class> out;
  for (const auto& q : c) {
    REQUIRE(q.get_den() == 1);
    out.push_back(q.get_num());
  }
  return out;  // constant term first
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
  return m;
}

std::vector<std::complex<double>> sorted(std::vector<std::complex<double>> v) {
  std::sort(v.begin(), v.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

}  // namespace

TEST_CASE("integer characteristic polynomial against Faddeev-LeVerrier") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 9; ++n)
    for (int t = 0; t < 6; ++t) {
      const IntMatrix m = random_int_matrix(rng, n);
      CHECK(charpoly_integer(m) == faddeev_leverrier(m));
    }
}

TEST_CASE("characteristic polynomial examples") {
  const CharPoly id = charpoly_exact(IntMatrix::identity(3));
  CHECK(id == from_integer_coeffs({-1, 3, -3, 1}));
  const CharPoly hk3 = charpoly_exact(build_H(make_complete(3)));
  CHECK(hk3 == from_integer_coeffs({-2, -3, 0, 1}));
  CHECK(charpoly_exact(build_H_eta(make_Y(2, 3), Angle(1, 2))) == hk3);
  CHECK(cospectral_key(charpoly_exact(build_H(make_Y(1, 4)))) ==
        cospectral_key(charpoly_exact(build_H(make_complete(4)))));
  const Digraph p3(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  IntMatrix a3(3), ak3(3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      a3.at(u, v) = p3.has_arc(u, v);
      ak3.at(u, v) = u != v;
    }
  CHECK(cospectral_key(charpoly_integer(a3)) != cospectral_key(charpoly_integer(ak3)));
  CHECK(cospectral_key(from_integer_coeffs({1, -2, 1})) ==
        cospectral_key(charpoly_exact(IntMatrix::identity(2))));
}

TEST_CASE("cyclotomic characteristic polynomial matches eigenvalues") {
  for (const Digraph& g : {make_Y(2, 4), Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), make_cycle(5)}) {
    for (const Angle& eta : regime_angles()) {
      const OpMatrix u = build_U_theta(g, eta);
      const CharPoly p = charpoly_exact(u);
      CHECK(p.degree() == u.rows());
      const auto direct = spectrum_U_direct(g, eta).expanded();
      const auto coeffs = p.float_coeffs();
      const auto expected = poly_from_roots(direct);
      REQUIRE(coeffs.size() == expected.size());
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        CHECK(std::abs(coeffs[k] - expected[k]) < 1e-8 * std::max(1.0, std::abs(expected[k])));
    }
  }
}

TEST_CASE("Hermitian spectra") {
  for (int n = 2; n <= 7; ++n) {
    const auto ev = hermitian_eigenvalues(build_H(make_complete(n)));
    REQUIRE(ev.size() == std::size_t(n));
    int minus_one = 0;
    for (double x : ev) minus_one += std::abs(x + 1) < 1e-9;
    CHECK(minus_one == n - 1);
    CHECK(*std::max_element(ev.begin(), ev.end()) == doctest::Approx(n - 1));

    const auto ht = hermitian_eigenvalues(build_H_tilde(make_complete(n), Angle(1, 3)));
    int neg = 0;
    for (double x : ht) neg += std::abs(x + 1.0 / (n - 1)) < 1e-9;
    CHECK(neg == n - 1);
  }
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(1, 1);
  CHECK(hermitian_eigenvalues(zero) == std::vector<double>{0.0});
  const auto [g, idx] = worked_example();
  for (double x : hermitian_eigenvalues(build_H_tilde(g, Angle(1, 2)))) CHECK(std::abs(x) <= 1 + 1e-12);
}

TEST_CASE("inverse of the Joukowski map") {
  auto [a, b] = phi_inverse(1.0);
  CHECK(std::abs(a - 1.0) < 1e-12);
  CHECK(std::abs(b - 1.0) < 1e-12);
  std::tie(a, b) = phi_inverse(0.0);
  CHECK(std::abs(a * b - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(a.imag()) - 1.0) < 1e-12);
  CHECK(std::abs(a + b) < 1e-12);
  std::tie(a, b) = phi_inverse(-0.5);
  const auto w = std::polar(1.0, 2 * kPi / 3);
  CHECK(std::min(std::abs(a - w), std::abs(a - std::conj(w))) < 1e-12);
  CHECK(std::abs((a + 1.0 / a) / 2.0 - (-0.5)) < 1e-12);
  for (double mu : {-0.9, -0.3, 0.2, 0.7}) {
    std::tie(a, b) = phi_inverse(mu);
    CHECK(std::abs(std::abs(a) - 1) < 1e-12);
    CHECK(std::abs(a.real() - mu) < 1e-12);
    CHECK(std::abs(b - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("spectral mapping on the Y family") {
  for (int n = 3; n <= 7; ++n) {
    const Angle eta(1, 2);
    const auto mapped = spectrum_U_via_mapping(make_Y(2, n), eta);
    const auto direct = spectrum_U_direct(make_Y(2, n), eta);
    CHECK(multiset_distance(mapped.expanded(), direct.expanded()) < 1e-9);
    const int m = n * (n - 1);
    CHECK(mapped.total_multiplicity() == m);
    int plus = 0, minus = 0;
    for (const auto& e : mapped.eigs) {
      if (std::abs(e.value - 1.0) < 1e-9) plus += e.multiplicity;
      if (std::abs(e.value + 1.0) < 1e-9) minus += e.multiplicity;
    }
    CHECK(plus == n * (n - 1) / 2 - n + 2);
    CHECK(minus == n * (n - 1) / 2 - n);
  }
  const auto three = sorted(spectrum_U_via_mapping(make_Y(1, 3), Angle(1, 2)).expanded());
  const auto w = std::polar(1.0, 2 * kPi / 3);
  const auto expected =
      sorted({1.0, 1.0, w, w, std::conj(w), std::conj(w)});
  CHECK(multiset_distance(three, expected) < 1e-12);
}

TEST_CASE("classical walk and unit circle") {
  const auto k3 = spectrum_U_direct(make_complete(3), Angle(0, 1));
  const auto mapped = spectrum_U_via_mapping(make_complete(3), Angle(0, 1));
  CHECK(multiset_distance(k3.expanded(), mapped.expanded()) < 1e-9);
  const auto c4 = spectrum_U_via_mapping(make_cycle(4), Angle(1, 3));
  CHECK(multiset_distance(c4.expanded(), spectrum_U_direct(make_cycle(4), Angle(0, 1)).expanded()) < 1e-9);
  const auto [g, idx] = worked_example();
  for (const auto& v : spectrum_U_direct(g, Angle(1, 2)).expanded()) CHECK(std::abs(std::abs(v) - 1) < 1e-9);
}

TEST_CASE("mapping rejects disconnected digraphs") {
  const Digraph two(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK_THROWS_AS(spectrum_U_via_mapping(two, Angle(1, 2)), PreconditionError);
  CHECK_NOTHROW(spectrum_U_direct(two, Angle(1, 2)));
}

TEST_CASE("floating eta routes agree") {
  for (double eta : {0.3, 1.1, 2.5}) {
    const Digraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 2}});
    CHECK(multiset_distance(spectrum_U_via_mapping(g, eta).expanded(),
                            spectrum_U_direct(g, eta).expanded()) < 1e-8);
  }
}

TEST_CASE("clustering and JSON output") {
  const auto s = cluster({1.0, 1.0 + 1e-12, -1.0}, SpectrumSource::Eigensolver);
  CHECK(s.eigs.size() == 2);
  CHECK(s.total_multiplicity() == 3);
  const std::string json = s.to_json();
  CHECK(json.find("\"mult\"") != std::string::npos);
  CHECK(charpoly_json(from_integer_coeffs({-2, -3, 0, 1})).find("-3") != std::string::npos);
}
