#include "qwalk/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qwalk/canonical.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/cycles.hpp"
#include "qwalk/enumeration.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/supports.hpp"
#include "qwalk/tables.hpp"

namespace qwalk {
namespace {

constexpr std::size_t kMaxSamples = 5;

class Timer {
 public:
  explicit Timer(CheckResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  CheckResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe(const Digraph& g) { return "[" + format_arc_list(g) + "]"; }

std::string describe(const Digraph& g, const Angle& eta) {
  return describe(g) + " eta=" + eta.to_string();
}

/// Checks `ok` as one case and records `what` when it fails.
void expect(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) r.fail(what);
}

// Parses tokens such as "0", "-1/3", "2/3i", "-i".
CycScalar parse_entry(const std::string& token) {
  std::string t = token;
  bool imaginary = false;
  if (!t.empty() && t.back() == 'i') {
    imaginary = true;
    t.pop_back();
  }
  Rational value(1);
  if (t == "-") {
    value = Rational(-1);
  } else if (!t.empty()) {
    const auto slash = t.find('/');
    value = slash == std::string::npos
                ? Rational(std::stoll(t))
                : Rational(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
  }
  CycScalar out(value);
  if (imaginary) out *= CycScalar::root_of_unity(4, 1);
  return out;
}

OpMatrix parse_grid(const std::vector<std::string>& rows) {
  OpMatrix m(IndexSpace::Arc, rows.size(), IndexSpace::Arc, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string token;
    for (std::size_t j = 0; j < rows.size() && in >> token; ++j) m.set(i, j, parse_entry(token));
  }
  return m;
}

void compare_grid(CheckResult& r, const std::string& name, const OpMatrix& got,
                  const OpMatrix& want) {
  for (std::size_t i = 0; i < want.rows(); ++i) {
    for (std::size_t j = 0; j < want.cols(); ++j) {
      expect(r, got(i, j) == want(i, j),
             name + "(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                 got(i, j).to_string() + ", expected " + want(i, j).to_string());
    }
  }
}

std::vector<Digraph> connected_only(const std::vector<Digraph>& digraphs) {
  std::vector<Digraph> out;
  for (const auto& g : digraphs)
    if (g.arc_count() > 0 && weakly_connected(g)) out.push_back(g);
  return out;
}

Digraph random_digraph(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> state(0, 3);
  std::vector<Arc> arcs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const int s = state(rng);
      if (s & 1) arcs.push_back({i, j});
      if (s & 2) arcs.push_back({j, i});
    }
  }
  return Digraph(n, arcs);
}

CycScalar random_scalar(const CycField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  CycScalar::Coeffs c;
  for (int k = 0; k < field.degree(); ++k) c.emplace_back(num(rng), den(rng));
  return CycScalar(field, c);
}

std::vector<std::complex<double>> closed_form_Y(int n) {
  const int edges = n * (n - 1) / 2;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(edges - n + 2), 1.0);
  out.insert(out.end(), static_cast<std::size_t>(edges - n), -1.0);
  const auto [z, zc] = phi_inverse(-1.0 / (n - 1));
  for (int i = 0; i < n - 1; ++i) {
    out.push_back(z);
    out.push_back(zc);
  }
  return out;
}

/// (x - 1)(x + 1/(n-1))^(n-1) with constant term first.
CharPoly closed_form_normalized_poly(int n) {
  std::vector<Rational> p{Rational(-1), Rational(1)};
  const Rational root(1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k] * root;
      next[k + 1] += p[k];
    }
    p = std::move(next);
  }
  return CharPoly(std::vector<CycScalar>(p.begin(), p.end()));
}

// -- battery pieces that have no public entry point ----------------------------

CheckResult check_scalar_field(std::mt19937_64& rng) {
  CheckResult r{"exact scalar field laws"};
  Timer timer(r);
  const std::vector<int> orders{3, 4, 5, 6, 8, 10, 12};
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const CycField& f = CycField::get(orders[pick(rng)]);
    const CycScalar a = random_scalar(f, rng);
    const CycScalar b = random_scalar(f, rng);
    const CycScalar c = random_scalar(f, rng);
    const std::string where = " in Q(zeta_" + std::to_string(f.order()) + ")";
    expect(r, (a + b) + c == a + (b + c), "additive associativity" + where);
    expect(r, (a * b) * c == a * (b * c), "multiplicative associativity" + where);
    expect(r, a * (b + c) == a * b + a * c, "distributivity" + where);
    if (!a.is_zero()) expect(r, (a * a.inverse()).is_one(), "a * a^-1 = 1" + where);
    expect(r, (a * b).conj() == a.conj() * b.conj(), "conj is multiplicative" + where);
    const CycScalar norm = a * a.conj();
    expect(r, norm.is_real() && norm.real_part_sign() == (a.is_zero() ? 0 : 1),
           "a conj(a) real and positive" + where);
  }
  for (const auto& angle : sweep_angles()) {
    const CycScalar z = make_root(angle);
    expect(r, (z * z.conj()).is_one(), "e^{i eta} e^{-i eta} = 1 at " + angle.to_string());
    CycScalar pw = CycScalar(1);
    for (long long k = 0; k < angle.q(); ++k) pw *= z;
    expect(r, pw == CycScalar(angle.p() % 2 == 0 ? 1 : -1),
           "(e^{i eta})^q = (-1)^p at " + angle.to_string());
  }
  return r;
}

CheckResult check_scalar_sign(std::mt19937_64& rng) {
  CheckResult r{"exact real-part sign vs floating"};
  Timer timer(r);
  const std::vector<int> orders{3, 4, 5, 6, 7, 8, 9, 10, 12, 15};
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    const CycScalar x = random_scalar(CycField::get(orders[pick(rng)]), rng);
    const double re = x.to_complex().real();
    if (std::abs(re) <= 1e-9) continue;
    expect(r, x.real_part_sign() == (re > 0 ? 1 : -1), "sign of Re(" + x.to_string() + ")");
  }
  return r;
}

CheckResult check_transpose_laws(const std::vector<Digraph>& digraphs,
                                 const std::vector<Angle>& etas) {
  CheckResult r{"transpose and underlying laws"};
  Timer timer(r);
  for (const auto& g : digraphs) {
    const Digraph t = transpose(g);
    expect(r, underlying(t) == underlying(g), "underlying(transpose) " + describe(g));
    expect(r, transpose(t) == g, "transpose involution " + describe(g));
    const SymmetricArcIndex index(g);
    for (const auto& eta : etas) {
      const EtaFunction th(g, index, eta);
      const EtaFunction tt(t, index, eta);
      bool ok = true;
      for (std::size_t a = 0; a < index.size(); ++a) {
        ok = ok && tt.sign(a) == -th.sign(a) && th.sign(a) == -th.sign(a ^ 1U) &&
             (th.sign(a) == 0) == g.is_digon(index.origin(a), index.terminus(a));
      }
      expect(r, ok, "eta-function of the transpose " + describe(g, eta));
    }
  }
  return r;
}

CheckResult check_switch_chain(int max_n) {
  CheckResult r{"digon switching chain from K_n"};
  Timer timer(r);
  for (int n = 2; n <= max_n; ++n) {
    const Digraph k = make_complete(n);
    for (int a = 0; a <= n; ++a) {
      std::vector<int> lower(static_cast<std::size_t>(n - a));
      std::iota(lower.begin(), lower.end(), a);
      const Digraph y = make_Y(a, n);
      expect(r, digon_cut_switch(k, lower) == y,
             "switch of K_" + std::to_string(n) + " gives Y_" + std::to_string(a));
      std::vector<int> reverse(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) reverse[static_cast<std::size_t>(v)] = n - 1 - v;
      expect(r, relabeled(transpose(y), reverse) == make_Y(n - a, n),
             "reversed transpose of Y_" + std::to_string(a) + " on " + std::to_string(n));
      expect(r, canonical(transpose(y)) == canonical(make_Y(n - a, n)),
             "canonical transpose of Y_" + std::to_string(a) + " on " + std::to_string(n));
    }
  }
  return r;
}

CheckResult check_switch_cospectral(std::mt19937_64& rng, int samples) {
  CheckResult r{"digon switching preserves the H_eta polynomial"};
  Timer timer(r);
  std::uniform_int_distribution<int> order(2, 7);
  std::uniform_int_distribution<int> state(0, 3);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < samples; ++t) {
    const int n = order(rng);
    std::vector<bool> in_s(static_cast<std::size_t>(n));
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      in_s[static_cast<std::size_t>(v)] = coin(rng);
      if (in_s[static_cast<std::size_t>(v)]) s.push_back(v);
    }
    std::vector<Arc> arcs;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        const bool crossing = in_s[static_cast<std::size_t>(i)] != in_s[static_cast<std::size_t>(j)];
        const int st = crossing ? (coin(rng) ? 3 : 0) : state(rng);
        if (st & 1) arcs.push_back({i, j});
        if (st & 2) arcs.push_back({j, i});
      }
    }
    const Digraph g(n, arcs);
    const Digraph h = digon_cut_switch(g, s);
    for (const auto& eta : sweep_angles()) {
      expect(r, charpoly_exact(build_H_eta(g, eta)) == charpoly_exact(build_H_eta(h, eta)),
             "switching " + describe(g, eta));
    }
  }
  return r;
}

CheckResult check_charpoly_roots(std::mt19937_64& rng, int samples) {
  CheckResult r{"exact polynomial vs eigenvalue roots"};
  Timer timer(r);
  std::uniform_int_distribution<int> order(1, 12);
  const std::vector<Angle> etas{Angle(0, 1), Angle(1, 4), Angle(1, 3), Angle(1, 2), Angle(2, 3),
                                Angle(5, 6), Angle(1, 1)};
  std::uniform_int_distribution<std::size_t> pick(0, etas.size() - 1);
  for (int t = 0; t < samples; ++t) {
    const Digraph g = random_digraph(order(rng), rng);
    const Angle eta = etas[pick(rng)];
    const OpMatrix h = build_H_eta(g, eta);
    const auto exact = charpoly_exact(h).float_coeffs();
    const auto eig = hermitian_eigenvalues(h);
    const auto approx = poly_from_roots(std::vector<std::complex<double>>(eig.begin(), eig.end()));
    double worst = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      worst = std::max(worst, std::abs(exact[k] - approx[k]) / std::max(1.0, std::abs(exact[k])));
    }
    r.worst_deviation = std::max(r.worst_deviation, worst);
    expect(r, worst <= 1e-6, "coefficients " + describe(g, eta));
  }
  return r;
}

CheckResult check_single_term_square(const std::vector<Digraph>& digraphs,
                                     const std::vector<Angle>& etas, const std::string& name) {
  CheckResult r{name};
  Timer timer(r);
  for (const auto& g : digraphs) {
    if (g.arc_count() == 0) continue;
    const SymmetricArcIndex index(g);
    for (const auto& eta : etas) {
      const OpMatrix u = build_U_theta(g, index, eta);
      const OpMatrix m = build_D_theta(g, index, eta) * u * u;
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        expect(r, square_support_fast(g, index, eta, s) == support(m, s),
               "sign " + to_string(s) + " " + describe(g, eta));
      }
    }
  }
  return r;
}

CheckResult check_pair_classes(const std::vector<Digraph>& graphs) {
  CheckResult r{"arc-pair classes predict signs of U^2"};
  Timer timer(r);
  for (const auto& g : graphs) {
    const SymmetricArcIndex index(g);
    const OpMatrix u = build_grover_U(g, index);
    const OpMatrix sq = u * u;
    for (std::size_t a = 0; a < index.size(); ++a) {
      for (std::size_t b = 0; b < index.size(); ++b) {
        int want = 0;
        switch (classify_arc_pair(g, index, a, b)) {
          case PairClass::Equal:
          case PairClass::Linked: want = 1; break;
          case PairClass::SameOrigin:
          case PairClass::SameTerminus: want = -1; break;
          case PairClass::None: want = 0; break;
        }
        expect(r, sq(a, b).real_part_sign() == want,
               "pair (" + std::to_string(a) + "," + std::to_string(b) + ") " + describe(g));
      }
    }
  }
  return r;
}

CheckResult check_support_disjointness(const std::vector<Digraph>& digraphs,
                                       const std::vector<Angle>& etas, int max_power) {
  CheckResult r{"positive and negative supports are disjoint"};
  Timer timer(r);
  for (const auto& g : digraphs) {
    if (g.arc_count() == 0) continue;
    const SymmetricArcIndex index(g);
    for (const auto& eta : etas) {
      const OpMatrix u = build_U_theta(g, index, eta);
      OpMatrix acc = build_D_theta(g, index, eta);
      for (int n = 1; n <= max_power; ++n) {
        acc = acc * u;
        expect(r, support(acc, Sign::Plus).hadamard(support(acc, Sign::Minus)).is_zero(),
               "power " + std::to_string(n) + " " + describe(g, eta));
      }
    }
  }
  return r;
}

CheckResult check_enumeration_counts(int max_order, int jobs) {
  CheckResult r{"enumeration counts and exhaustive oracle"};
  Timer timer(r);
  for (int n = 1; n <= max_order; ++n) {
    const auto codes = enumerate_codes(n, jobs);
    expect(r, codes.size() == known_digraph_count(n),
           "order " + std::to_string(n) + ": " + std::to_string(codes.size()) + " digraphs");
    expect(r, enumerate_codes_exhaustive(n) == codes,
           "order " + std::to_string(n) + " differs from the exhaustive scan");
  }
  return r;
}

CheckResult check_canonical_invariance(std::mt19937_64& rng, int samples, int perms) {
  CheckResult r{"canonical form is permutation invariant"};
  Timer timer(r);
  std::uniform_int_distribution<int> order(1, 9);
  for (int t = 0; t < samples; ++t) {
    const Digraph g = random_digraph(order(rng), rng);
    const CanonicalCode code = canonical(g);
    expect(r, packed_code(relabeled(g, canonical_labeling(g))) == code,
           "canonical labeling " + describe(g));
    std::vector<int> sigma(static_cast<std::size_t>(g.order()));
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int p = 0; p < perms; ++p) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      expect(r, canonical(relabeled(g, sigma)) == code, "relabeling " + describe(g));
    }
  }
  return r;
}

CheckResult check_round_trips(const std::vector<Digraph>& digraphs, std::mt19937_64& rng) {
  CheckResult r{"arc-list and compact-code round trips"};
  Timer timer(r);
  auto one = [&](const Digraph& g) {
    expect(r, parse_arc_list(format_arc_list(g)) == g, "arc list " + describe(g));
    expect(r, from_compact_code(to_compact_code(g), g.order()) == g, "compact code " + describe(g));
  };
  for (const auto& g : digraphs) one(g);
  std::uniform_int_distribution<int> order(1, 12);
  for (int t = 0; t < 100; ++t) one(random_digraph(order(rng), rng));
  return r;
}

CheckResult check_parallel_determinism(int order) {
  CheckResult r{"classing output independent of job count"};
  Timer timer(r);
  const auto digraphs = enumerate_digraphs(order);
  for (const auto& spec : reference_table_specs()) {
    ClassifyOptions serial;
    ClassifyOptions parallel;
    parallel.jobs = 3;
    parallel.partitions = 7;
    const auto a = classify(order, spec, digraphs, serial);
    const auto b = classify(order, spec, digraphs, parallel);
    for (auto fmt : {TableFormat::Csv, TableFormat::Json, TableFormat::Markdown}) {
      expect(r, emit_table(spec, {a}, fmt) == emit_table(spec, {b}, fmt),
             spec.label() + " order " + std::to_string(order));
    }
  }
  return r;
}

}  // namespace

void CheckResult::fail(const std::string& what) {
  ++failures;
  if (samples.size() < kMaxSamples) samples.push_back(what);
}

std::string CheckResult::summary() const {
  std::ostringstream out;
  out << name << ": " << cases << " cases, " << failures << " failures";
  if (worst_deviation > 0) out << ", worst deviation " << worst_deviation;
  out.precision(3);
  out << std::fixed << " (" << seconds << " s)";
  return out.str();
}

std::vector<Angle> sweep_angles() {
  return {Angle(0, 1), Angle(1, 3), Angle(1, 2), Angle(2, 3), Angle(1, 1)};
}

std::vector<Angle> regime_angles() { return {Angle(1, 3), Angle(1, 2), Angle(2, 3)}; }

std::vector<Digraph> digraphs_with_arcs(int lo, int hi, int jobs) {
  std::vector<Digraph> out;
  for (int n = lo; n <= hi; ++n) {
    for (auto& g : enumerate_digraphs(n, jobs))
      if (g.arc_count() > 0) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Digraph> regular_digraphs(int max_order, int min_degree, int jobs) {
  std::vector<Digraph> out;
  for (int n = std::max(2, min_degree + 1); n <= max_order; ++n) {
    for (auto& g : enumerate_digraphs(n, jobs)) {
      const auto k = is_regular(g);
      if (k && *k >= min_degree) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Digraph> regular_graphs(int max_order, int min_degree) {
  if (max_order > 8) throw PreconditionError("regular_graphs supports orders up to 8");
  std::vector<Digraph> out;
  for (int n = std::max(2, min_degree + 1); n <= max_order; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::set<CanonicalCode> seen;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) {
          ++deg[static_cast<std::size_t>(pairs[e].first)];
          ++deg[static_cast<std::size_t>(pairs[e].second)];
        }
      }
      if (deg[0] < min_degree || std::any_of(deg.begin(), deg.end(), [&](int d) { return d != deg[0]; }))
        continue;
      std::vector<Arc> arcs;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) {
          arcs.push_back({pairs[e].first, pairs[e].second});
          arcs.push_back({pairs[e].second, pairs[e].first});
        }
      }
      const Digraph g(n, arcs);
      if (seen.insert(canonical(g)).second) out.push_back(g);
    }
  }
  return out;
}

std::pair<Digraph, SymmetricArcIndex> worked_example() {
  // v1..v4 are 0..3; a = (v2, v1) so that K's first row is supported on a.
  const Digraph g(4, {{0, 1}, {1, 0}, {2, 1}, {1, 3}, {3, 2}});
  SymmetricArcIndex index(g, {{1, 0}, {0, 1}, {2, 1}, {1, 2}, {1, 3}, {3, 1}, {3, 2}, {2, 3}});
  return {g, std::move(index)};
}

CheckResult check_worked_example() {
  CheckResult r{"worked example matrices"};
  Timer timer(r);
  const auto [g, index] = worked_example();
  const Angle eta(1, 2);

  // K as radicands: entry 1/sqrt(r), 0 for absent.
  const std::vector<std::vector<long long>> k_want{{1, 0, 0, 0, 0, 0, 0, 0},
                                                   {0, 3, 3, 0, 0, 3, 0, 0},
                                                   {0, 0, 0, 2, 0, 0, 2, 0},
                                                   {0, 0, 0, 0, 2, 0, 0, 2}};
  const SqrtScaledMatrix k = build_K(g, index);
  for (std::size_t v = 0; v < 4; ++v) {
    for (std::size_t a = 0; a < 8; ++a) {
      const CycScalar& c = k.core()(v, a);
      const long long rad = k_want[v][a];
      bool ok = false;
      if (rad == 0) {
        ok = c.is_zero();
      } else if (c.is_rational() && c.rational_value().sign() > 0) {
        const Rational scale(k.row_scale()[v] * k.col_scale()[a]);
        ok = c.rational_value() * c.rational_value() * Rational(rad) == scale;
      }
      expect(r, ok, "K(" + std::to_string(v) + "," + std::to_string(a) + ")");
    }
  }

  compare_grid(r, "C", build_C(g, index),
               parse_grid({"1 0 0 0 0 0 0 0", "0 -1/3 2/3 0 0 2/3 0 0", "0 2/3 -1/3 0 0 2/3 0 0",
                           "0 0 0 0 0 0 1 0", "0 0 0 0 0 0 0 1", "0 2/3 2/3 0 0 -1/3 0 0",
                           "0 0 0 1 0 0 0 0", "0 0 0 0 1 0 0 0"}));
  compare_grid(r, "S_theta", build_S_theta(g, index, eta),
               parse_grid({"0 1 0 0 0 0 0 0", "1 0 0 0 0 0 0 0", "0 0 0 -i 0 0 0 0",
                           "0 0 i 0 0 0 0 0", "0 0 0 0 0 -i 0 0", "0 0 0 0 i 0 0 0",
                           "0 0 0 0 0 0 0 -i", "0 0 0 0 0 0 i 0"}));
  compare_grid(r, "U_theta", build_U_theta(g, index, eta),
               parse_grid({"0 -1/3 2/3 0 0 2/3 0 0", "1 0 0 0 0 0 0 0", "0 0 0 0 0 0 -i 0",
                           "0 2/3i -1/3i 0 0 2/3i 0 0", "0 -2/3i -2/3i 0 0 1/3i 0 0",
                           "0 0 0 0 0 0 0 i", "0 0 0 0 -i 0 0 0", "0 0 0 i 0 0 0 0"}));
  return r;
}

CheckResult check_operator_identities(const std::vector<Digraph>& digraphs,
                                      const std::vector<Angle>& etas) {
  CheckResult r{"exact operator identities"};
  Timer timer(r);
  for (const auto& g : digraphs) {
    if (g.arc_count() == 0) continue;
    const SymmetricArcIndex index(g);
    const std::size_t arcs = index.size();
    const auto id_arc = OpMatrix::identity(IndexSpace::Arc, arcs);
    const SqrtScaledMatrix k = build_K(g, index);
    const OpMatrix c = build_C(g, index);
    const OpMatrix s = build_S(g, index);
    const OpMatrix grover = build_grover_U(g, index);
    const auto [ft, fo] = build_F(g, index);
    const std::string gd = describe(g);

    expect(r, (k * k.adjoint()).to_exact() ==
                  OpMatrix::identity(IndexSpace::Vertex, active_vertices(g).size()),
           "KK* = I " + gd);
    expect(r, c == (k.adjoint() * k).to_exact().scaled(2) - id_arc, "C = 2K*K - I " + gd);
    expect(r, c.is_self_adjoint() && c * c == id_arc, "C self-adjoint involution " + gd);
    expect(r, s * s == id_arc, "S^2 = I " + gd);
    expect(r, s * ft.transposed() == fo.transposed(), "S F_t^T = F_o^T " + gd);
    const OpMatrix ff = fo.transposed() * ft;
    bool incidence = true;
    for (std::size_t a = 0; a < arcs; ++a)
      for (std::size_t b = 0; b < arcs; ++b)
        incidence = incidence &&
                    ff(a, b) == CycScalar(index.terminus(b) == index.origin(a) ? 1 : 0);
    expect(r, incidence, "F_o^T F_t = delta(t(b), o(a)) " + gd);

    const auto regular = is_regular(g);
    for (const auto& eta : etas) {
      const std::string ged = describe(g, eta);
      const OpMatrix st = build_S_theta(g, index, eta);
      const OpMatrix dt = build_D_theta(g, index, eta);
      const OpMatrix u = build_U_theta(g, index, eta);
      const OpMatrix h = build_H_eta(g, eta);
      expect(r, st.is_self_adjoint() && st.is_unitary(), "S_theta self-adjoint unitary " + ged);
      expect(r, u.is_unitary(), "U_theta unitary " + ged);
      expect(r, k * SqrtScaledMatrix(st) * k.adjoint() == build_H_tilde(g, eta),
             "K S_theta K* = normalized H_eta " + ged);
      expect(r, dt * st == s, "D_theta S_theta = S " + ged);
      expect(r, dt * u == grover, "D_theta U_theta = U " + ged);
      expect(r, build_U_theta(g, index, eta.negated()) == build_U_theta(transpose(g), index, eta),
             "U_{-eta}(G) = U_eta(G^-1) " + ged);
      expect(r, h.is_self_adjoint(), "H_eta self-adjoint " + ged);
      if (eta == Angle(1, 2)) expect(r, h == build_H(g), "H_{pi/2} = H " + ged);
      if (regular && *regular >= 3) {
        expect(r, build_U_theta_regular(g, index, eta) == u, "regular route " + ged);
      }
    }
  }
  return r;
}

CheckResult check_spectral_mapping(const std::vector<Digraph>& digraphs,
                                   const std::vector<Angle>& etas, double tolerance) {
  CheckResult r{"spectral mapping vs direct eigensolve"};
  Timer timer(r);
  for (const auto& g : connected_only(digraphs)) {
    for (const auto& eta : etas) {
      const auto mapped = spectrum_U_via_mapping(g, eta);
      const auto direct = spectrum_U_direct(g, eta).expanded();
      const double d = multiset_distance(mapped.expanded(), direct);
      double off_circle = 0.0;
      for (const auto& z : direct) off_circle = std::max(off_circle, std::abs(std::abs(z) - 1.0));
      r.worst_deviation = std::max(r.worst_deviation, d);
      expect(r, d <= tolerance, "mapping deviation " + std::to_string(d) + " " + describe(g, eta));
      expect(r, off_circle <= 1e-9, "eigenvalue off the unit circle " + describe(g, eta));
      expect(r, mapped.total_multiplicity() == static_cast<int>(2 * edge_count(g)),
             "multiplicities sum to |A| " + describe(g, eta));
    }
  }
  return r;
}

CheckResult check_normalized_spectrum(const std::vector<Digraph>& digraphs,
                                      const std::vector<Angle>& etas, double tolerance) {
  CheckResult r{"normalized spectrum bound and +-1 multiplicities"};
  Timer timer(r);
  for (const auto& g : connected_only(digraphs)) {
    for (const auto& eta : etas) {
      const auto eig = hermitian_eigenvalues(build_H_tilde(g, eta));
      const auto cycles = classify_cycles(g, eta);
      int plus = 0;
      int minus = 0;
      bool bounded = true;
      for (double x : eig) {
        bounded = bounded && std::abs(x) <= 1.0 + 1e-9;
        if (std::abs(x - 1.0) <= tolerance) ++plus;
        if (std::abs(x + 1.0) <= tolerance) ++minus;
      }
      expect(r, bounded, "eigenvalue outside [-1, 1] " + describe(g, eta));
      expect(r, plus == cycles.m_plus && minus == cycles.m_minus,
             "multiplicities (" + std::to_string(plus) + "," + std::to_string(minus) +
                 ") vs case " + to_string(cycles.label) + " " + describe(g, eta));
    }
  }
  return r;
}

CheckResult check_Y_spectrum(int n_min, int n_max, const std::vector<Angle>& etas,
                             double tolerance) {
  CheckResult r{"closed-form spectrum of Y_{a,n-a}"};
  Timer timer(r);
  for (int n = n_min; n <= n_max; ++n) {
    const auto expected = closed_form_Y(n);
    const CharPoly normalized = closed_form_normalized_poly(n);
    const long long edges = n * (n - 1) / 2;
    for (int a = 0; a <= n; ++a) {
      const Digraph y = make_Y(a, n);
      for (const auto& eta : etas) {
        const std::string where =
            "Y_" + std::to_string(a) + "," + std::to_string(n - a) + " eta=" + eta.to_string();
        const auto mm = mapping_multiplicities(y, eta);
        expect(r,
               mm.cycles.m_plus == 1 && mm.cycles.m_minus == 0 &&
                   mm.big_m_plus == edges - n + 1 && mm.big_m_minus == edges - n,
               "exact +-1 multiplicities " + where);
        expect(r, charpoly_exact(build_H_tilde(y, eta)) == normalized,
               "normalized polynomial " + where);
        const double dm = multiset_distance(spectrum_U_via_mapping(y, eta).expanded(), expected);
        const double dd = multiset_distance(spectrum_U_direct(y, eta).expanded(), expected);
        r.worst_deviation = std::max({r.worst_deviation, dm, dd});
        expect(r, dm <= tolerance, "mapping route " + where);
        expect(r, dd <= tolerance, "direct route " + where);
      }
    }
  }
  return r;
}

std::pair<CheckResult, CheckResult> check_square_support_regimes(
    const std::vector<Digraph>& regular, const std::vector<Angle>& etas) {
  CheckResult regimes{"square support regimes"};
  CheckResult trace{"square support trace counts digons"};
  {
    Timer timer(regimes);
    for (const auto& g : regular) {
      const long long edges = static_cast<long long>(edge_count(g));
      const long long d = static_cast<long long>(digons(g).size());
      for (const auto& eta : etas) {
        const auto reps = verify_square_support_regimes(g, eta);
        for (const auto& rep : reps) {
          expect(regimes, rep.precondition_met && rep.holds(),
                 "sign " + to_string(rep.sign) + " " + describe(g, eta) + " " + rep.to_json());
        }
        const long long want = regime_of(eta) == EtaRegime::Acute ? edges : d;
        expect(trace, reps[0].support_trace == 2 * want,
               "trace " + std::to_string(reps[0].support_trace) + " vs 2*" +
                   std::to_string(want) + " " + describe(g, eta));
      }
    }
  }
  return {regimes, trace};
}

CheckResult check_square_negative_identity(const std::vector<Digraph>& graphs) {
  CheckResult r{"(U^2)^- = S U^+ + U^+ S"};
  Timer timer(r);
  for (const auto& g : graphs) {
    const auto rep = verify_square_negative_identity(g);
    expect(r, rep.holds(), describe(g) + " " + rep.to_json());
  }
  return r;
}

CheckResult check_transpose_invariance(const std::vector<Digraph>& digraphs,
                                       const std::vector<Angle>& etas) {
  CheckResult r{"square supports invariant under transpose"};
  Timer timer(r);
  for (const auto& g : digraphs) {
    if (g.arc_count() == 0) continue;
    const SymmetricArcIndex index(g);
    const Digraph t = transpose(g);
    for (const auto& eta : etas) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const IntMatrix a = power_support(g, index, eta, 2, s).matrix;
        const IntMatrix b = power_support(t, index, eta, 2, s).matrix;
        const std::string where = "sign " + to_string(s) + " " + describe(g, eta);
        expect(r, charpoly_integer(a) == charpoly_integer(b), "polynomial " + where);
        expect(r, a == b, "support matrix " + where);
      }
    }
  }
  return r;
}

CheckResult check_table_reproduction(int lo, int hi, int jobs) {
  CheckResult r{"reference table cells"};
  Timer timer(r);
  ClassifyOptions options;
  options.jobs = jobs;
  for (int n = lo; n <= hi; ++n) {
    const auto digraphs = enumerate_digraphs(n, jobs);
    for (const auto& spec : reference_table_specs()) {
      const CospectralTable t = classify(n, spec, digraphs, options);
      const auto got = t.row_values();
      const auto want = reference_values(spec, n);
      const std::string where = spec.label() + " order " + std::to_string(n);
      if (!want) {
        r.fail("no reference for " + where);
        continue;
      }
      for (std::size_t row = 0; row < got.size(); ++row) {
        expect(r, got[row] == (*want)[row],
               where + " row " + std::to_string(row + 1) + ": " + std::to_string(got[row]) +
                   " vs " + std::to_string((*want)[row]));
      }
      expect(r, t.no_graphs + t.only_graphs + t.mixed == t.distinct,
             "composition rows sum to classes, " + where);
    }
  }
  return r;
}

CheckResult check_half_identification(int n, const Angle& eta) {
  CheckResult r{"square support separates Y_{a,n-a} up to transpose"};
  Timer timer(r);
  std::vector<std::string> u2;
  std::vector<std::string> h;
  for (int a = 0; a <= n; ++a) {
    u2.push_back(functor_key(make_Y(a, n), TableSpec::square_support(eta)).value_or(""));
    h.push_back(functor_key(make_Y(a, n), TableSpec::hermitian(eta)).value_or(""));
  }
  const auto tag = [](int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (int a = 0; a <= n; ++a) {
    expect(r, h[static_cast<std::size_t>(a)] == h[0], "H_eta polynomial of Y_" + std::to_string(a));
    expect(r, u2[static_cast<std::size_t>(a)] == u2[static_cast<std::size_t>(n - a)],
           "pair " + tag(a, n - a) + " should share a polynomial");
  }
  for (int a = (n + 1) / 2; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      expect(r, u2[static_cast<std::size_t>(a)] != u2[static_cast<std::size_t>(b)],
             "pair " + tag(a, b) + " should differ");
    }
  }
  return r;
}

std::vector<CheckResult> run_invariant_suite(
    const SuiteOptions& options, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  auto push = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  std::mt19937_64 rng(options.seed);

  push(check_scalar_field(rng));
  push(check_scalar_sign(rng));

  const auto sweep = digraphs_with_arcs(2, options.max_order, options.jobs);
  const auto angles = sweep_angles();
  const auto regimes = regime_angles();
  push(check_transpose_laws(sweep, angles));
  push(check_switch_chain(7));
  push(check_normalized_spectrum(sweep, regimes, 1e-8));

  push(check_worked_example());
  push(check_operator_identities(sweep, angles));

  push(check_spectral_mapping(sweep, {Angle(0, 1), Angle(1, 3), Angle(1, 2), Angle(2, 3)}, 1e-8));
  push(check_switch_cospectral(rng, 60));
  push(check_charpoly_roots(rng, 60));
  push(check_Y_spectrum(3, 6, regimes, 1e-8));

  const auto regular = regular_digraphs(options.regular_max_order, 3, options.jobs);
  const auto graphs = regular_graphs(options.graph_max_order, 3);
  push(check_transpose_invariance(sweep, regimes));
  push(check_single_term_square(regular, regimes, "single-term square support, regular"));
  push(check_single_term_square(sweep, angles, "single-term square support, all small"));
  push(check_pair_classes(graphs));
  push(check_support_disjointness(sweep, angles, 3));
  auto [regime_check, trace_check] = check_square_support_regimes(regular, regimes);
  push(std::move(regime_check));
  push(std::move(trace_check));
  push(check_square_negative_identity(graphs));

  push(check_enumeration_counts(5, options.jobs));
  push(check_canonical_invariance(rng, 40, 25));
  if (options.table_max_order >= 2) {
    push(check_table_reproduction(2, options.table_max_order, options.jobs));
  }
  push(check_half_identification(6, Angle(2, 3)));

  push(check_round_trips(sweep, rng));
  push(check_parallel_determinism(4));
  return out;
}

}  // namespace qwalk
