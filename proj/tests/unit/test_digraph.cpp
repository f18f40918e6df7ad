#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qwalk/canonical.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/cycles.hpp"
#include "qwalk/digraph.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/verification.hpp"

using namespace qwalk;

namespace {

// Brute-force digon count over unordered pairs.
std::size_t digons_by_scan(const Digraph& g) {
  std::size_t d = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_arc(u, v) && g.has_arc(v, u)) ++d;
  return d;
}

// Isomorphism by trying every permutation.
bool isomorphic_brute(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabeled(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("symmetric closure") {
  const Digraph arc(2, {{0, 1}});
  const SymmetricArcIndex idx(arc);
  REQUIRE(idx.size() == 2);
  CHECK(idx.arc(0).from == 0);
  CHECK(idx.arc(0).to == 1);
  CHECK(idx.arc(1).from == 1);
  CHECK(idx.arc(1).to == 0);
  CHECK(SymmetricArcIndex(Digraph(2, {{0, 1}, {1, 0}})).size() == 2);

  const auto [example, order] = worked_example();
  CHECK(order.size() == 8);
  CHECK(SymmetricArcIndex(example).size() == 8);
  for (std::size_t i = 0; i < order.size(); ++i)
    CHECK(order.arc(SymmetricArcIndex::inverse(i)).from == order.arc(i).to);
}

TEST_CASE("digons") {
  const auto [example, order] = worked_example();
  CHECK(digons(example).size() == 1);
  for (int n = 2; n <= 7; ++n) CHECK(digons(make_complete(n)).size() == std::size_t(n * (n - 1) / 2));
  const Digraph y21 = make_Y(2, 3);
  CHECK(digons(y21).size() == digons_by_scan(y21));
  CHECK(digons(y21).size() == 1);
}

TEST_CASE("transpose") {
  const Digraph k3 = make_complete(3);
  CHECK(transpose(k3) == k3);
  CHECK(transpose(Digraph(2, {{0, 1}})) == Digraph(2, {{1, 0}}));
  for (int n = 3; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      CHECK(canonical(transpose(make_Y(a, n))) == canonical(make_Y(n - a, n)));
}

TEST_CASE("connectivity and regularity") {
  const auto [example, order] = worked_example();
  CHECK(weakly_connected(example));
  CHECK_FALSE(is_regular(example).has_value());
  auto deg = example.degrees();
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{1, 2, 2, 3});
  CHECK(is_regular(make_complete(4)) == 3);
  CHECK_FALSE(weakly_connected(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  CHECK(weak_components(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})).size() == 2);
}

TEST_CASE("family constructors") {
  CHECK(make_Y(0, 3) == make_complete(3));
  CHECK(make_Y(3, 3) == make_complete(3));
  const Digraph y = make_Y(2, 3);
  CHECK(y == Digraph(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}));
  CHECK(y.arc_count() == 2 + 0 + 2);
  CHECK(make_Y(1, 2) == Digraph(2, {{0, 1}}));
  for (int n = 3; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      CHECK(make_Y(a, n).arc_count() ==
            std::size_t(a * (a - 1) + (n - a) * (n - a - 1) + a * (n - a)));
  CHECK(make_cycle(4).is_graph());
  CHECK(make_cycle(4).arc_count() == 8);
}

TEST_CASE("digon-cut switching") {
  const Digraph k3 = make_complete(3);
  const std::vector<int> s{2};
  CHECK(digon_cut_switch(k3, s) == make_Y(2, 3));
  const Angle eta(1, 2);
  CHECK(charpoly_exact(build_H_eta(make_Y(2, 3), eta)) == charpoly_exact(build_H_eta(k3, eta)));

  const auto [example, order] = worked_example();
  CHECK(digon_cut_switch(example, std::vector<int>{}) == example);

  for (int n = 3; n <= 6; ++n) {
    for (int a = 0; a <= n; ++a) {
      std::vector<int> lower(n - a);
      std::iota(lower.begin(), lower.end(), a);
      CHECK(digon_cut_switch(make_complete(n), lower) == make_Y(a, n));
    }
  }
  // cut through a one-way arc
  CHECK_THROWS_AS(digon_cut_switch(Digraph(2, {{0, 1}}), std::vector<int>{1}), PreconditionError);
}

TEST_CASE("cycle classification") {
  for (int n = 3; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (const Angle& eta : sweep_angles()) {
        if (eta == Angle(0, 1) || eta == Angle(1, 1)) continue;
        const auto c = classify_cycles(make_Y(a, n), eta);
        CHECK(c.label == CycleCase::II);
        CHECK(c.m_plus == 1);
        CHECK(c.m_minus == 0);
      }
  const auto c4 = classify_cycles(make_cycle(4), Angle(1, 3));
  CHECK(c4.label == CycleCase::I);
  CHECK(c4.m_plus == 1);
  CHECK(c4.m_minus == 1);
  const auto c3 = classify_cycles(make_cycle(3), Angle(1, 3));
  CHECK(c3.label == CycleCase::II);
  CHECK(c3.m_plus == 1);
  CHECK(c3.m_minus == 0);
}

TEST_CASE("arc-list and compact code round trips") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 30; ++t) {
      std::vector<std::uint64_t> masks(n, 0);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && (rng() & 1)) masks[u] |= std::uint64_t{1} << v;
      const Digraph g = Digraph::from_out_masks(masks);
      CHECK(from_compact_code(to_compact_code(g), n) == g);
      CHECK(parse_arc_list(format_arc_list(g)) == g);
    }
  }
  CHECK(from_compact_code("").order() == 1);
  CHECK(from_compact_code("", 0).order() == 0);
  CHECK(to_compact_code(make_complete(3)).size() == 3);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_arc_list("n=3; 0->1\n1->x"), ParseError);
  try {
    parse_arc_list("n=3; 0->1\n1->x");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_arc_list("n=2; 0->0"), ParseError);
  CHECK(parse_arc_list("n=3; 0->1; 1<->2") == Digraph(3, {{0, 1}, {1, 2}, {2, 1}}));
  CHECK_THROWS_AS(from_compact_code("12"), ParseError);
}

TEST_CASE("canonical form matches brute-force isomorphism") {
  std::mt19937_64 rng(19);
  std::vector<Digraph> pool;
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<std::uint64_t> masks(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 3 == 0) masks[u] |= std::uint64_t{1} << v;
    pool.push_back(Digraph::from_out_masks(masks));
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      CHECK((canonical(pool[i]) == canonical(pool[j])) == isomorphic_brute(pool[i], pool[j]));
}

TEST_CASE("canonical form is labeling invariant") {
  CHECK(canonical(Digraph(2, {{0, 1}})) == canonical(Digraph(2, {{1, 0}})));
  CHECK_FALSE(canonical(make_Y(2, 3)) == canonical(make_Y(1, 3)));
  std::mt19937_64 rng(23);
  const Digraph g(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 6}, {6, 4}, {3, 4}});
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 100; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Digraph h = relabeled(g, perm);
    CHECK(canonical(h) == canonical(g));
    CHECK(relabeled(h, canonical_labeling(h)) == canonical(g).digraph());
  }
}
