#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qwalk/canonical.hpp"
#include "qwalk/enumeration.hpp"

using namespace qwalk;

namespace {

// Number of isomorphism classes by marking the orbit of every labeled digraph.
std::uint64_t orbit_count(int n) {
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
  std::map<std::vector<std::uint64_t>, std::uint64_t> index_of;
  std::vector<Digraph> labeled;
  for (std::uint64_t i = 0; i < total; ++i) {
    labeled.push_back(labeled_digraph(n, i));
    std::vector<std::uint64_t> masks;
    for (int u = 0; u < n; ++u) masks.push_back(labeled.back().out_mask(u));
    index_of.emplace(masks, i);
  }
  REQUIRE(index_of.size() == total);
  std::vector<char> seen(total, 0);
  std::vector<int> perm(n);
  std::uint64_t orbits = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const Digraph h = relabeled(labeled[i], perm);
      std::vector<std::uint64_t> masks;
      for (int u = 0; u < n; ++u) masks.push_back(h.out_mask(u));
      seen[index_of.at(masks)] = 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return orbits;
}

}  // namespace

TEST_CASE("published digraph counts") {
  CHECK(enumerate_codes(1).size() == 1);
  CHECK(enumerate_codes(2).size() == 3);
  CHECK(enumerate_codes(3).size() == 16);
  CHECK(enumerate_codes(4).size() == 218);
  CHECK(enumerate_codes(5).size() == 9608);
  for (int n = 1; n <= 5; ++n) CHECK(known_digraph_count(n) == enumerate_codes(n).size());
}

TEST_CASE("enumeration agrees with orbit counting") {
  for (int n = 1; n <= 4; ++n) CHECK(orbit_count(n) == enumerate_codes(n).size());
}

TEST_CASE("enumeration agrees with exhaustive canonical scan") {
  for (int n = 1; n <= 4; ++n) {
    auto a = enumerate_codes(n);
    auto b = enumerate_codes_exhaustive(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("enumerated digraphs are canonical and pairwise non-isomorphic") {
  const auto graphs = enumerate_digraphs(4);
  std::set<CanonicalCode> codes;
  for (const Digraph& g : graphs) {
    CHECK(is_canonical(g));
    codes.insert(canonical(g));
  }
  CHECK(codes.size() == graphs.size());
}

TEST_CASE("parallel enumeration is deterministic") {
  CHECK(enumerate_codes(5, 3) == enumerate_codes(5, 1));
}

TEST_CASE("packed code round trip") {
  for (const Digraph& g : enumerate_digraphs(4)) {
    const CanonicalCode c = packed_code(g);
    CHECK(from_packed_code(c.order, c.value) == g);
  }
}
