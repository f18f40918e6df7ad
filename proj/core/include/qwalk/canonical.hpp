#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/digraph.hpp"

namespace qwalk {

/// Largest order accepted by canonical().
inline constexpr int kMaxCanonicalOrder = 10;

/// Compact code packed into an integer: the digit of pair position k sits at
/// bits 2(P-1-k), so integer order equals lexicographic order of the code
/// string for a fixed order n (P = n(n-1)/2 positions).
struct CanonicalCode {
  int order = 0;
  unsigned __int128 value = 0;

  std::string text() const;
  Digraph digraph() const;
  /// Low 64 bits; exact for n <= 8.
  std::uint64_t small_value() const { return static_cast<std::uint64_t>(value); }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Packed compact code of g under its current labeling.
CanonicalCode packed_code(const Digraph& g);
Digraph from_packed_code(int order, unsigned __int128 value);

/// Isomorphism-invariant ordered vertex partition from colour refinement,
/// seeded by (one-way out-degree, one-way in-degree, digon degree). Returns the
/// colour rank of each vertex; ranks are dense, 0-based and ordered by an
/// invariant signature.
std::vector<int> refine_colours(const Digraph& g);

/// Canonical form: the lexicographically least compact code among labelings
/// that list the refined colour classes in rank order. Isomorphic digraphs and
/// only those get equal codes. Throws PreconditionError for n > 10.
CanonicalCode canonical(const Digraph& g);

/// perm[v] = canonical label of v, so relabeled(g, perm) has code canonical(g).
std::vector<int> canonical_labeling(const Digraph& g);

bool is_canonical(const Digraph& g);

}  // namespace qwalk
