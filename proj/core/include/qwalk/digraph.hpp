#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/cyclotomic.hpp"

namespace qwalk {

/// Ordered pair (origin, terminus).
struct Arc {
  int from = 0;
  int to = 0;

  Arc inverse() const { return {to, from}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite loopless digraph on vertices 0..n-1 with at most 64 vertices.
///
/// Rows of the adjacency relation are stored as bit masks; the value is
/// immutable after construction.
class Digraph {
 public:
  static constexpr int kMaxOrder = 64;

  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}
  /// out_masks[u] has bit v set iff (u, v) is an arc.
  static Digraph from_out_masks(std::vector<std::uint64_t> out_masks);

  int order() const noexcept { return n_; }
  bool has_arc(int u, int v) const noexcept { return (out_[u] >> v) & 1U; }
  /// Both (u, v) and (v, u) present.
  bool is_digon(int u, int v) const noexcept { return has_arc(u, v) && has_arc(v, u); }
  bool adjacent(int u, int v) const noexcept { return has_arc(u, v) || has_arc(v, u); }

  std::uint64_t out_mask(int u) const noexcept { return out_[u]; }
  std::uint64_t in_mask(int v) const;
  std::uint64_t neighbour_mask(int v) const;

  std::size_t arc_count() const;
  /// Arcs sorted lexicographically.
  std::vector<Arc> arcs() const;
  /// deg_G(x) = deg_{G^pm}(x).
  int degree(int v) const;
  std::vector<int> degrees() const;

  /// Every arc lies in a digon, i.e. the digraph is an undirected graph.
  bool is_graph() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> out_;
};

/// G^pm: the arc set closed under inversion.
Digraph underlying(const Digraph& g);
/// G^{-1}: every arc reversed.
Digraph transpose(const Digraph& g);
/// Digons {x, y} as pairs with x < y, sorted.
std::vector<std::pair<int, int>> digons(const Digraph& g);
/// Number of edges of G^pm.
std::size_t edge_count(const Digraph& g);

bool weakly_connected(const Digraph& g);
/// k when every vertex has degree k.
std::optional<int> is_regular(const Digraph& g);
bool bipartite_underlying(const Digraph& g);
/// Weak components, each a sorted vertex list; components ordered by least vertex.
std::vector<std::vector<int>> weak_components(const Digraph& g);

/// perm[v] is the new label of vertex v.
Digraph relabeled(const Digraph& g, std::span<const int> perm);
/// Subdigraph induced on the given vertices, relabeled 0..k-1 in list order.
Digraph induced(const Digraph& g, std::span<const int> vertices);

// -- families -------------------------------------------------------------

/// Complete graph K_n with every edge a digon.
Digraph make_complete(int n);
/// Undirected cycle C_n (all digons), n >= 3.
Digraph make_cycle(int n);
/// Y_{a,n-a}: digon-complete blocks [0,a) and [a,n) plus every arc from the
/// first block to the second.
Digraph make_Y(int a, int n);

/// Replaces every digon {x, y} with x outside s and y inside s by the single
/// arc (x, y). Throws PreconditionError naming the offending arc if some arc
/// crossing the cut is not part of a digon.
Digraph digon_cut_switch(const Digraph& g, std::span<const int> s);

// -- arc index ------------------------------------------------------------

/// Indexing of A(G^pm) with a and a^{-1} at positions 2e and 2e+1.
///
/// The default order sorts underlying edges {u, v} (u < v) lexicographically
/// and lists (u, v) before (v, u). It depends on G^pm only, so a digraph and
/// its transpose share one index.
class SymmetricArcIndex {
 public:
  SymmetricArcIndex() = default;
  explicit SymmetricArcIndex(const Digraph& g);
  /// Custom order; `order` must list every arc of G^pm exactly once with each
  /// arc immediately followed by its inverse.
  SymmetricArcIndex(const Digraph& g, std::vector<Arc> order);

  std::size_t size() const noexcept { return arcs_.size(); }
  int order() const noexcept { return n_; }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int origin(std::size_t i) const { return arcs_[i].from; }
  int terminus(std::size_t i) const { return arcs_[i].to; }
  static std::size_t inverse(std::size_t i) noexcept { return i ^ 1U; }
  /// Index of (u, v), or -1 when (u, v) is not an arc of G^pm.
  int find(int u, int v) const { return lookup_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  void build_lookup();

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> lookup_;
};

/// The eta-function of a digraph: theta(a) = s(a) * eta with s(a) = +1 on
/// one-way arcs of G, -1 on their inverses and 0 on digon arcs.
class EtaFunction {
 public:
  EtaFunction(const Digraph& g, const SymmetricArcIndex& index, Angle eta);

  const Angle& angle() const noexcept { return eta_; }
  int sign(std::size_t arc) const { return signs_[arc]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  /// e^{i theta(a)}.
  CycScalar phase(std::size_t arc) const;

 private:
  Angle eta_;
  std::vector<int> signs_;
};

// -- text formats ---------------------------------------------------------

/// Parses "n=4; 0->1; 1<->2" (separators ';' or newlines, whitespace free).
Digraph parse_arc_list(const std::string& text);
/// Canonical rendering: digons as "u<->v" (u < v), other arcs as "u->v".
std::string format_arc_list(const Digraph& g);

/// One base-4 digit per vertex pair i < j, pairs ordered (0,1), (0,2), (1,2),
/// (0,3), ... : 0 none, 1 (i,j) only, 2 (j,i) only, 3 digon.
std::string to_compact_code(const Digraph& g);
/// The order is inferred from the length unless given; the empty code
/// decodes to a single vertex by default.
Digraph from_compact_code(const std::string& code, int order = -1);
/// Position of pair (i, j), i < j, in the compact code.
constexpr int pair_position(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace qwalk
