#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwalk/digraph.hpp"

namespace qwalk {

/// Closed-path situation of a weakly connected digraph under an eta-function.
///
/// For a closed path c, I(c) = eta * w(c) where w(c) counts one-way arcs
/// traversed forward minus those traversed backward. Every closed walk of G^pm
/// has a weight and length parity that are integer combinations of the
/// fundamental cycles of a spanning tree, so the finite basis decides:
///   (i)   bipartite and I(c) in 2 pi Z for all c,
///   (ii)  non-bipartite and I(c) in 2 pi Z for all c,
///   (iii) non-bipartite, I(c) in 2 pi Z for even c and 2 pi (Z + 1/2) for odd c,
///   (iv)  otherwise.
enum class CycleCase { I, II, III, IV };

struct FundamentalCycle {
  /// Non-tree edge closing the cycle, oriented as it is traversed.
  Arc closing_arc;
  /// w(c): signed count of one-way arcs.
  long long weight = 0;
  int length = 0;
};

struct CycleClassification {
  CycleCase label = CycleCase::IV;
  bool bipartite = false;
  std::vector<FundamentalCycle> cycles;
  /// Multiplicities of the eigenvalues +1 and -1 of the normalized
  /// eta-Hermitian adjacency matrix.
  int m_plus = 0;
  int m_minus = 0;
};

/// Throws PreconditionError for a disconnected digraph.
CycleClassification classify_cycles(const Digraph& g, const Angle& eta);

std::string to_string(CycleCase c);

}  // namespace qwalk
