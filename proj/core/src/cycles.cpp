#include "qwalk/cycles.hpp"

#include <bit>
#include <deque>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

/// +1 when (u, v) is a one-way arc of g, -1 when (v, u) is, 0 on digons.
int arc_sign(const Digraph& g, int u, int v) {
  const bool fwd = g.has_arc(u, v);
  const bool bwd = g.has_arc(v, u);
  if (fwd && bwd) return 0;
  return fwd ? 1 : -1;
}

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CycleClassification classify_cycles(const Digraph& g, const Angle& eta) {
  if (!weakly_connected(g)) {
    throw PreconditionError("cycle classification needs a weakly connected digraph");
  }
  const int n = g.order();
  CycleClassification out;
  out.bipartite = bipartite_underlying(g);

  // BFS spanning tree of G^pm with theta-potentials along tree paths.
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<long long> potential(n, 0);
  std::vector<bool> seen(n, false);
  if (n > 0) {
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (std::uint64_t m = g.neighbour_mask(u); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (seen[v]) continue;
        seen[v] = true;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        potential[v] = potential[u] + arc_sign(g, u, v);
        queue.push_back(v);
      }
    }
  }

  auto lca_depth = [&](int a, int b) {
    while (depth[a] > depth[b]) a = parent[a];
    while (depth[b] > depth[a]) b = parent[b];
    while (a != b) {
      a = parent[a];
      b = parent[b];
    }
    return depth[a];
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) || parent[v] == u || parent[u] == v) continue;
      FundamentalCycle c;
      c.closing_arc = {u, v};
      c.weight = arc_sign(g, u, v) + potential[u] - potential[v];
      c.length = depth[u] + depth[v] + 1 - 2 * lca_depth(u, v);
      out.cycles.push_back(c);
    }
  }

  const long long p = eta.p();
  const long long q = eta.q();
  bool all_integral = true;
  bool half_on_odd = true;
  for (const auto& c : out.cycles) {
    // I(c) / pi = p w / q
    if (mod(p * c.weight, 2 * q) != 0) all_integral = false;
    if (mod(p * c.weight - q * c.length, 2 * q) != 0) half_on_odd = false;
  }

  if (all_integral) {
    out.label = out.bipartite ? CycleCase::I : CycleCase::II;
  } else if (!out.bipartite && half_on_odd) {
    out.label = CycleCase::III;
  } else {
    out.label = CycleCase::IV;
  }
  switch (out.label) {
    case CycleCase::I: out.m_plus = 1; out.m_minus = 1; break;
    case CycleCase::II: out.m_plus = 1; out.m_minus = 0; break;
    case CycleCase::III: out.m_plus = 0; out.m_minus = 1; break;
    case CycleCase::IV: out.m_plus = 0; out.m_minus = 0; break;
  }
  return out;
}

std::string to_string(CycleCase c) {
  switch (c) {
    case CycleCase::I: return "i";
    case CycleCase::II: return "ii";
    case CycleCase::III: return "iii";
    case CycleCase::IV: return "iv";
  }
  return "?";
}

}  // namespace qwalk
