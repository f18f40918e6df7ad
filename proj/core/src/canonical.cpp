#include "qwalk/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr int kMax = kMaxCanonicalOrder;
constexpr int kMaxPairs = kMax * (kMax - 1) / 2;

/// 0 none, 1 (u, v) only, 2 (v, u) only, 3 digon.
inline int pair_digit(const Digraph& g, int u, int v) {
  return static_cast<int>(g.has_arc(u, v)) | (static_cast<int>(g.has_arc(v, u)) << 1);
}

/// Ranks signatures: equal signatures share a rank, ranks follow signature order.
template <class Sig>
int rank_signatures(const std::vector<Sig>& sigs, std::vector<int>& out) {
  const int n = static_cast<int>(sigs.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
  int rank = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sigs[idx[i - 1]] < sigs[idx[i]]) ++rank;
    out[idx[i]] = rank;
  }
  return rank + 1;
}

class Search {
 public:
  Search(const Digraph& g, const std::vector<int>& colour) : g_(g), n_(g.order()) {
    slot_colour_ = colour;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    colour_ = colour;
  }

  void run() { dfs(0, Cmp::Less); }

  const std::array<int, kMaxPairs>& best() const { return best_; }
  const std::array<int, kMax>& best_labels() const { return best_labels_; }

 private:
  enum class Cmp { Less, Equal };

  void dfs(int j, Cmp cmp) {
    const int base = j * (j - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1U) continue;
      if (colour_[v] != slot_colour_[j]) continue;
      label_[j] = v;
      Cmp next = cmp;
      bool worse = false;
      for (int i = 0; i < j; ++i) {
        const int d = pair_digit(g_, label_[i], v);
        cur_[base + i] = d;
        if (next == Cmp::Equal) {
          if (d < best_[base + i]) {
            next = Cmp::Less;
          } else if (d > best_[base + i]) {
            worse = true;
            break;
          }
        }
      }
      if (worse) continue;
      if (j + 1 == n_) {
        if (next == Cmp::Less) {
          best_ = cur_;
          best_labels_ = label_;
          ++generation_;
          cmp = Cmp::Equal;
        }
        continue;
      }
      const long long before = generation_;
      used_ |= 1U << v;
      dfs(j + 1, next);
      used_ &= ~(1U << v);
      if (generation_ != before) cmp = Cmp::Equal;
    }
  }

  const Digraph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::array<int, kMax> label_{};
  std::array<int, kMax> best_labels_{};
  std::array<int, kMaxPairs> cur_{};
  std::array<int, kMaxPairs> best_{};
  unsigned used_ = 0;
  long long generation_ = 0;
};

void check_order(const Digraph& g) {
  if (g.order() > kMax) {
    throw PreconditionError("canonical labeling supports at most " + std::to_string(kMax) +
                            " vertices");
  }
}

}  // namespace

std::string CanonicalCode::text() const {
  const int pairs = order * (order - 1) / 2;
  std::string s(static_cast<std::size_t>(pairs), '0');
  for (int k = 0; k < pairs; ++k) {
    s[k] = static_cast<char>('0' + static_cast<int>((value >> (2 * (pairs - 1 - k))) & 3U));
  }
  return s;
}

Digraph CanonicalCode::digraph() const { return from_packed_code(order, value); }

CanonicalCode packed_code(const Digraph& g) {
  const int n = g.order();
  if (n > 16) throw PreconditionError("packed codes support at most 16 vertices");
  CanonicalCode c;
  c.order = n;
  const int pairs = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const int k = pair_position(i, j);
      c.value |= static_cast<unsigned __int128>(pair_digit(g, i, j)) << (2 * (pairs - 1 - k));
    }
  return c;
}

Digraph from_packed_code(int order, unsigned __int128 value) {
  const int pairs = order * (order - 1) / 2;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(order), 0);
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i) {
      const int d = static_cast<int>((value >> (2 * (pairs - 1 - pair_position(i, j)))) & 3U);
      if (d & 1) out[i] |= std::uint64_t{1} << j;
      if (d & 2) out[j] |= std::uint64_t{1} << i;
    }
  return Digraph::from_out_masks(std::move(out));
}

std::vector<int> refine_colours(const Digraph& g) {
  const int n = g.order();
  std::vector<int> colour(n, 0);
  if (n == 0) return colour;
  std::vector<std::array<int, 3>> seed(n, {0, 0, 0});
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      const int d = pair_digit(g, v, w);
      if (d == 1) ++seed[v][0];
      if (d == 2) ++seed[v][1];
      if (d == 3) ++seed[v][2];
    }
  int cells = rank_signatures(seed, colour);
  std::vector<std::vector<int>> sigs(n);
  while (cells < n) {
    for (int v = 0; v < n; ++v) {
      auto& s = sigs[v];
      s.clear();
      s.push_back(colour[v]);
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        const int d = pair_digit(g, v, w);
        if (d != 0) s.push_back(d * 64 + colour[w]);
      }
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<int> next(n);
    const int refined = rank_signatures(sigs, next);
    colour.swap(next);
    if (refined == cells) break;
    cells = refined;
  }
  return colour;
}

std::vector<int> canonical_labeling(const Digraph& g) {
  check_order(g);
  const int n = g.order();
  std::vector<int> perm(n, 0);
  if (n <= 1) return perm;
  Search search(g, refine_colours(g));
  search.run();
  for (int j = 0; j < n; ++j) perm[search.best_labels()[j]] = j;
  return perm;
}

CanonicalCode canonical(const Digraph& g) {
  check_order(g);
  const int n = g.order();
  CanonicalCode c;
  c.order = n;
  if (n <= 1) return c;
  Search search(g, refine_colours(g));
  search.run();
  const int pairs = n * (n - 1) / 2;
  for (int k = 0; k < pairs; ++k) {
    c.value |= static_cast<unsigned __int128>(search.best()[k]) << (2 * (pairs - 1 - k));
  }
  return c;
}

bool is_canonical(const Digraph& g) { return canonical(g) == packed_code(g); }

}  // namespace qwalk
