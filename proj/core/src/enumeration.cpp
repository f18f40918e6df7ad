#include "qwalk/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

void check_range(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw PreconditionError("enumeration supports orders 1.." +
                            std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Canonical codes of all one-vertex extensions of `base`, appended to out.
void extend(const Digraph& base, std::vector<std::uint64_t>& out) {
  const int m = base.order();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(m) + 1, 0);
  for (int v = 0; v < m; ++v) masks[v] = base.out_mask(v);
  const std::uint64_t patterns = std::uint64_t{1} << (2 * m);
  for (std::uint64_t p = 0; p < patterns; ++p) {
    std::vector<std::uint64_t> ext = masks;
    for (int i = 0; i < m; ++i) {
      const auto d = (p >> (2 * i)) & 3U;
      if (d & 1U) ext[i] |= std::uint64_t{1} << m;
      if (d & 2U) ext[m] |= std::uint64_t{1} << i;
    }
    out.push_back(canonical(Digraph::from_out_masks(std::move(ext))).small_value());
  }
}

}  // namespace

std::vector<std::uint64_t> enumerate_codes(int n, int jobs) {
  check_range(n);
  std::vector<std::uint64_t> codes{0};  // the single vertex
  for (int order = 2; order <= n; ++order) {
    std::vector<Digraph> bases;
    bases.reserve(codes.size());
    for (auto c : codes) bases.push_back(from_packed_code(order - 1, c));

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(bases.size())));
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
      auto& local = found[w];
      for (std::size_t i = next++; i < bases.size(); i = next++) {
        extend(bases[i], local);
        if (local.size() > (std::size_t{1} << 22)) sort_unique(local);
      }
      sort_unique(local);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    codes.clear();
    for (auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
    sort_unique(codes);
  }
  return codes;
}

std::vector<Digraph> enumerate_digraphs(int n, int jobs) {
  const auto codes = enumerate_codes(n, jobs);
  std::vector<Digraph> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(from_packed_code(n, c));
  return out;
}

std::vector<std::uint64_t> enumerate_codes_exhaustive(int n) {
  check_range(n);
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << (2 * pairs);
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < total; ++c) {
    if (canonical(from_packed_code(n, c)).small_value() == c) out.push_back(c);
  }
  return out;
}

std::uint64_t known_digraph_count(int n) {
  static constexpr std::uint64_t kCounts[] = {1, 3, 16, 218, 9608, 1540944};
  check_range(n);
  return kCounts[n - 1];
}

Digraph labeled_digraph(int n, std::uint64_t index) { return from_packed_code(n, index); }

}  // namespace qwalk
