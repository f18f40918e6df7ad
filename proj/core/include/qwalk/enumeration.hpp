#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qwalk/canonical.hpp"
#include "qwalk/digraph.hpp"

namespace qwalk {

inline constexpr int kMaxEnumerationOrder = 6;

/// Canonical codes of all digraphs of order n up to isomorphism, ascending.
///
/// Built by extending each representative of order n - 1 with a new vertex in
/// all 4^(n-1) ways and keeping distinct canonical codes. `jobs` threads share
/// the extension work; the result does not depend on it. Accepts 1 <= n <= 6.
std::vector<std::uint64_t> enumerate_codes(int n, int jobs = 1);

/// Same set as digraphs, in code order.
std::vector<Digraph> enumerate_digraphs(int n, int jobs = 1);

/// Independent slow route: scans all 4^(n(n-1)/2) labeled digraphs and keeps
/// those whose own code is canonical. Intended for cross-checks at n <= 5.
std::vector<std::uint64_t> enumerate_codes_exhaustive(int n);

/// Number of non-isomorphic digraphs of order n reported in the literature,
/// for n = 1..6.
std::uint64_t known_digraph_count(int n);

/// Labeled digraphs of order n, one per code 0 .. 4^(n(n-1)/2) - 1.
Digraph labeled_digraph(int n, std::uint64_t index);

}  // namespace qwalk
