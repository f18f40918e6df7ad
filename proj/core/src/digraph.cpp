#include "qwalk/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

void check_order(int n) {
  if (n < 0 || n > Digraph::kMaxOrder) {
    throw PreconditionError("digraph order must lie in [0, " +
                            std::to_string(Digraph::kMaxOrder) + "], got " + std::to_string(n));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.assign(n, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw PreconditionError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                              ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (a.from == a.to) {
      throw PreconditionError("self-loop at vertex " + std::to_string(a.from));
    }
    out_[a.from] |= bit(a.to);
  }
}

Digraph Digraph::from_out_masks(std::vector<std::uint64_t> out_masks) {
  const int n = static_cast<int>(out_masks.size());
  Digraph g(n);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (int u = 0; u < n; ++u) {
    if (out_masks[u] & ~all) throw PreconditionError("out mask references a missing vertex");
    if (out_masks[u] & bit(u)) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  }
  g.out_ = std::move(out_masks);
  return g;
}

std::uint64_t Digraph::in_mask(int v) const {
  std::uint64_t m = 0;
  for (int u = 0; u < n_; ++u) {
    if (has_arc(u, v)) m |= bit(u);
  }
  return m;
}

std::uint64_t Digraph::neighbour_mask(int v) const { return out_[v] | in_mask(v); }

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (auto m : out_) c += static_cast<std::size_t>(std::popcount(m));
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (has_arc(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

int Digraph::degree(int v) const { return std::popcount(neighbour_mask(v)); }

std::vector<int> Digraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Digraph::is_graph() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_arc(u, v) != has_arc(v, u)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- derived structure

Digraph underlying(const Digraph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (int v = 0; v < g.order(); ++v) m[v] = g.neighbour_mask(v);
  return Digraph::from_out_masks(std::move(m));
}

Digraph transpose(const Digraph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (int v = 0; v < g.order(); ++v) m[v] = g.in_mask(v);
  return Digraph::from_out_masks(std::move(m));
}

std::vector<std::pair<int, int>> digons(const Digraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.is_digon(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t edge_count(const Digraph& g) {
  std::size_t e = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) ++e;
    }
  }
  return e;
}

std::vector<std::vector<int>> weak_components(const Digraph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbour_mask(v);
  std::uint64_t seen = 0;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen & bit(s)) continue;
    std::uint64_t comp = bit(s);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> vs;
    for (std::uint64_t c = comp; c; c &= c - 1) vs.push_back(std::countr_zero(c));
    comps.push_back(std::move(vs));
  }
  return comps;
}

bool weakly_connected(const Digraph& g) { return weak_components(g).size() <= 1; }

std::optional<int> is_regular(const Digraph& g) {
  if (g.order() == 0) return 0;
  const int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

bool bipartite_underlying(const Digraph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (std::uint64_t m = g.neighbour_mask(u); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Digraph relabeled(const Digraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("permutation has wrong length");
  std::vector<std::uint64_t> m(n, 0);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t o = g.out_mask(u); o; o &= o - 1) {
      m[perm[u]] |= bit(perm[std::countr_zero(o)]);
    }
  }
  return Digraph::from_out_masks(std::move(m));
}

Digraph induced(const Digraph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<std::uint64_t> m(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && g.has_arc(vertices[i], vertices[j])) m[i] |= bit(j);
    }
  }
  return Digraph::from_out_masks(std::move(m));
}

// ---------------------------------------------------------------- families

Digraph make_complete(int n) {
  check_order(n);
  std::vector<std::uint64_t> m(n);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (int v = 0; v < n; ++v) m[v] = all & ~bit(v);
  return Digraph::from_out_masks(std::move(m));
}

Digraph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.push_back({v, (v + 1) % n});
    arcs.push_back({(v + 1) % n, v});
  }
  return Digraph(n, arcs);
}

Digraph make_Y(int a, int n) {
  if (n < 0 || a < 0 || a > n) {
    throw PreconditionError("Y_{a,n-a} needs 0 <= a <= n, got a=" + std::to_string(a) +
                            ", n=" + std::to_string(n));
  }
  std::vector<Arc> arcs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool x_upper = x < a;
      const bool y_upper = y < a;
      if (x_upper == y_upper || (x_upper && !y_upper)) arcs.push_back({x, y});
    }
  }
  return Digraph(n, arcs);
}

Digraph digon_cut_switch(const Digraph& g, std::span<const int> s) {
  const int n = g.order();
  std::uint64_t in_s = 0;
  for (int v : s) {
    if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
    in_s |= bit(v);
  }
  std::vector<std::uint64_t> m(n);
  for (int u = 0; u < n; ++u) m[u] = g.out_mask(u);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!g.has_arc(x, y)) continue;
      const bool cx = (in_s >> x) & 1U;
      const bool cy = (in_s >> y) & 1U;
      if (cx == cy) continue;
      if (!g.has_arc(y, x)) {
        throw PreconditionError("cut arc (" + std::to_string(x) + "," + std::to_string(y) +
                                ") is not part of a digon");
      }
      // digon {x, y} with x outside, y inside keeps only (x, y)
      if (!cx && cy) m[y] &= ~bit(x);
    }
  }
  return Digraph::from_out_masks(std::move(m));
}

// ---------------------------------------------------------------- arc index

SymmetricArcIndex::SymmetricArcIndex(const Digraph& g) : n_(g.order()) {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (g.adjacent(u, v)) {
        arcs_.push_back({u, v});
        arcs_.push_back({v, u});
      }
    }
  }
  build_lookup();
}

SymmetricArcIndex::SymmetricArcIndex(const Digraph& g, std::vector<Arc> order)
    : n_(g.order()), arcs_(std::move(order)) {
  if (arcs_.size() % 2 != 0 || arcs_.size() != 2 * edge_count(g)) {
    throw PreconditionError("arc order must list every arc of the underlying graph once");
  }
  for (std::size_t i = 0; i < arcs_.size(); i += 2) {
    if (arcs_[i + 1] != arcs_[i].inverse()) {
      throw PreconditionError("arc order must place each arc directly before its inverse");
    }
  }
  build_lookup();
  for (const Arc& a : arcs_) {
    if (!g.adjacent(a.from, a.to)) {
      throw PreconditionError("arc order names a pair that is not an edge");
    }
  }
}

void SymmetricArcIndex::build_lookup() {
  lookup_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_ || a.from == a.to) {
      throw PreconditionError("arc order contains an invalid arc");
    }
    int& slot = lookup_[static_cast<std::size_t>(a.from) * n_ + a.to];
    if (slot >= 0) throw PreconditionError("arc order lists an arc twice");
    slot = static_cast<int>(i);
  }
}

EtaFunction::EtaFunction(const Digraph& g, const SymmetricArcIndex& index, Angle eta)
    : eta_(eta), signs_(index.size(), 0) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    const Arc& a = index.arc(i);
    const bool fwd = g.has_arc(a.from, a.to);
    const bool bwd = g.has_arc(a.to, a.from);
    signs_[i] = (fwd && bwd) ? 0 : (fwd ? 1 : -1);
  }
}

CycScalar EtaFunction::phase(std::size_t arc) const {
  return CycScalar::root_of_unity(eta_.field_order(), signs_[arc] * eta_.p());
}

// ---------------------------------------------------------------- text formats

namespace {

class ArcListParser {
 public:
  explicit ArcListParser(const std::string& text) : s_(text) {}

  Digraph parse() {
    while (!at_end() && (is_blank(peek()) || peek() == '\n')) advance();
    expect_char('n');
    skip_space();
    expect_char('=');
    skip_space();
    const std::size_t nl = line_, nc = col_;
    long long n = read_int();
    if (n < 0 || n > Digraph::kMaxOrder) {
      throw ParseError("order must lie in [0, " + std::to_string(Digraph::kMaxOrder) + "]", nl,
                       nc);
    }
    std::vector<Arc> arcs;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (!is_sep(peek())) fail("expected ';' or newline");
      while (!at_end() && (is_sep(peek()) || is_blank(peek()))) advance();
      if (at_end()) break;
      const std::size_t al = line_, ac = col_;
      long long u = read_int();
      skip_space();
      bool both = false;
      if (peek() == '<') {
        advance();
        both = true;
      }
      expect_char('-');
      expect_char('>');
      skip_space();
      long long v = read_int();
      if (u >= n || v >= n) throw ParseError("vertex index out of range", al, ac);
      if (u == v) throw ParseError("self-loops are not allowed", al, ac);
      arcs.push_back({static_cast<int>(u), static_cast<int>(v)});
      if (both) arcs.push_back({static_cast<int>(v), static_cast<int>(u)});
    }
    return Digraph(static_cast<int>(n), arcs);
  }

 private:
  static bool is_sep(char c) { return c == ';' || c == '\n'; }
  static bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && is_blank(peek())) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  void expect_char(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  long long read_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a vertex number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("number too large");
      advance();
    }
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

Digraph parse_arc_list(const std::string& text) { return ArcListParser(text).parse(); }

std::string format_arc_list(const Digraph& g) {
  std::ostringstream os;
  os << "n=" << g.order();
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (!g.has_arc(u, v)) continue;
      if (g.has_arc(v, u)) {
        if (u < v) os << "; " << u << "<->" << v;
      } else {
        os << "; " << u << "->" << v;
      }
    }
  }
  return os.str();
}

std::string to_compact_code(const Digraph& g) {
  const int n = g.order();
  std::string code(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int d = (g.has_arc(i, j) ? 1 : 0) | (g.has_arc(j, i) ? 2 : 0);
      code[pair_position(i, j)] = static_cast<char>('0' + d);
    }
  }
  return code;
}

Digraph from_compact_code(const std::string& code, int order) {
  int n = 1;
  while (n * (n - 1) / 2 < static_cast<int>(code.size())) ++n;
  if (n * (n - 1) / 2 != static_cast<int>(code.size())) {
    throw ParseError("compact code length " + std::to_string(code.size()) +
                         " is not a triangular number",
                     1, code.size() + 1);
  }
  if (order >= 0) {
    // Orders 0 and 1 share the empty code.
    if (order * (order - 1) / 2 != static_cast<int>(code.size())) {
      throw ParseError("compact code length " + std::to_string(code.size()) +
                           " does not match order " + std::to_string(order),
                       1, 1);
    }
    n = order;
  }
  if (n > Digraph::kMaxOrder) throw ParseError("compact code describes too many vertices", 1, 1);
  std::vector<std::uint64_t> m(n, 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::size_t pos = static_cast<std::size_t>(pair_position(i, j));
      char c = code[pos];
      if (c < '0' || c > '3') throw ParseError("compact code digits must be 0-3", 1, pos + 1);
      int d = c - '0';
      if (d & 1) m[i] |= bit(j);
      if (d & 2) m[j] |= bit(i);
    }
  }
  return Digraph::from_out_masks(std::move(m));
}

}  // namespace qwalk
