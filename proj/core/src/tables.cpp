#include "qwalk/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qwalk/charpoly.hpp"
#include "qwalk/checkpoint.hpp"
#include "qwalk/enumeration.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/supports.hpp"

namespace qwalk {
namespace {

using Row = std::array<std::uint64_t, 5>;  // orders 2..6

struct Reference {
  const char* id;
  std::array<Row, 6> rows;  // distinct, max, determined, a, b, c
};

constexpr Row kDigraphCounts{3, 16, 218, 9608, 1540944};

// Published values, orders 2..6.
constexpr Reference kReferences[] = {
    {"A",
     {{{2, 7, 46, 718, 35237},
       {2, 6, 42, 592, 15842},
       {1, 5, 23, 166, 2314},
       {0, 3, 35, 685, 35086},
       {1, 2, 5, 15, 69},
       {1, 2, 6, 18, 82}}}},
    {"H_eta(1/3)",
     {{{2, 7, 41, 765, 81175},
       {2, 6, 18, 84, 888},
       {1, 3, 9, 82, 1559},
       {0, 3, 30, 732, 81024},
       {1, 1, 1, 1, 1},
       {1, 3, 10, 32, 150}}}},
    {"H_eta(1/2)",
     {{{2, 6, 27, 275, 10920},
       {2, 6, 21, 158, 1338},
       {1, 2, 3, 5, 16},
       {0, 2, 16, 242, 10769},
       {1, 1, 1, 1, 1},
       {1, 3, 10, 32, 150}}}},
    {"H_eta(2/3)",
     {{{2, 5, 20, 150, 3698},
       {2, 6, 27, 243, 2430},
       {1, 1, 1, 1, 1},
       {0, 1, 9, 117, 3547},
       {1, 1, 1, 1, 1},
       {1, 3, 10, 32, 150}}}},
    {"U2plus-right",
     {{{2, 6, 34, 371, 11748},
       {1, 6, 53, 700, 37013},
       {2, 4, 13, 50, 284},
       {1, 3, 25, 339, 11598},
       {1, 3, 9, 32, 150},
       {0, 0, 0, 0, 0}}}},
    {"U2plus-obtuse",
     {{{2, 6, 45, 601, 20306},
       {1, 6, 22, 204, 5120},
       {2, 4, 13, 47, 280},
       {1, 3, 36, 569, 20156},
       {1, 3, 9, 27, 135},
       {0, 0, 0, 5, 15}}}},
};

/// Which published table a spec corresponds to, if any.
std::optional<std::string> reference_id(const TableSpec& spec) {
  switch (spec.functor) {
    case Functor::Adjacency: return "A";
    case Functor::HEta: {
      const Angle& e = spec.eta;
      if (e == Angle(1, 3) || e == Angle(1, 2) || e == Angle(2, 3)) return "H_eta(" + e.to_string() + ")";
      return std::nullopt;
    }
    case Functor::U2Plus:
      // The square support depends on eta only through its regime.
      if (!spec.eta.in_principal_range()) return std::nullopt;
      switch (regime_of(spec.eta)) {
        case EtaRegime::Right: return "U2plus-right";
        case EtaRegime::Obtuse: return "U2plus-obtuse";
        case EtaRegime::Acute: return std::nullopt;
      }
  }
  return std::nullopt;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

ClassMap classify_range(const std::vector<Digraph>& digraphs, std::size_t begin, std::size_t end,
                        const TableSpec& spec) {
  ClassMap out;
  for (std::size_t i = begin; i < end; ++i) {
    const auto key = functor_key(digraphs[i], spec);
    if (!key) continue;
    auto& stats = out[*key];
    ++stats.count;
    if (digraphs[i].is_graph()) ++stats.graphs;
  }
  return out;
}

}  // namespace

std::string TableSpec::label() const {
  switch (functor) {
    case Functor::Adjacency: return "A";
    case Functor::HEta: return "H_eta(" + eta.to_string() + ")";
    case Functor::U2Plus: return "U2plus(" + eta.to_string() + ")";
  }
  return "?";
}

std::string TableSpec::symbol() const {
  switch (functor) {
    case Functor::Adjacency: return "A";
    case Functor::HEta: return eta == Angle(1, 2) ? "H" : "H_{" + eta.to_string() + " pi}";
    case Functor::U2Plus: return "U^(2,+)_{" + eta.to_string() + " pi}";
  }
  return "?";
}

TableSpec parse_table_spec(const std::string& functor, const Angle& eta) {
  const std::string f = lower(functor);
  if (f == "a") return TableSpec::adjacency();
  if (f == "h") return TableSpec::hermitian(Angle(1, 2));
  if (f == "heta") return TableSpec::hermitian(eta);
  if (f == "u2plus") {
    if (!eta.in_principal_range()) {
      throw PreconditionError("U2plus tables need eta in [0, pi]");
    }
    return TableSpec::square_support(eta);
  }
  throw PreconditionError("unsupported functor '" + functor + "' (expected A, H, Heta or U2plus)");
}

std::vector<TableSpec> reference_table_specs() {
  return {TableSpec::adjacency(),          TableSpec::hermitian(Angle(1, 3)),
          TableSpec::hermitian(Angle(1, 2)), TableSpec::hermitian(Angle(2, 3)),
          TableSpec::square_support(Angle(1, 2)), TableSpec::square_support(Angle(2, 3))};
}

std::optional<std::string> functor_key(const Digraph& g, const TableSpec& spec) {
  switch (spec.functor) {
    case Functor::Adjacency: {
      const auto n = static_cast<std::size_t>(g.order());
      IntMatrix a(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a.at(i, j) = g.has_arc(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
      return cospectral_key(charpoly_integer(a));
    }
    case Functor::HEta: {
      if (auto fast = charpoly_hermitian_small(g, spec.eta)) return cospectral_key(*fast);
      return cospectral_key(charpoly_exact(build_H_eta(g, spec.eta)));
    }
    case Functor::U2Plus: {
      if (g.arc_count() == 0) return std::nullopt;
      const SymmetricArcIndex index(g);
      return cospectral_key(charpoly_integer(square_support_fast(g, index, spec.eta, Sign::Plus)));
    }
  }
  return std::nullopt;
}

void merge_into(ClassMap& dst, const ClassMap& src) {
  for (const auto& [key, stats] : src) {
    auto& d = dst[key];
    d.count += stats.count;
    d.graphs += stats.graphs;
  }
}

std::array<std::uint64_t, 7> CospectralTable::row_values() const {
  return {digraphs, distinct, max_class, determined, no_graphs, only_graphs, mixed};
}

CospectralTable summarize(int order, const TableSpec& spec, std::uint64_t digraphs,
                          const ClassMap& classes) {
  CospectralTable t;
  t.order = order;
  t.spec = spec;
  t.digraphs = digraphs;
  t.distinct = classes.size();
  for (const auto& [key, s] : classes) {
    t.classified += s.count;
    t.max_class = std::max(t.max_class, s.count);
    if (s.count == 1) ++t.determined;
    if (s.graphs == 0) {
      ++t.no_graphs;
    } else if (s.graphs == s.count) {
      ++t.only_graphs;
    } else {
      ++t.mixed;
    }
  }
  return t;
}

CospectralTable classify(int order, const TableSpec& spec, const ClassifyOptions& options) {
  return classify(order, spec, enumerate_digraphs(order, options.jobs), options);
}

CospectralTable classify(int order, const TableSpec& spec, const std::vector<Digraph>& digraphs,
                         const ClassifyOptions& options) {
  const std::size_t n = digraphs.size();
  const std::size_t requested = static_cast<std::size_t>(std::max(1, options.partitions));
  const auto parts = static_cast<std::uint32_t>(std::min(requested, std::max<std::size_t>(n, 1)));
  const std::string ckpt_label = spec.label() + " partitions=" + std::to_string(parts);

  std::vector<std::optional<ClassMap>> results(parts);
  std::unique_ptr<CheckpointWriter> writer;
  if (!options.checkpoint_path.empty()) {
    for (auto& [id, classes] : load_checkpoint(options.checkpoint_path, order, ckpt_label)) {
      if (id < parts) results[id] = std::move(classes);
    }
    writer = std::make_unique<CheckpointWriter>(options.checkpoint_path, order, ckpt_label);
  }

  std::mutex mu;
  std::atomic<std::uint32_t> next{0};
  int done = static_cast<int>(std::count_if(results.begin(), results.end(),
                                            [](const auto& r) { return r.has_value(); }));
  auto work = [&] {
    for (std::uint32_t p = next++; p < parts; p = next++) {
      if (results[p]) continue;
      const std::size_t begin = n * p / parts;
      const std::size_t end = n * (p + 1) / parts;
      ClassMap local = classify_range(digraphs, begin, end, spec);
      std::lock_guard<std::mutex> lock(mu);
      if (writer) writer->write_partition(p, local);
      results[p] = std::move(local);
      ++done;
      if (options.progress) options.progress(done, static_cast<int>(parts));
    }
  };
  const int workers = std::max(1, options.jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ClassMap all;
  for (const auto& r : results) merge_into(all, *r);
  return summarize(order, spec, n, all);
}

TableFormat parse_table_format(const std::string& text) {
  const std::string f = lower(text);
  if (f == "csv") return TableFormat::Csv;
  if (f == "json") return TableFormat::Json;
  if (f == "md" || f == "markdown") return TableFormat::Markdown;
  throw PreconditionError("unknown table format '" + text + "' (expected csv, json or md)");
}

std::array<std::string, 7> row_captions(const TableSpec& spec) {
  const std::string x = spec.symbol();
  return {"Number of digraphs",
          "Number of distinct characteristic polynomials",
          "Maximum size of a " + x + "-cospectral class",
          "Number of digraphs determined by " + x + "-spectrum",
          "Classes containing: a) no graphs",
          "Classes containing: b) only graphs",
          "Classes containing: c) at least one graph and a digraph"};
}

std::string emit_table(const TableSpec& spec, const std::vector<CospectralTable>& columns,
                       TableFormat format) {
  const auto captions = row_captions(spec);
  std::ostringstream os;
  switch (format) {
    case TableFormat::Csv: {
      os << "row";
      for (const auto& c : columns) os << ',' << c.order;
      os << '\n';
      if (columns.empty()) break;
      for (std::size_t r = 0; r < captions.size(); ++r) {
        os << '"' << captions[r] << '"';
        for (const auto& c : columns) os << ',' << c.row_values()[r];
        os << '\n';
      }
      break;
    }
    case TableFormat::Markdown: {
      os << "| Order |";
      for (const auto& c : columns) os << ' ' << c.order << " |";
      os << "\n|---|";
      for (std::size_t i = 0; i < columns.size(); ++i) os << "---:|";
      os << '\n';
      if (columns.empty()) break;
      for (std::size_t r = 0; r < captions.size(); ++r) {
        os << "| " << captions[r] << " |";
        for (const auto& c : columns) os << ' ' << c.row_values()[r] << " |";
        os << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["table"] = spec.label();
      j["columns"] = nlohmann::ordered_json::array();
      for (const auto& c : columns) {
        j["columns"].push_back({{"order", c.order},
                                {"digraphs", c.digraphs},
                                {"classified", c.classified},
                                {"distinct", c.distinct},
                                {"max_class", c.max_class},
                                {"determined", c.determined},
                                {"no_graphs", c.no_graphs},
                                {"only_graphs", c.only_graphs},
                                {"mixed", c.mixed}});
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::optional<std::array<std::uint64_t, 7>> reference_values(const TableSpec& spec, int order) {
  if (order < 2 || order > 6) return std::nullopt;
  const auto id = reference_id(spec);
  if (!id) return std::nullopt;
  for (const auto& ref : kReferences) {
    if (*id != ref.id) continue;
    const auto col = static_cast<std::size_t>(order - 2);
    std::array<std::uint64_t, 7> out{};
    out[0] = kDigraphCounts[col];
    for (std::size_t r = 0; r < 6; ++r) out[r + 1] = ref.rows[r][col];
    return out;
  }
  return std::nullopt;
}

}  // namespace qwalk
