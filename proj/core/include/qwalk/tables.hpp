#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qwalk/digraph.hpp"

namespace qwalk {

/// Matrix attached to each digraph before classing by characteristic polynomial.
enum class Functor {
  Adjacency,  // 0/1 arc matrix A
  HEta,       // eta-Hermitian adjacency matrix
  U2Plus,     // positive support of D_theta U_theta^2 (empty digraph excluded)
};

struct TableSpec {
  Functor functor = Functor::Adjacency;
  Angle eta;

  static TableSpec adjacency() { return {Functor::Adjacency, Angle()}; }
  static TableSpec hermitian(Angle eta) { return {Functor::HEta, eta}; }
  static TableSpec square_support(Angle eta) { return {Functor::U2Plus, eta}; }

  /// Short identifier such as "A", "H_eta(1/3)", "U2plus(1/2)".
  std::string label() const;
  /// Symbol used in row captions.
  std::string symbol() const;
};

/// Parses "A", "H", "Heta", "U2plus" (case-insensitive) with the given eta.
/// "H" ignores eta and uses pi/2. Throws PreconditionError otherwise.
TableSpec parse_table_spec(const std::string& functor, const Angle& eta);

/// The six tables of the reference study at their published angles: A,
/// H_{pi/3}, H, H_{2pi/3}, U^(2,+) at pi/2 and U^(2,+) at 2pi/3.
std::vector<TableSpec> reference_table_specs();

/// Key of the characteristic polynomial of the functor matrix, or nullopt for
/// a digraph the functor excludes.
std::optional<std::string> functor_key(const Digraph& g, const TableSpec& spec);

struct ClassStats {
  std::uint64_t count = 0;
  /// Members whose arcs all lie in digons.
  std::uint64_t graphs = 0;
};

using ClassMap = std::unordered_map<std::string, ClassStats>;

void merge_into(ClassMap& dst, const ClassMap& src);

/// One column of a cospectral table.
struct CospectralTable {
  int order = 0;
  TableSpec spec;
  std::uint64_t digraphs = 0;    // all digraphs of this order
  std::uint64_t classified = 0;  // digraphs the functor accepts
  std::uint64_t distinct = 0;
  std::uint64_t max_class = 0;
  std::uint64_t determined = 0;  // classes of size one
  std::uint64_t no_graphs = 0;
  std::uint64_t only_graphs = 0;
  std::uint64_t mixed = 0;

  /// The seven published rows in order.
  std::array<std::uint64_t, 7> row_values() const;
};

CospectralTable summarize(int order, const TableSpec& spec, std::uint64_t digraphs,
                          const ClassMap& classes);

struct ClassifyOptions {
  int jobs = 1;
  /// Empty disables checkpointing.
  std::string checkpoint_path;
  int partitions = 64;
  std::function<void(int done, int total)> progress;
};

/// Enumerates order-n digraphs and classes them under the functor. Output does
/// not depend on jobs or on resuming from a checkpoint.
CospectralTable classify(int order, const TableSpec& spec, const ClassifyOptions& options = {});
/// Same, over a precomputed digraph list of one order.
CospectralTable classify(int order, const TableSpec& spec, const std::vector<Digraph>& digraphs,
                         const ClassifyOptions& options = {});

enum class TableFormat { Csv, Json, Markdown };
TableFormat parse_table_format(const std::string& text);

/// Renders columns of one table (same spec, increasing order).
std::string emit_table(const TableSpec& spec, const std::vector<CospectralTable>& columns,
                       TableFormat format);

/// Published values for the reference tables, orders 2..6.
std::optional<std::array<std::uint64_t, 7>> reference_values(const TableSpec& spec, int order);

/// Row captions in published order.
std::array<std::string, 7> row_captions(const TableSpec& spec);

}  // namespace qwalk
