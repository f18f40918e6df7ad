#pragma once

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwalk/cyclotomic.hpp"
#include "qwalk/digraph.hpp"

namespace qwalk::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kPrecondition = 2,
  kMismatch = 3,
  kParse = 4,
};

/// Where the input digraph comes from; exactly one source must be set.
struct InputOptions {
  std::string arcs;
  std::string file;
  std::string code;
  int code_order = -1;
  std::string family;
};

struct GraphInput {
  Digraph graph;
  /// Set when the source fixes its own arc order (the worked example).
  std::optional<SymmetricArcIndex> index;

  SymmetricArcIndex arc_index() const { return index ? *index : SymmetricArcIndex(graph); }
};

void add_input_options(CLI::App& app, InputOptions& in);

/// Throws ParseError for malformed or missing input.
GraphInput resolve_input(const InputOptions& in);

/// Angle options shared by the matrix subcommands.
struct EtaOptions {
  std::string eta = "1/2";
  std::optional<double> float_eta;
};

void add_eta_options(CLI::App& app, EtaOptions& eta, bool allow_float);

}  // namespace qwalk::cli
