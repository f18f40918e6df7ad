#include "input.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/verification.hpp"

namespace qwalk::cli {
namespace {

int parse_count(const std::string& token, const std::string& spec, std::size_t column) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw ParseError("expected an integer in family '" + spec + "', got '" + token + "'", 1,
                     column);
  }
  return value;
}

GraphInput parse_family(const std::string& spec) {
  std::istringstream in(spec);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw ParseError("empty family", 1, 1);

  const std::string& name = tokens[0];
  auto arg = [&](std::size_t i) {
    return parse_count(tokens[i], spec, spec.find(tokens[i]) + 1);
  };
  auto want = [&](std::size_t n, const char* usage) {
    if (tokens.size() != n) throw ParseError(std::string("family usage: ") + usage, 1, 1);
  };
  if (name == "example") {
    want(1, "example");
    auto [g, index] = worked_example();
    return {g, index};
  }
  if (name == "Y") {
    want(3, "Y a n");
    return {make_Y(arg(1), arg(2)), std::nullopt};
  }
  if (name == "K") {
    want(2, "K n");
    return {make_complete(arg(1)), std::nullopt};
  }
  if (name == "C") {
    want(2, "C n");
    return {make_cycle(arg(1)), std::nullopt};
  }
  if (name == "E") {
    want(2, "E n");
    return {Digraph(arg(1)), std::nullopt};
  }
  throw ParseError("unknown family '" + name + "' (expected example, Y, K, C or E)", 1, 1);
}

}  // namespace

void add_input_options(CLI::App& app, InputOptions& in) {
  auto* group = app.add_option_group("input", "Input digraph (exactly one)");
  group->add_option("--arcs", in.arcs, "Arc list such as \"n=4; 0->1; 1<->2\"");
  group->add_option("--file", in.file, "File holding an arc list");
  group->add_option("--code", in.code, "Compact base-4 code");
  group->add_option("--family", in.family, "\"Y a n\", \"K n\", \"C n\", \"E n\" or \"example\"");
  group->require_option(1);
  app.add_option("--code-order", in.code_order,
                 "Order for --code; needed only to tell orders 0 and 1 apart");
}

GraphInput resolve_input(const InputOptions& in) {
  if (!in.arcs.empty()) return {parse_arc_list(in.arcs), std::nullopt};
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw ParseError("cannot read '" + in.file + "'", 0, 0);
    std::stringstream buf;
    buf << f.rdbuf();
    return {parse_arc_list(buf.str()), std::nullopt};
  }
  if (!in.family.empty()) return parse_family(in.family);
  return {from_compact_code(in.code, in.code_order), std::nullopt};
}

void add_eta_options(CLI::App& app, EtaOptions& eta, bool allow_float) {
  auto* exact = app.add_option("--eta", eta.eta, "eta as a multiple of pi, \"p/q\"")
                    ->capture_default_str();
  if (allow_float) {
    app.add_option("--float-eta", eta.float_eta,
                   "eta in radians; floating computation only")
        ->excludes(exact);
  }
}

}  // namespace qwalk::cli
