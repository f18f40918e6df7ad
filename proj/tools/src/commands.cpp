#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qwalk/charpoly.hpp"
#include "qwalk/enumeration.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/supports.hpp"
#include "qwalk/tables.hpp"
#include "qwalk/verification.hpp"

namespace qwalk::cli {
namespace {

using json = nlohmann::ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.10g", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
  }
  return buf;
}

std::string dump_float(const Eigen::MatrixXcd& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << " | ";
      out << format_complex(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string arc_header(const SymmetricArcIndex& index) {
  std::ostringstream out;
  out << "# arcs:";
  for (std::size_t a = 0; a < index.size(); ++a) {
    out << ' ' << a << ':' << index.origin(a) << "->" << index.terminus(a);
  }
  return out.str();
}

std::string vertex_header(const std::vector<int>& vertices) {
  std::ostringstream out;
  out << "# vertices:";
  for (int v : vertices) out << ' ' << v;
  return out.str();
}

Angle exact_eta(const EtaOptions& eta, const char* command) {
  if (eta.float_eta) {
    throw PreconditionError(std::string(command) +
                            " needs an exact eta; --float-eta only feeds floating computations");
  }
  return Angle::parse(eta.eta);
}

void require_arcs(const Digraph& g, const std::string& op) {
  if (g.arc_count() == 0) {
    throw PreconditionError("no arcs: " + op + " is indexed by arcs and undefined on an empty digraph");
  }
}

std::vector<int> all_vertices(const Digraph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

std::string file_stem(const TableSpec& spec) {
  std::string s;
  for (char c : spec.label()) {
    if (c == '(' || c == ')') {
      if (c == '(') s += '_';
    } else if (c == '/') {
      s += '-';
    } else {
      s += c;
    }
  }
  return s;
}

std::string extension(TableFormat f) {
  switch (f) {
    case TableFormat::Csv: return "csv";
    case TableFormat::Json: return "json";
    case TableFormat::Markdown: return "md";
  }
  return "txt";
}

}  // namespace

// ---------------------------------------------------------------- build

int run_build(const BuildOptions& o) {
  const GraphInput in = resolve_input(o.input);
  const Digraph& g = in.graph;

  if (o.eta.float_eta) {
    const double eta = *o.eta.float_eta;
    for (const auto& name : o.ops) {
      const std::string op = lower(name);
      if (op == "u_theta") {
        require_arcs(g, name);
        std::cout << "# U_theta (floating), eta=" << eta << " rad\n"
                  << arc_header(SymmetricArcIndex(g)) << '\n'
                  << dump_float(build_U_theta_float(g, eta)) << '\n';
      } else if (op == "h_tilde") {
        std::cout << "# H_tilde (floating), eta=" << eta << " rad\n"
                  << vertex_header(active_vertices(g)) << '\n'
                  << dump_float(build_H_tilde_float(g, eta)) << '\n';
      } else {
        throw PreconditionError("--float-eta supports only U_theta and H_tilde, not " + name);
      }
    }
    return kOk;
  }

  const Angle eta = Angle::parse(o.eta.eta);
  for (const auto& name : o.ops) {
    const std::string op = lower(name);
    const bool arc_indexed = op == "k" || op == "c" || op == "s" || op == "s_theta" ||
                             op == "d_theta" || op == "u_theta" || op == "u" || op == "r" ||
                             op == "f_t" || op == "f_o";
    if (arc_indexed) require_arcs(g, name);
    const SymmetricArcIndex index = in.arc_index();
    std::cout << "# " << name << ", eta=" << eta.to_string() << '\n';
    if (arc_indexed) std::cout << arc_header(index) << '\n';

    if (op == "k") {
      std::cout << vertex_header(active_vertices(g)) << '\n'
                << dump_matrix(build_K(g, index), o.with_float);
    } else if (op == "c") {
      std::cout << dump_matrix(build_C(g, index), o.with_float);
    } else if (op == "s") {
      std::cout << dump_matrix(build_S(g, index), o.with_float);
    } else if (op == "s_theta") {
      std::cout << dump_matrix(build_S_theta(g, index, eta), o.with_float);
    } else if (op == "d_theta") {
      std::cout << dump_matrix(build_D_theta(g, index, eta), o.with_float);
    } else if (op == "u_theta") {
      std::cout << dump_matrix(build_U_theta(g, index, eta), o.with_float);
    } else if (op == "u") {
      std::cout << dump_matrix(build_grover_U(g, index), o.with_float);
    } else if (op == "r") {
      std::cout << dump_matrix(build_R(g, index), o.with_float);
    } else if (op == "f_t" || op == "f_o") {
      const auto [ft, fo] = build_F(g, index);
      std::cout << vertex_header(all_vertices(g)) << '\n'
                << dump_matrix(op == "f_t" ? ft : fo, o.with_float);
    } else if (op == "h_eta") {
      std::cout << vertex_header(all_vertices(g)) << '\n'
                << dump_matrix(build_H_eta(g, eta), o.with_float);
    } else if (op == "h") {
      std::cout << vertex_header(all_vertices(g)) << '\n'
                << dump_matrix(build_H(g), o.with_float);
    } else if (op == "h_tilde") {
      std::cout << vertex_header(active_vertices(g)) << '\n'
                << dump_matrix(build_H_tilde(g, eta), o.with_float);
    } else if (op == "d") {
      std::cout << vertex_header(all_vertices(g)) << '\n'
                << dump_matrix(build_D(g), o.with_float);
    } else {
      throw ParseError("unknown operator '" + name +
                           "' (K, C, S, S_theta, D_theta, U_theta, U, R, F_t, F_o, H_eta, H, "
                           "H_tilde, D)",
                       0, 0);
    }
    std::cout << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const SpectrumOptions& o) {
  const GraphInput in = resolve_input(o.input);
  const Digraph& g = in.graph;
  const std::string of = lower(o.of);
  const bool floating = o.eta.float_eta.has_value();
  const std::optional<Angle> eta =
      floating ? std::nullopt : std::optional<Angle>(Angle::parse(o.eta.eta));
  json out;

  if (of == "u") {
    const bool mapping = o.route == "mapping" || o.route == "both";
    const bool direct = o.route == "direct" || o.route == "both";
    if (!mapping && !direct) throw ParseError("route must be mapping, direct or both", 0, 0);
    std::optional<SpectrumSummary> m;
    std::optional<SpectrumSummary> d;
    if (mapping) {
      if (!weakly_connected(g)) {
        throw PreconditionError(
            "the mapping route needs a weakly connected digraph; run each weak component "
            "separately or use --route direct");
      }
      m = floating ? spectrum_U_via_mapping(g, *o.eta.float_eta) : spectrum_U_via_mapping(g, *eta);
    }
    if (direct) d = floating ? spectrum_U_direct(g, *o.eta.float_eta) : spectrum_U_direct(g, *eta);

    if (m && d) {
      const double dev = multiset_distance(m->expanded(), d->expanded());
      out["mapping"] = json::parse(m->to_json());
      out["direct"] = json::parse(d->to_json());
      out["max_deviation"] = dev;
      out["tolerance"] = o.tolerance;
      out["agree"] = dev <= o.tolerance;
    } else {
      out = json::parse((m ? *m : *d).to_json());
    }
    if (o.charpoly) {
      if (floating) throw PreconditionError("--charpoly needs an exact eta");
      out["charpoly"] = json::parse(charpoly_json(charpoly_exact(build_U_theta(g, *eta))));
    }
    std::cout << out.dump(2) << '\n';
    if (out.contains("agree") && !out["agree"].get<bool>()) {
      std::cerr << "mapping and direct spectra differ by more than " << o.tolerance << '\n';
      return kMismatch;
    }
    return kOk;
  }

  if (of == "h_tilde") {
    if (floating) {
      const auto eig = hermitian_eigenvalues(build_H_tilde_float(g, *o.eta.float_eta));
      out = json::parse(
          cluster({eig.begin(), eig.end()}, SpectrumSource::Eigensolver).to_json());
    } else {
      const auto h = build_H_tilde(g, *eta);
      out = json::parse(eig_hermitian(h).to_json());
      if (o.charpoly) out["charpoly"] = json::parse(charpoly_json(charpoly_exact(h)));
    }
  } else if (of == "h_eta" || of == "h") {
    if (floating) throw PreconditionError("--float-eta supports only U and H_tilde spectra");
    const OpMatrix h = of == "h" ? build_H(g) : build_H_eta(g, *eta);
    out = json::parse(eig_hermitian(h).to_json());
    if (o.charpoly) out["charpoly"] = json::parse(charpoly_json(charpoly_exact(h)));
  } else {
    throw ParseError("--of must be U, H_eta, H or H_tilde", 0, 0);
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- supports

int run_supports(const SupportsOptions& o) {
  const Angle eta = exact_eta(o.eta, "supports");
  const GraphInput in = resolve_input(o.input);
  const Digraph& g = in.graph;
  require_arcs(g, "the transfer matrix");
  if (o.power < 1) throw PreconditionError("--power must be at least 1");
  regime_of(eta);
  const SymmetricArcIndex index = in.arc_index();

  std::vector<Sign> signs;
  if (o.sign == "+" || o.sign == "both") signs.push_back(Sign::Plus);
  if (o.sign == "-" || o.sign == "both") signs.push_back(Sign::Minus);
  if (signs.empty()) throw ParseError("--sign must be +, - or both", 0, 0);

  const bool as_json = o.format == "json";
  json out;
  out["eta"] = eta.to_string();
  out["power"] = o.power;
  out["arcs"] = json::array();
  for (const auto& a : index.arcs()) out["arcs"].push_back({a.from, a.to});
  out["supports"] = json::array();

  for (Sign s : signs) {
    const SupportMatrix sm = power_support(g, index, eta, o.power, s);
    const long long tr = sm.matrix.trace();
    if (as_json) {
      json rows = json::array();
      for (std::size_t a = 0; a < sm.matrix.size(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < sm.matrix.size(); ++b) row.push_back(sm.matrix(a, b));
        rows.push_back(row);
      }
      out["supports"].push_back({{"sign", to_string(s)}, {"trace", tr}, {"matrix", rows}});
    } else {
      std::cout << "# U^(" << o.power << "," << to_string(s) << ") eta=" << eta.to_string()
                << '\n'
                << dump_support(sm.matrix, index) << "# trace " << tr << "\n\n";
    }
  }

  int code = kOk;
  if (o.check) {
    if (o.power != 2) throw PreconditionError("--check covers the square (--power 2) only");
    const auto reps = verify_square_support_regimes(g, eta, o.probe);
    json check;
    check["regimes"] = json::array();
    bool precondition = true;
    bool holds = true;
    for (const auto& rep : reps) {
      check["regimes"].push_back(json::parse(rep.to_json()));
      precondition = precondition && rep.precondition_met;
      holds = holds && rep.violations.empty();
    }
    if (precondition || o.probe) {
      const long long edges = static_cast<long long>(edge_count(g));
      const long long d = static_cast<long long>(digons(g).size());
      const long long expected = regime_of(eta) == EtaRegime::Acute ? edges : d;
      const long long half = digon_count_via_trace(g, eta);
      check["trace"] = {{"half_trace", half},
                        {"edges", edges},
                        {"digons", d},
                        {"expected", expected},
                        {"holds", half == expected}};
      holds = holds && half == expected;
    }
    if (g.is_graph()) {
      const auto ident = verify_square_negative_identity(g);
      check["negative_identity"] = json::parse(ident.to_json());
      if (ident.precondition_met) holds = holds && ident.holds();
    }
    check["probe"] = !precondition && o.probe;
    check["holds"] = holds;
    if (as_json) {
      out["check"] = check;
    } else {
      std::cout << check.dump(2) << '\n';
    }
    if (!precondition && !o.probe) {
      std::cerr << "precondition not met: " << reps[0].precondition_note
                << " (use --probe for an empirical run)\n";
      code = kPrecondition;
    } else if (precondition && !holds) {
      code = kMismatch;
    }
  }
  if (as_json) std::cout << out.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- tables

int run_tables(const TablesOptions& o) {
  if (o.eta.float_eta) {
    throw PreconditionError("tables need an exact eta; --float-eta is refused for classing");
  }
  const Angle eta = Angle::parse(o.eta.eta);
  const int limit = o.long_run ? kMaxEnumerationOrder : 5;
  if (o.order < 2 || o.order > limit) {
    throw PreconditionError("--order must lie in [2, " + std::to_string(limit) + "]" +
                            (o.long_run ? "" : "; order 6 needs --long-run"));
  }
  if (o.from < 2 || o.from > o.order) throw PreconditionError("--from must lie in [2, --order]");
  if (o.jobs < 1) throw PreconditionError("--jobs must be positive");
  const TableFormat format = parse_table_format(o.format);

  std::vector<TableSpec> specs;
  if (o.functors.empty()) {
    specs = reference_table_specs();
  } else {
    for (const auto& f : o.functors) specs.push_back(parse_table_spec(f, eta));
  }
  if (!o.checkpoint.empty()) std::filesystem::create_directories(o.checkpoint);
  if (!o.output_dir.empty()) std::filesystem::create_directories(o.output_dir);

  std::map<int, std::vector<Digraph>> digraphs;
  for (int n = o.from; n <= o.order; ++n) digraphs[n] = enumerate_digraphs(n, o.jobs);

  int mismatches = 0;
  bool first = true;
  for (const auto& spec : specs) {
    std::vector<CospectralTable> columns;
    for (int n = o.from; n <= o.order; ++n) {
      ClassifyOptions options;
      options.jobs = o.jobs;
      if (!o.checkpoint.empty()) {
        options.checkpoint_path = (std::filesystem::path(o.checkpoint) /
                                   (file_stem(spec) + "-n" + std::to_string(n) + ".ckpt"))
                                      .string();
      }
      if (o.progress) {
        options.progress = [&spec, n](int done, int total) {
          std::cerr << "\r" << spec.label() << " order " << n << ": " << done << "/" << total
                    << std::flush;
          if (done == total) std::cerr << '\n';
        };
      }
      columns.push_back(classify(n, spec, digraphs[n], options));
      if (o.verify_paper) {
        const auto want = reference_values(spec, n);
        if (!want) {
          std::cerr << "note: no published values for " << spec.label() << "\n";
          continue;
        }
        const auto got = columns.back().row_values();
        const auto captions = row_captions(spec);
        for (std::size_t r = 0; r < got.size(); ++r) {
          if (got[r] != (*want)[r]) {
            ++mismatches;
            std::cerr << "mismatch: " << spec.label() << " order " << n << ", " << captions[r]
                      << ": computed " << got[r] << ", published " << (*want)[r] << '\n';
          }
        }
      }
    }
    const std::string text = emit_table(spec, columns, format);
    if (o.output_dir.empty()) {
      if (!first) std::cout << '\n';
      std::cout << text;
    } else {
      const auto path =
          std::filesystem::path(o.output_dir) / (file_stem(spec) + "." + extension(format));
      std::ofstream f(path);
      f << text;
      if (!f) throw std::runtime_error("cannot write " + path.string());
    }
    first = false;
  }
  if (o.verify_paper) {
    std::cerr << (mismatches == 0 ? "all cells match the published tables\n"
                                  : std::to_string(mismatches) + " cells differ\n");
  }
  return mismatches == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------- verify

int run_verify(const VerifyOptions& o) {
  SuiteOptions suite;
  suite.max_order = o.order;
  suite.regular_max_order = o.regular_order;
  suite.graph_max_order = o.graph_order;
  suite.table_max_order = o.tables_order;
  suite.jobs = o.jobs;
  suite.seed = o.seed;
  if (o.order < 2 || o.order > 5) throw PreconditionError("--order must lie in [2, 5]");
  if (o.regular_order > kMaxEnumerationOrder) {
    throw PreconditionError("--regular-order must be at most 6");
  }
  if (o.tables_order > 5) throw PreconditionError("--tables-order must be at most 5");

  const bool as_json = o.format == "json";
  json results = json::array();
  const auto all = run_invariant_suite(suite, [&](const CheckResult& r) {
    if (as_json) {
      results.push_back({{"name", r.name},
                         {"passed", r.passed()},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"samples", r.samples},
                         {"worst_deviation", r.worst_deviation},
                         {"seconds", r.seconds}});
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.summary() << '\n';
      for (const auto& s : r.samples) std::cout << "     " << s << '\n';
      std::cout.flush();
    }
  });
  if (as_json) std::cout << results.dump(2) << '\n';
  const bool ok = std::all_of(all.begin(), all.end(), [](const auto& r) { return r.passed(); });
  return ok ? kOk : kMismatch;
}

}  // namespace qwalk::cli
