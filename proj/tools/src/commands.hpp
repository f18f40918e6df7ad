#pragma once

#include <string>
#include <vector>

#include "input.hpp"

namespace qwalk::cli {

struct BuildOptions {
  InputOptions input;
  EtaOptions eta;
  std::vector<std::string> ops{"U_theta"};
  bool with_float = false;
};

struct SpectrumOptions {
  InputOptions input;
  EtaOptions eta;
  std::string route = "mapping";
  std::string of = "U";
  bool charpoly = false;
  double tolerance = 1e-8;
};

struct SupportsOptions {
  InputOptions input;
  EtaOptions eta;
  int power = 2;
  std::string sign = "both";
  bool check = false;
  bool probe = false;
  std::string format = "text";
};

struct TablesOptions {
  EtaOptions eta;
  int order = 5;
  int from = 2;
  std::vector<std::string> functors;
  std::string format = "md";
  int jobs = 1;
  bool long_run = false;
  std::string checkpoint;
  std::string output_dir;
  bool verify_paper = false;
  bool progress = false;
};

struct VerifyOptions {
  int order = 4;
  int regular_order = 5;
  int graph_order = 7;
  int tables_order = 5;
  int jobs = 1;
  unsigned long long seed = 0x5eed2024;
  std::string format = "text";
};

int run_build(const BuildOptions& o);
int run_spectrum(const SpectrumOptions& o);
int run_supports(const SupportsOptions& o);
int run_tables(const TablesOptions& o);
int run_verify(const VerifyOptions& o);

}  // namespace qwalk::cli
