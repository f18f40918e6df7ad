#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <unistd.h>

#include "qwalk/checkpoint.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/tables.hpp"

using namespace qwalk;

namespace {

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() /
          (stem + "-" + std::to_string(::getpid()) + ".ckpt"))
      .string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

bool same_table(const CospectralTable& a, const CospectralTable& b) {
  return a.row_values() == b.row_values() && a.classified == b.classified;
}

ClassMap sample_classes() {
  ClassMap m;
  m["1,0,-1"] = {3, 1};
  m["x"] = {1, 0};
  m[std::string("\0bin", 4)] = {7, 7};
  return m;
}

}  // namespace

TEST_CASE("published table columns") {
  const auto h5 = classify(5, TableSpec::hermitian(Angle(1, 2)));
  CHECK(h5.distinct == 275);
  CHECK(h5.max_class == 158);
  CHECK(h5.determined == 5);
  const auto h4 = classify(4, TableSpec::hermitian(Angle(1, 2)));
  CHECK(h4.row_values() == std::array<std::uint64_t, 7>{218, 27, 21, 3, 16, 1, 10});
  const auto third = classify(4, TableSpec::hermitian(Angle(1, 3)));
  CHECK(third.distinct == 41);
  CHECK(third.max_class == 18);
  CHECK(classify(3, TableSpec::hermitian(Angle(2, 3))).distinct == 5);
  const auto u2 = classify(2, TableSpec::square_support(Angle(1, 2)));
  CHECK(u2.distinct == 2);
  CHECK(u2.determined == 2);
  const auto u5 = classify(5, TableSpec::square_support(Angle(1, 2)));
  CHECK(u5.distinct == 371);
  CHECK(u5.max_class == 700);
  CHECK(u5.determined == 50);
  CHECK(u5.mixed == 0);
  const auto u4 = classify(4, TableSpec::square_support(Angle(2, 3)));
  CHECK(u4.distinct == 45);
  CHECK(u4.max_class == 22);
  CHECK(u4.determined == 13);
  const auto a5 = classify(5, TableSpec::adjacency());
  CHECK(a5.distinct == 718);
  CHECK(a5.max_class == 592);
  CHECK(a5.determined == 166);
}

TEST_CASE("every reference cell for orders 2 to 5") {
  for (const TableSpec& spec : reference_table_specs())
    for (int n = 2; n <= 5; ++n) {
      const auto expected = reference_values(spec, n);
      REQUIRE(expected.has_value());
      INFO(spec.label() << " order " << n);
      CHECK(classify(n, spec).row_values() == *expected);
    }
}

TEST_CASE("table consistency") {
  for (const TableSpec& spec : reference_table_specs())
    for (int n = 2; n <= 4; ++n) {
      const auto t = classify(n, spec);
      CHECK(t.no_graphs + t.only_graphs + t.mixed == t.distinct);
      CHECK(t.determined <= t.distinct);
      CHECK(t.max_class <= t.classified);
      const std::uint64_t excluded = spec.functor == Functor::U2Plus ? 1 : 0;
      CHECK(t.classified + excluded == t.digraphs);
    }
}

TEST_CASE("parallel classification matches serial") {
  const TableSpec spec = TableSpec::square_support(Angle(2, 3));
  ClassifyOptions opts;
  opts.jobs = 3;
  opts.partitions = 7;
  CHECK(same_table(classify(5, spec, opts), classify(5, spec)));
}

TEST_CASE("table emission") {
  const TableSpec spec = TableSpec::hermitian(Angle(1, 2));
  const std::string empty_csv = emit_table(spec, {}, TableFormat::Csv);
  CHECK(empty_csv == "row\n");
  const std::string empty_md = emit_table(spec, {}, TableFormat::Markdown);
  CHECK(std::count(empty_md.begin(), empty_md.end(), '\n') == 2);
  const std::vector<CospectralTable> cols{classify(2, spec), classify(3, spec)};
  const std::string csv = emit_table(spec, cols, TableFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK(csv.find("Number of digraphs\",3,16") != std::string::npos);
  const std::string json = emit_table(spec, cols, TableFormat::Json);
  CHECK(json.find("275") == std::string::npos);
  CHECK(json.find("16") != std::string::npos);
  CHECK(parse_table_format("md") == TableFormat::Markdown);
  CHECK_THROWS(parse_table_format("xml"));
}

TEST_CASE("functor parsing") {
  CHECK(parse_table_spec("H", Angle(1, 3)).eta == Angle(1, 2));
  CHECK(parse_table_spec("Heta", Angle(1, 3)).eta == Angle(1, 3));
  CHECK(parse_table_spec("A", Angle(1, 3)).functor == Functor::Adjacency);
  CHECK(parse_table_spec("U2plus", Angle(2, 3)).functor == Functor::U2Plus);
  CHECK_THROWS(parse_table_spec("B", Angle(1, 2)));
  CHECK_FALSE(functor_key(Digraph(3), TableSpec::square_support(Angle(1, 2))).has_value());
  CHECK(functor_key(Digraph(3), TableSpec::hermitian(Angle(1, 2))).has_value());
}

TEST_CASE("checkpoint round trip") {
  const std::string path = temp_path("qwalk-rt");
  std::filesystem::remove(path);
  {
    CheckpointWriter w(path, 5, "H");
    w.write_partition(3, sample_classes());
    w.write_partition(9, {});
  }
  const auto loaded = load_checkpoint(path, 5, "H");
  REQUIRE(loaded.size() == 2);
  CHECK(loaded.at(3).size() == 3);
  CHECK(loaded.at(3).at("1,0,-1").count == 3);
  CHECK(loaded.at(3).at(std::string("\0bin", 4)).graphs == 7);
  CHECK(loaded.at(9).empty());
  CHECK(load_checkpoint(path + ".missing", 5, "H").empty());
  std::filesystem::remove(path);
}

TEST_CASE("corrupt checkpoints are rejected") {
  const std::string path = temp_path("qwalk-bad");
  std::filesystem::remove(path);
  {
    CheckpointWriter w(path, 4, "U");
    w.write_partition(1, sample_classes());
  }
  const std::string good = slurp(path);

  SUBCASE("header mismatch") {
    CHECK_THROWS_AS(load_checkpoint(path, 5, "U"), CheckpointError);
    CHECK_THROWS_AS(load_checkpoint(path, 4, "H"), CheckpointError);
  }
  SUBCASE("flipped payload byte") {
    std::string bad = good;
    bad[bad.size() - 12] ^= 0x40;
    spit(path, bad);
    CHECK_THROWS_AS(load_checkpoint(path, 4, "U"), CheckpointError);
  }
  SUBCASE("truncated record") {
    spit(path, good.substr(0, good.size() - 3));
    CHECK_THROWS_AS(load_checkpoint(path, 4, "U"), CheckpointError);
  }
  std::filesystem::remove(path);
}

TEST_CASE("resumed classification equals a fresh run") {
  const std::string path = temp_path("qwalk-resume");
  const std::string full_path = path + ".full";
  std::filesystem::remove(path);
  const TableSpec spec = TableSpec::hermitian(Angle(2, 3));
  const std::string label = spec.label() + " partitions=8";
  ClassifyOptions opts;
  opts.checkpoint_path = full_path;
  opts.partitions = 8;
  std::filesystem::remove(full_path);
  const auto first = classify(5, spec, opts);
  const auto parts = load_checkpoint(full_path, 5, label);
  CHECK(parts.size() == 8);

  // keep three records to simulate an interrupted run
  {
    CheckpointWriter w(path, 5, label);
    int kept = 0;
    for (const auto& [id, classes] : parts)
      if (kept++ < 3) w.write_partition(id, classes);
  }
  CHECK(load_checkpoint(path, 5, label).size() == 3);
  opts.checkpoint_path = path;
  const auto resumed = classify(5, spec, opts);
  CHECK(load_checkpoint(path, 5, label).size() == 8);
  CHECK(same_table(resumed, first));
  CHECK(same_table(resumed, classify(5, spec)));
  std::filesystem::remove(path);
  std::filesystem::remove(full_path);
}
