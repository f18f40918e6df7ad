#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <string>

#include "qwalk/tables.hpp"

namespace qwalk {

/// Append-only record file for long classing runs.
///
/// Layout: a text header line "QWALKCKPT1 <order> <table label>\n", then one
/// binary record per finished partition:
///   u32 partition id, u32 entry count, u64 payload bytes, payload, u64 FNV-1a
///   checksum of the payload,
/// where the payload repeats { u32 key length, key bytes, u64 count, u64 graphs }.
/// All integers are little-endian.
class CheckpointWriter {
 public:
  /// Creates the file with its header unless it already exists.
  CheckpointWriter(const std::string& path, int order, const std::string& label);
  void write_partition(std::uint32_t partition, const ClassMap& classes);

 private:
  std::ofstream out_;
};

/// Finished partitions stored in `path`; empty when the file does not exist.
/// Throws CheckpointError naming the partition on checksum failure or
/// truncation, and on a header that does not match order and label.
std::map<std::uint32_t, ClassMap> load_checkpoint(const std::string& path, int order,
                                                  const std::string& label);

}  // namespace qwalk
