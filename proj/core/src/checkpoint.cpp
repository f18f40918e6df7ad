#include "qwalk/checkpoint.hpp"

#include <algorithm>
#include <filesystem>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr const char* kMagic = "QWALKCKPT1";

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class T>
void put(std::string& buf, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFFU));
  }
}

template <class T>
bool get(const std::string& buf, std::size_t& pos, T& value) {
  if (pos + sizeof(T) > buf.size()) return false;
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
  }
  value = static_cast<T>(v);
  pos += sizeof(T);
  return true;
}

std::string header_line(int order, const std::string& label) {
  return std::string(kMagic) + " " + std::to_string(order) + " " + label + "\n";
}

}  // namespace

CheckpointWriter::CheckpointWriter(const std::string& path, int order, const std::string& label) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  out_.open(path, std::ios::binary | std::ios::app);
  if (!out_) throw CheckpointError("cannot open checkpoint file " + path, -1);
  if (fresh) {
    out_ << header_line(order, label);
    out_.flush();
  }
}

void CheckpointWriter::write_partition(std::uint32_t partition, const ClassMap& classes) {
  // Sorted keys keep the bytes independent of hash-map iteration order.
  std::vector<const ClassMap::value_type*> entries;
  entries.reserve(classes.size());
  for (const auto& e : classes) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->first < b->first; });

  std::string payload;
  for (const auto* e : entries) {
    put<std::uint32_t>(payload, static_cast<std::uint32_t>(e->first.size()));
    payload += e->first;
    put<std::uint64_t>(payload, e->second.count);
    put<std::uint64_t>(payload, e->second.graphs);
  }
  std::string record;
  put<std::uint32_t>(record, partition);
  put<std::uint32_t>(record, static_cast<std::uint32_t>(entries.size()));
  put<std::uint64_t>(record, payload.size());
  record += payload;
  put<std::uint64_t>(record, fnv1a(payload));
  out_.write(record.data(), static_cast<std::streamsize>(record.size()));
  out_.flush();
  if (!out_) throw CheckpointError("failed to write checkpoint record", partition);
}

std::map<std::uint32_t, ClassMap> load_checkpoint(const std::string& path, int order,
                                                  const std::string& label) {
  std::map<std::uint32_t, ClassMap> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read checkpoint file " + path, -1);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.empty()) return out;

  const std::string expected = header_line(order, label);
  if (data.compare(0, expected.size(), expected) != 0) {
    throw CheckpointError("checkpoint header does not match this run (expected '" +
                              expected.substr(0, expected.size() - 1) + "')",
                          -1);
  }
  std::size_t pos = expected.size();
  while (pos < data.size()) {
    std::uint32_t partition = 0;
    std::uint32_t count = 0;
    std::uint64_t bytes = 0;
    if (!get(data, pos, partition)) throw CheckpointError("truncated checkpoint record", -1);
    if (!get(data, pos, count) || !get(data, pos, bytes) || pos + bytes + 8 > data.size()) {
      throw CheckpointError("truncated checkpoint record", partition);
    }
    const std::string payload = data.substr(pos, bytes);
    pos += bytes;
    std::uint64_t checksum = 0;
    get(data, pos, checksum);
    if (checksum != fnv1a(payload)) {
      throw CheckpointError("checkpoint checksum mismatch", partition);
    }
    ClassMap classes;
    std::size_t p = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint32_t len = 0;
      ClassStats s;
      if (!get(payload, p, len) || p + len > payload.size()) {
        throw CheckpointError("malformed checkpoint entry", partition);
      }
      std::string key = payload.substr(p, len);
      p += len;
      if (!get(payload, p, s.count) || !get(payload, p, s.graphs)) {
        throw CheckpointError("malformed checkpoint entry", partition);
      }
      classes.emplace(std::move(key), s);
    }
    if (p != payload.size()) throw CheckpointError("malformed checkpoint entry", partition);
    out[partition] = std::move(classes);
  }
  return out;
}

}  // namespace qwalk
