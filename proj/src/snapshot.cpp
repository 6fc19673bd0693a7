#include "ymh/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "ymh/errors.hpp"

namespace ymh {
namespace {

constexpr char kMagic[4] = {'Y', 'M', 'H', '1'};

void put_u32(std::ostream& out, uint32_t v) {
  char b[4];
  std::memcpy(b, &v, 4);
  out.write(b, 4);
}

void put_f64(std::ostream& out, double v) {
  char b[8];
  std::memcpy(b, &v, 8);
  out.write(b, 8);
}

uint32_t get_u32(std::istream& in) {
  char b[4];
  in.read(b, 4);
  uint32_t v;
  std::memcpy(&v, b, 4);
  return v;
}

double get_f64(std::istream& in) {
  char b[8];
  in.read(b, 8);
  double v;
  std::memcpy(&v, b, 8);
  return v;
}

} // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open snapshot file for writing: " + path);
  out.write(kMagic, 4);
  put_u32(out, static_cast<uint32_t>(snap.grid.dim));
  put_u32(out, static_cast<uint32_t>(snap.grid.n));
  put_f64(out, snap.grid.length);
  put_u32(out, static_cast<uint32_t>(snap.fields.size()));
  for (const auto& [name, _] : snap.fields) {
    put_u32(out, static_cast<uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  for (const auto& [name, samples] : snap.fields) {
    if (static_cast<long>(samples.size()) != snap.grid.points())
      throw ArgumentError("snapshot field '" + name + "' has wrong sample count");
    for (double v : samples) put_f64(out, v);
  }
  if (!out) throw ArgumentError("failed writing snapshot: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open snapshot file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw ArgumentError("not a snapshot file: " + path);
  const uint32_t dim = get_u32(in);
  const uint32_t n = get_u32(in);
  const double length = get_f64(in);
  const uint32_t count = get_u32(in);
  Snapshot snap;
  snap.grid = TorusGrid(static_cast<int>(dim), static_cast<int>(n), length);
  snap.fields.resize(count);
  for (auto& [name, _] : snap.fields) {
    const uint32_t len = get_u32(in);
    name.resize(len);
    in.read(name.data(), len);
  }
  for (auto& [name, samples] : snap.fields) {
    samples.resize(static_cast<size_t>(snap.grid.points()));
    for (double& v : samples) v = get_f64(in);
  }
  if (!in) throw ArgumentError("truncated snapshot file: " + path);
  return snap;
}

} // namespace ymh
