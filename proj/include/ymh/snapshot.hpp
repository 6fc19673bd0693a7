#ifndef YMH_SNAPSHOT_HPP
#define YMH_SNAPSHOT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ymh/grid.hpp"

namespace ymh {

/// Little-endian binary snapshot: magic "YMH1", u32 dim, u32 n, f64 length,
/// u32 field count, then length-prefixed UTF-8 field names (u32 + bytes),
/// then per field n^dim row-major f64 real-space samples.
struct Snapshot {
  TorusGrid grid;
  std::vector<std::pair<std::string, std::vector<double>>> fields;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

} // namespace ymh

#endif
