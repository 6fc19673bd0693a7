#include "ymh/sampling.hpp"

namespace ymh {

double radical_inverse(uint64_t i, uint32_t base) {
  double inv_base = 1.0 / base;
  double scale = inv_base;
  double value = 0.0;
  while (i != 0) {
    value += static_cast<double>(i % base) * scale;
    i /= base;
    scale *= inv_base;
  }
  return value;
}

} // namespace ymh
