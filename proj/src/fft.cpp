#include "ymh/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace ymh::fft {
namespace {

// Plans are cached per (dims, direction) and executed through the
// new-array interface so concurrent transforms on distinct buffers are
// safe. FFTW_ESTIMATE keeps planning deterministic across processes.
struct PlanCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

  fftw_plan get(const std::vector<int>& dims, int direction) {
    std::scoped_lock lock(mutex);
    auto key = std::make_pair(dims, direction);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;

    long real_points = 1;
    for (int d : dims) real_points *= d;
    long spec_points = real_points / dims.back() * (dims.back() / 2 + 1);

    double* r = fftw_alloc_real(real_points);
    fftw_complex* c = fftw_alloc_complex(spec_points);
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = direction > 0
        ? fftw_plan_dft_r2c(static_cast<int>(dims.size()), dims.data(), r, c, flags)
        : fftw_plan_dft_c2r(static_cast<int>(dims.size()), dims.data(), c, r, flags);
    fftw_free(r);
    fftw_free(c);
    plans.emplace(key, plan);
    return plan;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

} // namespace

void real_to_spectral(const std::vector<int>& dims, const double* real_in,
                      std::complex<double>* spec_out) {
  fftw_plan plan = cache().get(dims, +1);
  long real_points = 1;
  for (int d : dims) real_points *= d;
  long spec_points = real_points / dims.back() * (dims.back() / 2 + 1);

  // r2c preserves its input but we still copy: the plan interface wants
  // non-const data and callers pass vector storage.
  std::vector<double> in(real_in, real_in + real_points);
  fftw_execute_dft_r2c(plan, in.data(), reinterpret_cast<fftw_complex*>(spec_out));

  const double scale = 1.0 / static_cast<double>(real_points);
  for (long i = 0; i < spec_points; ++i) spec_out[i] *= scale;
}

void spectral_to_real(const std::vector<int>& dims, const std::complex<double>* spec_in,
                      double* real_out) {
  fftw_plan plan = cache().get(dims, -1);
  long real_points = 1;
  for (int d : dims) real_points *= d;
  long spec_points = real_points / dims.back() * (dims.back() / 2 + 1);

  // Multidimensional c2r clobbers its input; work on a copy.
  std::vector<std::complex<double>> in(spec_in, spec_in + spec_points);
  fftw_execute_dft_c2r(plan, reinterpret_cast<fftw_complex*>(in.data()), real_out);
}

} // namespace ymh::fft
