#ifndef YMH_FFT_HPP
#define YMH_FFT_HPP

#include <complex>
#include <vector>

namespace ymh::fft {

// Half-spectrum transforms with the convention
//   f(x) = sum_k c(k) exp(i k . x 2pi/n),
// i.e. the forward transform divides by the point count. `dims` is the
// row-major real extent per axis; the complex array halves the last axis
// to dims.back()/2 + 1 entries.

void real_to_spectral(const std::vector<int>& dims, const double* real_in,
                      std::complex<double>* spec_out);

void spectral_to_real(const std::vector<int>& dims, const std::complex<double>* spec_in,
                      double* real_out);

} // namespace ymh::fft

#endif
