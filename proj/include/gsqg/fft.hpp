#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace gsqg {
namespace detail {

// process-wide plan cache; FFTW_ESTIMATE keeps plan selection reproducible across runs
class FftPlans {
 public:
  static FftPlans& instance() {
    static FftPlans p;
    return p;
  }

  void forward(int n, const std::complex<double>* in, std::complex<double>* out) {
    execute(n, true, in, out);
  }

  void backward(int n, const std::complex<double>* in, std::complex<double>* out) {
    execute(n, false, in, out);
  }

 private:
  struct Pair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
  };
  std::map<int, Pair> plans_;
  std::mutex mu_;

  const Pair& get(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> a(n), b(n);
    Pair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD, flags);
    return plans_.emplace(n, p).first->second;
  }

  void execute(int n, bool fwd, const std::complex<double>* in, std::complex<double>* out) {
    const Pair& p = get(n);
    fftw_execute_dft(fwd ? p.fwd : p.bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

  FftPlans() = default;
};

}  // namespace detail
}  // namespace gsqg
