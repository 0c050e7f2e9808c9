#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gsqg/fft.hpp"
#include "gsqg/grid.hpp"

namespace gsqg {

using cplx = std::complex<double>;

// periodic field with lazily synchronized physical samples and spectrum.
// spectrum[i] approximates the Fourier integral over one period:
//   spectrum[i] = dx * sum_j values[j] exp(-i xi_k x_j),  k = mode(i)
// so that values[j] = (2L)^{-1} sum_k spectrum[k] exp(i xi_k x_j).
class Field {
 public:
  Field() = default;

  explicit Field(const Grid& g)
      : g_(g), vals_(g.n, cplx(0.0)), spec_(g.n, cplx(0.0)), vok_(true), sok_(true) {}

  static Field from_real(const Grid& g, const std::vector<double>& v) {
    Field f(g);
    if (static_cast<int>(v.size()) != g.n) throw GridMismatch("from_real: sample count mismatch");
    for (int j = 0; j < g.n; ++j) f.vals_[j] = v[j];
    f.vok_ = true;
    f.sok_ = false;
    return f;
  }

  template <class Fn>
  static Field sample(const Grid& g, Fn&& fn) {
    Field f(g);
    for (int j = 0; j < g.n; ++j) f.vals_[j] = fn(g.x(j));
    f.vok_ = true;
    f.sok_ = false;
    return f;
  }

  static Field from_values(const Grid& g, std::vector<cplx> v) {
    if (static_cast<int>(v.size()) != g.n) throw GridMismatch("from_values: sample count mismatch");
    Field f(g);
    f.vals_ = std::move(v);
    f.vok_ = true;
    f.sok_ = false;
    return f;
  }

  static Field from_spectrum(const Grid& g, std::vector<cplx> s) {
    if (static_cast<int>(s.size()) != g.n)
      throw GridMismatch("from_spectrum: coefficient count mismatch");
    Field f(g);
    f.spec_ = std::move(s);
    f.sok_ = true;
    f.vok_ = false;
    return f;
  }

  const Grid& grid() const { return g_; }

  const std::vector<cplx>& values() const {
    ensure_values();
    return vals_;
  }

  const std::vector<cplx>& spectrum() const {
    ensure_spectrum();
    return spec_;
  }

  std::vector<double> real_values() const {
    ensure_values();
    std::vector<double> out(g_.n);
    for (int j = 0; j < g_.n; ++j) out[j] = vals_[j].real();
    return out;
  }

  // coefficient at signed mode k in [-n/2, n/2)
  cplx spectrum_at_mode(int k) const {
    ensure_spectrum();
    int i = k >= 0 ? k : k + g_.n;
    return spec_[i];
  }

  void set_values(std::vector<cplx> v) {
    vals_ = std::move(v);
    vok_ = true;
    sok_ = false;
  }

  void set_spectrum(std::vector<cplx> s) {
    spec_ = std::move(s);
    sok_ = true;
    vok_ = false;
  }

  double mass() const {
    ensure_spectrum();
    return spec_[0].real();
  }

  double norm_l2() const {
    ensure_values();
    double s = 0.0;
    for (const auto& v : vals_) s += std::norm(v);
    return std::sqrt(g_.dx * s);
  }

  double norm_l2_spectral() const {
    ensure_spectrum();
    double s = 0.0;
    for (const auto& c : spec_) s += std::norm(c);
    return std::sqrt(s / (2.0 * g_.L));
  }

  double sup_abs() const {
    ensure_values();
    double m = 0.0;
    for (const auto& v : vals_) m = std::max(m, std::abs(v));
    return m;
  }

  double sup_imag() const {
    ensure_values();
    double m = 0.0;
    for (const auto& v : vals_) m = std::max(m, std::fabs(v.imag()));
    return m;
  }

  // max |spec(-k) - conj(spec(k))|, zero for a real field up to roundoff
  double real_symmetry_defect() const {
    ensure_spectrum();
    double m = 0.0;
    for (int i = 1; i < g_.n / 2; ++i) {
      m = std::max(m, std::abs(spec_[g_.n - i] - std::conj(spec_[i])));
    }
    m = std::max(m, std::fabs(spec_[0].imag()));
    m = std::max(m, std::fabs(spec_[g_.n / 2].imag()));
    return m;
  }

  Field& operator+=(const Field& o) {
    require_same_grid(g_, o.g_, "field sum");
    combine(o, 1.0);
    return *this;
  }

  Field& operator-=(const Field& o) {
    require_same_grid(g_, o.g_, "field difference");
    combine(o, -1.0);
    return *this;
  }

  Field& operator*=(double c) {
    if (vok_)
      for (auto& v : vals_) v *= c;
    if (sok_)
      for (auto& s : spec_) s *= c;
    return *this;
  }

  Field& operator*=(cplx c) {
    if (vok_)
      for (auto& v : vals_) v *= c;
    if (sok_)
      for (auto& s : spec_) s *= c;
    return *this;
  }

  friend Field operator+(Field a, const Field& b) {
    a += b;
    return a;
  }
  friend Field operator-(Field a, const Field& b) {
    a -= b;
    return a;
  }
  friend Field operator*(double c, Field a) {
    a *= c;
    return a;
  }
  friend Field operator*(cplx c, Field a) {
    a *= c;
    return a;
  }

 private:
  Grid g_;
  mutable std::vector<cplx> vals_, spec_;
  mutable bool vok_ = false, sok_ = false;

  void combine(const Field& o, double sign) {
    if (vok_ && o.vok_) {
      for (int j = 0; j < g_.n; ++j) vals_[j] += sign * o.vals_[j];
      if (sok_ && o.sok_) {
        for (int i = 0; i < g_.n; ++i) spec_[i] += sign * o.spec_[i];
      } else {
        sok_ = false;
      }
    } else {
      ensure_spectrum();
      o.ensure_spectrum();
      for (int i = 0; i < g_.n; ++i) spec_[i] += sign * o.spec_[i];
      vok_ = false;
    }
  }

  void ensure_values() const {
    if (vok_) return;
    std::vector<cplx> tmp(g_.n);
    double inv = 1.0 / (g_.dx * g_.n);
    for (int i = 0; i < g_.n; ++i) {
      double sgn = (i & 1) ? -1.0 : 1.0;
      tmp[i] = spec_[i] * (sgn * inv);
    }
    if (vals_.size() != static_cast<size_t>(g_.n)) vals_.resize(g_.n);
    detail::FftPlans::instance().backward(g_.n, tmp.data(), vals_.data());
    vok_ = true;
  }

  void ensure_spectrum() const {
    if (sok_) return;
    if (spec_.size() != static_cast<size_t>(g_.n)) spec_.resize(g_.n);
    detail::FftPlans::instance().forward(g_.n, vals_.data(), spec_.data());
    for (int i = 0; i < g_.n; ++i) {
      double sgn = (i & 1) ? -1.0 : 1.0;
      spec_[i] *= sgn * g_.dx;
    }
    vok_ = true;
    sok_ = true;
  }
};

// pointwise product of physical samples (no dealiasing)
inline Field product_pointwise(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise product");
  const auto& va = a.values();
  const auto& vb = b.values();
  std::vector<cplx> out(va.size());
  for (size_t j = 0; j < va.size(); ++j) out[j] = va[j] * vb[j];
  return Field::from_values(a.grid(), std::move(out));
}

// zero all modes with |k| > n/3 (2/3-rule guard for quadratic products)
inline Field dealias_truncate(const Field& f) {
  const Grid& g = f.grid();
  auto s = f.spectrum();
  int kmax = g.n / 3;
  for (int i = 0; i < g.n; ++i) {
    int k = g.mode(i);
    if (std::abs(k) > kmax) s[i] = cplx(0.0);
  }
  return Field::from_spectrum(g, std::move(s));
}

// product with 2/3-rule truncation of both inputs and the result
inline Field product_dealiased(const Field& a, const Field& b) {
  Field p = product_pointwise(dealias_truncate(a), dealias_truncate(b));
  return dealias_truncate(p);
}

inline double hs_norm(const Field& f, double s) {
  const Grid& g = f.grid();
  const auto& sp = f.spectrum();
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i) {
    double xi = g.xi(i);
    acc += std::pow(1.0 + xi * xi, s) * std::norm(sp[i]);
  }
  return std::sqrt(acc / (2.0 * g.L));
}

inline double homogeneous_hs_norm(const Field& f, double s) {
  const Grid& g = f.grid();
  const auto& sp = f.spectrum();
  double acc = 0.0;
  for (int i = 1; i < g.n; ++i) {
    double xi = g.xi(i);
    acc += std::pow(std::fabs(xi), 2.0 * s) * std::norm(sp[i]);
  }
  return std::sqrt(acc / (2.0 * g.L));
}

// L2 pairing int f conj(g) dx evaluated spectrally
inline cplx inner_product(const Field& f, const Field& g) {
  require_same_grid(f.grid(), g.grid(), "inner product");
  const auto& a = f.spectrum();
  const auto& b = g.spectrum();
  cplx acc(0.0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc / (2.0 * f.grid().L);
}

}  // namespace gsqg
