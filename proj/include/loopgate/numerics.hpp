#pragma once

#include <cstdint>
#include <functional>

namespace loopgate::numerics {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-16;
  int max_depth = 52;
  int initial_panels = 1;  // pre-split for oscillatory integrands
};

// Adaptive Gauss-Kronrod (G7,K15) on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// int_{ta}^{tb} sin(w t) * cos(alpha t + phi) dt, stable for small frequencies.
double sin_times_cos_integral(double w, double alpha, double phi, double ta, double tb);

// Least-squares line fit of y against x; returns {slope, intercept, rms residual}.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};
LineFit fit_line(const double* x, const double* y, int n);

// Deterministic 64-bit generator (splitmix64); identical across platforms,
// unlike std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

}  // namespace loopgate::numerics
