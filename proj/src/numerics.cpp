#include "loopgate/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace loopgate::numerics {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] with embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
  double kronrod;
  double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fv;
    if (i == 7) {
      fv = f(c);
      resk += kWgk[7] * fv;
      resg += kWg[3] * fv;
    } else {
      const double f1 = f(c - dx), f2 = f(c + dx);
      resk += kWgk[i] * (f1 + f2);
      if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }
  }
  resk *= h;
  resg *= h;
  return {resk, std::abs(resk - resg)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  struct Panel {
    double a, b, value, err;
    int depth;
  };
  std::vector<Panel> stack;
  double total = 0.0, total_err = 0.0;
  const int np = opts.initial_panels < 1 ? 1 : opts.initial_panels;
  stack.reserve(static_cast<std::size_t>(np) + 64);
  for (int i = 0; i < np; ++i) {
    const double pa = a + (b - a) * i / np;
    const double pb = a + (b - a) * (i + 1) / np;
    auto r = gk15(f, pa, pb);
    stack.push_back({pa, pb, r.kronrod, r.err, 0});
    total += r.kronrod;
    total_err += r.err;
  }
  while (total_err > opts.abs_tol && total_err > opts.rel_tol * std::abs(total)) {
    int worst = -1;
    double werr = 0.0;
    for (int i = 0; i < static_cast<int>(stack.size()); ++i) {
      if (stack[i].err > werr) {
        werr = stack[i].err;
        worst = i;
      }
    }
    if (worst < 0 || stack[worst].depth >= opts.max_depth) break;
    Panel p = stack[worst];
    const double mid = 0.5 * (p.a + p.b);
    auto r1 = gk15(f, p.a, mid);
    auto r2 = gk15(f, mid, p.b);
    total += r1.kronrod + r2.kronrod - p.value;
    total_err += r1.err + r2.err - p.err;
    stack[worst] = {p.a, mid, r1.kronrod, r1.err, p.depth + 1};
    stack.push_back({mid, p.b, r2.kronrod, r2.err, p.depth + 1});
  }
  return total;
}

namespace {

// int sin(beta t + gamma) dt over [ta, tb]; series for |beta|*(tb-ta) small.
double sine_primitive_integral(double beta, double gamma, double ta, double tb) {
  if (std::abs(beta) * (std::abs(ta) + std::abs(tb)) < 1e-8) {
    // sin(beta t + gamma) ~ sin(gamma) + beta t cos(gamma)
    const double dt = tb - ta;
    return std::sin(gamma) * dt + 0.5 * beta * std::cos(gamma) * (tb * tb - ta * ta);
  }
  return (std::cos(beta * ta + gamma) - std::cos(beta * tb + gamma)) / beta;
}

}  // namespace

double sin_times_cos_integral(double w, double alpha, double phi, double ta, double tb) {
  // sin(wt)cos(at+phi) = [sin((w+a)t+phi) + sin((w-a)t-phi)]/2
  return 0.5 * (sine_primitive_integral(w + alpha, phi, ta, tb) +
                sine_primitive_integral(w - alpha, -phi, ta, tb));
}

LineFit fit_line(const double* x, const double* y, int n) {
  if (n < 2) throw std::invalid_argument("fit_line needs at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit out;
  out.slope = (n * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - (out.slope * x[i] + out.intercept);
    ss += r * r;
  }
  out.residual = std::sqrt(ss / n);
  return out;
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

}  // namespace loopgate::numerics
