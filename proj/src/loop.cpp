#include "loopgate/loop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loopgate {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-9;
}  // namespace

double Segment::duration() const {
  if (speed <= 0.0) throw std::invalid_argument("segment speed must be positive");
  if (kind == SegmentKind::kMeridian) return std::abs(delta) / speed;
  return std::abs(delta) * std::sin(theta0) / speed;
}

LoopPath::LoopPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
  double t = 0.0;
  for (const auto& s : segments_) {
    t += s.duration();
    cumulative_.push_back(t);
  }
  total_time_ = t;
}

bool LoopPath::closed() const {
  if (segments_.empty()) return false;
  if (std::abs(segments_.front().theta0) > kPoleTol) return false;
  const auto& last = segments_.back();
  const double theta_end =
      last.kind == SegmentKind::kMeridian ? last.theta0 + last.delta : last.theta0;
  return std::abs(theta_end) < kPoleTol;
}

PathPoint LoopPath::at(double t) const {
  if (t < -1e-12 || t > total_time_ + 1e-12) {
    throw std::out_of_range("time outside loop duration");
  }
  t = std::clamp(t, 0.0, total_time_);
  double t0 = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double t1 = cumulative_[i];
    if (t <= t1 + 1e-15 || i + 1 == segments_.size()) {
      const auto& s = segments_[i];
      const double local = std::min(t - t0, s.duration());
      const double frac = s.duration() > 0 ? local / s.duration() : 0.0;
      if (s.kind == SegmentKind::kMeridian) {
        return {t, s.theta0 + s.delta * frac, s.phi0};
      }
      return {t, s.theta0, s.phi0 + s.delta * frac};
    }
    t0 = t1;
  }
  throw std::logic_error("empty loop");
}

double LoopPath::theta_dot(double t) const {
  if (t < -1e-12 || t > total_time_ + 1e-12) throw std::out_of_range("time outside loop");
  t = std::clamp(t, 0.0, total_time_);
  double t0 = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (t <= cumulative_[i] + 1e-15 || i + 1 == segments_.size()) {
      const auto& s = segments_[i];
      if (s.kind != SegmentKind::kMeridian) return 0.0;
      return (s.delta >= 0 ? 1.0 : -1.0) * s.speed;
    }
    t0 = cumulative_[i];
  }
  (void)t0;
  return 0.0;
}

double LoopPath::phi_dot(double t) const {
  if (t < -1e-12 || t > total_time_ + 1e-12) throw std::out_of_range("time outside loop");
  t = std::clamp(t, 0.0, total_time_);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (t <= cumulative_[i] + 1e-15 || i + 1 == segments_.size()) {
      const auto& s = segments_[i];
      if (s.kind != SegmentKind::kParallel) return 0.0;
      const double st = std::sin(s.theta0);
      if (st < 1e-300) return 0.0;
      return (s.delta >= 0 ? 1.0 : -1.0) * s.speed / st;
    }
  }
  return 0.0;
}

std::vector<PathPoint> LoopPath::discretize(int n_steps) const {
  if (n_steps < 2) throw std::invalid_argument("n_steps must be >= 2");
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(n_steps) + segments_.size() + 1);
  for (int i = 0; i < n_steps; ++i) {
    times.push_back(total_time_ * i / (n_steps - 1));
  }
  for (double tb : cumulative_) times.push_back(tb);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [this](double a, double b) {
                            return std::abs(a - b) < 1e-13 * std::max(1.0, total_time_);
                          }),
              times.end());
  std::vector<PathPoint> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(at(t));
  return out;
}

LoopPath C1Loop::to_path() const {
  if (!(theta_m > 0.0 && theta_m <= kPi)) throw std::invalid_argument("theta_m must be in (0, pi]");
  if (delta_phi < 0.0) throw std::invalid_argument("delta_phi must be >= 0");
  if (speed <= 0.0) throw std::invalid_argument("speed must be positive");
  std::vector<Segment> segs;
  segs.push_back({SegmentKind::kMeridian, 0.0, 0.0, theta_m, speed});
  if (delta_phi > 0.0) {
    segs.push_back({SegmentKind::kParallel, theta_m, 0.0, delta_phi, speed});
  }
  segs.push_back({SegmentKind::kMeridian, theta_m, delta_phi, -theta_m, speed});
  return LoopPath(std::move(segs));
}

std::map<std::string, double> C1Loop::to_kv() const {
  return {{"theta_m", theta_m}, {"delta_phi", delta_phi}, {"speed", speed}};
}

C1Loop C1Loop::from_kv(const std::map<std::string, double>& kv) {
  C1Loop loop;
  loop.theta_m = kv.at("theta_m");
  loop.delta_phi = kv.at("delta_phi");
  loop.speed = kv.at("speed");
  return loop;
}

LoopPath CnLoop::to_path() const {
  if (thetas.empty() || thetas.size() != delta_phis.size()) {
    throw std::invalid_argument("CnLoop needs matching theta/delta_phi lists");
  }
  if (speed <= 0.0) throw std::invalid_argument("speed must be positive");
  std::vector<Segment> segs;
  double theta = 0.0, phi = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    segs.push_back({SegmentKind::kMeridian, theta, phi, thetas[i] - theta, speed});
    theta = thetas[i];
    if (delta_phis[i] != 0.0) {
      segs.push_back({SegmentKind::kParallel, theta, phi, delta_phis[i], speed});
      phi += delta_phis[i];
    }
  }
  segs.push_back({SegmentKind::kMeridian, theta, phi, -theta, speed});
  return LoopPath(std::move(segs));
}

double CnLoop::solid_angle() const {
  double a = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    a += delta_phis[i] * (1.0 - std::cos(thetas[i]));
  }
  return a;
}

double solid_angle(const C1Loop& loop) {
  return loop.delta_phi * (1.0 - std::cos(loop.theta_m));
}

double holonomy_angle_rate(const LoopPath& loop, double t) {
  return loop.phi_dot(t) * std::cos(loop.at(t).theta);
}

double holonomy_angle(const LoopPath& loop, double t) {
  if (t < -1e-12 || t > loop.total_time() + 1e-12) throw std::out_of_range("time outside loop");
  double a = 0.0, t0 = 0.0;
  for (const auto& s : loop.segments()) {
    const double t1 = t0 + s.duration();
    const double upto = std::min(t, t1);
    if (upto > t0 && s.kind == SegmentKind::kParallel) {
      const double st = std::sin(s.theta0);
      const double phid = st > 1e-300 ? (s.delta >= 0 ? 1.0 : -1.0) * s.speed / st : 0.0;
      a += phid * std::cos(s.theta0) * (upto - t0);
    }
    if (t <= t1) break;
    t0 = t1;
  }
  return a;
}

double theta_m_for_time(double a, double v_max, double t_ad) {
  if (a <= 0.0 || v_max <= 0.0 || t_ad <= 0.0) {
    throw std::invalid_argument("theta_m_for_time needs positive a, v_max, t_ad");
  }
  const double vt = v_max * t_ad;
  const double m = (vt * vt + a * a) / (4.0 * kPi * a);
  const double arg = 1.0 - a / (2.0 * kPi * m);
  if (arg < -1.0 || arg > 1.0) {
    throw std::domain_error("t_ad infeasible for requested solid angle");
  }
  return std::acos(arg);
}

double total_time(const C1Loop& loop) {
  if (loop.speed <= 0.0) throw std::invalid_argument("speed must be positive");
  return (2.0 * loop.theta_m + loop.delta_phi * std::sin(loop.theta_m)) / loop.speed;
}

}  // namespace loopgate
