#pragma once

#include <map>
#include <string>
#include <vector>

namespace loopgate {

enum class SegmentKind { kMeridian, kParallel };

// Constant-speed arc along a meridian (phi fixed) or a parallel (theta fixed).
struct Segment {
  SegmentKind kind;
  double theta0 = 0.0;  // rad at segment start
  double phi0 = 0.0;    // rad at segment start (unwrapped)
  double delta = 0.0;   // signed delta-theta or delta-phi, rad
  double speed = 0.0;   // rad/ps along the curve

  double duration() const;  // ps
};

struct PathPoint {
  double t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// Closed curve on the control sphere, north pole to north pole.
class LoopPath {
 public:
  LoopPath() = default;
  explicit LoopPath(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  double total_time() const { return total_time_; }
  bool closed() const;

  PathPoint at(double t) const;              // throws on t outside [0, total]
  double theta_dot(double t) const;
  double phi_dot(double t) const;

  // Uniform time samples, endpoints exact, segment boundaries inserted.
  std::vector<PathPoint> discretize(int n_steps) const;

 private:
  std::vector<Segment> segments_;
  std::vector<double> cumulative_;  // segment end times
  double total_time_ = 0.0;
};

// Meridian(0->theta_m), parallel(delta_phi), meridian(theta_m->0).
struct C1Loop {
  double theta_m = 0.0;    // rad, (0, pi]
  double delta_phi = 0.0;  // rad, >= 0, may exceed 2pi
  double speed = 0.0;      // rad/ps

  LoopPath to_path() const;
  std::map<std::string, double> to_kv() const;
  static C1Loop from_kv(const std::map<std::string, double>& kv);
};

// n parallel arcs at theta_1..theta_n alternating with meridian arcs,
// closing at the pole; n = 1 reduces to C1Loop.
struct CnLoop {
  std::vector<double> thetas;
  std::vector<double> delta_phis;
  double speed = 0.0;

  LoopPath to_path() const;
  double solid_angle() const;  // sum of delta_phi_i (1 - cos theta_i)
};

// a = delta_phi (1 - cos theta_m)
double solid_angle(const C1Loop& loop);

// phi_dot(t) cos(theta(t)); zero on meridians. Raw holonomy-angle rate
// (Eq.-(8)-type integrand), distinct from the solid angle.
double holonomy_angle_rate(const LoopPath& loop, double t);

// Accumulated raw holonomy angle int_0^t phi_dot cos(theta).
double holonomy_angle(const LoopPath& loop, double t);

// theta_M for the constrained family at fixed solid angle a, speed v_max,
// duration t_ad: arccos(1 - a/(2 pi m)), m = [(v t)^2 + a^2]/(4 pi a).
// Throws std::domain_error when t_ad is infeasibly short.
double theta_m_for_time(double a, double v_max, double t_ad);

// (2 theta_m + delta_phi sin theta_m) / speed
double total_time(const C1Loop& loop);

}  // namespace loopgate
