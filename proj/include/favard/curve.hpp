#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "favard/geometry.hpp"
#include "favard/interval_set.hpp"

namespace favard {

// Scalar profile phi of a graph piece. Implementations supply phi, phi',
// phi'' in closed form where one exists; phi' is strictly monotone on any
// non-degenerate piece, so ranges reduce to endpoint values plus at most
// one interior stationary point.
class Profile {
 public:
  virtual ~Profile() = default;

  virtual double value(double t) const = 0;
  virtual double slope(double t) const = 0;
  virtual double second(double t) const = 0;
  virtual bool degenerate() const { return false; }

  // Unique zero of phi' in [lo, hi], if any. Default: bisection on the
  // monotone slope.
  virtual std::optional<double> stationary(double lo, double hi) const;

  // (min, max) of |phi''| over [lo, hi]. Default: dense sampling with a 5%
  // safety margin; overridden with exact bounds where the family allows.
  virtual std::pair<double, double> second_abs_bounds(double lo, double hi) const;

  virtual double arclength(double lo, double hi) const;  // of {(t, phi(t))}

  virtual std::string describe() const = 0;
};

using ProfilePtr = std::shared_ptr<const Profile>;

// phi(t) = sign * sqrt(R^2 - t^2)
class CircularArcProfile : public Profile {
 public:
  CircularArcProfile(double radius, int sign);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  double arclength(double lo, double hi) const override;
  std::string describe() const override;

 private:
  double radius_;
  double sign_;
};

// phi(t) = sign * semi_value * sqrt(1 - (t / semi_domain)^2)
class EllipticArcProfile : public Profile {
 public:
  EllipticArcProfile(double semi_domain, double semi_value, int sign);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  std::string describe() const override;

 private:
  double sd_;
  double sv_;
  double sign_;
};

// phi(t) = c2 t^2 + c1 t + c0
class ParabolaProfile : public Profile {
 public:
  ParabolaProfile(double c2, double c1, double c0);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  std::string describe() const override;

 private:
  double c2_, c1_, c0_;
};

// phi(t) = slope * t + intercept; zero curvature, flagged degenerate.
class SegmentProfile : public Profile {
 public:
  SegmentProfile(double slope, double intercept);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double) const override { return 0.0; }
  bool degenerate() const override { return true; }
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  double arclength(double lo, double hi) const override;
  std::string describe() const override;

 private:
  double slope_, intercept_;
};

// Evaluators of a parametric plane curve; acceleration may be empty, in
// which case it is differenced from the velocity.
struct ParametricCurve {
  std::function<Vec2(double)> point;
  std::function<Vec2(double)> velocity;
  std::function<Vec2(double)> acceleration;
  double tau0 = 0.0;
  double tau1 = 1.0;
  bool closed = false;
};

// Graph profile of a parametric piece on which the graph coordinate is
// strictly monotone; evaluation inverts the graph coordinate numerically.
class ParamGraphProfile : public Profile {
 public:
  ParamGraphProfile(const ParametricCurve& curve, double tau_lo, double tau_hi,
                    bool graph_on_x);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  bool degenerate() const override { return degenerate_; }
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  double arclength(double lo, double hi) const override;
  std::string describe() const override;

  double graph_lo() const;
  double graph_hi() const;

 private:
  double invert(double t) const;
  double graph_coord(Vec2 p) const { return graph_on_x_ ? p.x : p.y; }
  double other_coord(Vec2 p) const { return graph_on_x_ ? p.y : p.x; }

  std::function<Vec2(double)> point_, velocity_, acceleration_;
  double tau_lo_, tau_hi_;
  bool graph_on_x_;
  bool increasing_;
  bool degenerate_ = false;
};

// Rigid translation of a base profile: value(t) = base(t - dt) + dv.
class ShiftedProfile : public Profile {
 public:
  ShiftedProfile(ProfilePtr base, double dt, double dv);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  bool degenerate() const override;
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  double arclength(double lo, double hi) const override;
  std::string describe() const override;

 private:
  ProfilePtr base_;
  double dt_, dv_;
};

// Quadratic continuation of a base profile past [a, b]; C^1 at both
// junctions, with constant second derivative on the pads.
class ExtendedProfile : public Profile {
 public:
  ExtendedProfile(ProfilePtr base, double a, double b);
  double value(double t) const override;
  double slope(double t) const override;
  double second(double t) const override;
  bool degenerate() const override;
  std::optional<double> stationary(double lo, double hi) const override;
  std::pair<double, double> second_abs_bounds(double lo, double hi) const override;
  std::string describe() const override;

 private:
  ProfilePtr base_;
  double a_, b_;
  double va_, sa_, qa_;
  double vb_, sb_, qb_;
};

enum class Axis { over_x, over_y };

// One C^1 graph segment {(t, phi(t))} (over-x) or {(phi(t), t)} (over-y)
// on the closed domain [a, b]. lambda is the bi-Lipschitz constant of
// phi' (0 for degenerate pieces).
class GraphPiece {
 public:
  static GraphPiece make(Axis axis, double a, double b, ProfilePtr profile);

  Axis axis() const { return axis_; }
  double a() const { return a_; }
  double b() const { return b_; }
  const Profile& profile() const { return *profile_; }
  ProfilePtr profile_ptr() const { return profile_; }
  double lambda() const { return lambda_; }
  bool degenerate() const { return degenerate_; }
  double arclength() const { return arclength_; }
  std::optional<double> stationary() const { return stationary_; }

  double value(double t) const { return profile_->value(t); }
  double slope(double t) const { return profile_->slope(t); }
  double second(double t) const { return profile_->second(t); }

  // Exact range of phi over [lo, hi] (subset of the domain): endpoint
  // values plus the interior stationary point when present.
  Interval range(double lo, double hi) const;

  GraphPiece translated(Vec2 v) const;

 private:
  Axis axis_;
  double a_, b_;
  ProfilePtr profile_;
  double lambda_ = 0.0;
  bool degenerate_ = false;
  double arclength_ = 0.0;
  std::optional<double> stationary_;
};

// Finite ordered union of graph pieces.
class CurveSpec {
 public:
  explicit CurveSpec(std::vector<GraphPiece> pieces);

  const std::vector<GraphPiece>& pieces() const { return pieces_; }
  double length() const { return length_; }
  Box bounding_box() const { return bbox_; }
  bool all_over_x() const;
  bool all_over_y() const;
  bool mixed() const { return !all_over_x() && !all_over_y(); }

  CurveSpec translated(Vec2 v) const;

  const std::string& describe() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  std::vector<GraphPiece> pieces_;
  double length_ = 0.0;
  Box bbox_;
  std::string description_;
};

// Splits a parametric curve where the tangent angle crosses the over-x /
// over-y boundary (slope +-1) and at inflection points, then emits graph
// pieces with the matching axis tag.
CurveSpec decompose(const ParametricCurve& curve);

// Point projections. Both return a singleton or the empty set.
IntervalSet phi_alpha_point(const GraphPiece& piece, double alpha, Vec2 p);
IntervalSet psi_beta_point(const GraphPiece& piece, double beta, Vec2 p);

// Direction orthogonal to the tangent of the curve dropped at alpha, seen
// from z0; in (-pi/2, pi/2], with slope 0 mapping to pi/2.
double tangent_angle_map(const GraphPiece& piece, Vec2 z0, double alpha);
double alpha_of_theta(const GraphPiece& piece, Vec2 z0, double theta);
double dalpha_dtheta(const GraphPiece& piece, Vec2 z0, double theta);

// Domain extended by `pad` on both sides with the quadratic continuation.
GraphPiece parabolic_extension(const GraphPiece& piece, double pad);

// Achieved sup of |phi'| over the domain (phi' monotone).
double max_abs_slope(const GraphPiece& piece);

// Builtin curves.
CurveSpec make_circle(double radius);
CurveSpec make_half_circle(double radius, int sign);
CurveSpec make_ellipse(double a, double b);
CurveSpec make_parabola(double c2, double c1, double c0, double t0, double t1);
CurveSpec make_segment(double slope, double length);
CurveSpec make_vertical_segment(double length);
CurveSpec make_log_spiral(double radius, double k, double turns);

// Mini-language: circle:R=2 | halfcircle:R=2,sign=- | ellipse:a=2,b=1 |
// parabola:c2=1,t0=-1,t1=1 | segment:slope=0.5,len=2 | vsegment:len=1 |
// logspiral:R=1,k=0.1,turns=2
CurveSpec parse_curve(std::string_view spec);
const char* curve_grammar();

}  // namespace favard
