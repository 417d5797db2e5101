#include "favard/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "favard/error.hpp"

namespace favard {

namespace {

constexpr double kPi = std::numbers::pi;

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fm = f(0.5 * (a + b));
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 28);
}

// Zero of the strictly monotone g on [lo, hi]; assumes a sign change.
double bisect_monotone(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  if (glo == 0.0) return lo;
  const bool rising = glo < 0.0;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

// ---------------------------------------------------------------------------
// Profile defaults

std::optional<double> Profile::stationary(double lo, double hi) const {
  const double slo = slope(lo);
  const double shi = slope(hi);
  if (slo == 0.0) return lo;
  if (shi == 0.0) return hi;
  if ((slo < 0.0) == (shi < 0.0)) return std::nullopt;
  return bisect_monotone([this](double t) { return slope(t); }, lo, hi);
}

std::pair<double, double> Profile::second_abs_bounds(double lo, double hi) const {
  const int samples = 1 << 14;
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / samples;
    const double q = std::abs(second(t));
    mn = std::min(mn, q);
    mx = std::max(mx, q);
  }
  return {mn / 1.05, mx * 1.05};
}

double Profile::arclength(double lo, double hi) const {
  return adaptive_simpson(
      [this](double t) { return std::sqrt(1.0 + slope(t) * slope(t)); }, lo, hi, 1e-12);
}

// ---------------------------------------------------------------------------
// Circular arc

CircularArcProfile::CircularArcProfile(double radius, int sign)
    : radius_(radius), sign_(sign >= 0 ? 1.0 : -1.0) {
  if (!(radius > 0.0)) throw_argument("circle radius must be positive");
}

double CircularArcProfile::value(double t) const {
  return sign_ * std::sqrt(std::max(0.0, radius_ * radius_ - t * t));
}

double CircularArcProfile::slope(double t) const {
  return -sign_ * t / std::sqrt(std::max(1e-300, radius_ * radius_ - t * t));
}

double CircularArcProfile::second(double t) const {
  const double d = std::max(1e-300, radius_ * radius_ - t * t);
  return -sign_ * radius_ * radius_ / (d * std::sqrt(d));
}

std::optional<double> CircularArcProfile::stationary(double lo, double hi) const {
  if (lo <= 0.0 && 0.0 <= hi) return 0.0;
  return std::nullopt;
}

std::pair<double, double> CircularArcProfile::second_abs_bounds(double lo, double hi) const {
  // |phi''| increases with |t|.
  const double tmin = (lo <= 0.0 && 0.0 <= hi) ? 0.0 : std::min(std::abs(lo), std::abs(hi));
  const double tmax = std::max(std::abs(lo), std::abs(hi));
  return {std::abs(second(tmin)), std::abs(second(tmax))};
}

double CircularArcProfile::arclength(double lo, double hi) const {
  return radius_ * (std::asin(hi / radius_) - std::asin(lo / radius_));
}

std::string CircularArcProfile::describe() const {
  return "circular-arc R=" + std::to_string(radius_) + (sign_ > 0 ? " sign=+" : " sign=-");
}

// ---------------------------------------------------------------------------
// Elliptic arc

EllipticArcProfile::EllipticArcProfile(double semi_domain, double semi_value, int sign)
    : sd_(semi_domain), sv_(semi_value), sign_(sign >= 0 ? 1.0 : -1.0) {
  if (!(semi_domain > 0.0) || !(semi_value > 0.0)) {
    throw_argument("ellipse semi-axes must be positive");
  }
}

double EllipticArcProfile::value(double t) const {
  const double u = 1.0 - (t / sd_) * (t / sd_);
  return sign_ * sv_ * std::sqrt(std::max(0.0, u));
}

double EllipticArcProfile::slope(double t) const {
  const double u = std::max(1e-300, 1.0 - (t / sd_) * (t / sd_));
  return -sign_ * sv_ * t / (sd_ * sd_ * std::sqrt(u));
}

double EllipticArcProfile::second(double t) const {
  const double u = std::max(1e-300, 1.0 - (t / sd_) * (t / sd_));
  return -sign_ * sv_ / (sd_ * sd_ * u * std::sqrt(u));
}

std::optional<double> EllipticArcProfile::stationary(double lo, double hi) const {
  if (lo <= 0.0 && 0.0 <= hi) return 0.0;
  return std::nullopt;
}

std::pair<double, double> EllipticArcProfile::second_abs_bounds(double lo, double hi) const {
  const double tmin = (lo <= 0.0 && 0.0 <= hi) ? 0.0 : std::min(std::abs(lo), std::abs(hi));
  const double tmax = std::max(std::abs(lo), std::abs(hi));
  return {std::abs(second(tmin)), std::abs(second(tmax))};
}

std::string EllipticArcProfile::describe() const {
  return "elliptic-arc a=" + std::to_string(sd_) + " b=" + std::to_string(sv_) +
         (sign_ > 0 ? " sign=+" : " sign=-");
}

// ---------------------------------------------------------------------------
// Parabola

ParabolaProfile::ParabolaProfile(double c2, double c1, double c0)
    : c2_(c2), c1_(c1), c0_(c0) {
  if (c2 == 0.0) throw_argument("parabola needs c2 != 0 (use a segment)");
}

double ParabolaProfile::value(double t) const { return (c2_ * t + c1_) * t + c0_; }
double ParabolaProfile::slope(double t) const { return 2.0 * c2_ * t + c1_; }
double ParabolaProfile::second(double) const { return 2.0 * c2_; }

std::optional<double> ParabolaProfile::stationary(double lo, double hi) const {
  const double t = -c1_ / (2.0 * c2_);
  if (t >= lo && t <= hi) return t;
  return std::nullopt;
}

std::pair<double, double> ParabolaProfile::second_abs_bounds(double, double) const {
  return {2.0 * std::abs(c2_), 2.0 * std::abs(c2_)};
}

std::string ParabolaProfile::describe() const {
  return "parabola c2=" + std::to_string(c2_) + " c1=" + std::to_string(c1_) +
         " c0=" + std::to_string(c0_);
}

// ---------------------------------------------------------------------------
// Segment

SegmentProfile::SegmentProfile(double slope, double intercept)
    : slope_(slope), intercept_(intercept) {
  if (!std::isfinite(slope) || !std::isfinite(intercept)) {
    throw_argument("segment parameters must be finite");
  }
}

double SegmentProfile::value(double t) const { return slope_ * t + intercept_; }
double SegmentProfile::slope(double) const { return slope_; }

std::optional<double> SegmentProfile::stationary(double, double) const {
  return std::nullopt;
}

std::pair<double, double> SegmentProfile::second_abs_bounds(double, double) const {
  return {0.0, 0.0};
}

double SegmentProfile::arclength(double lo, double hi) const {
  return (hi - lo) * std::sqrt(1.0 + slope_ * slope_);
}

std::string SegmentProfile::describe() const {
  return "segment slope=" + std::to_string(slope_);
}

// ---------------------------------------------------------------------------
// Parametric graph profile

ParamGraphProfile::ParamGraphProfile(const ParametricCurve& curve, double tau_lo,
                                     double tau_hi, bool graph_on_x)
    : point_(curve.point),
      velocity_(curve.velocity),
      acceleration_(curve.acceleration),
      tau_lo_(tau_lo),
      tau_hi_(tau_hi),
      graph_on_x_(graph_on_x) {
  if (!point_ || !velocity_) throw_argument("parametric curve needs point and velocity");
  if (!(tau_hi_ > tau_lo_)) throw_argument("empty parameter range");
  increasing_ = graph_coord(point_(tau_hi_)) >= graph_coord(point_(tau_lo_));

  double max_curvature = 0.0;
  const int probes = 256;
  for (int i = 0; i <= probes; ++i) {
    const double tau = tau_lo_ + (tau_hi_ - tau_lo_) * static_cast<double>(i) / probes;
    const Vec2 v = velocity_(tau);
    const double h = (tau_hi_ - tau_lo_) * 1e-6;
    const Vec2 a = acceleration_ ? acceleration_(tau)
                                 : Vec2{(velocity_(tau + h).x - velocity_(tau - h).x) / (2 * h),
                                        (velocity_(tau + h).y - velocity_(tau - h).y) / (2 * h)};
    const double speed = std::hypot(v.x, v.y);
    if (speed > 0.0) {
      max_curvature = std::max(max_curvature,
                               std::abs(v.x * a.y - v.y * a.x) / (speed * speed * speed));
    }
  }
  degenerate_ = max_curvature < 1e-9;
}

double ParamGraphProfile::graph_lo() const {
  return std::min(graph_coord(point_(tau_lo_)), graph_coord(point_(tau_hi_)));
}

double ParamGraphProfile::graph_hi() const {
  return std::max(graph_coord(point_(tau_lo_)), graph_coord(point_(tau_hi_)));
}

double ParamGraphProfile::invert(double t) const {
  double lo = tau_lo_;
  double hi = tau_hi_;
  // Newton on g(tau) - t with a bisection bracket as the safeguard.
  double tau = 0.5 * (lo + hi);
  for (int i = 0; i < 110; ++i) {
    if (tau <= lo || tau >= hi) tau = 0.5 * (lo + hi);
    const double g = graph_coord(point_(tau));
    if (g == t) return tau;
    if ((g < t) == increasing_) {
      lo = tau;
    } else {
      hi = tau;
    }
    if (hi - lo <= std::abs(tau) * 1e-16) break;
    const double dg = graph_coord(velocity_(tau));
    const double step = dg != 0.0 ? (g - t) / dg : 0.0;
    tau = step != 0.0 ? tau - step : 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

double ParamGraphProfile::value(double t) const { return other_coord(point_(invert(t))); }

double ParamGraphProfile::slope(double t) const {
  const Vec2 v = velocity_(invert(t));
  return graph_on_x_ ? v.y / v.x : v.x / v.y;
}

double ParamGraphProfile::second(double t) const {
  const double tau = invert(t);
  const Vec2 v = velocity_(tau);
  const double h = (tau_hi_ - tau_lo_) * 1e-6;
  const Vec2 a = acceleration_ ? acceleration_(tau)
                               : Vec2{(velocity_(tau + h).x - velocity_(tau - h).x) / (2 * h),
                                      (velocity_(tau + h).y - velocity_(tau - h).y) / (2 * h)};
  const double g1 = graph_on_x_ ? v.x : v.y;
  const double o1 = graph_on_x_ ? v.y : v.x;
  const double g2 = graph_on_x_ ? a.x : a.y;
  const double o2 = graph_on_x_ ? a.y : a.x;
  return (o2 * g1 - g2 * o1) / (g1 * g1 * g1);
}

std::pair<double, double> ParamGraphProfile::second_abs_bounds(double lo, double hi) const {
  double ta = invert(lo);
  double tb = invert(hi);
  if (ta > tb) std::swap(ta, tb);
  const int samples = 1 << 14;
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double tau = ta + (tb - ta) * static_cast<double>(i) / samples;
    const Vec2 v = velocity_(tau);
    const double h = (tau_hi_ - tau_lo_) * 1e-6;
    const Vec2 a = acceleration_ ? acceleration_(tau)
                                 : Vec2{(velocity_(tau + h).x - velocity_(tau - h).x) / (2 * h),
                                        (velocity_(tau + h).y - velocity_(tau - h).y) / (2 * h)};
    const double g1 = graph_on_x_ ? v.x : v.y;
    const double o1 = graph_on_x_ ? v.y : v.x;
    const double g2 = graph_on_x_ ? a.x : a.y;
    const double o2 = graph_on_x_ ? a.y : a.x;
    const double q = std::abs((o2 * g1 - g2 * o1) / (g1 * g1 * g1));
    mn = std::min(mn, q);
    mx = std::max(mx, q);
  }
  return {mn / 1.05, mx * 1.05};
}

double ParamGraphProfile::arclength(double lo, double hi) const {
  double ta = invert(lo);
  double tb = invert(hi);
  if (ta > tb) std::swap(ta, tb);
  return adaptive_simpson(
      [this](double tau) {
        const Vec2 v = velocity_(tau);
        return std::hypot(v.x, v.y);
      },
      ta, tb, 1e-12);
}

std::string ParamGraphProfile::describe() const { return "param-graph"; }

// ---------------------------------------------------------------------------
// Shifted profile

ShiftedProfile::ShiftedProfile(ProfilePtr base, double dt, double dv)
    : base_(std::move(base)), dt_(dt), dv_(dv) {}

double ShiftedProfile::value(double t) const { return base_->value(t - dt_) + dv_; }
double ShiftedProfile::slope(double t) const { return base_->slope(t - dt_); }
double ShiftedProfile::second(double t) const { return base_->second(t - dt_); }
bool ShiftedProfile::degenerate() const { return base_->degenerate(); }

std::optional<double> ShiftedProfile::stationary(double lo, double hi) const {
  if (auto s = base_->stationary(lo - dt_, hi - dt_)) return *s + dt_;
  return std::nullopt;
}

std::pair<double, double> ShiftedProfile::second_abs_bounds(double lo, double hi) const {
  return base_->second_abs_bounds(lo - dt_, hi - dt_);
}

double ShiftedProfile::arclength(double lo, double hi) const {
  return base_->arclength(lo - dt_, hi - dt_);
}

std::string ShiftedProfile::describe() const { return base_->describe() + " (shifted)"; }

// ---------------------------------------------------------------------------
// Extended profile

ExtendedProfile::ExtendedProfile(ProfilePtr base, double a, double b)
    : base_(std::move(base)), a_(a), b_(b) {
  va_ = base_->value(a_);
  sa_ = base_->slope(a_);
  qa_ = base_->second(a_);
  vb_ = base_->value(b_);
  sb_ = base_->slope(b_);
  qb_ = base_->second(b_);
  if (!std::isfinite(va_) || !std::isfinite(sa_) || !std::isfinite(qa_) ||
      !std::isfinite(vb_) || !std::isfinite(sb_) || !std::isfinite(qb_) ||
      qa_ == 0.0 || qb_ == 0.0) {
    throw_precondition("second derivative undefined at a domain endpoint");
  }
}

double ExtendedProfile::value(double t) const {
  if (t < a_) {
    const double d = t - a_;
    return va_ + sa_ * d + 0.5 * qa_ * d * d;
  }
  if (t > b_) {
    const double d = t - b_;
    return vb_ + sb_ * d + 0.5 * qb_ * d * d;
  }
  return base_->value(t);
}

double ExtendedProfile::slope(double t) const {
  if (t < a_) return sa_ + qa_ * (t - a_);
  if (t > b_) return sb_ + qb_ * (t - b_);
  return base_->slope(t);
}

double ExtendedProfile::second(double t) const {
  if (t < a_) return qa_;
  if (t > b_) return qb_;
  return base_->second(t);
}

bool ExtendedProfile::degenerate() const { return base_->degenerate(); }

std::optional<double> ExtendedProfile::stationary(double lo, double hi) const {
  if (lo < a_) {
    const double t = a_ - sa_ / qa_;
    if (t >= lo && t <= std::min(hi, a_)) return t;
  }
  const double clo = std::max(lo, a_);
  const double chi = std::min(hi, b_);
  if (clo <= chi) {
    if (auto s = base_->stationary(clo, chi)) return s;
  }
  if (hi > b_) {
    const double t = b_ - sb_ / qb_;
    if (t >= std::max(lo, b_) && t <= hi) return t;
  }
  return std::nullopt;
}

std::pair<double, double> ExtendedProfile::second_abs_bounds(double lo, double hi) const {
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  if (lo < a_) {
    mn = std::min(mn, std::abs(qa_));
    mx = std::max(mx, std::abs(qa_));
  }
  if (hi > b_) {
    mn = std::min(mn, std::abs(qb_));
    mx = std::max(mx, std::abs(qb_));
  }
  const double clo = std::max(lo, a_);
  const double chi = std::min(hi, b_);
  if (clo <= chi) {
    const auto [bmn, bmx] = base_->second_abs_bounds(clo, chi);
    mn = std::min(mn, bmn);
    mx = std::max(mx, bmx);
  }
  return {mn, mx};
}

std::string ExtendedProfile::describe() const { return base_->describe() + " (extended)"; }

// ---------------------------------------------------------------------------
// GraphPiece

GraphPiece GraphPiece::make(Axis axis, double a, double b, ProfilePtr profile) {
  if (!profile) throw_argument("piece needs a profile");
  if (std::isnan(a) || std::isnan(b) || a > b) throw_argument("bad piece domain");
  GraphPiece piece;
  piece.axis_ = axis;
  piece.a_ = a;
  piece.b_ = b;
  piece.profile_ = std::move(profile);
  piece.degenerate_ = piece.profile_->degenerate();
  if (a < b && !piece.degenerate_) {
    const auto [mn, mx] = piece.profile_->second_abs_bounds(a, b);
    if (mx < 1e-9) {
      piece.degenerate_ = true;
    } else {
      piece.lambda_ = std::max(mx, 1.0 / std::max(mn, 1e-300));
    }
  }
  piece.stationary_ = piece.profile_->stationary(a, b);
  piece.arclength_ = a < b ? piece.profile_->arclength(a, b) : 0.0;
  return piece;
}

Interval GraphPiece::range(double lo, double hi) const {
  double mn = profile_->value(lo);
  double mx = profile_->value(hi);
  if (mn > mx) std::swap(mn, mx);
  if (stationary_ && lo < *stationary_ && *stationary_ < hi) {
    const double v = profile_->value(*stationary_);
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  return {mn, mx};
}

GraphPiece GraphPiece::translated(Vec2 v) const {
  const double dt = axis_ == Axis::over_x ? v.x : v.y;
  const double dv = axis_ == Axis::over_x ? v.y : v.x;
  return make(axis_, a_ + dt, b_ + dt, std::make_shared<ShiftedProfile>(profile_, dt, dv));
}

// ---------------------------------------------------------------------------
// CurveSpec

CurveSpec::CurveSpec(std::vector<GraphPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw_argument("curve needs at least one piece");
  bool first = true;
  for (const GraphPiece& piece : pieces_) {
    length_ += piece.arclength();
    const Interval r = piece.range(piece.a(), piece.b());
    Box pb;
    if (piece.axis() == Axis::over_x) {
      pb = {piece.a(), piece.b(), r.lo, r.hi};
    } else {
      pb = {r.lo, r.hi, piece.a(), piece.b()};
    }
    bbox_ = first ? pb : Box::hull(bbox_, pb);
    first = false;
  }
}

bool CurveSpec::all_over_x() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const GraphPiece& p) { return p.axis() == Axis::over_x; });
}

bool CurveSpec::all_over_y() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const GraphPiece& p) { return p.axis() == Axis::over_y; });
}

CurveSpec CurveSpec::translated(Vec2 v) const {
  std::vector<GraphPiece> moved;
  moved.reserve(pieces_.size());
  for (const GraphPiece& piece : pieces_) moved.push_back(piece.translated(v));
  CurveSpec out(std::move(moved));
  out.set_description(description_ + " translated");
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition of a parametric curve

CurveSpec decompose(const ParametricCurve& curve) {
  if (!curve.point || !curve.velocity) {
    throw_argument("parametric curve needs point and velocity evaluators");
  }
  if (!(curve.tau1 > curve.tau0)) throw_argument("empty parameter range");

  const double span = curve.tau1 - curve.tau0;
  const double h_acc = span * 1e-6;
  auto accel = [&](double tau) -> Vec2 {
    if (curve.acceleration) return curve.acceleration(tau);
    const Vec2 f = curve.velocity(tau + h_acc);
    const Vec2 g = curve.velocity(tau - h_acc);
    return {(f.x - g.x) / (2.0 * h_acc), (f.y - g.y) / (2.0 * h_acc)};
  };
  auto boundary = [&](double tau) {
    const Vec2 v = curve.velocity(tau);
    return std::abs(v.y) - std::abs(v.x);
  };
  auto turning = [&](double tau) {
    const Vec2 v = curve.velocity(tau);
    const Vec2 a = accel(tau);
    return v.x * a.y - v.y * a.x;
  };

  const Vec2 p0 = curve.point(curve.tau0);
  const Vec2 p1 = curve.point(curve.tau1);
  const bool closed =
      curve.closed || std::hypot(p1.x - p0.x, p1.y - p0.y) < 1e-9 * (1.0 + std::hypot(p0.x, p0.y));

  const int probes = 4096;
  int dead_tangents = 0;
  std::vector<double> splits;
  double prev_b = boundary(curve.tau0);
  double prev_k = turning(curve.tau0);
  double speed_scale = 0.0;
  for (int i = 0; i <= probes; ++i) {
    const Vec2 v = curve.velocity(curve.tau0 + span * static_cast<double>(i) / probes);
    speed_scale = std::max(speed_scale, std::hypot(v.x, v.y));
  }
  for (int i = 1; i <= probes; ++i) {
    const double tau_prev = curve.tau0 + span * static_cast<double>(i - 1) / probes;
    const double tau = curve.tau0 + span * static_cast<double>(i) / probes;
    const Vec2 v = curve.velocity(tau);
    if (std::hypot(v.x, v.y) <= 1e-12 * std::max(speed_scale, 1e-12)) ++dead_tangents;

    const double b = boundary(tau);
    if (prev_b == 0.0 && i == 1) splits.push_back(tau_prev);
    if ((prev_b < 0.0 && b > 0.0) || (prev_b > 0.0 && b < 0.0)) {
      splits.push_back(bisect_monotone(boundary, tau_prev, tau));
    } else if (b == 0.0 && prev_b != 0.0) {
      splits.push_back(tau);
    }
    prev_b = b;

    const double k = turning(tau);
    if ((prev_k < 0.0 && k > 0.0) || (prev_k > 0.0 && k < 0.0)) {
      splits.push_back(bisect_monotone(turning, tau_prev, tau));
    }
    prev_k = k;
  }
  if (dead_tangents > probes / 100) {
    throw_precondition("tangent undefined on a set of positive measure");
  }

  std::sort(splits.begin(), splits.end());
  const double tol = 1e-9 * span;
  std::vector<double> cuts;
  for (double s : splits) {
    if (!cuts.empty() && s - cuts.back() < tol) continue;
    if (!closed && (s - curve.tau0 < tol || curve.tau1 - s < tol)) continue;
    cuts.push_back(s);
  }

  // Spans of one axis class each; a closed curve wraps across the seam.
  std::vector<std::pair<double, double>> spans;
  ParametricCurve source = curve;
  if (closed && !cuts.empty()) {
    const double period = span;
    const double base = curve.tau0;
    auto reduce = [base, period](double tau) {
      double r = std::fmod(tau - base, period);
      if (r < 0.0) r += period;
      return base + r;
    };
    auto pt = curve.point;
    auto vel = curve.velocity;
    auto acc = curve.acceleration;
    source.point = [pt, reduce](double tau) { return pt(reduce(tau)); };
    source.velocity = [vel, reduce](double tau) { return vel(reduce(tau)); };
    if (acc) source.acceleration = [acc, reduce](double tau) { return acc(reduce(tau)); };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) spans.emplace_back(cuts[i], cuts[i + 1]);
    spans.emplace_back(cuts.back(), cuts.front() + period);
  } else {
    std::vector<double> bounds{curve.tau0};
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(curve.tau1);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) spans.emplace_back(bounds[i], bounds[i + 1]);
  }

  std::vector<GraphPiece> pieces;
  pieces.reserve(spans.size());
  for (auto [s, e] : spans) {
    const Vec2 vm = source.velocity(0.5 * (s + e));
    const Axis axis = std::abs(vm.y) <= std::abs(vm.x) ? Axis::over_x : Axis::over_y;
    auto prof = std::make_shared<ParamGraphProfile>(source, s, e, axis == Axis::over_x);
    pieces.push_back(GraphPiece::make(axis, prof->graph_lo(), prof->graph_hi(), prof));
  }
  CurveSpec out(std::move(pieces));
  out.set_description("decomposed parametric curve");
  return out;
}

// ---------------------------------------------------------------------------
// Point projections and tangent maps

IntervalSet phi_alpha_point(const GraphPiece& piece, double alpha, Vec2 p) {
  if (piece.axis() != Axis::over_x) {
    throw_precondition("phi_alpha_point needs an over-x piece; use psi_beta_point");
  }
  const double t = p.x - alpha;
  if (t < piece.a() || t > piece.b()) return {};
  const double beta = p.y - piece.value(t);
  return IntervalSet::from_raw({{beta, beta}});
}

IntervalSet psi_beta_point(const GraphPiece& piece, double beta, Vec2 p) {
  if (piece.axis() != Axis::over_y) {
    throw_precondition("psi_beta_point needs an over-y piece; use phi_alpha_point");
  }
  const double t = p.y - beta;
  if (t < piece.a() || t > piece.b()) return {};
  const double alpha = p.x - piece.value(t);
  return IntervalSet::from_raw({{alpha, alpha}});
}

namespace {

void require_over_x(const GraphPiece& piece, const char* what) {
  if (piece.axis() != Axis::over_x) {
    throw_precondition(std::string(what) + " needs an over-x piece");
  }
}

// Parameter t in the domain whose tangent is orthogonal to theta.
double tangent_parameter(const GraphPiece& piece, double theta) {
  const double s = std::sin(theta);
  if (s == 0.0) throw_precondition("theta = 0 corresponds to a vertical tangent");
  const double target = -std::cos(theta) / s;
  const double sa = piece.slope(piece.a());
  const double sb = piece.slope(piece.b());
  const double lo = std::min(sa, sb);
  const double hi = std::max(sa, sb);
  const double tol = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
  if (target < lo - tol || target > hi + tol) {
    throw_precondition("no tangent with that direction on the piece");
  }
  const double clamped = std::clamp(target, lo, hi);
  return bisect_monotone([&](double t) { return piece.slope(t) - clamped; }, piece.a(),
                         piece.b());
}

}  // namespace

double tangent_angle_map(const GraphPiece& piece, Vec2 z0, double alpha) {
  require_over_x(piece, "tangent_angle_map");
  const double t = z0.x - alpha;
  if (t < piece.a() || t > piece.b()) {
    throw_precondition("z0 - alpha falls outside the piece domain");
  }
  const double m = piece.slope(t);
  if (m == 0.0) return kPi / 2.0;
  return std::atan(-1.0 / m);
}

double alpha_of_theta(const GraphPiece& piece, Vec2 z0, double theta) {
  require_over_x(piece, "alpha_of_theta");
  if (piece.degenerate()) throw_precondition("constant slope has no tangent inverse");
  return z0.x - tangent_parameter(piece, theta);
}

double dalpha_dtheta(const GraphPiece& piece, Vec2 z0, double theta) {
  (void)z0;
  require_over_x(piece, "dalpha_dtheta");
  if (piece.degenerate()) throw_precondition("curvature-zero piece");
  const double t = tangent_parameter(piece, theta);
  const double m = piece.slope(t);
  const double q = piece.second(t);
  if (!std::isfinite(q) || q == 0.0) throw_precondition("second derivative undefined");
  return -(1.0 + m * m) / q;
}

GraphPiece parabolic_extension(const GraphPiece& piece, double pad) {
  if (std::isnan(pad) || pad < 0.0) throw_argument("pad must be >= 0");
  if (pad == 0.0) return piece;
  if (piece.degenerate()) throw_precondition("cannot extend a zero-curvature piece");
  return GraphPiece::make(piece.axis(), piece.a() - pad, piece.b() + pad,
                          std::make_shared<ExtendedProfile>(piece.profile_ptr(), piece.a(),
                                                            piece.b()));
}

double max_abs_slope(const GraphPiece& piece) {
  return std::max(std::abs(piece.slope(piece.a())), std::abs(piece.slope(piece.b())));
}

// ---------------------------------------------------------------------------
// Builtin curves

CurveSpec make_half_circle(double radius, int sign) {
  if (!(radius > 0.0)) throw_argument("circle radius must be positive");
  const double half = radius / std::numbers::sqrt2;
  auto prof = std::make_shared<CircularArcProfile>(radius, sign);
  CurveSpec out({GraphPiece::make(Axis::over_x, -half, half, prof)});
  out.set_description(std::string("halfcircle:R=") + std::to_string(radius) +
                      ",sign=" + (sign >= 0 ? "+" : "-"));
  return out;
}

CurveSpec make_circle(double radius) {
  if (!(radius > 0.0)) throw_argument("circle radius must be positive");
  const double half = radius / std::numbers::sqrt2;
  std::vector<GraphPiece> pieces;
  pieces.push_back(GraphPiece::make(Axis::over_x, -half, half,
                                    std::make_shared<CircularArcProfile>(radius, -1)));
  pieces.push_back(GraphPiece::make(Axis::over_x, -half, half,
                                    std::make_shared<CircularArcProfile>(radius, +1)));
  pieces.push_back(GraphPiece::make(Axis::over_y, -half, half,
                                    std::make_shared<CircularArcProfile>(radius, +1)));
  pieces.push_back(GraphPiece::make(Axis::over_y, -half, half,
                                    std::make_shared<CircularArcProfile>(radius, -1)));
  CurveSpec out(std::move(pieces));
  out.set_description("circle:R=" + std::to_string(radius));
  return out;
}

CurveSpec make_ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw_argument("ellipse semi-axes must be positive");
  const double tx = a * a / std::sqrt(a * a + b * b);
  const double ty = b * b / std::sqrt(a * a + b * b);
  std::vector<GraphPiece> pieces;
  pieces.push_back(GraphPiece::make(Axis::over_x, -tx, tx,
                                    std::make_shared<EllipticArcProfile>(a, b, -1)));
  pieces.push_back(GraphPiece::make(Axis::over_x, -tx, tx,
                                    std::make_shared<EllipticArcProfile>(a, b, +1)));
  pieces.push_back(GraphPiece::make(Axis::over_y, -ty, ty,
                                    std::make_shared<EllipticArcProfile>(b, a, +1)));
  pieces.push_back(GraphPiece::make(Axis::over_y, -ty, ty,
                                    std::make_shared<EllipticArcProfile>(b, a, -1)));
  CurveSpec out(std::move(pieces));
  out.set_description("ellipse:a=" + std::to_string(a) + ",b=" + std::to_string(b));
  return out;
}

CurveSpec make_parabola(double c2, double c1, double c0, double t0, double t1) {
  if (c2 == 0.0) throw_argument("parabola needs c2 != 0 (use a segment)");
  if (!(t1 >= t0)) throw_argument("parabola needs t0 <= t1");

  std::vector<double> bounds{t0};
  const double u_lo = (-1.0 - c1) / (2.0 * c2);
  const double u_hi = (1.0 - c1) / (2.0 * c2);
  for (double u : {std::min(u_lo, u_hi), std::max(u_lo, u_hi)}) {
    if (u > t0 + 1e-12 && u < t1 - 1e-12) bounds.push_back(u);
  }
  bounds.push_back(t1);

  ParametricCurve par;
  par.point = [=](double tau) { return Vec2{tau, (c2 * tau + c1) * tau + c0}; };
  par.velocity = [=](double tau) { return Vec2{1.0, 2.0 * c2 * tau + c1}; };
  par.acceleration = [=](double) { return Vec2{0.0, 2.0 * c2}; };

  std::vector<GraphPiece> pieces;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double lo = bounds[i];
    const double hi = bounds[i + 1];
    const double mid_slope = 2.0 * c2 * (0.5 * (lo + hi)) + c1;
    if (std::abs(mid_slope) <= 1.0 || lo == hi) {
      pieces.push_back(GraphPiece::make(Axis::over_x, lo, hi,
                                        std::make_shared<ParabolaProfile>(c2, c1, c0)));
    } else {
      auto prof = std::make_shared<ParamGraphProfile>(par, lo, hi, false);
      pieces.push_back(GraphPiece::make(Axis::over_y, prof->graph_lo(), prof->graph_hi(), prof));
    }
  }
  CurveSpec out(std::move(pieces));
  out.set_description("parabola:c2=" + std::to_string(c2) + ",t0=" + std::to_string(t0) +
                      ",t1=" + std::to_string(t1));
  return out;
}

CurveSpec make_segment(double slope, double length) {
  if (!std::isfinite(slope)) throw_argument("segment slope must be finite");
  if (!(length >= 0.0)) throw_argument("segment length must be >= 0");
  GraphPiece piece = [&] {
    if (std::abs(slope) <= 1.0) {
      const double half = length / (2.0 * std::sqrt(1.0 + slope * slope));
      return GraphPiece::make(Axis::over_x, -half, half,
                              std::make_shared<SegmentProfile>(slope, 0.0));
    }
    const double half = length * std::abs(slope) / (2.0 * std::sqrt(1.0 + slope * slope));
    return GraphPiece::make(Axis::over_y, -half, half,
                            std::make_shared<SegmentProfile>(1.0 / slope, 0.0));
  }();
  CurveSpec out({piece});
  out.set_description("segment:slope=" + std::to_string(slope) +
                      ",len=" + std::to_string(length));
  return out;
}

CurveSpec make_vertical_segment(double length) {
  if (!(length >= 0.0)) throw_argument("segment length must be >= 0");
  CurveSpec out({GraphPiece::make(Axis::over_y, -length / 2.0, length / 2.0,
                                  std::make_shared<SegmentProfile>(0.0, 0.0))});
  out.set_description("vsegment:len=" + std::to_string(length));
  return out;
}

CurveSpec make_log_spiral(double radius, double k, double turns) {
  if (!(radius > 0.0)) throw_argument("spiral radius must be positive");
  if (!(k > 0.0)) throw_argument("spiral growth rate must be positive");
  if (!(turns > 1.0)) throw_argument("spiral needs turns > 1");
  ParametricCurve par;
  par.point = [=](double th) {
    const double r = radius * std::exp(k * th);
    return Vec2{r * std::cos(th), r * std::sin(th)};
  };
  par.velocity = [=](double th) {
    const double r = radius * std::exp(k * th);
    return Vec2{r * (k * std::cos(th) - std::sin(th)), r * (k * std::sin(th) + std::cos(th))};
  };
  par.acceleration = [=](double th) {
    const double r = radius * std::exp(k * th);
    return Vec2{r * ((k * k - 1.0) * std::cos(th) - 2.0 * k * std::sin(th)),
                r * ((k * k - 1.0) * std::sin(th) + 2.0 * k * std::cos(th))};
  };
  par.tau0 = 2.0 * kPi;
  par.tau1 = 2.0 * kPi * turns;
  CurveSpec out = decompose(par);
  out.set_description("logspiral:R=" + std::to_string(radius) + ",k=" + std::to_string(k) +
                      ",turns=" + std::to_string(turns));
  return out;
}

}  // namespace favard
