#include "ringgrp/rotations.hpp"

#include "ringgrp/words.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace ringgrp {

namespace {

constexpr double kPi = std::numbers::pi;

UnitQuaternion positive_representative(const UnitQuaternion& q) {
  for (double c : {q.w(), q.x(), q.y(), q.z()}) {
    if (std::abs(c) <= kUnitTolerance) continue;
    return c > 0 ? q : -q;
  }
  return q;
}

// Orthonormal u, v with u × v = n.
std::pair<Vec3, Vec3> plane_basis(const Vec3& n) {
  Vec3 a = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 u = n.cross(a).normalized();
  return {u, n.cross(u)};
}

double golden_minimum(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  while (hi - lo > tol) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = f(b);
    }
  }
  return std::min({fa, fb, f((lo + hi) / 2)});
}

double one_sided_distance(const Ring& a, const Ring& b) {
  constexpr std::size_t kSamples = 256;
  constexpr std::size_t kRefined = 4;
  const double step = 2 * kPi / kSamples;
  auto f = [&](double theta) { return point_ring_distance(a.point(theta), b); };

  std::vector<double> values(kSamples);
  for (std::size_t k = 0; k < kSamples; ++k) values[k] = f(step * static_cast<double>(k));
  std::vector<std::size_t> minima;
  for (std::size_t k = 0; k < kSamples; ++k) {
    double prev = values[(k + kSamples - 1) % kSamples];
    double next = values[(k + 1) % kSamples];
    if (values[k] <= prev && values[k] <= next) minima.push_back(k);
  }
  std::sort(minima.begin(), minima.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  double best = *std::min_element(values.begin(), values.end());
  for (std::size_t m = 0; m < minima.size() && m < kRefined; ++m) {
    double theta = step * static_cast<double>(minima[m]);
    best = std::min(best, golden_minimum(f, theta - step, theta + step, 1e-8));
  }
  return best;
}

double normal_angle(const Vec3& a, const Vec3& b, bool oriented) {
  double c = a.dot(b);
  if (!oriented) c = std::abs(c);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::string format_ring(const Ring& r) {
  std::ostringstream os;
  os.precision(12);
  os << "ring " << r.center.x() << ' ' << r.center.y() << ' ' << r.center.z() << ' ' << r.radius << ' '
     << r.normal.x() << ' ' << r.normal.y() << ' ' << r.normal.z();
  return os.str();
}

}  // namespace

Mat3 rotation(const Vec3& axis, double angle) { return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(); }
Mat3 R_x(double angle) { return rotation(Vec3::UnitX(), angle); }
Mat3 R_y(double angle) { return rotation(Vec3::UnitY(), angle); }
Mat3 R_z(double angle) { return rotation(Vec3::UnitZ(), angle); }

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) : q_(w, x, y, z) {
  if (std::abs(q_.norm() - 1) > kUnitTolerance) throw Error("quaternion is not of unit norm");
}

UnitQuaternion UnitQuaternion::from_axis_angle(const Vec3& axis, double angle) {
  if (std::abs(axis.norm() - 1) > kUnitTolerance) throw Error("rotation axis is not a unit vector");
  return UnitQuaternion(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis)));
}

UnitQuaternion UnitQuaternion::from_matrix(const Mat3& m) {
  return UnitQuaternion(Eigen::Quaterniond(m).normalized());
}

UnitQuaternion UnitQuaternion::operator*(const UnitQuaternion& rhs) const {
  return UnitQuaternion((q_ * rhs.q_).normalized());
}

UnitQuaternion UnitQuaternion::operator-() const {
  return UnitQuaternion(Eigen::Quaterniond(-q_.w(), -q_.x(), -q_.y(), -q_.z()));
}

UnitQuaternion UnitQuaternion::inverse() const { return UnitQuaternion(q_.conjugate()); }

double UnitQuaternion::dot(const UnitQuaternion& rhs) const { return q_.coeffs().dot(rhs.q_.coeffs()); }

double UnitQuaternion::distance(const UnitQuaternion& other) const {
  return (q_.coeffs() - other.q_.coeffs()).cwiseAbs().maxCoeff();
}

std::string UnitQuaternion::to_string() const {
  std::ostringstream os;
  os.precision(9);
  os << '(' << w() << ", " << x() << ", " << y() << ", " << z() << ')';
  return os.str();
}

Mat3 RotationSegment::at(double t) const {
  return pre.matrix() * rotation(axis, start_angle + t * (end_angle - start_angle));
}

RotationPath::RotationPath(std::vector<RotationSegment> segments) : segments_(std::move(segments)) {
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (std::abs(segments_[k].axis.norm() - 1) > kUnitTolerance) throw Error("rotation axis is not a unit vector");
    if (k > 0 && (segments_[k].at(0) - segments_[k - 1].at(1)).norm() > kUnitTolerance)
      throw DiscontinuousPath(k);
  }
}

RotationPath RotationPath::about(const Vec3& axis, double angle) {
  return RotationPath({RotationSegment{axis.normalized(), 0, angle, UnitQuaternion::identity()}});
}

RotationPath RotationPath::constant(const Mat3& m) {
  return RotationPath({RotationSegment{Vec3::UnitZ(), 0, 0, UnitQuaternion::from_matrix(m)}});
}

RotationPath RotationPath::then_space(const Vec3& axis, double angle) const {
  std::vector<RotationSegment> segs = segments_;
  UnitQuaternion pre = segments_.empty() ? UnitQuaternion::identity() : lift_endpoint(*this);
  Vec3 body = pre.matrix().transpose() * axis.normalized();
  segs.push_back({body, 0, angle, pre});
  return RotationPath(std::move(segs));
}

Mat3 RotationPath::start() const { return segments_.empty() ? Mat3::Identity() : segments_.front().at(0); }
Mat3 RotationPath::end() const { return segments_.empty() ? Mat3::Identity() : segments_.back().at(1); }

Mat3 RotationPath::at(double u) const {
  if (segments_.empty()) return Mat3::Identity();
  const double n = static_cast<double>(segments_.size());
  std::size_t k = std::min(segments_.size() - 1, static_cast<std::size_t>(std::max(0.0, u * n)));
  return segments_[k].at(u * n - static_cast<double>(k));
}

RotationPath concat(const RotationPath& a, const RotationPath& b) {
  std::vector<RotationSegment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  return RotationPath(std::move(segs));
}

RotationPath reverse(const RotationPath& p) {
  std::vector<RotationSegment> segs(p.segments().rbegin(), p.segments().rend());
  for (auto& s : segs) std::swap(s.start_angle, s.end_angle);
  return RotationPath(std::move(segs));
}

RotationPath conjugate_path(const RotationPath& p, const UnitQuaternion& g) {
  std::vector<RotationSegment> segs = p.segments();
  const UnitQuaternion gi = g.inverse();
  for (auto& s : segs) {
    s.axis = (gi.matrix() * s.axis).normalized();
    s.pre = gi * s.pre * g;
  }
  return RotationPath(std::move(segs));
}

UnitQuaternion lift_endpoint(const RotationPath& p) {
  const auto& segs = p.segments();
  if (segs.empty()) return UnitQuaternion::identity();
  UnitQuaternion q = positive_representative(segs[0].pre * UnitQuaternion::from_axis_angle(segs[0].axis, segs[0].start_angle));
  for (const auto& s : segs) {
    UnitQuaternion begin = s.pre * UnitQuaternion::from_axis_angle(s.axis, s.start_angle);
    UnitQuaternion end = s.pre * UnitQuaternion::from_axis_angle(s.axis, s.end_angle);
    q = begin.dot(q) >= 0 ? end : -end;
  }
  return q;
}

UnitQuaternion lift_by_sampling(const RotationPath& p, std::size_t samples) {
  if (samples == 0) throw Error("at least one sample interval is required");
  UnitQuaternion q = positive_representative(UnitQuaternion::from_matrix(p.at(0)));
  for (std::size_t k = 1; k <= samples; ++k) {
    UnitQuaternion next = UnitQuaternion::from_matrix(p.at(static_cast<double>(k) / static_cast<double>(samples)));
    q = next.dot(q) >= 0 ? next : -next;
  }
  return q;
}

int pi1_class(const RotationPath& p) {
  if ((p.end() - p.start()).norm() > kLoopTolerance) throw NotALoop();
  UnitQuaternion begin = positive_representative(UnitQuaternion::from_matrix(p.start()));
  return lift_endpoint(p).dot(begin) > 0 ? 1 : -1;
}

RotationPath path_tau_H() { return RotationPath::about(Vec3::UnitY(), kPi); }
RotationPath path_ell() { return RotationPath::about(Vec3::UnitZ(), 2 * kPi); }

RotationPath path_s() {
  return RotationPath()
      .then_space(Vec3::UnitY(), kPi / 4)
      .then_space(Vec3::UnitX(), kPi)
      .then_space(Vec3::UnitY(), -kPi / 4);
}

Vec3 Ring::point(double theta) const {
  auto [u, v] = plane_basis(normal);
  return center + radius * (std::cos(theta) * u + std::sin(theta) * v);
}

Ring make_ring(const Vec3& center, double radius, const Vec3& normal) {
  if (!(radius > 0)) throw Error("ring radius must be positive");
  if (normal.norm() < kUnitTolerance) throw Error("ring normal must be nonzero");
  return Ring{center, radius, normal.normalized()};
}

bool same_ring(const Ring& a, const Ring& b, double tol, bool oriented) {
  if ((a.center - b.center).norm() > tol || std::abs(a.radius - b.radius) > tol) return false;
  if ((a.normal - b.normal).norm() <= tol) return true;
  return !oriented && (a.normal + b.normal).norm() <= tol;
}

double point_ring_distance(const Vec3& p, const Ring& r) {
  Vec3 d = p - r.center;
  double h = d.dot(r.normal);
  double rho = (d - h * r.normal).norm();
  return std::hypot(h, rho - r.radius);
}

double ring_distance(const Ring& a, const Ring& b) {
  return std::min(one_sided_distance(a, b), one_sided_distance(b, a));
}

MotionReport validate_motion(const RingMotion& m, const MotionLimits& limits) {
  MotionReport rep;
  const std::size_t k = m.components();
  if (m.samples.size() < limits.min_intervals + 1)
    rep.failures.push_back("needs at least " + std::to_string(limits.min_intervals + 1) + " samples");
  if (k == 0) {
    rep.failures.push_back("motion has no components");
    return rep;
  }
  for (const auto& s : m.samples)
    if (s.size() != k) {
      rep.failures.push_back("samples disagree on the number of components");
      return rep;
    }
  std::vector<std::size_t> sorted = m.closure;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == k;
  for (std::size_t i = 0; perm && i < k; ++i) perm = sorted[i] == i;
  if (!perm) {
    rep.failures.push_back("closure is not a permutation of the components");
    return rep;
  }

  rep.min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < m.samples.size(); ++t) {
    const auto& s = m.samples[t];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        double d = ring_distance(s[i], s[j]);
        rep.min_distance = std::min(rep.min_distance, d);
        if (d <= limits.collision && !rep.first_collision) rep.first_collision = t;
      }
    if (t == 0 || rep.first_discontinuity) continue;
    for (std::size_t i = 0; i < k; ++i) {
      const Ring& a = m.samples[t - 1][i];
      const Ring& b = s[i];
      double ratio = b.radius / a.radius;
      if ((b.center - a.center).norm() > limits.center_step || ratio > limits.radius_ratio ||
          ratio < 1 / limits.radius_ratio || normal_angle(a.normal, b.normal, limits.oriented) > limits.normal_step) {
        rep.first_discontinuity = t;
        break;
      }
    }
  }
  if (rep.first_collision)
    rep.failures.push_back("components meet at sample " + std::to_string(*rep.first_collision));
  if (rep.first_discontinuity)
    rep.failures.push_back("jump between samples " + std::to_string(*rep.first_discontinuity - 1) + " and " +
                           std::to_string(*rep.first_discontinuity));

  rep.closes = true;
  for (std::size_t i = 0; i < k; ++i)
    if (!same_ring(m.samples.back()[i], m.samples.front()[m.closure[i]], kLoopTolerance, limits.oriented))
      rep.closes = false;
  if (!rep.closes) rep.failures.push_back("final configuration does not match the initial one");
  return rep;
}

std::vector<Ring> base_configuration() {
  return {make_ring({0, 0, 0}, 1, Vec3::UnitZ()), make_ring({0, 1, 0}, 1, Vec3::UnitX()),
          make_ring({0, 5, 0}, 1, Vec3::UnitZ())};
}

namespace {

constexpr std::size_t H1 = 0;
constexpr std::size_t H2 = 1;
constexpr std::size_t C = 2;

class MotionBuilder {
 public:
  explicit MotionBuilder(std::string name) : current_(base_configuration()) {
    motion_.name = std::move(name);
    motion_.samples.push_back(current_);
  }

  using Stage = std::function<void(std::vector<Ring>&, const std::vector<Ring>&, double)>;

  void stage(std::size_t steps, const Stage& f) {
    const std::vector<Ring> start = current_;
    for (std::size_t k = 1; k <= steps; ++k) {
      current_ = start;
      f(current_, start, static_cast<double>(k) / static_cast<double>(steps));
      motion_.samples.push_back(current_);
    }
  }

  // Rigid rotation t ↦ R(t) about `pivot` of the listed components.
  void rotate(std::vector<std::size_t> comps, const Vec3& axis, double angle, const Vec3& pivot, std::size_t steps) {
    stage(steps, [=](auto& cur, const auto& start, double t) {
      Mat3 r = rotation(axis, angle * t);
      for (auto i : comps) {
        cur[i].center = pivot + r * (start[i].center - pivot);
        cur[i].normal = r * start[i].normal;
      }
    });
  }

  void translate(std::vector<std::size_t> comps, const Vec3& offset) {
    stage(steps_for(offset.norm()), [=](auto& cur, const auto& start, double t) {
      for (auto i : comps) cur[i].center = start[i].center + t * offset;
    });
  }

  void move_to(std::size_t i, const Vec3& target) { translate({i}, target - current_[i].center); }

  void resize(std::size_t i, double radius) {
    stage(8, [=](auto& cur, const auto& start, double t) {
      cur[i].radius = start[i].radius * std::pow(radius / start[i].radius, t);
    });
  }

  void turn(std::size_t i, const Vec3& normal) {
    const Vec3 from = current_[i].normal;
    const Vec3 axis = from.cross(normal).normalized();
    const double angle = std::acos(std::clamp(from.dot(normal), -1.0, 1.0));
    stage(8, [=](auto& cur, const auto&, double t) { cur[i].normal = rotation(axis, angle * t) * from; });
  }

  RingMotion finish(std::vector<std::size_t> closure) {
    motion_.closure = std::move(closure);
    return motion_;
  }

 private:
  static std::size_t steps_for(double length) {
    return std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(length / 0.1)));
  }

  std::vector<Ring> current_;
  RingMotion motion_;
};

RingMotion make_builtin(std::string_view name) {
  MotionBuilder b{std::string(name)};
  const std::vector<std::size_t> identity{0, 1, 2};
  const Vec3 origin = Vec3::Zero();

  if (name == "tau_C") {
    b.rotate({C}, Vec3::UnitY(), kPi, base_configuration()[C].center, 64);
    return b.finish(identity);
  }
  if (name == "tau_H") {
    b.rotate({H1, H2}, Vec3::UnitY(), kPi, origin, 64);
    return b.finish(identity);
  }
  if (name == "ell") {
    b.rotate({H2}, Vec3::UnitZ(), 2 * kPi, origin, 64);
    return b.finish(identity);
  }
  if (name == "s") {
    b.translate({H1, H2}, {0, -0.5, 0});
    b.rotate({H1, H2}, Vec3::UnitY(), kPi / 4, origin, 16);
    b.rotate({H1, H2}, Vec3::UnitX(), kPi, origin, 32);
    b.rotate({H1, H2}, Vec3::UnitY(), -kPi / 4, origin, 16);
    b.translate({H1, H2}, {0, 0.5, 0});
    return b.finish({1, 0, 2});
  }
  if (name == "g_a") {
    b.resize(C, 0.25);
    b.move_to(C, {0, 5, 2});
    b.move_to(C, {-0.5, 0, 2});
    b.move_to(C, {-0.5, 0, -2});
    b.move_to(C, {-2.5, 0, -2});
    b.move_to(C, {-2.5, 0, 2});
    b.move_to(C, {0, 5, 2});
    b.move_to(C, {0, 5, 0});
    b.resize(C, 1);
    return b.finish(identity);
  }
  if (name == "g_b") {
    b.resize(C, 0.25);
    b.turn(C, Vec3::UnitX());
    b.move_to(C, {2, 5, 0});
    b.move_to(C, {2, 1, 0.5});
    b.move_to(C, {-2, 1, 0.5});
    b.move_to(C, {-2, 1, 3});
    b.move_to(C, {0, 5, 3});
    b.move_to(C, {0, 5, 0});
    b.turn(C, Vec3::UnitZ());
    b.resize(C, 1);
    return b.finish(identity);
  }
  if (name == "eps_C") {
    b.move_to(C, {0, 5, 3});
    b.move_to(C, {0, 0.5, 3});
    b.resize(C, 4);
    b.move_to(C, {0, 0.5, -3});
    b.resize(C, 1);
    b.move_to(C, {0, 5, -3});
    b.move_to(C, {0, 5, 0});
    return b.finish(identity);
  }
  throw Error("unknown builtin motion '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& builtin_motion_names() {
  static const std::vector<std::string> names{"tau_C", "tau_H", "ell", "s", "g_a", "g_b", "eps_C"};
  return names;
}

RingMotion builtin_motion(std::string_view name) { return make_builtin(name); }

long rotation_number(const NormalRingMotion& m) {
  if (m.phi.empty()) throw Error("normal motion has no samples");
  double winding = m.phi.back() - m.phi.front();
  double k = std::round(winding);
  if (std::abs(winding - k) > kLoopTolerance) throw NonIntegralWinding(winding);
  return static_cast<long>(k);
}

NormalRingMotion concat(const NormalRingMotion& a, const NormalRingMotion& b) {
  if (a.phi.empty()) return b;
  if (b.phi.empty()) return a;
  NormalRingMotion out = a;
  const double shift = a.phi.back() - b.phi.front();
  for (std::size_t k = 1; k < b.phi.size(); ++k) out.phi.push_back(b.phi[k] + shift);
  return out;
}

RingMotion to_ring_motion(const NormalRingMotion& m) {
  RingMotion out;
  out.name = "normal";
  const auto base = base_configuration();
  for (double phi : m.phi) {
    auto cfg = base;
    Mat3 r = R_z(2 * kPi * phi);
    cfg[H2].center = r * base[H2].center;
    cfg[H2].normal = r * base[H2].normal;
    out.samples.push_back(cfg);
  }
  out.closure = {0, 1, 2};
  return out;
}

RingMotion parse_motion(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  RingMotion m;
  std::optional<std::pair<std::size_t, std::size_t>> shape;  // components, samples
  std::vector<Ring> rings;
  bool closed = false;

  auto fail = [&](std::size_t col, std::set<std::string> expected, const std::string& msg) {
    throw ParseError(lineno, col, std::move(expected), msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ws(line);
    std::string kw;
    if (!(ws >> kw)) continue;
    const std::size_t col = line.find(kw) + 1;
    if (!shape) {
      std::string name, ckw, skw;
      long k = 0, n = 0;
      if (kw != "motion") fail(col, {"'motion'"}, "unexpected '" + kw + "'");
      if (!(ws >> name >> ckw >> k >> skw >> n) || !is_identifier(name) || ckw != "components" ||
          skw != "samples" || k <= 0 || n <= 0)
        fail(col, {"motion <ident> components <k> samples <N>"}, "malformed header");
      m.name = name;
      shape = {static_cast<std::size_t>(k), static_cast<std::size_t>(n)};
    } else if (kw == "ring") {
      if (closed) fail(col, {"end of file"}, "ring after closes");
      double v[7];
      for (double& x : v)
        if (!(ws >> x)) fail(col, {"number"}, "ring needs seven numbers");
      Vec3 n(v[4], v[5], v[6]);
      if (!(v[3] > 0)) fail(col, {"positive radius"}, "nonpositive radius");
      if (std::abs(n.norm() - 1) > kLoopTolerance) fail(col, {"unit normal"}, "normal is not a unit vector");
      rings.push_back(make_ring({v[0], v[1], v[2]}, v[3], n));
    } else if (kw == "closes") {
      if (closed) fail(col, {"end of file"}, "duplicate closes line");
      long p = 0;
      while (ws >> p) {
        if (p < 1) fail(col, {"positive index"}, "closure indices are 1-based");
        m.closure.push_back(static_cast<std::size_t>(p - 1));
      }
      closed = true;
    } else {
      fail(col, {"'ring'", "'closes'"}, "unexpected '" + kw + "'");
    }
  }
  if (!shape) throw ParseError(lineno + 1, 1, {"'motion'"}, "empty motion file");
  if (!closed) throw ParseError(lineno + 1, 1, {"'closes'"}, "missing closure permutation");
  auto [k, n] = *shape;
  if (rings.size() != k * n)
    throw ParseError(lineno + 1, 1, {"ring"},
                     "expected " + std::to_string(k * n) + " rings, found " + std::to_string(rings.size()));
  if (m.closure.size() != k) throw ParseError(lineno, 1, {"closes"}, "closure needs one index per component");
  for (std::size_t s = 0; s < n; ++s)
    m.samples.emplace_back(rings.begin() + static_cast<std::ptrdiff_t>(s * k),
                           rings.begin() + static_cast<std::ptrdiff_t>((s + 1) * k));
  return m;
}

RingMotion load_motion(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_motion(ss.str());
}

std::string serialize_motion(const RingMotion& m) {
  std::ostringstream os;
  os << "motion " << m.name << " components " << m.components() << " samples " << m.samples.size() << '\n';
  for (const auto& s : m.samples)
    for (const auto& r : s) os << format_ring(r) << '\n';
  os << "closes";
  for (auto p : m.closure) os << ' ' << p + 1;
  os << '\n';
  return os.str();
}

}  // namespace ringgrp
