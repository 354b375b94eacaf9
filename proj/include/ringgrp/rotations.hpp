#pragma once

// Rotation paths in SO(3) and their lifts to unit quaternions, round circles
// ("rings") in R^3, sampled motions of ring links and rotation numbers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Geometry>

#include "ringgrp/error.hpp"

namespace ringgrp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kUnitTolerance = 1e-9;
inline constexpr double kLoopTolerance = 1e-6;

/// Counterclockwise rotation by `angle` about `axis`.
Mat3 rotation(const Vec3& axis, double angle);
Mat3 R_x(double angle);
Mat3 R_y(double angle);
Mat3 R_z(double angle);

/// A point of S^3 viewed as a rotation with a chosen sign.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;
  /// Throws Error unless the norm is 1 within kUnitTolerance.
  UnitQuaternion(double w, double x, double y, double z);
  static UnitQuaternion identity() { return {}; }
  /// cos(angle/2) + sin(angle/2) (axis_x i + axis_y j + axis_z k).
  static UnitQuaternion from_axis_angle(const Vec3& axis, double angle);
  /// One of the two lifts of a rotation matrix.
  static UnitQuaternion from_matrix(const Mat3& m);

  double w() const { return q_.w(); }
  double x() const { return q_.x(); }
  double y() const { return q_.y(); }
  double z() const { return q_.z(); }

  UnitQuaternion operator*(const UnitQuaternion& rhs) const;
  UnitQuaternion operator-() const;
  UnitQuaternion inverse() const;
  double dot(const UnitQuaternion& rhs) const;
  Mat3 matrix() const { return q_.toRotationMatrix(); }
  /// Componentwise distance to `other`.
  double distance(const UnitQuaternion& other) const;
  std::string to_string() const;

 private:
  explicit UnitQuaternion(const Eigen::Quaterniond& q) : q_(q) {}
  Eigen::Quaterniond q_ = Eigen::Quaterniond::Identity();
};

/// t ∈ [0,1] ↦ pre · R_axis(start + t (end - start)).
struct RotationSegment {
  Vec3 axis = Vec3::UnitZ();
  double start_angle = 0;
  double end_angle = 0;
  UnitQuaternion pre;

  Mat3 at(double t) const;
};

/// A concatenation of single-axis rotation segments.
class RotationPath {
 public:
  RotationPath() = default;
  /// Throws Error for non-unit axes and DiscontinuousPath when a segment does
  /// not start where the previous one ends.
  explicit RotationPath(std::vector<RotationSegment> segments);

  /// The path t ↦ R_axis(angle · t).
  static RotationPath about(const Vec3& axis, double angle);
  static RotationPath constant(const Mat3& m = Mat3::Identity());

  /// Appends a rotation about a fixed axis of space applied on top of the
  /// current endpoint: the endpoint P becomes R_axis(angle) · P.
  RotationPath then_space(const Vec3& axis, double angle) const;

  const std::vector<RotationSegment>& segments() const { return segments_; }
  Mat3 start() const;
  Mat3 end() const;
  /// Position at global parameter u ∈ [0,1], segments sharing it equally.
  Mat3 at(double u) const;

 private:
  std::vector<RotationSegment> segments_;
};

/// Concatenation a ∗ b (a first). Throws DiscontinuousPath.
RotationPath concat(const RotationPath& a, const RotationPath& b);
RotationPath reverse(const RotationPath& p);
/// Pointwise conjugate t ↦ g^-1 M(t) g.
RotationPath conjugate_path(const RotationPath& p, const UnitQuaternion& g);

/// Endpoint of the continuous lift that starts at the lift of the start
/// rotation with nonnegative real part (so +1 for paths based at the
/// identity). Each segment multiplies the lift on the right by
/// cos(Δθ/2) + sin(Δθ/2)·axis.
UnitQuaternion lift_endpoint(const RotationPath& p);
/// The same endpoint from `samples` evenly spaced matrices, choosing at each
/// step the quaternion sign closest to the previous one.
UnitQuaternion lift_by_sampling(const RotationPath& p, std::size_t samples);

/// Class of a loop in π1(SO(3)) = {+1, -1}: the sign relating the lifted
/// endpoint to the lifted start. Throws NotALoop.
int pi1_class(const RotationPath& p);

RotationPath path_tau_H();  ///< R_y(πt)
RotationPath path_ell();    ///< R_z(2πt)
/// R_y(π/4 t), then R_x(π t), then R_y(-π/4 t), each applied in the space frame.
RotationPath path_s();

// ---------------------------------------------------------------------------
// Rings and ring motions

struct Ring {
  Vec3 center = Vec3::Zero();
  double radius = 1;
  Vec3 normal = Vec3::UnitZ();

  Vec3 point(double theta) const;
};

/// Throws Error unless radius > 0; the normal is normalised.
Ring make_ring(const Vec3& center, double radius, const Vec3& normal);

/// Equality of rings within `tol`; normals may differ by sign unless `oriented`.
bool same_ring(const Ring& a, const Ring& b, double tol = kLoopTolerance, bool oriented = false);

/// Distance from a point to a ring.
double point_ring_distance(const Vec3& p, const Ring& r);

/// Minimum distance between two rings: 256 samples on each, then
/// golden-section refinement of every sampled local minimum to 1e-8.
double ring_distance(const Ring& a, const Ring& b);

struct RingMotion {
  std::string name = "motion";
  /// samples[k][i] is component i at time k / (samples.size() - 1).
  std::vector<std::vector<Ring>> samples;
  /// Component i ends where component closure[i] started (0-based).
  std::vector<std::size_t> closure;

  std::size_t components() const { return samples.empty() ? 0 : samples.front().size(); }
};

struct MotionLimits {
  double collision = 1e-6;         ///< rings closer than this intersect
  double center_step = 0.5;
  double radius_ratio = 2.0;       ///< consecutive radii within [1/ratio, ratio]
  double normal_step = 0.7853981633974483;  ///< π/4
  std::size_t min_intervals = 8;
  bool oriented = false;
};

struct MotionReport {
  double min_distance = 0;
  std::optional<std::size_t> first_collision;      ///< sample index
  std::optional<std::size_t> first_discontinuity;  ///< index of the later sample
  bool closes = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

MotionReport validate_motion(const RingMotion& m, const MotionLimits& limits = {});

/// H1, H2 and C in their base position: H1 the unit circle in the xy-plane,
/// H2 the unit circle in the yz-plane centred at (0,1,0), C the unit circle in
/// the xy-plane centred at (0,5,0).
std::vector<Ring> base_configuration();

/// tau_C, tau_H, ell, s, g_a, g_b or eps_C. Throws Error for other names.
RingMotion builtin_motion(std::string_view name);
const std::vector<std::string>& builtin_motion_names();

// ---------------------------------------------------------------------------
// Normal motions of H2 along H1: L_t = R_z(2π φ(t)) (H2).

struct NormalRingMotion {
  std::vector<double> phi;  ///< samples at uniform times
};

/// round(φ(1) - φ(0)); throws NonIntegralWinding beyond kLoopTolerance.
long rotation_number(const NormalRingMotion& m);
/// a then b, with b shifted to start where a ends.
NormalRingMotion concat(const NormalRingMotion& a, const NormalRingMotion& b);
/// The motion of H1 and H2 described by φ (C stays in place).
RingMotion to_ring_motion(const NormalRingMotion& m);

// ---------------------------------------------------------------------------
// `.mot` files:
//
//     motion <ident> components <k> samples <N>
//     ring <cx> <cy> <cz> <r> <nx> <ny> <nz>     # N*k lines, sample-major
//     closes <p1> ... <pk>                       # 1-based

RingMotion parse_motion(std::string_view text);
RingMotion load_motion(const std::string& path);
std::string serialize_motion(const RingMotion& m);

}  // namespace ringgrp
