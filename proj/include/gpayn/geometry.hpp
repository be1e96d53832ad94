#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace gpayn {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;

// Roll-pitch-yaw convention: R = Rz(yaw) * Ry(pitch) * Rx(roll),
// i.e. rotations about the fixed world x, y, z axes in that order.
Quat quat_from_rpy(const Vec3& rpy);
Vec3 rpy_from_quat(const Quat& q);

Quat quat_from_axis_angle(const Vec3& axis, double angle);

// Angle of the relative rotation between two orientations, in [0, pi].
double quat_angle_between(const Quat& a, const Quat& b);

// Rigid transform: world_point = orientation * local_point + position.
struct Pose {
  Vec3 position = Vec3::Zero();
  Quat orientation = Quat::Identity();

  Pose() = default;
  Pose(const Vec3& p, const Quat& q) : position(p), orientation(q.normalized()) {}

  static Pose identity() { return Pose(); }

  Vec3 transform(const Vec3& local) const {
    return orientation * local + position;
  }

  Vec3 inverse_transform(const Vec3& world) const {
    return orientation.conjugate() * (world - position);
  }

  Pose compose(const Pose& local) const {
    return Pose(transform(local.position), orientation * local.orientation);
  }

  Pose inverse() const {
    Quat qi = orientation.conjugate();
    return Pose(qi * (-position), qi);
  }

  Vec3 rpy() const { return rpy_from_quat(orientation); }
};

inline bool pose_approx_equal(const Pose& a, const Pose& b, double tol = 1e-12) {
  return (a.position - b.position).norm() <= tol &&
         quat_angle_between(a.orientation, b.orientation) <= tol;
}

}  // namespace gpayn
