#include "gpayn/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gpayn {

Quat quat_from_rpy(const Vec3& rpy) {
  const double hr = 0.5 * rpy.x();
  const double hp = 0.5 * rpy.y();
  const double hy = 0.5 * rpy.z();
  const double cr = std::cos(hr), sr = std::sin(hr);
  const double cp = std::cos(hp), sp = std::sin(hp);
  const double cy = std::cos(hy), sy = std::sin(hy);
  Quat q;
  q.w() = cr * cp * cy + sr * sp * sy;
  q.x() = sr * cp * cy - cr * sp * sy;
  q.y() = cr * sp * cy + sr * cp * sy;
  q.z() = cr * cp * sy - sr * sp * cy;
  return q.normalized();
}

Vec3 rpy_from_quat(const Quat& qin) {
  Quat q = qin.normalized();
  const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
  Vec3 rpy;
  // roll (x-axis)
  rpy.x() = std::atan2(2.0 * (w * x + y * z), 1.0 - 2.0 * (x * x + y * y));
  // pitch (y-axis), clamped against numerical overshoot at the gimbal poles
  double s = 2.0 * (w * y - z * x);
  s = std::clamp(s, -1.0, 1.0);
  rpy.y() = std::asin(s);
  // yaw (z-axis)
  rpy.z() = std::atan2(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z));
  return rpy;
}

Quat quat_from_axis_angle(const Vec3& axis, double angle) {
  return Quat(Eigen::AngleAxisd(angle, axis.normalized()));
}

double quat_angle_between(const Quat& a, const Quat& b) {
  double d = std::abs(a.normalized().dot(b.normalized()));
  d = std::clamp(d, -1.0, 1.0);
  return 2.0 * std::acos(d);
}

}  // namespace gpayn
