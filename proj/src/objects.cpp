#include "gpayn/objects.hpp"

#include <cmath>

#include "gpayn/errors.hpp"

namespace gpayn {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic symmetric sample pattern: a 3x3 grid on each box face.
std::vector<Vec3> box_samples(const Vec3& ext) {
  std::vector<Vec3> pts;
  const Vec3 h = 0.5 * ext;
  const double grid[3] = {-1.0, 0.0, 1.0};
  for (int axis = 0; axis < 3; ++axis) {
    for (double side : {-1.0, 1.0}) {
      for (double ga : grid) {
        for (double gb : grid) {
          Vec3 p;
          p[axis] = side * h[axis];
          const int a = (axis + 1) % 3, b = (axis + 2) % 3;
          p[a] = ga * h[a];
          p[b] = gb * h[b];
          pts.push_back(p);
        }
      }
    }
  }
  // 6 faces x 9 = 54; add the 8 corners and 12 edge midpoints of an inset
  // ring to clear the 64-sample floor while keeping full symmetry.
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0})
        pts.push_back(Vec3(sx * h.x() * 0.5, sy * h.y() * 0.5, sz * h.z()));
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      pts.push_back(Vec3(sx * h.x(), sy * h.y() * 0.5, 0.0));
  return pts;
}

std::vector<Vec3> cylinder_samples(double radius, double height) {
  std::vector<Vec3> pts;
  const double hh = 0.5 * height;
  const int n_ang = 12, n_z = 5;
  for (int iz = 0; iz < n_z; ++iz) {
    const double z = -hh + height * iz / (n_z - 1.0);
    for (int ia = 0; ia < n_ang; ++ia) {
      const double a = 2.0 * kPi * ia / n_ang;
      pts.push_back(Vec3(radius * std::cos(a), radius * std::sin(a), z));
    }
  }
  for (double side : {-1.0, 1.0}) {
    pts.push_back(Vec3(0, 0, side * hh));
    for (int ia = 0; ia < 4; ++ia) {
      const double a = 2.0 * kPi * ia / 4;
      pts.push_back(Vec3(0.5 * radius * std::cos(a), 0.5 * radius * std::sin(a), side * hh));
    }
  }
  return pts;
}

}  // namespace

ObjectModel ObjectModel::box(const std::string& id, const Vec3& extents) {
  ObjectModel m;
  m.id = id;
  m.shape = Shape::Box;
  m.box_extents = extents;
  m.surface_samples = box_samples(extents);
  m.validate();
  return m;
}

ObjectModel ObjectModel::cylinder(const std::string& id, double radius, double height) {
  ObjectModel m;
  m.id = id;
  m.shape = Shape::Cylinder;
  m.cyl_radius = radius;
  m.cyl_height = height;
  m.surface_samples = cylinder_samples(radius, height);
  m.validate();
  return m;
}

void ObjectModel::validate() const {
  if (shape == Shape::Box) {
    if (box_extents.minCoeff() <= 0) throw std::invalid_argument("object: non-positive extent");
  } else {
    if (cyl_radius <= 0 || cyl_height <= 0)
      throw std::invalid_argument("object: non-positive cylinder dims");
  }
  if (surface_samples.size() < 64) throw std::invalid_argument("object: needs >= 64 samples");
}

double ObjectModel::footprint_radius() const {
  if (shape == Shape::Box) return 0.5 * std::hypot(box_extents.x(), box_extents.y());
  return cyl_radius;
}

const std::vector<std::string>& ObjectModel::builtin_ids() {
  static const std::vector<std::string> ids = {
      "sugar_box", "meat_can", "power_drill", "mustard_bottle", "bleach_cleanser"};
  return ids;
}

ObjectModel ObjectModel::builtin(const std::string& id) {
  if (id == "sugar_box") return box(id, Vec3(0.045, 0.090, 0.175));
  if (id == "meat_can") return box(id, Vec3(0.100, 0.060, 0.082));
  if (id == "power_drill") return box(id, Vec3(0.050, 0.140, 0.060));
  if (id == "mustard_bottle") return cylinder(id, 0.033, 0.190);
  if (id == "bleach_cleanser") return cylinder(id, 0.045, 0.250);
  throw ConfigError("unknown object id: " + id);
}

namespace {

SurfaceQuery box_query(const Vec3& half, const Vec3& p) {
  SurfaceQuery out;
  const Vec3 q = p.cwiseAbs() - half;
  if ((q.array() <= 0.0).all()) {
    // inside: nearest face along the axis with the largest (least negative) q
    int axis;
    out.signed_distance = q.maxCoeff(&axis);
    Vec3 n = Vec3::Zero();
    n[axis] = (p[axis] >= 0.0) ? 1.0 : -1.0;
    out.normal = n;
    return out;
  }
  const Vec3 clamped = p.cwiseMax(-half).cwiseMin(half);
  const Vec3 d = p - clamped;
  out.signed_distance = d.norm();
  out.normal = d / out.signed_distance;
  return out;
}

SurfaceQuery cylinder_query(double radius, double height, const Vec3& p) {
  SurfaceQuery out;
  const double hh = 0.5 * height;
  const double rxy = std::hypot(p.x(), p.y());
  Vec3 radial = rxy > 1e-12 ? Vec3(p.x() / rxy, p.y() / rxy, 0.0) : Vec3(1, 0, 0);
  const double dr = rxy - radius;
  const double dz = std::abs(p.z()) - hh;
  if (dr <= 0.0 && dz <= 0.0) {
    if (dr >= dz) {
      out.signed_distance = dr;
      out.normal = radial;
    } else {
      out.signed_distance = dz;
      out.normal = Vec3(0, 0, p.z() >= 0 ? 1.0 : -1.0);
    }
    return out;
  }
  const double odr = std::max(dr, 0.0), odz = std::max(dz, 0.0);
  out.signed_distance = std::hypot(odr, odz);
  Vec3 n = odr * radial + odz * Vec3(0, 0, p.z() >= 0 ? 1.0 : -1.0);
  out.normal = n / n.norm();
  return out;
}

}  // namespace

SurfaceQuery object_surface_query(const ObjectModel& model, const Pose& obj_pose,
                                  const Vec3& world_point) {
  const Vec3 local = obj_pose.inverse_transform(world_point);
  SurfaceQuery q = model.shape == ObjectModel::Shape::Box
                       ? box_query(0.5 * model.box_extents, local)
                       : cylinder_query(model.cyl_radius, model.cyl_height, local);
  q.normal = obj_pose.orientation * q.normal;
  return q;
}

}  // namespace gpayn
