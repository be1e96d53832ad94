#pragma once

#include <string>
#include <vector>

#include "gpayn/geometry.hpp"

namespace gpayn {

// Primitive tabletop objects. The origin is the centroid; boxes and cylinders
// rest upright on the table, so the resting centroid height is half the
// vertical extent.
struct ObjectModel {
  enum class Shape { Box, Cylinder };

  std::string id;
  Shape shape = Shape::Box;
  Vec3 box_extents = Vec3::Zero();  // full extents, meters
  double cyl_radius = 0.0;
  double cyl_height = 0.0;
  double mass_proxy = 1.0;  // reserved, unused in quasi-static mode
  std::vector<Vec3> surface_samples;  // object frame, >= 64 points

  static ObjectModel box(const std::string& id, const Vec3& extents);
  static ObjectModel cylinder(const std::string& id, double radius, double height);

  static const std::vector<std::string>& builtin_ids();
  static ObjectModel builtin(const std::string& id);  // throws ConfigError on unknown id

  double rest_height() const {
    return shape == Shape::Box ? 0.5 * box_extents.z() : 0.5 * cyl_height;
  }

  // Largest horizontal half-extent, used to size placement margins.
  double footprint_radius() const;

  void validate() const;
};

struct ObjectState {
  Pose pose;
  double height_above_table_mm = 0.0;
  bool attached = false;
};

// Signed distance from a world point to the object surface (negative inside)
// plus the outward surface normal at the closest point.
struct SurfaceQuery {
  double signed_distance = 0.0;
  Vec3 normal = Vec3::UnitZ();
};

SurfaceQuery object_surface_query(const ObjectModel& model, const Pose& obj_pose,
                                  const Vec3& world_point);

}  // namespace gpayn
