#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gpayn/geometry.hpp"

namespace gpayn {

constexpr int kNumFingers = 5;
constexpr int kActuatedJoints = 9;

// One finger: a serial revolute chain mounted on the palm. Each chain joint
// is driven by one of the 9 actuated values through a coupling scale, which
// is how the shared ring/little actuators drive four chain joints.
struct FingerChain {
  std::string name;
  Pose mount;                        // palm frame -> chain base
  std::vector<double> link_lengths;  // meters, link extends along local +x after each joint
  std::vector<Vec3> joint_axes;      // chain-local rotation axis per joint
  std::vector<int> actuators;        // actuated index driving each chain joint
  std::vector<double> coupling;      // chain joint angle = coupling * qpos[actuator]

  int joint_count() const { return static_cast<int>(link_lengths.size()); }
};

struct HandModel {
  int schema_version = 1;
  std::array<FingerChain, kNumFingers> fingers;
  Eigen::VectorXd qpos_open;   // 9
  Eigen::VectorXd qpos_close;  // 9
  Eigen::VectorXd joint_lo;    // 9
  Eigen::VectorXd joint_hi;    // 9
  double fingertip_radius = 0.008;

  static HandModel default_model();

  void validate() const;  // throws std::invalid_argument on violated invariants

  Eigen::VectorXd clamp_qpos(const Eigen::VectorXd& qpos) const;

  // Forward kinematics of all five fingertips in the world frame.
  std::array<Vec3, kNumFingers> fingertip_positions(const Pose& eef_pose,
                                                    const Eigen::VectorXd& qpos) const;

  Vec3 fingertip_position(int finger, const Pose& eef_pose,
                          const Eigen::VectorXd& qpos) const;

  std::string to_text() const;                      // versioned key-value document
  static HandModel from_text(const std::string&);   // throws SchemaMismatch
  void save(const std::string& path) const;
  static HandModel load(const std::string& path);
};

struct HandState {
  Pose eef_pose;
  Eigen::VectorXd qpos;
};

}  // namespace gpayn
