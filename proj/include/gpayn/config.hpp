#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gpayn/geometry.hpp"

namespace gpayn {

// Per-step action limits; offsets are clipped elementwise before application.
struct ActionLimits {
  double eef_pos = 0.01;     // m per axis
  double eef_rpy = 0.05;     // rad per axis
  double fingers = 0.1;      // rad per joint
};

struct EnvConfig {
  std::string object_id = "sugar_box";
  std::string hand_file;  // empty = built-in default hand

  // object placement region (table frame, z = 0 table surface)
  Eigen::Vector2d placement_min{0.32, -0.08};
  Eigen::Vector2d placement_max{0.48, 0.08};

  // analytic workspace: position box + orientation cone around the plan's approach
  Vec3 workspace_min{0.20, -0.30, 0.00};
  Vec3 workspace_max{0.60, 0.30, 0.40};
  double cone_half_angle_rad = 1.0471975511965976;  // 60 deg

  double contact_tolerance = 0.002;  // m
  double d_max = 0.15;               // m, planar object displacement bound
  int t_max = 1000;                  // steps per episode
  double success_height_mm = 100.0;  // lift threshold

  ActionLimits limits;

  bool observe_quaternion = false;  // eef orientation as quaternion instead of RPY
  int visual_dim = 0;               // optional visual feature slot, default empty
  bool r_dist_literal_sign = false; // reproduce the raw d(t+1)-d(t) term verbatim

  int observation_dim() const { return (observe_quaternion ? 24 : 23) + visual_dim; }
};

struct OracleConfig {
  std::string mode = "lateral";  // lateral | topdown
  double noise_std = 0.0;        // m for position, rad for orientation
  int candidates = 8;
  double standoff_lateral = 0.05;   // palm-to-centroid distance along approach
  double standoff_topdown = 0.05;
  double vgn_rotation_sign = 1.0;   // sign of the 45 deg gripper-to-hand roll
};

struct SacConfig {
  double gamma = 0.99;
  double tau = 0.005;
  int batch_size = 256;
  double entropy_target = -15.0;  // -(action dim)
  double learning_rate = 3e-4;
  int train_freq = 10;            // env steps between gradient passes
  int gradient_steps = 1;
  int target_update_interval = 1;
  long total_timesteps = 100000;  // desk scale; paper scale 5e6 via config
  int hidden_units = 128;         // desk scale; paper scale 1024 via config
  int hidden_layers = 2;
  long buffer_capacity = 1000000;
  long demo_retention_floor = 0;
  double lambda_bc = 1.0;         // OERLD behavior-cloning weight
  bool lambda_bc_linear_decay = false;
  int oerld_demo_batch = 32;
  int eval_interval = 2000;       // env steps between deterministic evals
  int eval_episodes = 20;
  long checkpoint_interval = 0;   // 0 = only final checkpoint
};

struct DemoConfig {
  long quota_transitions = 20000;
  bool literal_schedule = false;  // keep Alg-style (steps-500)/500 closing target
  bool success_only = false;      // drop failed episodes instead of storing everything
};

struct ExperimentConfig {
  EnvConfig env;
  OracleConfig oracle;
  SacConfig sac;
  DemoConfig demo;
  std::string algorithm = "gpayn";  // gpayn | sac | oerld
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::string out_dir = "runs";
  std::string demo_file;  // required for gpayn/oerld training

  std::string to_text() const;
  static ExperimentConfig from_text(const std::string&);
  static ExperimentConfig load(const std::string& path);
  void save(const std::string& path) const;
  void validate() const;  // throws ConfigError
};

// Hash of everything that determines episode generation (environment + grasp
// oracle). Demo files and checkpoints embed it so mismatched setups fail fast.
std::uint64_t task_hash(const EnvConfig& env, const OracleConfig& oracle);

std::uint64_t fnv1a64(const std::string& bytes);

std::string hash_hex(std::uint64_t h);

}  // namespace gpayn
