#include "gpayn/hand.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gpayn/errors.hpp"

namespace gpayn {

using json = nlohmann::ordered_json;

namespace {

FingerChain make_chain(const std::string& name, const Vec3& mount_pos,
                       const Vec3& axis, const std::vector<double>& links,
                       const std::vector<int>& actuators) {
  FingerChain c;
  c.name = name;
  c.mount = Pose(mount_pos, Quat::Identity());
  c.link_lengths = links;
  c.joint_axes.assign(links.size(), axis);
  c.actuators = actuators;
  c.coupling.assign(links.size(), 1.0);
  return c;
}

}  // namespace

HandModel HandModel::default_model() {
  HandModel m;
  // Palm frame: +x is the approach axis (palm normal toward the object),
  // +z the finger side, -z the thumb side. Index..little curl toward -z
  // (axis +y), the thumb curls toward +z (axis -y).
  m.fingers[0] = make_chain("thumb", {0.020, 0.000, -0.065}, {0, -1, 0},
                            {0.030, 0.030, 0.025}, {0, 1, 2});
  m.fingers[1] = make_chain("index", {0.020, -0.027, 0.065}, {0, 1, 0},
                            {0.035, 0.030}, {3, 4});
  m.fingers[2] = make_chain("middle", {0.020, -0.009, 0.065}, {0, 1, 0},
                            {0.035, 0.030}, {5, 6});
  m.fingers[3] = make_chain("ring", {0.020, 0.009, 0.065}, {0, 1, 0},
                            {0.032, 0.028}, {7, 8});
  m.fingers[4] = make_chain("little", {0.020, 0.027, 0.065}, {0, 1, 0},
                            {0.028, 0.024}, {7, 8});
  m.fingers[4].coupling = {0.9, 0.9};  // little follows the shared tendon at reduced travel

  m.qpos_open = Eigen::VectorXd::Zero(kActuatedJoints);
  m.qpos_close = Eigen::VectorXd(kActuatedJoints);
  m.qpos_close << 1.2, 1.0, 0.8, 1.3, 1.3, 1.3, 1.3, 1.3, 1.3;
  m.joint_lo = Eigen::VectorXd::Constant(kActuatedJoints, -0.3);
  m.joint_hi = Eigen::VectorXd::Constant(kActuatedJoints, 1.8);
  m.fingertip_radius = 0.008;
  m.validate();
  return m;
}

void HandModel::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("hand model: " + msg); };
  if (qpos_open.size() != kActuatedJoints || qpos_close.size() != kActuatedJoints ||
      joint_lo.size() != kActuatedJoints || joint_hi.size() != kActuatedJoints)
    fail("expected 9 actuated joints");
  if (fingertip_radius <= 0) fail("fingertip radius must be positive");
  for (int i = 0; i < kActuatedJoints; ++i) {
    if (joint_lo[i] >= joint_hi[i]) fail("joint limits inverted");
    if (qpos_open[i] < joint_lo[i] || qpos_open[i] > joint_hi[i]) fail("qpos_open out of limits");
    if (qpos_close[i] < joint_lo[i] || qpos_close[i] > joint_hi[i]) fail("qpos_close out of limits");
    if (qpos_open[i] == qpos_close[i]) fail("qpos_open equals qpos_close");
  }
  for (const auto& f : fingers) {
    const size_t n = f.link_lengths.size();
    if (n == 0) fail(f.name + ": empty chain");
    if (f.joint_axes.size() != n || f.actuators.size() != n || f.coupling.size() != n)
      fail(f.name + ": inconsistent chain arrays");
    for (int a : f.actuators)
      if (a < 0 || a >= kActuatedJoints) fail(f.name + ": actuator index out of range");
    for (double l : f.link_lengths)
      if (l <= 0) fail(f.name + ": non-positive link length");
  }
}

Eigen::VectorXd HandModel::clamp_qpos(const Eigen::VectorXd& qpos) const {
  Eigen::VectorXd q = qpos;
  for (int i = 0; i < kActuatedJoints; ++i)
    q[i] = std::clamp(q[i], joint_lo[i], joint_hi[i]);
  return q;
}

Vec3 HandModel::fingertip_position(int finger, const Pose& eef_pose,
                                   const Eigen::VectorXd& qpos) const {
  const FingerChain& c = fingers[finger];
  Pose t = eef_pose.compose(c.mount);
  for (int j = 0; j < c.joint_count(); ++j) {
    const double angle = c.coupling[j] * qpos[c.actuators[j]];
    t = t.compose(Pose(Vec3::Zero(), quat_from_axis_angle(c.joint_axes[j], angle)));
    t = t.compose(Pose(Vec3(c.link_lengths[j], 0, 0), Quat::Identity()));
  }
  return t.position;
}

std::array<Vec3, kNumFingers> HandModel::fingertip_positions(
    const Pose& eef_pose, const Eigen::VectorXd& qpos) const {
  std::array<Vec3, kNumFingers> out;
  for (int f = 0; f < kNumFingers; ++f) out[f] = fingertip_position(f, eef_pose, qpos);
  return out;
}

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd json_to_vec(const json& a, size_t expect) {
  if (!a.is_array() || a.size() != expect) throw SchemaMismatch("hand file: bad vector size");
  Eigen::VectorXd v(expect);
  for (size_t i = 0; i < expect; ++i) v[i] = a[i].get<double>();
  return v;
}

json vec3_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 json_to_vec3(const json& a) {
  if (!a.is_array() || a.size() != 3) throw SchemaMismatch("hand file: bad 3-vector");
  return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

}  // namespace

std::string HandModel::to_text() const {
  json j;
  j["schema_version"] = schema_version;
  j["fingertip_radius"] = fingertip_radius;
  j["qpos_open"] = vec_to_json(qpos_open);
  j["qpos_close"] = vec_to_json(qpos_close);
  j["joint_limits_lo"] = vec_to_json(joint_lo);
  j["joint_limits_hi"] = vec_to_json(joint_hi);
  json fs = json::array();
  for (const auto& f : fingers) {
    json jf;
    jf["name"] = f.name;
    jf["mount_position"] = vec3_to_json(f.mount.position);
    jf["mount_rpy"] = vec3_to_json(f.mount.rpy());
    jf["link_lengths"] = f.link_lengths;
    json axes = json::array();
    for (const auto& a : f.joint_axes) axes.push_back(vec3_to_json(a));
    jf["joint_axes"] = axes;
    jf["actuators"] = f.actuators;
    jf["coupling"] = f.coupling;
    fs.push_back(jf);
  }
  j["fingers"] = fs;
  return j.dump(2) + "\n";
}

HandModel HandModel::from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaMismatch(std::string("hand file: ") + e.what());
  }
  if (!j.contains("schema_version")) throw SchemaMismatch("hand file: missing schema_version");
  HandModel m;
  m.schema_version = j["schema_version"].get<int>();
  if (m.schema_version != 1) throw SchemaMismatch("hand file: unsupported schema_version");
  try {
    m.fingertip_radius = j["fingertip_radius"].get<double>();
    m.qpos_open = json_to_vec(j["qpos_open"], kActuatedJoints);
    m.qpos_close = json_to_vec(j["qpos_close"], kActuatedJoints);
    m.joint_lo = json_to_vec(j["joint_limits_lo"], kActuatedJoints);
    m.joint_hi = json_to_vec(j["joint_limits_hi"], kActuatedJoints);
    const json& fs = j["fingers"];
    if (!fs.is_array() || fs.size() != kNumFingers)
      throw SchemaMismatch("hand file: expected 5 fingers");
    for (int i = 0; i < kNumFingers; ++i) {
      const json& jf = fs[i];
      FingerChain c;
      c.name = jf["name"].get<std::string>();
      c.mount = Pose(json_to_vec3(jf["mount_position"]),
                     quat_from_rpy(json_to_vec3(jf["mount_rpy"])));
      c.link_lengths = jf["link_lengths"].get<std::vector<double>>();
      for (const auto& a : jf["joint_axes"]) c.joint_axes.push_back(json_to_vec3(a));
      c.actuators = jf["actuators"].get<std::vector<int>>();
      c.coupling = jf["coupling"].get<std::vector<double>>();
      m.fingers[i] = c;
    }
  } catch (const json::exception& e) {
    throw SchemaMismatch(std::string("hand file: ") + e.what());
  }
  m.validate();
  return m;
}

void HandModel::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << to_text();
}

HandModel HandModel::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

}  // namespace gpayn
