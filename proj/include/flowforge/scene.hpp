#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flowforge/vec.hpp"

namespace flowforge::scene {

inline constexpr int kJointCount = 18;

// Canonical joint order. Heatmap channels, keypoint arrays and pose vectors
// all index with this order.
enum JointId : int {
  kNose = 0,
  kNeck,
  kRShoulder,
  kRElbow,
  kRWrist,
  kLShoulder,
  kLElbow,
  kLWrist,
  kRHip,
  kRKnee,
  kRAnkle,
  kLHip,
  kLKnee,
  kLAnkle,
  kREye,
  kLEye,
  kREar,
  kLEar,
};

extern const std::array<const char*, kJointCount> kJointNames;

struct Joint {
  std::string name;
  int parent = -1;              // -1 marks the root
  Vec3 rest_offset;             // from parent, body units
  double rotation_limit = 0.0;  // radians; bound on sampled pose angles
  double radius = 0.05;         // capsule radius of the bone ending at this joint
};

struct Skeleton {
  std::vector<Joint> joints;  // exactly kJointCount, canonical order
  int root = -1;
  // Topological order (parents first), fixed at build time.
  std::vector<int> traversal;
};

struct PoseParams {
  std::array<Vec3, kJointCount> rotations{};  // axis-angle per joint
  Vec3 root_translation;
  uint64_t seed = 0;
};

// Weak perspective: p -> (scale*x + tx, scale*y + ty), depth = z.
struct Camera {
  double scale = 120.0;  // pixels per body unit
  Vec2 translation{128.0, 62.0};
  int width = 256;
  int height = 256;
};

struct BodyMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int32_t, 3>> faces;
  std::vector<std::array<float, 3>> colors;  // per-vertex RGB in [0,1]
  std::vector<int32_t> vertex_joint;         // source joint of each vertex
};

// Generator configuration: the skeleton declaration plus sampling ranges.
struct SceneConfig {
  std::vector<Joint> joints;  // 18 declarations, canonical order
  int detail = 12;            // radial capsule segments
  Camera camera;
  double root_translation_range = 0.05;  // body units, per axis (x, y)
  bool same_pose = false;                // pose_b := pose_a when set
};

SceneConfig default_config();

// One posed view. The mesh is rebuilt on demand from (skeleton, pose, detail).
struct ArticulatedScene {
  Skeleton skeleton;
  PoseParams pose;
  Camera camera;
  int detail = 12;
};

// A source/target view pair over one shared skeleton; serializes to the
// scene JSON document.
struct ScenePair {
  Skeleton skeleton;
  PoseParams pose_a;
  PoseParams pose_b;
  Camera camera_a;
  Camera camera_b;
  int detail = 12;
  uint64_t seed = 0;

  ArticulatedScene view_a() const { return {skeleton, pose_a, camera_a, detail}; }
  ArticulatedScene view_b() const { return {skeleton, pose_b, camera_b, detail}; }
};

// Validates the joint declarations (count, tree, left/right mirror symmetry)
// and returns the skeleton. Throws ConfigError on violations.
Skeleton build_skeleton(const SceneConfig& config);

// Deterministic pose sampling; rotation angles bounded by each joint's limit.
PoseParams sample_pose(const Skeleton& skeleton, uint64_t seed,
                       double root_translation_range = 0.05);

// World transform per joint (parents applied first).
std::array<Transform, kJointCount> forward_kinematics(const Skeleton& skeleton,
                                                      const PoseParams& pose);

std::array<Vec3, kJointCount> joint_positions(const Skeleton& skeleton,
                                              const PoseParams& pose);

// Capsule-limb body around each bone, rigidly attached to the parent joint
// frame. Topology and vertex colors depend only on (skeleton, detail).
BodyMesh pose_mesh(const Skeleton& skeleton, const PoseParams& pose, int detail);

// Closed-form face count of pose_mesh for this skeleton/detail.
int64_t mesh_face_count(const Skeleton& skeleton, int detail);

inline Vec2 project(const Camera& camera, const Vec3& p) {
  return {camera.scale * p.x + camera.translation.x,
          camera.scale * p.y + camera.translation.y};
}

struct ProjectedKeypoint {
  Vec2 position;
  bool in_frame = false;
};

std::array<ProjectedKeypoint, kJointCount> project_keypoints(
    const Skeleton& skeleton, const PoseParams& pose, const Camera& camera);

// Builds a scene pair from a config and a seed: pose_a/pose_b from derived
// seed streams (pose_b == pose_a when config.same_pose).
ScenePair make_scene_pair(const SceneConfig& config, uint64_t seed);

}  // namespace flowforge::scene
