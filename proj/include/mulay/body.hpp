#pragma once

#include "mulay/mesh.hpp"

#include <string>
#include <vector>

namespace mulay {

struct BodyMeasurements {
    double bust = 0.9;   // chest girth, meters
    double waist = 0.8;  // waist girth
    double torso = 0.6;  // shoulder-to-hip length
    double leg = 0.9;    // hip-to-ankle length
};

void validate_measurements(const BodyMeasurements& m);

// Posed body mesh sequence with fixed topology. poseDescriptor holds, per
// frame, the torso joint rotations as angle-axis 3-vectors; it drives
// key-frame selection only.
struct BodySequence {
    std::vector<TriangleMesh> frames;
    std::vector<std::vector<Eigen::Vector3d>> poseDescriptor;
    BodyMeasurements measurements;

    int frameCount() const { return static_cast<int>(frames.size()); }
};

void validate_body_sequence(const BodySequence& seq);

// Loads per-frame OBJ files listed in a JSON sidecar:
//   { "frames": ["f0.obj", ...],
//     "pose": [[[ax,ay,az], ...joints], ...frames],
//     "measurements": {"bust":b, "waist":w, "torso":t, "leg":l} }
// Frame paths are resolved relative to the sidecar's directory.
BodySequence load_body_sequence(const std::string& sidecarPath);
void save_body_sequence(const BodySequence& seq, const std::string& directory,
                        const std::string& sidecarName = "body.json");

} // namespace mulay
