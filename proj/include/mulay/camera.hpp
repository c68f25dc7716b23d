#pragma once

#include <Eigen/Dense>

namespace mulay {

// Pinhole camera. Extrinsics map world to camera space; camera looks down +z,
// x right, y down, matching image coordinates.
struct Camera {
    Eigen::Vector2d focal{500.0, 500.0};     // fx, fy (pixels)
    Eigen::Vector2d principal{128.0, 128.0}; // cx, cy (pixels)
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();
    int width = 256;
    int height = 256;

    Eigen::Vector3d toCamera(const Eigen::Vector3d& p) const {
        return rotation * p + translation;
    }
    Eigen::Vector3d center() const { return -rotation.transpose() * translation; }
};

void validate_camera(const Camera& cam);

// Projects a world point; throws if the point is at or behind the camera
// plane (z <= 0).
Eigen::Vector2d project(const Camera& cam, const Eigen::Vector3d& point);

// Inverse of project at a known camera-space depth z > 0.
Eigen::Vector3d unproject(const Camera& cam, const Eigen::Vector2d& pixel, double depth);

// A camera at `eye` looking at `target` (world up +y), with the given
// vertical field of view.
Camera look_at_camera(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                      double fovYRadians, int width, int height);

} // namespace mulay
