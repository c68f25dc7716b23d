#include "mulay/camera.hpp"

#include <cmath>
#include <stdexcept>

namespace mulay {

void validate_camera(const Camera& cam) {
    if (cam.focal.x() <= 0 || cam.focal.y() <= 0)
        throw std::runtime_error("camera validation: focal lengths must be positive");
    const Eigen::Matrix3d rtr = cam.rotation.transpose() * cam.rotation;
    if ((rtr - Eigen::Matrix3d::Identity()).norm() > 1e-6)
        throw std::runtime_error("camera validation: rotation not orthonormal");
    if (cam.width <= 0 || cam.height <= 0)
        throw std::runtime_error("camera validation: bad resolution");
}

Eigen::Vector2d project(const Camera& cam, const Eigen::Vector3d& point) {
    const Eigen::Vector3d pc = cam.toCamera(point);
    if (pc.z() <= 0)
        throw std::runtime_error("project: point behind camera (z = " +
                                 std::to_string(pc.z()) + ")");
    return {cam.focal.x() * pc.x() / pc.z() + cam.principal.x(),
            cam.focal.y() * pc.y() / pc.z() + cam.principal.y()};
}

Eigen::Vector3d unproject(const Camera& cam, const Eigen::Vector2d& pixel, double depth) {
    if (depth <= 0) throw std::runtime_error("unproject: depth must be positive");
    const Eigen::Vector3d pc{(pixel.x() - cam.principal.x()) / cam.focal.x() * depth,
                             (pixel.y() - cam.principal.y()) / cam.focal.y() * depth, depth};
    return cam.rotation.transpose() * (pc - cam.translation);
}

Camera look_at_camera(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                      double fovYRadians, int width, int height) {
    Camera cam;
    cam.width = width;
    cam.height = height;
    const double f = 0.5 * height / std::tan(0.5 * fovYRadians);
    cam.focal = {f, f};
    cam.principal = {0.5 * width, 0.5 * height};

    const Eigen::Vector3d fwd = (target - eye).normalized(); // camera +z
    Eigen::Vector3d up{0, 1, 0};
    if (std::abs(fwd.dot(up)) > 0.999) up = {0, 0, 1};
    const Eigen::Vector3d right = (-up).cross(fwd).normalized(); // camera +x
    const Eigen::Vector3d down = fwd.cross(right);               // camera +y (image down)
    Eigen::Matrix3d r;
    r.row(0) = right.transpose();
    r.row(1) = down.transpose();
    r.row(2) = fwd.transpose();
    cam.rotation = r;
    cam.translation = -r * eye;
    return cam;
}

} // namespace mulay
