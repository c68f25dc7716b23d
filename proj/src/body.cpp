#include "mulay/body.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace mulay {

using nlohmann::json;
namespace fs = std::filesystem;

void validate_measurements(const BodyMeasurements& m) {
    if (m.bust <= 0 || m.waist <= 0 || m.torso <= 0 || m.leg <= 0)
        throw std::runtime_error("body measurements must be strictly positive");
}

void validate_body_sequence(const BodySequence& seq) {
    if (seq.frames.empty()) return;
    const int nv = seq.frames[0].vertexCount();
    const int nf = seq.frames[0].faceCount();
    for (size_t i = 1; i < seq.frames.size(); ++i) {
        if (seq.frames[i].vertexCount() != nv || seq.frames[i].faceCount() != nf)
            throw std::runtime_error("body sequence: frame " + std::to_string(i) +
                                     " topology differs from frame 0");
    }
    validate_measurements(seq.measurements);
}

BodySequence load_body_sequence(const std::string& sidecarPath) {
    std::ifstream in(sidecarPath);
    if (!in) throw std::runtime_error("cannot open body sidecar: " + sidecarPath);
    json j;
    in >> j;

    BodySequence seq;
    const fs::path base = fs::path(sidecarPath).parent_path();
    for (const auto& f : j.at("frames"))
        seq.frames.push_back(load_mesh((base / f.get<std::string>()).string()));

    if (j.contains("pose")) {
        for (const auto& framePose : j["pose"]) {
            std::vector<Eigen::Vector3d> joints;
            if (!framePose.empty() && framePose[0].is_number()) {
                // single joint given as a flat triple
                joints.emplace_back(framePose[0].get<double>(), framePose[1].get<double>(),
                                    framePose[2].get<double>());
            } else {
                for (const auto& jj : framePose)
                    joints.emplace_back(jj[0].get<double>(), jj[1].get<double>(),
                                        jj[2].get<double>());
            }
            seq.poseDescriptor.push_back(std::move(joints));
        }
    }
    if (j.contains("measurements")) {
        const auto& m = j["measurements"];
        seq.measurements.bust = m.at("bust").get<double>();
        seq.measurements.waist = m.at("waist").get<double>();
        seq.measurements.torso = m.at("torso").get<double>();
        seq.measurements.leg = m.at("leg").get<double>();
    }
    validate_body_sequence(seq);
    return seq;
}

void save_body_sequence(const BodySequence& seq, const std::string& directory,
                        const std::string& sidecarName) {
    fs::create_directories(directory);
    json j;
    j["frames"] = json::array();
    for (int i = 0; i < seq.frameCount(); ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "body_%06d.obj", i);
        save_mesh(seq.frames[i], (fs::path(directory) / name).string());
        j["frames"].push_back(name);
    }
    j["pose"] = json::array();
    for (const auto& framePose : seq.poseDescriptor) {
        json jp = json::array();
        for (const auto& joint : framePose) jp.push_back({joint.x(), joint.y(), joint.z()});
        j["pose"].push_back(jp);
    }
    j["measurements"] = {{"bust", seq.measurements.bust},
                         {"waist", seq.measurements.waist},
                         {"torso", seq.measurements.torso},
                         {"leg", seq.measurements.leg}};
    std::ofstream out(fs::path(directory) / sidecarName);
    out << j.dump(2) << "\n";
}

} // namespace mulay
