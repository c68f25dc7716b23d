#include "mulay/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mulay {

void validate_mesh(const TriangleMesh& mesh) {
    const int nv = mesh.vertexCount();
    for (int f = 0; f < mesh.faceCount(); ++f) {
        for (int c = 0; c < 3; ++c) {
            const int idx = mesh.faces(c, f);
            if (idx < 0 || idx >= nv)
                throw std::runtime_error("mesh validation: face " + std::to_string(f) +
                                         " references vertex " + std::to_string(idx) +
                                         " outside [0," + std::to_string(nv) + ")");
        }
    }
    if (mesh.uv && mesh.uv->cols() != nv)
        throw std::runtime_error("mesh validation: UV count " + std::to_string(mesh.uv->cols()) +
                                 " != vertex count " + std::to_string(nv));
    if (mesh.normals && mesh.normals->cols() != nv)
        throw std::runtime_error("mesh validation: normal count mismatch");
}

namespace {

struct ObjIndex {
    int v = 0;
    int vt = 0; // 0 = absent
};

ObjIndex parse_face_corner(const std::string& token, int line) {
    ObjIndex out;
    const size_t s1 = token.find('/');
    try {
        out.v = std::stoi(token.substr(0, s1));
        if (s1 != std::string::npos) {
            const size_t s2 = token.find('/', s1 + 1);
            const std::string vt = token.substr(s1 + 1, s2 == std::string::npos
                                                            ? std::string::npos
                                                            : s2 - s1 - 1);
            if (!vt.empty()) out.vt = std::stoi(vt);
        }
    } catch (const std::exception&) {
        throw std::runtime_error("OBJ parse error at line " + std::to_string(line) +
                                 ": bad face token '" + token + "'");
    }
    return out;
}

} // namespace

TriangleMesh load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open OBJ file: " + path);

    std::vector<Eigen::Vector3d> verts;
    std::vector<Eigen::Vector2d> uvs;
    std::vector<Eigen::Vector3i> tris;
    std::vector<std::array<int, 3>> triUv; // vt index per corner, 0 = absent

    std::string lineStr;
    int line = 0;
    while (std::getline(in, lineStr)) {
        ++line;
        std::istringstream ss(lineStr);
        std::string tag;
        ss >> tag;
        if (tag == "v") {
            Eigen::Vector3d p;
            if (!(ss >> p.x() >> p.y() >> p.z()))
                throw std::runtime_error("OBJ parse error at line " + std::to_string(line) +
                                         ": bad vertex");
            verts.push_back(p);
        } else if (tag == "vt") {
            Eigen::Vector2d t;
            if (!(ss >> t.x() >> t.y()))
                throw std::runtime_error("OBJ parse error at line " + std::to_string(line) +
                                         ": bad texcoord");
            uvs.push_back(t);
        } else if (tag == "f") {
            std::vector<ObjIndex> corners;
            std::string token;
            while (ss >> token) corners.push_back(parse_face_corner(token, line));
            if (corners.size() < 3)
                throw std::runtime_error("OBJ parse error at line " + std::to_string(line) +
                                         ": face with <3 corners");
            for (const ObjIndex& c : corners) {
                if (c.v < 1 || c.v > static_cast<int>(verts.size()))
                    throw std::runtime_error("OBJ validation error at line " +
                                             std::to_string(line) + ": vertex index " +
                                             std::to_string(c.v) + " out of range (1-based)");
                if (c.vt != 0 && (c.vt < 1 || c.vt > static_cast<int>(uvs.size())))
                    throw std::runtime_error("OBJ validation error at line " +
                                             std::to_string(line) + ": vt index out of range");
            }
            for (size_t k = 2; k < corners.size(); ++k) {
                tris.push_back({corners[0].v - 1, corners[k - 1].v - 1, corners[k].v - 1});
                triUv.push_back({corners[0].vt, corners[k - 1].vt, corners[k].vt});
            }
        }
    }

    TriangleMesh mesh;
    mesh.vertices.resize(3, static_cast<Eigen::Index>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) mesh.vertices.col(i) = verts[i];
    mesh.faces.resize(3, static_cast<Eigen::Index>(tris.size()));
    for (size_t i = 0; i < tris.size(); ++i) mesh.faces.col(i) = tris[i];

    // Per-vertex UVs: adopt each corner's vt; first assignment wins.
    bool anyUv = false;
    for (const auto& t : triUv)
        if (t[0] || t[1] || t[2]) anyUv = true;
    if (anyUv && !uvs.empty()) {
        Eigen::Matrix2Xd uvm = Eigen::Matrix2Xd::Zero(2, mesh.vertexCount());
        std::vector<uint8_t> seen(verts.size(), 0);
        for (size_t f = 0; f < tris.size(); ++f) {
            for (int c = 0; c < 3; ++c) {
                const int vt = triUv[f][c];
                const int v = tris[f][c];
                if (vt != 0 && !seen[v]) {
                    uvm.col(v) = uvs[vt - 1];
                    seen[v] = 1;
                }
            }
        }
        mesh.uv = uvm;
    }
    validate_mesh(mesh);
    return mesh;
}

void save_mesh(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write OBJ file: " + path);
    char buf[256];
    for (int i = 0; i < mesh.vertexCount(); ++i) {
        std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", mesh.vertices(0, i),
                      mesh.vertices(1, i), mesh.vertices(2, i));
        out << buf;
    }
    if (mesh.uv) {
        for (int i = 0; i < mesh.vertexCount(); ++i) {
            std::snprintf(buf, sizeof(buf), "vt %.9g %.9g\n", (*mesh.uv)(0, i), (*mesh.uv)(1, i));
            out << buf;
        }
    }
    for (int f = 0; f < mesh.faceCount(); ++f) {
        const int a = mesh.faces(0, f) + 1, b = mesh.faces(1, f) + 1, c = mesh.faces(2, f) + 1;
        if (mesh.uv)
            std::snprintf(buf, sizeof(buf), "f %d/%d %d/%d %d/%d\n", a, a, b, b, c, c);
        else
            std::snprintf(buf, sizeof(buf), "f %d %d %d\n", a, b, c);
        out << buf;
    }
}

double surface_area(const TriangleMesh& mesh) {
    double area = 0.0;
    for (int f = 0; f < mesh.faceCount(); ++f) {
        const Eigen::Vector3d a = mesh.vertices.col(mesh.faces(0, f));
        const Eigen::Vector3d b = mesh.vertices.col(mesh.faces(1, f));
        const Eigen::Vector3d c = mesh.vertices.col(mesh.faces(2, f));
        area += 0.5 * (b - a).cross(c - a).norm();
    }
    return area;
}

Eigen::Matrix3Xd vertex_normals(const TriangleMesh& mesh, std::vector<uint8_t>* isolated) {
    const int nv = mesh.vertexCount();
    Eigen::Matrix3Xd acc = Eigen::Matrix3Xd::Zero(3, nv);
    for (int f = 0; f < mesh.faceCount(); ++f) {
        const int ia = mesh.faces(0, f), ib = mesh.faces(1, f), ic = mesh.faces(2, f);
        const Eigen::Vector3d a = mesh.vertices.col(ia);
        const Eigen::Vector3d n =
            (mesh.vertices.col(ib) - a).cross(mesh.vertices.col(ic) - a);
        acc.col(ia) += n;
        acc.col(ib) += n;
        acc.col(ic) += n;
    }
    if (isolated) isolated->assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        const double len = acc.col(v).norm();
        if (len < 1e-20) {
            acc.col(v).setZero();
            if (isolated) (*isolated)[v] = 1;
        } else {
            acc.col(v) /= len;
        }
    }
    return acc;
}

std::vector<std::vector<std::pair<int, int>>> incident_corner_pairs(const TriangleMesh& mesh) {
    std::vector<std::vector<std::pair<int, int>>> pairs(mesh.vertexCount());
    for (int f = 0; f < mesh.faceCount(); ++f) {
        const int a = mesh.faces(0, f), b = mesh.faces(1, f), c = mesh.faces(2, f);
        pairs[a].push_back({b, c});
        pairs[b].push_back({c, a});
        pairs[c].push_back({a, b});
    }
    return pairs;
}

std::vector<std::vector<int>> vertex_adjacency(const TriangleMesh& mesh) {
    std::vector<std::set<int>> adj(mesh.vertexCount());
    for (int f = 0; f < mesh.faceCount(); ++f) {
        const int a = mesh.faces(0, f), b = mesh.faces(1, f), c = mesh.faces(2, f);
        adj[a].insert(b); adj[a].insert(c);
        adj[b].insert(a); adj[b].insert(c);
        adj[c].insert(a); adj[c].insert(b);
    }
    std::vector<std::vector<int>> out(adj.size());
    for (size_t i = 0; i < adj.size(); ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
}

std::vector<std::pair<int, int>> mesh_edges(const TriangleMesh& mesh) {
    std::set<std::pair<int, int>> edges;
    for (int f = 0; f < mesh.faceCount(); ++f) {
        for (int c = 0; c < 3; ++c) {
            int a = mesh.faces(c, f), b = mesh.faces((c + 1) % 3, f);
            if (a > b) std::swap(a, b);
            edges.insert({a, b});
        }
    }
    return {edges.begin(), edges.end()};
}

} // namespace mulay
