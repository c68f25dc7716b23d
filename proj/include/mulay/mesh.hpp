#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace mulay {

// Triangle mesh with optional per-vertex UVs and normals.
// Positions are meters, world space. Faces are 0-based index triples.
struct TriangleMesh {
    Eigen::Matrix3Xd vertices;              // 3 x V
    Eigen::Matrix3Xi faces;                 // 3 x F, CCW winding
    std::optional<Eigen::Matrix2Xd> uv;     // 2 x V, in [0,1]^2
    std::optional<Eigen::Matrix3Xd> normals;// 3 x V, unit length

    int vertexCount() const { return static_cast<int>(vertices.cols()); }
    int faceCount() const { return static_cast<int>(faces.cols()); }
};

// Throws on out-of-range face indices or UV/vertex count mismatch.
void validate_mesh(const TriangleMesh& mesh);

// Wavefront OBJ with v/vt/f records, 1-based indices. UVs preserved when
// every face carries vt references.
TriangleMesh load_mesh(const std::string& path);
void save_mesh(const TriangleMesh& mesh, const std::string& path);

double surface_area(const TriangleMesh& mesh);

// Area-weighted vertex normals: per vertex, the normalized sum of incident
// one-ring cross products. Isolated vertices get a zero normal and are
// reported in the optional flag vector.
Eigen::Matrix3Xd vertex_normals(const TriangleMesh& mesh,
                                std::vector<uint8_t>* isolated = nullptr);

// For each vertex k, the (j, j+1) corner pairs of its incident faces in
// winding order; each pair contributes one cross-product term to the
// vertex normal.
std::vector<std::vector<std::pair<int, int>>> incident_corner_pairs(const TriangleMesh& mesh);

// Unordered one-ring vertex neighbors.
std::vector<std::vector<int>> vertex_adjacency(const TriangleMesh& mesh);

// Undirected edge list (a < b), each edge once.
std::vector<std::pair<int, int>> mesh_edges(const TriangleMesh& mesh);

} // namespace mulay
