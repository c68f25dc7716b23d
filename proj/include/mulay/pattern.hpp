#pragma once

#include "mulay/body.hpp"
#include "mulay/mesh.hpp"

#include <Eigen/Dense>
#include <map>
#include <vector>

namespace mulay {

enum class GarmentKind { UpperCloth, Pants };

// Parameter vector layout (all entries meters, all > 0).
//
// Upper cloth (8): girths are full garment circumference at that level; a
// piece's width there is girth/2. Sleeve widths are the piece-local extents
// of the sleeve trapezoid; the seamed sleeve tube girth is twice the width.
namespace upper_param {
enum : int {
    ChestGirth = 0,   // garment girth at the shoulder line
    WaistGirth,       // girth at mid torso
    HemGirth,         // girth at the bottom hem
    TorsoHeight,      // shoulder line to hem
    SleeveRootWidth,  // sleeve extent at the armhole
    SleeveCuffWidth,  // sleeve extent at the cuff
    SleeveLength,     // armhole to cuff
    NeckWidth,        // unseamed central span of the shoulder edge
    Count
};
}

// Pants (5).
namespace pants_param {
enum : int {
    WaistGirth = 0, // garment girth at the waistband
    LegGirth,       // leg tube girth at the top of the leg
    CuffGirth,      // leg tube girth at the ankle
    RiseHeight,     // waistband rectangle height
    LegLength,      // waistband bottom to ankle
    Count
};
}

struct GarmentParams {
    GarmentKind kind = GarmentKind::UpperCloth;
    Eigen::VectorXd values;

    int count() const { return static_cast<int>(values.size()); }
};

int param_count(GarmentKind kind);
void validate_params(const GarmentParams& p);

// Initial parameters from body measurements: girth-derived widths use the
// 1.5x scale rule, heights follow the torso/leg lengths.
GarmentParams init_params(GarmentKind kind, const BodyMeasurements& m);

// Average-shape fallback used when no measurements are available.
GarmentParams default_params(GarmentKind kind);

enum class SpringClass { Structural, Shear, Bend };

enum class SeamRegion {
    Shoulder,
    SleeveTop,
    SleeveBottom,
    SideSeam,
    WaistSide,
    LegOuter,
    LegInner,
    Crotch
};

struct PatternSpring {
    int a = 0;
    int b = 0;
    SpringClass cls = SpringClass::Structural;
};

struct SeamPairDef {
    int a = 0; // front-piece particle (global index)
    int b = 0; // back-piece particle (global index)
    SeamRegion region = SeamRegion::SideSeam;
};

// Fixed grid counts; parameters move vertices but never change topology, so
// springs keep their identity across parameter updates.
struct PatternLayout {
    // upper
    int torsoCols = 0, armRows = 0, midRows = 0, lowRows = 0, sleeveCols = 0;
    // pants
    int legCols = 0, crotchCols = 0, waistRows = 0, legRows = 0;
};

// Two identical planar pieces (front, back). Particle indexing is global:
// front occupies [0, N), back [N, 2N). Both pieces share the 2D rest
// coordinates; the back piece has mirrored winding and its own UV region.
struct PatternMesh {
    GarmentKind kind = GarmentKind::UpperCloth;
    double resolution = 0.02;
    Eigen::VectorXd buildParams;

    Eigen::Matrix2Xd coords;     // 2 x N local rest coordinates
    Eigen::Matrix3Xi frontFaces; // local indices
    Eigen::Matrix3Xi backFaces;  // local indices, flipped winding
    Eigen::Matrix2Xd uvFront;    // 2 x N atlas placement, left half
    Eigen::Matrix2Xd uvBack;     // 2 x N atlas placement, right half

    std::vector<PatternSpring> springs; // global indices over 2N particles
    std::vector<SeamPairDef> seamPairs;
    PatternLayout layout;

    int pieceVertexCount() const { return static_cast<int>(coords.cols()); }
    int particleCount() const { return 2 * pieceVertexCount(); }
};

// Builds the triangulated pieces at roughly the given edge length.
// Throws on parameters that produce a self-intersecting or degenerate
// outline (zero widths, legs wider than the waistband, neck wider than the
// shoulder line).
PatternMesh build_pattern(const GarmentParams& params, double resolution);

// Recomputes 2D rest coordinates for new parameters of the same kind on the
// existing grid; topology, UVs and spring identity are untouched.
void reembed_pattern(PatternMesh& pattern, const GarmentParams& newParams);

// Per-spring rest lengths = 2D distances in pattern coordinates.
Eigen::VectorXd spring_rest_lengths(const PatternMesh& pattern);

// Per-edge rest lengths of the piece triangulation plus the seam pairs at
// rest length zero. Keys are global particle index pairs (a < b).
std::map<std::pair<int, int>, double> rest_lengths(const PatternMesh& pattern);

// Planar area of one piece (sum of 2D triangle areas).
double piece_area(const PatternMesh& pattern);

// Both pieces as a single 3D mesh (z = 0) carrying the atlas UVs; vertex
// order matches the global particle indexing.
TriangleMesh pattern_combined_mesh(const PatternMesh& pattern);

// Parameters grown by `factor` on the entries responsible for the girth of
// the given seam region (used by dressing retries).
GarmentParams grow_region_params(const GarmentParams& p, SeamRegion region, double factor);

const char* seam_region_name(SeamRegion region);

} // namespace mulay
