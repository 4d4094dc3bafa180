#pragma once

#include <optional>
#include <string>
#include <vector>

#include "index2/flagmap.hpp"
#include "index2/solids.hpp"

namespace index2 {

/// Geometric symmetries of a two-orbit polyhedron, summarized. The group G
/// collects the ambient isometries whose action on vertex labels preserves
/// the face set; the index compares it against the full automorphism group
/// of the underlying complex.
struct SymmetryReport {
    int symGroupOrder = 0;     // |G|
    int rotSubgroupOrder = 0;  // |G+|, the det = +1 half
    int index = 0;             // |Aut(complex)| / |G|
    int flagOrbitsUnderG = 0;
    int vertexOrbits = 0, edgeOrbits = 0, faceOrbits = 0;           // under G
    int vertexOrbitsRot = 0, edgeOrbitsRot = 0, faceOrbitsRot = 0;  // under G+
    std::string faceStabilizerShape;  // "dihedral of order 2k" or "cyclic of order k"
};

struct CheckOutcome {
    bool pass = false;
    std::string witness;
};

/// Result of searching for a scale ratio that makes every face planar.
/// Ratios that planarize the faces but collapse the two orbit spheres into
/// one (always λ = 1) are excluded and reported separately; numeric roots
/// that resist exact reconstruction in Q(√5) land in `unverified`.
struct PlanarSearch {
    std::optional<FieldElement> lambda;
    std::vector<FieldElement> degenerate;
    std::vector<double> unverified;
};

/// Label action of an ambient isometry: both orbits are permuted by the
/// base solid permutation, sides stay fixed.
std::vector<int> inducedVertexMap(const VertexConfiguration& cfg, const Mat3& g, int baseCount);

/// Flag permutation induced by a vertex relabeling, via matching of the
/// incident (vertex, edge, face) triples. Absent when the relabeling does
/// not preserve the face set.
std::optional<std::vector<int>> inducedFlagPermutation(const FlagComplex& c,
                                                       const std::vector<int>& vertexMap);

/// Indices into the ambient point group's element list of the isometries
/// whose label action preserves the face set of the complex.
std::vector<std::size_t> symmetryElements(const VertexConfiguration& cfg,
                                          const FlagComplex& complex);

SymmetryReport analyzeSymmetry(const VertexConfiguration& cfg, const FlagComplex& complex);

/// How a symmetry that fixes a face acts on its boundary cycle: a rotation
/// by `shift` positions, or a reflection about the axis with doubled offset
/// `shift` (fixing two opposite positions when the shift is even, none when
/// it is odd).
struct CycleAction {
    bool isRotation = true;
    int shift = 0;
};
std::optional<CycleAction> cycleActionOf(const std::vector<int>& face,
                                         const std::vector<int>& mapped);

/// Verify the face stabilizers: dihedral of order p in G with all mirror
/// positions at opposite vertices of the face, cyclic of order p/2 in G+.
CheckOutcome faceStabilizerCheck(const VertexConfiguration& cfg, const FlagComplex& complex);

/// No edge may join two vertices whose rays from the centre are opposite.
CheckOutcome noAntipodalEdges(const VertexConfiguration& cfg, const FlagComplex& complex);
bool antipodalEdge(const VertexConfiguration& cfg, int idA, int idB, int baseCount);

/// Exact planarity of each face at a concrete scale ratio.
std::vector<bool> facePlanarity(const VertexConfiguration& cfg,
                                const std::vector<std::vector<int>>& faces,
                                const FieldElement& lambda);

/// Search for a positive ratio in Q(√5) at which every face is planar: the
/// 4-point determinants become polynomials in λ, their common positive roots
/// are located numerically, reconstructed as a + b√5 with small rational
/// a and b, and checked exactly.
PlanarSearch findPlanarLambda(const VertexConfiguration& cfg,
                              const std::vector<std::vector<int>>& faces);

}  // namespace index2
