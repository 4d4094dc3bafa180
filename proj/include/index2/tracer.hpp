#pragma once

#include "index2/flagmap.hpp"
#include "index2/solids.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace index2 {

/// Change of direction between consecutive projected edges of a face walk.
/// Vertices offering two continuations use {r, l}, three use {r, f, l},
/// four use {hr, sr, sl, hl} (hard/soft right and left).
enum class Turn { R, L, F, HR, SR, SL, HL };

const char* name(Turn t);
std::optional<Turn> parseTurn(std::string_view s);
Turn mirrorTurn(Turn t);  // swap left and right; f is fixed

/// Lexicographic rank inside each alphabet: r < l < f and hr < sr < sl < hl.
int turnRank(Turn t);

/// The two-symbol face shape [a,b], read as the 4-periodic word [a,b,a,b]:
/// a applies at second-orbit vertices, b at base-solid vertices.
struct FaceShape {
    Turn a, b;
    std::string str() const;  // "[hr,sr]"
    std::string id() const;   // "hrsr", used in family ids
    bool operator==(const FaceShape& o) const { return a == o.a && b == o.b; }
    bool operator<(const FaceShape& o) const {
        return turnRank(a) != turnRank(o.a) ? turnRank(a) < turnRank(o.a)
                                            : turnRank(b) < turnRank(o.b);
    }
};

FaceShape reversed(FaceShape s);   // [a', b']: traces the same faces with opposite orientation
FaceShape orbitSwap(FaceShape s);  // [b, a]: roles of the two orbits exchanged
std::optional<FaceShape> parseShape(std::string_view s);  // "hrsr" or "[hr,sr]"

/// Classify candidate continuations by projecting onto the reference sphere.
/// prevDir/curDir/candidate directions are the (unnormalized) radial positions;
/// all comparisons are exact. Throws on any tie or degenerate arc.
std::vector<Turn> classifyDirections(const Vec3& prevDir, const Vec3& curDir,
                                     const std::vector<Vec3>& candidates);

/// A traced two-orbit polyhedron. Vertex ids: 0..n-1 the base solid S,
/// n..2n-1 the second orbit; faces alternate between the two.
struct GeometricPolyhedron {
    VertexConfiguration cfg;
    FaceShape shape;
    int baseCount = 0;
    std::vector<std::vector<int>> faces;
    FlagComplex complex;

    int sideOf(int vertexId) const { return vertexId / baseCount; }
    int baseOf(int vertexId) const { return vertexId % baseCount; }
    /// Exact positions at a concrete ratio: S first, then the second orbit.
    std::vector<Vec3> coordinates(const FieldElement& lambda) const;
};

struct AssembleOutcome {
    std::optional<GeometricPolyhedron> poly;
    std::string reason;   // rejection code when poly is absent
    std::string witness;
    std::vector<std::vector<int>> tracedFaces;  // kept for diagnostics

    bool ok() const { return poly.has_value(); }
};

/// Turn classes of the continuations of the directed edge prev -> cur.
/// Returned as (candidate base, turn) pairs; cur sits on side curSide.
std::vector<std::pair<int, Turn>> classifyCandidates(const VertexConfiguration& cfg, int curSide,
                                                     int prevBase, int curBase);

/// Walk one face from the directed edge (S start) -> (second orbit head),
/// applying shape.a at second-orbit vertices and shape.b at S-vertices.
std::vector<int> traceFace(const VertexConfiguration& cfg, int startBase, int headBase,
                           FaceShape shape);

/// Trace from every directed starting edge, deduplicate, check that the
/// distinct faces cover all directed edges, and validate the complex.
AssembleOutcome assemble(const VertexConfiguration& cfg, FaceShape shape);

/// Single-orbit variant on a solid's vertex set with distance-dist adjacency,
/// the same turn applied at every vertex. Produces the star polyhedra.
struct UniformTraceResult {
    std::vector<std::vector<int>> faces;
    ComplexResult complexResult;
};
UniformTraceResult assembleUniform(SolidKind kind, int dist, Turn turn);

}  // namespace index2
