#pragma once

#include <string>
#include <vector>

#include "index2/flagmap.hpp"
#include "index2/solids.hpp"

namespace index2 {

/// A classical regular polyhedron whose vertices lie on a single orbit: the
/// five convex solids, the four star polyhedra, and the Petrie duals of all
/// nine. Vertices are indices into the solid carrying them, and every edge
/// joins two vertices at the stated graph distance on that solid.
struct Index1Polyhedron {
    std::string name;
    SolidKind vertexSolid = SolidKind::Tetrahedron;
    int dist = 1;
    std::vector<std::vector<int>> faces;
    FlagComplex complex;
};

/// The eighteen single-orbit regular polyhedra, Petrie duals last.
const std::vector<Index1Polyhedron>& catalogue();

/// Result of splitting the vertex orbit of a single-orbit polyhedron in two.
struct DoubleOutcome {
    VertexConfiguration cfg;
    int baseCount = 0;
    std::vector<std::vector<int>> faces;  // ids: side * baseCount + base
    ComplexResult complexResult;
    bool ok() const { return complexResult.ok(); }
};

/// Split each vertex v of q into a pair (S_v, T_v) on the two orbits of a
/// vertex configuration and lift the faces so that consecutive face vertices
/// alternate orbits. Faces of even length lift to two decorated copies, faces
/// of odd length to a single face running around twice. When the edge graph
/// of q is bipartite the lift above falls apart instead, and the one workable
/// arrangement is the cube's: its two vertex classes are opposed tetrahedra,
/// rescaled against each other.
DoubleOutcome doublePolyhedron(const Index1Polyhedron& q);

}  // namespace index2
