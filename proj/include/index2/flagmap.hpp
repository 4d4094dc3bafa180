#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace index2 {

/// Lexicographic minimum of a cyclic vertex sequence over all rotations and
/// the two traversal directions. Used everywhere faces are compared.
std::vector<int> canonicalCycle(const std::vector<int>& cycle);

struct SchlafliData {
    int p = 0;        // face length
    int q = 0;        // vertex valency
    int petrie = 0;   // Petrie polygon length
    int f0 = 0, f1 = 0, f2 = 0;
    bool orientable = false;
    int genus = 0;    // cross-cap count when non-orientable

    std::string typeString() const;  // "{p,q}_r"
};

/// A polyhedron as its flag complex: three fixed-point-free involutions on
/// the (vertex, edge, face) incidence triples.
struct FlagComplex {
    int nVertices = 0;
    std::vector<std::vector<int>> faces;       // cyclic vertex sequences
    std::vector<std::array<int, 2>> edges;     // edge id -> endpoints, min first

    std::vector<int> r0, r1, r2;               // flag adjacencies
    std::vector<int> vertexOf, edgeOf, faceOf; // labels per flag

    std::size_t flagCount() const { return r0.size(); }
    int edgeCount() const { return static_cast<int>(edges.size()); }

    /// All flag permutations commuting with r0, r1, r2.
    std::vector<std::vector<int>> automorphisms() const;
    bool isRegular() const;

    /// Face length, valency, Petrie length, face vector, orientability, genus.
    /// Meaningful for regular complexes (uniform p and q are asserted).
    SchlafliData schlafli() const;

    bool isIsomorphic(const FlagComplex& other) const;

    /// {"vertices": n, "faces": [...]} with faces in canonical sorted order.
    std::string toJson() const;
};

/// Validation outcome: either a complex or a rejection with the reason codes
/// used throughout ("edge-degree", "disconnected", "vertex-figure", ...).
struct ComplexResult {
    std::optional<FlagComplex> complex;
    std::string reason;
    std::string witness;

    bool ok() const { return complex.has_value(); }
};

/// Build and validate a flag complex from oriented face cycles. Checks, in
/// order: every edge lies in exactly two faces, the edge graph is connected
/// and covers all vertices, every vertex figure is one simple cycle of
/// length >= 3, and the flag graph is connected.
ComplexResult fromFaces(int vertexCount, const std::vector<std::vector<int>>& faceCycles);

/// Replace faces by Petrie polygons. Rejects ("petrie") when a Petrie polygon
/// revisits a vertex; otherwise validates the new face set via fromFaces.
ComplexResult petrieDual(const FlagComplex& c);

}  // namespace index2
