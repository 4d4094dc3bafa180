#pragma once

#include "index2/pointgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace index2 {

enum class SolidKind { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

const char* name(SolidKind k);
GroupKind ambientGroup(SolidKind k);

/// A Platonic solid as an exact vertex set with its edge graph. The edge graph
/// is derived from the vertex coordinates (pairs at minimal nonzero squared
/// distance), not from a hardcoded edge list.
struct Solid {
    SolidKind kind;
    std::vector<Vec3> vertices;
    int valency = 0;   // q: edges per vertex
    int diameter = 0;  // graph diameter
    std::vector<std::vector<int>> adjacency;
    std::vector<std::vector<int>> dist;  // all-pairs graph distance

    static const Solid& get(SolidKind kind);

    int indexOf(const Vec3& v) const;  // -1 if absent
    /// -1 when the solid has no antipodal partner for v (tetrahedron).
    int antipodeOf(int v) const;
    /// Vertex permutation induced by an ambient-group element.
    std::vector<int> permutationOf(const Mat3& g) const;
    /// Combinatorial faces, computed from supporting planes and the edge graph.
    std::vector<std::vector<int>> faceCycles() const;
};

/// How the second vertex orbit sits relative to the first: scaled copy λ·S or
/// scaled point reflection -λ·S (the latter only for the tetrahedron).
enum class Alignment { Aligned, Opposed };

/// One cell of the configuration scan: base solid, orbit alignment, and the
/// combinatorial edge length d. The scale ratio λ stays symbolic unless a
/// concrete value is attached.
struct VertexConfiguration {
    SolidKind base = SolidKind::Tetrahedron;
    Alignment alignment = Alignment::Aligned;
    int edgeLength = 1;
    std::optional<FieldElement> lambda;  // generic when absent

    /// "tetA", "tetO", "oct", "cube", "dod", "ico" with the edge length
    /// appended for solids where several lengths are scanned: "ico2", "dod4".
    std::string id() const;
    bool operator==(const VertexConfiguration& o) const {
        return base == o.base && alignment == o.alignment && edgeLength == o.edgeLength;
    }
};

/// Combinatorial edge length between a base vertex u of S and the base vertex
/// of a second-orbit vertex: graph distance in S when aligned, distance in the
/// cube S ∪ -S when opposed.
int combDistance(const VertexConfiguration& cfg, int u, int vBase);

/// Base indices w that can follow the directed edge (prev -> cur): the
/// vertices at combinatorial distance d from cur's base, with the backtrack
/// vertex removed. prev and the results live on the side opposite to cur.
std::vector<int> successorCandidates(const VertexConfiguration& cfg, int prevBase, int curBase);

struct PrecheckResult {
    bool pass = false;
    std::string reason;  // "antipodal" or "precheck-count" when failing
    std::string detail;
};

/// Uniform candidate-count test: every directed edge must admit exactly
/// valency-1 continuations and none of them may be antipodal to the current
/// vertex (an edge through the centre cannot occur).
PrecheckResult precheck(const VertexConfiguration& cfg);

/// The candidate configurations a scan visits: aligned d = 1..diameter for
/// each solid, plus the opposed tetrahedron.
std::vector<VertexConfiguration> scanConfigurations();

}  // namespace index2
