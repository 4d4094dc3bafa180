#include "index2/doubling.hpp"

#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "index2/tracer.hpp"

namespace index2 {

namespace {

Index1Polyhedron fromSolidFaces(std::string name, SolidKind kind) {
    const Solid& s = Solid::get(kind);
    auto faces = s.faceCycles();
    auto res = fromFaces(static_cast<int>(s.vertices.size()), faces);
    if (!res.ok())
        throw std::logic_error("catalogue: " + name + " rejected: " + res.reason);
    return {std::move(name), kind, 1, std::move(faces), std::move(*res.complex)};
}

Index1Polyhedron fromUniformTrace(std::string name, SolidKind kind, int dist, Turn turn) {
    UniformTraceResult res = assembleUniform(kind, dist, turn);
    if (!res.complexResult.ok())
        throw std::logic_error("catalogue: " + name + " rejected: " + res.complexResult.reason);
    return {std::move(name), kind, dist, std::move(res.faces),
            std::move(*res.complexResult.complex)};
}

Index1Polyhedron petrieOf(const Index1Polyhedron& q) {
    ComplexResult res = petrieDual(q.complex);
    if (!res.ok())
        throw std::logic_error("catalogue: Petrie dual of " + q.name + " rejected: " + res.reason);
    return {"Petrie-dual of " + q.name, q.vertexSolid, q.dist, res.complex->faces,
            std::move(*res.complex)};
}

/// 2-colouring of the edge graph; empty when an odd cycle exists.
std::vector<int> bipartiteClasses(const FlagComplex& c) {
    std::vector<int> colour(c.nVertices, -1);
    colour[0] = 0;
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (const auto& e : c.edges) {
            if (e[0] != v && e[1] != v) continue;
            int w = e[0] == v ? e[1] : e[0];
            if (colour[w] == -1) {
                colour[w] = 1 - colour[v];
                work.push(w);
            } else if (colour[w] == colour[v]) {
                return {};
            }
        }
    }
    return colour;
}

}  // namespace

const std::vector<Index1Polyhedron>& catalogue() {
    static const std::vector<Index1Polyhedron> entries = [] {
        std::vector<Index1Polyhedron> v;
        v.push_back(fromSolidFaces("Tetrahedron", SolidKind::Tetrahedron));
        v.push_back(fromSolidFaces("Cube", SolidKind::Cube));
        v.push_back(fromSolidFaces("Octahedron", SolidKind::Octahedron));
        v.push_back(fromSolidFaces("Dodecahedron", SolidKind::Dodecahedron));
        v.push_back(fromSolidFaces("Icosahedron", SolidKind::Icosahedron));
        v.push_back(fromUniformTrace("Great Dodecahedron", SolidKind::Icosahedron, 1, Turn::SR));
        v.push_back(fromUniformTrace("Small Stellated Dodecahedron", SolidKind::Icosahedron, 2,
                                     Turn::HR));
        v.push_back(fromUniformTrace("Great Icosahedron", SolidKind::Icosahedron, 2, Turn::SR));
        v.push_back(fromUniformTrace("Great Stellated Dodecahedron", SolidKind::Dodecahedron, 4,
                                     Turn::R));
        const std::size_t originals = v.size();
        for (std::size_t i = 0; i < originals; ++i) v.push_back(petrieOf(v[i]));
        return v;
    }();
    return entries;
}

DoubleOutcome doublePolyhedron(const Index1Polyhedron& q) {
    const int n = q.complex.nVertices;
    DoubleOutcome out;

    std::vector<int> colour = bipartiteClasses(q.complex);
    std::set<std::vector<int>> keys;

    if (!colour.empty()) {
        // A bipartite edge graph makes the alternating lift fall apart into
        // two components. The cube is the one arrangement where the vertex
        // classes themselves serve as the orbits: they are the two opposed
        // tetrahedra inscribed in the cube, free to rescale independently.
        if (q.vertexSolid != SolidKind::Cube || q.dist != 1)
            throw std::invalid_argument(
                "doublePolyhedron: bipartite edge graph outside the cube arrangement");
        const Solid& cube = Solid::get(SolidKind::Cube);
        const Solid& tet = Solid::get(SolidKind::Tetrahedron);
        out.cfg = {SolidKind::Tetrahedron, Alignment::Opposed, 1, std::nullopt};
        out.baseCount = static_cast<int>(tet.vertices.size());
        std::vector<int> map(n);
        for (int vtx = 0; vtx < n; ++vtx) {
            int inTet = tet.indexOf(cube.vertices[vtx]);
            map[vtx] = inTet >= 0 ? inTet : out.baseCount + tet.indexOf(-cube.vertices[vtx]);
        }
        for (const auto& f : q.faces) {
            std::vector<int> lifted;
            lifted.reserve(f.size());
            for (int vtx : f) lifted.push_back(map[vtx]);
            keys.insert(canonicalCycle(lifted));
        }
    } else {
        out.cfg = {q.vertexSolid, Alignment::Aligned, q.dist, std::nullopt};
        out.baseCount = n;
        for (const auto& f : q.faces) {
            const int p = static_cast<int>(f.size());
            if (p % 2 == 0) {
                for (int phase = 0; phase < 2; ++phase) {
                    std::vector<int> lifted;
                    lifted.reserve(f.size());
                    for (int k = 0; k < p; ++k) lifted.push_back(((k + phase) % 2) * n + f[k]);
                    keys.insert(canonicalCycle(lifted));
                }
            } else {
                std::vector<int> lifted;
                lifted.reserve(2 * f.size());
                for (int k = 0; k < 2 * p; ++k) lifted.push_back((k % 2) * n + f[k % p]);
                keys.insert(canonicalCycle(lifted));
            }
        }
    }

    out.faces.assign(keys.begin(), keys.end());
    out.complexResult = fromFaces(2 * out.baseCount, out.faces);
    return out;
}

}  // namespace index2
