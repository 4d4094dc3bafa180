#include "index2/solids.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace index2 {
namespace {

const FieldElement kOne(1);

std::vector<Vec3> cyclicShifts(const Vec3& v) {
    return {v, Vec3{v.y, v.z, v.x}, Vec3{v.z, v.x, v.y}};
}

std::vector<Vec3> makeVertices(SolidKind kind) {
    const FieldElement tau = FieldElement::tau();
    const FieldElement invTau = tau - kOne;  // 1/tau
    std::vector<Vec3> out;
    switch (kind) {
        case SolidKind::Tetrahedron:
            out = {Vec3{kOne, kOne, kOne}, Vec3{kOne, -kOne, -kOne},
                   Vec3{-kOne, kOne, -kOne}, Vec3{-kOne, -kOne, kOne}};
            break;
        case SolidKind::Cube:
            for (int sx : {1, -1})
                for (int sy : {1, -1})
                    for (int sz : {1, -1})
                        out.push_back(Vec3{FieldElement(sx), FieldElement(sy), FieldElement(sz)});
            break;
        case SolidKind::Octahedron:
            for (int s : {1, -1}) {
                FieldElement e(s);
                out.push_back(Vec3{e, FieldElement(0), FieldElement(0)});
                out.push_back(Vec3{FieldElement(0), e, FieldElement(0)});
                out.push_back(Vec3{FieldElement(0), FieldElement(0), e});
            }
            break;
        case SolidKind::Icosahedron:
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (const Vec3& v :
                         cyclicShifts(Vec3{FieldElement(0), FieldElement(s1), FieldElement(s2) * tau}))
                        out.push_back(v);
            break;
        case SolidKind::Dodecahedron:
            for (int sx : {1, -1})
                for (int sy : {1, -1})
                    for (int sz : {1, -1})
                        out.push_back(Vec3{FieldElement(sx), FieldElement(sy), FieldElement(sz)});
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (const Vec3& v : cyclicShifts(
                             Vec3{FieldElement(0), FieldElement(s1) * tau, FieldElement(s2) * invTau}))
                        out.push_back(v);
            break;
    }
    return out;
}

Solid build(SolidKind kind) {
    Solid s;
    s.kind = kind;
    s.vertices = makeVertices(kind);
    const std::size_t n = s.vertices.size();

    // circumsphere sanity: one common squared norm
    const FieldElement r2 = s.vertices[0].normSq();
    for (const Vec3& v : s.vertices)
        if (v.normSq() != r2) throw std::logic_error("Solid: vertices not on one sphere");

    // edges join pairs at the minimal nonzero squared distance
    std::optional<FieldElement> minD2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FieldElement d2 = (s.vertices[i] - s.vertices[j]).normSq();
            if (!minD2 || d2 < *minD2) minD2 = d2;
        }
    s.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (s.vertices[i] - s.vertices[j]).normSq() == *minD2)
                s.adjacency[i].push_back(static_cast<int>(j));

    s.valency = static_cast<int>(s.adjacency[0].size());
    for (const auto& nb : s.adjacency)
        if (static_cast<int>(nb.size()) != s.valency)
            throw std::logic_error("Solid: valency not uniform");

    s.dist.assign(n, std::vector<int>(n, -1));
    for (std::size_t src = 0; src < n; ++src) {
        auto& d = s.dist[src];
        d[src] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(src));
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : s.adjacency[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
        for (int dv : d) {
            if (dv < 0) throw std::logic_error("Solid: edge graph disconnected");
            s.diameter = std::max(s.diameter, dv);
        }
    }
    return s;
}

}  // namespace

const char* name(SolidKind k) {
    switch (k) {
        case SolidKind::Tetrahedron: return "tetrahedron";
        case SolidKind::Cube: return "cube";
        case SolidKind::Octahedron: return "octahedron";
        case SolidKind::Dodecahedron: return "dodecahedron";
        case SolidKind::Icosahedron: return "icosahedron";
    }
    return "?";
}

GroupKind ambientGroup(SolidKind k) {
    switch (k) {
        case SolidKind::Tetrahedron: return GroupKind::Tetrahedral;
        case SolidKind::Cube:
        case SolidKind::Octahedron: return GroupKind::Octahedral;
        case SolidKind::Dodecahedron:
        case SolidKind::Icosahedron: return GroupKind::Icosahedral;
    }
    return GroupKind::Tetrahedral;
}

const Solid& Solid::get(SolidKind kind) {
    static const std::map<SolidKind, Solid> cache = [] {
        std::map<SolidKind, Solid> m;
        for (SolidKind k : {SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron,
                            SolidKind::Dodecahedron, SolidKind::Icosahedron})
            m.emplace(k, build(k));
        return m;
    }();
    return cache.at(kind);
}

int Solid::indexOf(const Vec3& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return static_cast<int>(i);
    return -1;
}

int Solid::antipodeOf(int v) const { return indexOf(-vertices[v]); }

std::vector<int> Solid::permutationOf(const Mat3& g) const {
    std::vector<int> perm(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int j = indexOf(g.apply(vertices[i]));
        if (j < 0) throw std::invalid_argument("Solid: matrix does not preserve the vertex set");
        perm[i] = j;
    }
    return perm;
}

std::vector<std::vector<int>> Solid::faceCycles() const {
    // Supporting-plane directions of the faces are the dual solid's vertices.
    std::vector<Vec3> dirs;
    if (kind == SolidKind::Tetrahedron)
        for (const Vec3& v : vertices) dirs.push_back(-v);
    else {
        SolidKind dual = kind;
        switch (kind) {
            case SolidKind::Cube: dual = SolidKind::Octahedron; break;
            case SolidKind::Octahedron: dual = SolidKind::Cube; break;
            case SolidKind::Dodecahedron: dual = SolidKind::Icosahedron; break;
            case SolidKind::Icosahedron: dual = SolidKind::Dodecahedron; break;
            default: break;
        }
        dirs = get(dual).vertices;
    }

    std::vector<std::vector<int>> faces;
    for (const Vec3& nrm : dirs) {
        std::optional<FieldElement> best;
        for (const Vec3& v : vertices) {
            FieldElement h = nrm.dot(v);
            if (!best || h > *best) best = h;
        }
        std::vector<int> onFace;
        std::set<int> onFaceSet;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (nrm.dot(vertices[i]) == *best) {
                onFace.push_back(static_cast<int>(i));
                onFaceSet.insert(static_cast<int>(i));
            }
        // walk the face boundary inside the edge graph
        std::vector<int> cycle{onFace.front()};
        int prev = -1;
        while (true) {
            int cur = cycle.back();
            int next = -1;
            for (int w : adjacency[cur])
                if (w != prev && onFaceSet.count(w)) {
                    next = w;
                    break;
                }
            if (next < 0 || static_cast<std::size_t>(next) == static_cast<std::size_t>(cycle.front()))
                break;
            prev = cur;
            cycle.push_back(next);
        }
        if (cycle.size() != onFace.size())
            throw std::logic_error("Solid: face walk did not close over the supporting plane");
        faces.push_back(std::move(cycle));
    }
    return faces;
}

std::string VertexConfiguration::id() const {
    std::ostringstream os;
    switch (base) {
        case SolidKind::Tetrahedron:
            os << (alignment == Alignment::Opposed ? "tetO" : "tetA");
            if (edgeLength != 1) os << edgeLength;
            return os.str();
        case SolidKind::Octahedron:
            os << "oct";
            if (edgeLength != 1) os << edgeLength;
            return os.str();
        case SolidKind::Cube: os << "cube"; break;
        case SolidKind::Dodecahedron: os << "dod"; break;
        case SolidKind::Icosahedron: os << "ico"; break;
        default: break;
    }
    os << edgeLength;
    return os.str();
}

int combDistance(const VertexConfiguration& cfg, int u, int vBase) {
    const Solid& s = Solid::get(cfg.base);
    if (cfg.alignment == Alignment::Aligned) return s.dist[u][vBase];
    // opposed: distance in the cube formed by S together with -S
    const Solid& cube = Solid::get(SolidKind::Cube);
    int cu = cube.indexOf(s.vertices[u]);
    int cv = cube.indexOf(-s.vertices[vBase]);
    if (cu < 0 || cv < 0) throw std::logic_error("combDistance: opposed base is not the tetrahedron");
    return cube.dist[cu][cv];
}

std::vector<int> successorCandidates(const VertexConfiguration& cfg, int prevBase, int curBase) {
    const Solid& s = Solid::get(cfg.base);
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(s.vertices.size()); ++w)
        if (w != prevBase && combDistance(cfg, w, curBase) == cfg.edgeLength) out.push_back(w);
    return out;
}

PrecheckResult precheck(const VertexConfiguration& cfg) {
    const Solid& s = Solid::get(cfg.base);
    const int n = static_cast<int>(s.vertices.size());
    for (int v = 0; v < n; ++v) {
        std::vector<int> reach;
        for (int w = 0; w < n; ++w)
            if (combDistance(cfg, w, v) == cfg.edgeLength) reach.push_back(w);
        for (int w : reach) {
            bool antipodal = cfg.alignment == Alignment::Aligned ? s.antipodeOf(v) == w : w == v;
            if (antipodal) {
                std::ostringstream os;
                os << "edge of combinatorial length " << cfg.edgeLength
                   << " would join vertex " << v << " to its antipode";
                return {false, "antipodal", os.str()};
            }
        }
        if (static_cast<int>(reach.size()) != s.valency) {
            std::ostringstream os;
            os << "vertex " << v << " sees " << reach.size() << " vertices at combinatorial distance "
               << cfg.edgeLength << ", valency is " << s.valency;
            return {false, "precheck-count", os.str()};
        }
    }
    return {true, "", ""};
}

std::vector<VertexConfiguration> scanConfigurations() {
    std::vector<VertexConfiguration> out;
    out.push_back({SolidKind::Tetrahedron, Alignment::Opposed, 1, std::nullopt});
    out.push_back({SolidKind::Tetrahedron, Alignment::Aligned, 1, std::nullopt});
    for (SolidKind k : {SolidKind::Octahedron, SolidKind::Dodecahedron, SolidKind::Icosahedron,
                        SolidKind::Cube}) {
        const Solid& s = Solid::get(k);
        for (int d = 1; d <= s.diameter; ++d)
            out.push_back({k, Alignment::Aligned, d, std::nullopt});
    }
    return out;
}

}  // namespace index2
