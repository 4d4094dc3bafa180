#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "index2/solids.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace index2;

namespace {
const SolidKind kAll[] = {SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron,
                          SolidKind::Dodecahedron, SolidKind::Icosahedron};

std::map<int, int> distanceSpectrum(const Solid& s) {
    std::map<int, int> spec;
    for (int d : s.dist[0]) ++spec[d];
    return spec;
}
}  // namespace

TEST_CASE("vertex counts, valencies, diameters") {
    auto check = [](SolidKind k, std::size_t n, int q, int diam, std::size_t edges) {
        const Solid& s = Solid::get(k);
        CHECK(s.vertices.size() == n);
        CHECK(s.valency == q);
        CHECK(s.diameter == diam);
        std::size_t half = 0;
        for (const auto& nb : s.adjacency) half += nb.size();
        CHECK(half == 2 * edges);
    };
    check(SolidKind::Tetrahedron, 4, 3, 1, 6);
    check(SolidKind::Cube, 8, 3, 3, 12);
    check(SolidKind::Octahedron, 6, 4, 2, 12);
    check(SolidKind::Dodecahedron, 20, 3, 5, 30);
    check(SolidKind::Icosahedron, 12, 5, 3, 30);
}

TEST_CASE("distance spectra from a fresh breadth-first search") {
    // recompute distances in the test without touching Solid::dist
    for (SolidKind k : kAll) {
        const Solid& s = Solid::get(k);
        const int n = static_cast<int>(s.vertices.size());
        for (int src = 0; src < n; ++src) {
            std::vector<int> d(n, -1);
            d[src] = 0;
            std::vector<int> frontier{src};
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int u : frontier)
                    for (int w : s.adjacency[u])
                        if (d[w] < 0) {
                            d[w] = d[u] + 1;
                            next.push_back(w);
                        }
                frontier = std::move(next);
            }
            for (int i = 0; i < n; ++i) CHECK(d[i] == s.dist[src][i]);
        }
    }
    using Spec = std::map<int, int>;
    CHECK(distanceSpectrum(Solid::get(SolidKind::Tetrahedron)) == Spec{{0, 1}, {1, 3}});
    CHECK(distanceSpectrum(Solid::get(SolidKind::Cube)) == Spec{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    CHECK(distanceSpectrum(Solid::get(SolidKind::Octahedron)) == Spec{{0, 1}, {1, 4}, {2, 1}});
    CHECK(distanceSpectrum(Solid::get(SolidKind::Dodecahedron)) ==
          Spec{{0, 1}, {1, 3}, {2, 6}, {3, 6}, {4, 3}, {5, 1}});
    CHECK(distanceSpectrum(Solid::get(SolidKind::Icosahedron)) ==
          Spec{{0, 1}, {1, 5}, {2, 5}, {3, 1}});
}

TEST_CASE("antipodes") {
    CHECK(Solid::get(SolidKind::Tetrahedron).antipodeOf(0) == -1);
    for (SolidKind k : {SolidKind::Cube, SolidKind::Octahedron, SolidKind::Dodecahedron,
                        SolidKind::Icosahedron}) {
        const Solid& s = Solid::get(k);
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
            int a = s.antipodeOf(v);
            REQUIRE(a >= 0);
            CHECK(a != v);
            CHECK(s.antipodeOf(a) == v);
            CHECK(s.dist[v][a] == s.diameter);
        }
    }
}

TEST_CASE("ambient symmetry group acts on the vertex set") {
    for (SolidKind k : kAll) {
        const Solid& s = Solid::get(k);
        const PointGroup& g = PointGroup::get(ambientGroup(k));
        for (const Mat3& m : g.elements()) {
            auto perm = s.permutationOf(m);  // throws if the set is not preserved
            // edges map to edges
            for (int u = 0; u < static_cast<int>(s.vertices.size()); u += 3)
                for (int w : s.adjacency[u]) {
                    const auto& nb = s.adjacency[perm[u]];
                    CHECK(std::find(nb.begin(), nb.end(), perm[w]) != nb.end());
                }
        }
        // transitivity: orbit of vertex 0 is the whole set
        auto orbit = PointGroup::orbit(s.vertices[0], g.elements());
        CHECK(orbit.size() == s.vertices.size());
    }
}

TEST_CASE("face cycles") {
    auto checkFaces = [](SolidKind k, std::size_t count, std::size_t size) {
        const Solid& s = Solid::get(k);
        auto faces = s.faceCycles();
        CHECK(faces.size() == count);
        std::map<int, int> perVertex;
        for (const auto& f : faces) {
            CHECK(f.size() == size);
            for (std::size_t i = 0; i < f.size(); ++i) {
                int u = f[i], w = f[(i + 1) % f.size()];
                const auto& nb = s.adjacency[u];
                CHECK(std::find(nb.begin(), nb.end(), w) != nb.end());
                ++perVertex[u];
            }
        }
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v)
            CHECK(perVertex[v] == s.valency);
    };
    checkFaces(SolidKind::Tetrahedron, 4, 3);
    checkFaces(SolidKind::Cube, 6, 4);
    checkFaces(SolidKind::Octahedron, 8, 3);
    checkFaces(SolidKind::Dodecahedron, 12, 5);
    checkFaces(SolidKind::Icosahedron, 20, 3);
}

TEST_CASE("opposed tetrahedra use the cube graph") {
    VertexConfiguration cfg{SolidKind::Tetrahedron, Alignment::Opposed, 1, std::nullopt};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(combDistance(cfg, i, j) == (i == j ? 3 : 1));
}

TEST_CASE("aligned distance is the graph distance") {
    VertexConfiguration cfg{SolidKind::Dodecahedron, Alignment::Aligned, 4, std::nullopt};
    const Solid& s = Solid::get(SolidKind::Dodecahedron);
    for (int i = 0; i < 20; i += 5)
        for (int j = 0; j < 20; ++j) CHECK(combDistance(cfg, i, j) == s.dist[i][j]);
}

TEST_CASE("precheck verdicts over the whole scan") {
    std::map<std::string, std::string> expected = {
        {"tetO", "pass"},  {"tetA", "pass"},
        {"oct", "pass"},   {"oct2", "antipodal"},
        {"dod1", "pass"},  {"dod2", "precheck-count"},
        {"dod3", "precheck-count"}, {"dod4", "pass"},
        {"dod5", "antipodal"},
        {"ico1", "pass"},  {"ico2", "pass"}, {"ico3", "antipodal"},
        {"cube1", "pass"}, {"cube2", "pass"}, {"cube3", "antipodal"},
    };
    auto configs = scanConfigurations();
    CHECK(configs.size() == expected.size());
    for (const auto& cfg : configs) {
        auto res = precheck(cfg);
        REQUIRE(expected.count(cfg.id()) == 1);
        CHECK((res.pass ? "pass" : res.reason) == expected[cfg.id()]);
    }
}

TEST_CASE("passing configurations give uniform candidate counts") {
    for (const auto& cfg : scanConfigurations()) {
        if (!precheck(cfg).pass) continue;
        const Solid& s = Solid::get(cfg.base);
        const int n = static_cast<int>(s.vertices.size());
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                if (combDistance(cfg, u, v) != cfg.edgeLength) continue;
                auto cands = successorCandidates(cfg, u, v);
                CHECK(cands.size() == static_cast<std::size_t>(s.valency - 1));
                for (int w : cands) {
                    CHECK(w != u);
                    CHECK(combDistance(cfg, w, v) == cfg.edgeLength);
                }
            }
    }
}

TEST_CASE("configuration ids") {
    std::set<std::string> ids;
    for (const auto& cfg : scanConfigurations()) ids.insert(cfg.id());
    std::set<std::string> expected = {"tetO", "tetA", "oct",  "oct2", "dod1", "dod2", "dod3", "dod4",
                                      "dod5", "ico1", "ico2", "ico3", "cube1", "cube2", "cube3"};
    CHECK(ids == expected);
}
