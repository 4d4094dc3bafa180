#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "index2/analysis.hpp"
#include "index2/tracer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace index2;

namespace {

VertexConfiguration findConfig(const std::string& id) {
    for (const auto& c : scanConfigurations())
        if (c.id() == id) return c;
    throw std::runtime_error("no such configuration: " + id);
}

GeometricPolyhedron assembled(const std::string& cfgId, const std::string& shape) {
    auto parsed = parseShape(shape);
    REQUIRE(parsed.has_value());
    auto out = assemble(findConfig(cfgId), *parsed);
    REQUIRE_MESSAGE(out.ok(), cfgId, " ", shape, " rejected: ", out.reason);
    return *out.poly;
}

enum class Planar { None, Tau, TwoPlusRoot5 };

struct FamilyRow {
    const char* cfg;
    const char* shape;
    int p;             // face size, also the face stabilizer order in G
    Planar planar;     // exact ratio making all faces planar, if any
    bool degenerate1;  // planar only at the orbit-collapsing ratio 1
};

const std::vector<FamilyRow>& allFamilies() {
    static const std::vector<FamilyRow> rows = {
        {"tetO", "rr", 4, Planar::None, true},
        {"tetO", "rl", 6, Planar::None, false},
        {"tetA", "rl", 4, Planar::None, false},
        {"tetA", "rr", 6, Planar::None, true},
        {"oct", "rl", 6, Planar::None, false},
        {"oct", "rr", 6, Planar::None, true},
        {"dod1", "rl", 10, Planar::None, false},
        {"dod1", "rr", 10, Planar::None, true},
        {"dod4", "rr", 10, Planar::None, true},
        {"dod4", "rl", 10, Planar::None, false},
        {"ico1", "hrsr", 4, Planar::Tau, false},
        {"ico1", "hrsl", 6, Planar::TwoPlusRoot5, false},
        {"ico2", "hrsl", 4, Planar::None, false},
        {"ico2", "hrsr", 6, Planar::None, false},
        {"ico2", "hrhl", 6, Planar::None, false},
        {"ico2", "hrhr", 10, Planar::None, true},
        {"ico1", "hrhr", 6, Planar::None, true},
        {"ico1", "hrhl", 10, Planar::None, false},
        {"ico1", "srsl", 6, Planar::None, false},
        {"ico1", "srsr", 10, Planar::None, true},
        {"ico2", "srsr", 6, Planar::None, true},
        {"ico2", "srsl", 10, Planar::None, false},
    };
    return rows;
}

int ambientOrder(SolidKind k) {
    return static_cast<int>(expectedOrder(ambientGroup(k)));
}

}  // namespace

TEST_CASE("every family realizes the full ambient group at index two") {
    for (const auto& row : allFamilies()) {
        CAPTURE(row.cfg);
        CAPTURE(row.shape);
        auto cfg = findConfig(row.cfg);
        auto poly = assembled(row.cfg, row.shape);
        auto rep = analyzeSymmetry(cfg, poly.complex);

        CHECK(rep.symGroupOrder == ambientOrder(cfg.base));
        CHECK(rep.rotSubgroupOrder * 2 == rep.symGroupOrder);
        CHECK(rep.index == 2);
        CHECK(rep.flagOrbitsUnderG == 2);
        CHECK(rep.vertexOrbits == 2);
        CHECK(rep.edgeOrbits == 1);
        CHECK(rep.faceOrbits == 1);
        CHECK(rep.vertexOrbitsRot == 2);
        CHECK(rep.edgeOrbitsRot == 1);
        CHECK(rep.faceOrbitsRot == 1);
        CHECK(rep.faceStabilizerShape == "dihedral of order " + std::to_string(row.p));

        // |Aut| = index * |G| must equal four times the edge count
        int edges = static_cast<int>(poly.complex.edges.size());
        CHECK(rep.index * rep.symGroupOrder == 4 * edges);

        CHECK(static_cast<int>(symmetryElements(cfg, poly.complex).size()) == rep.symGroupOrder);

        auto fs = faceStabilizerCheck(cfg, poly.complex);
        CHECK_MESSAGE(fs.pass, row.cfg, " ", row.shape, ": ", fs.witness);
        auto na = noAntipodalEdges(cfg, poly.complex);
        CHECK_MESSAGE(na.pass, row.cfg, " ", row.shape, ": ", na.witness);
    }
}

TEST_CASE("planar ratio search finds exactly two exact solutions") {
    const FieldElement one(1);
    for (const auto& row : allFamilies()) {
        CAPTURE(row.cfg);
        CAPTURE(row.shape);
        auto cfg = findConfig(row.cfg);
        auto poly = assembled(row.cfg, row.shape);
        auto search = findPlanarLambda(cfg, poly.faces);

        CHECK(search.unverified.empty());
        if (row.degenerate1) {
            REQUIRE(search.degenerate.size() == 1);
            CHECK(search.degenerate[0] == one);
        } else {
            CHECK(search.degenerate.empty());
        }
        switch (row.planar) {
            case Planar::None:
                CHECK_FALSE(search.lambda.has_value());
                break;
            case Planar::Tau:
                REQUIRE(search.lambda.has_value());
                CHECK(*search.lambda == FieldElement::tau());
                break;
            case Planar::TwoPlusRoot5:
                REQUIRE(search.lambda.has_value());
                CHECK(*search.lambda == FieldElement(2) + FieldElement::sqrt5());
                break;
        }
    }
}

TEST_CASE("face planarity at concrete ratios") {
    auto planarCount = [](const std::string& cfgId, const std::string& shape,
                          const FieldElement& lam) {
        auto poly = assembled(cfgId, shape);
        auto flags = facePlanarity(findConfig(cfgId), poly.faces, lam);
        int t = 0;
        for (bool b : flags) t += b;
        return std::pair<int, int>(t, static_cast<int>(flags.size()));
    };

    CHECK(planarCount("ico1", "hrsr", FieldElement::tau()) == std::pair(30, 30));
    CHECK(planarCount("ico1", "hrsr", FieldElement(2)) == std::pair(0, 30));
    CHECK(planarCount("ico1", "hrsl", FieldElement(2) + FieldElement::sqrt5()) ==
          std::pair(20, 20));
    CHECK(planarCount("ico1", "hrsl", FieldElement::tau()) == std::pair(0, 20));
    // at ratio 1 the opposed-tetrahedron squares land on a cube's faces,
    // while the hexagonal partner family stays skew
    CHECK(planarCount("tetO", "rr", FieldElement(1)) == std::pair(6, 6));
    CHECK(planarCount("tetO", "rl", FieldElement(1)) == std::pair(0, 4));
    CHECK(planarCount("oct", "rr", FieldElement(1)) == std::pair(8, 8));
}

TEST_CASE("cycle actions classify rotations and reflections") {
    std::vector<int> face = {0, 1, 2, 3, 4, 5};

    auto rot1 = cycleActionOf(face, {1, 2, 3, 4, 5, 0});
    REQUIRE(rot1.has_value());
    CHECK(rot1->isRotation);
    CHECK(rot1->shift == 1);

    auto ident = cycleActionOf(face, face);
    REQUIRE(ident.has_value());
    CHECK(ident->isRotation);
    CHECK(ident->shift == 0);

    // reflection with even shift fixes positions 0 and 3
    auto fix0 = cycleActionOf(face, {0, 5, 4, 3, 2, 1});
    REQUIRE(fix0.has_value());
    CHECK_FALSE(fix0->isRotation);
    CHECK(fix0->shift == 0);

    // reflection with odd shift fixes no position
    auto mid = cycleActionOf(face, {1, 0, 5, 4, 3, 2});
    REQUIRE(mid.has_value());
    CHECK_FALSE(mid->isRotation);
    CHECK(mid->shift == 1);

    CHECK_FALSE(cycleActionOf(face, {0, 2, 1, 3, 4, 5}).has_value());
    CHECK_FALSE(cycleActionOf(face, {0, 1, 2}).has_value());
}

TEST_CASE("antipodal edge detection by rays") {
    auto ico = findConfig("ico1");
    const auto& solid = Solid::get(ico.base);
    int n = static_cast<int>(solid.vertices.size());
    int anti = solid.antipodeOf(0);
    REQUIRE(anti >= 0);
    // opposite rays on the same orbit, and across orbits
    CHECK(antipodalEdge(ico, 0, anti, n));
    CHECK(antipodalEdge(ico, 0, n + anti, n));
    CHECK_FALSE(antipodalEdge(ico, 0, n + 0, n));
    CHECK_FALSE(antipodalEdge(ico, 0, solid.adjacency[0][0], n));

    // with the second orbit point-reflected, n + i sits on the ray opposite i
    auto tetO = findConfig("tetO");
    int nt = static_cast<int>(Solid::get(tetO.base).vertices.size());
    CHECK(antipodalEdge(tetO, 0, nt + 0, nt));
    CHECK_FALSE(antipodalEdge(tetO, 0, nt + 1, nt));
}

TEST_CASE("ambient symmetries induce half of the automorphism group") {
    for (const std::string cfgId : {"tetO", "oct", "ico1"}) {
        const std::string shape = cfgId == "ico1" ? "hrsr" : "rr";
        CAPTURE(cfgId);
        auto cfg = findConfig(cfgId);
        auto poly = assembled(cfgId, shape);
        const auto& grp = PointGroup::get(ambientGroup(cfg.base));
        int n = static_cast<int>(Solid::get(cfg.base).vertices.size());

        std::set<std::vector<int>> induced;
        for (std::size_t gi : symmetryElements(cfg, poly.complex)) {
            auto vmap = inducedVertexMap(cfg, grp.elements()[gi], n);
            auto perm = inducedFlagPermutation(poly.complex, vmap);
            REQUIRE(perm.has_value());
            induced.insert(*perm);
        }
        CHECK(induced.size() == grp.elements().size());

        auto autos = poly.complex.automorphisms();
        std::set<std::vector<int>> all(autos.begin(), autos.end());
        CHECK(all.size() == 2 * induced.size());
        for (const auto& perm : induced) CHECK(all.count(perm) == 1);

        // closed under composition, hence a subgroup of index two
        bool closed = true;
        for (const auto& x : induced) {
            for (const auto& y : induced) {
                std::vector<int> xy(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) xy[i] = x[y[i]];
                if (!induced.count(xy)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        CHECK(closed);
    }
}

TEST_CASE("petrie dual keeps the same ambient symmetry set") {
    for (const auto& [cfgId, shape] :
         {std::pair("tetO", "rr"), std::pair("oct", "rr"), std::pair("ico1", "hrsr")}) {
        CAPTURE(cfgId);
        auto cfg = findConfig(cfgId);
        auto poly = assembled(cfgId, shape);
        auto pd = petrieDual(poly.complex);
        REQUIRE(pd.ok());
        CHECK(symmetryElements(cfg, *pd.complex) == symmetryElements(cfg, poly.complex));
    }
}
