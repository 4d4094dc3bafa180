#include "index2/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace index2 {

namespace {

std::set<std::vector<int>> canonicalFaceSet(const std::vector<std::vector<int>>& faces) {
    std::set<std::vector<int>> r;
    for (const auto& f : faces) r.insert(canonicalCycle(f));
    return r;
}

}  // namespace

std::vector<Turn> turnAlphabet(const VertexConfiguration& cfg) {
    const Solid& solid = Solid::get(cfg.base);
    int n = static_cast<int>(solid.vertices.size());
    for (int u = 0; u < n; ++u) {
        if (combDistance(cfg, 0, u) != cfg.edgeLength) continue;
        std::vector<Turn> turns;
        for (const auto& [base, t] : classifyCandidates(cfg, 0, u, 0)) turns.push_back(t);
        std::sort(turns.begin(), turns.end(),
                  [](Turn x, Turn y) { return turnRank(x) < turnRank(y); });
        turns.erase(std::unique(turns.begin(), turns.end()), turns.end());
        return turns;
    }
    throw std::invalid_argument("turnAlphabet: no edge at distance " +
                                std::to_string(cfg.edgeLength));
}

std::vector<FaceShape> shapeClasses(const VertexConfiguration& cfg) {
    std::vector<Turn> alpha = turnAlphabet(cfg);
    std::set<FaceShape> reps;
    for (Turn a : alpha) {
        for (Turn b : alpha) {
            FaceShape s{a, b};
            FaceShape best = s;
            for (FaceShape t : {orbitSwap(s), reversed(s), orbitSwap(reversed(s))})
                if (t < best) best = t;
            reps.insert(best);
        }
    }
    return {reps.begin(), reps.end()};
}

std::string censusLabelFor(const std::string& schlafliType, int genus) {
    static const std::map<std::pair<std::string, int>, std::string> table = {
        {{"{6,4}_6", 3}, "R3.4*"},   {{"{10,3}_10", 5}, "R5.2*"},
        {{"{4,5}_6", 4}, "R4.2"},    {{"{6,5}_4", 9}, "R9.16*"},
        {{"{6,5}_10", 9}, "R9.15*"}, {{"{10,5}_6", 13}, "R13.8*"},
    };
    auto it = table.find({schlafliType, genus});
    return it == table.end() ? "" : it->second;
}

Enumeration enumerateAll() {
    Enumeration out;

    // the doubling route supplies the generator attribution: a family is
    // generated by a seed exactly when the doubled seed reproduces its
    // labeled face set on the same configuration
    struct DoubledSeed {
        std::string name;
        VertexConfiguration cfg;
        std::set<std::vector<int>> faces;
    };
    std::vector<DoubledSeed> seeds;
    for (const auto& q : catalogue()) {
        auto d = doublePolyhedron(q);
        if (!d.ok())
            throw std::logic_error("enumerateAll: doubling failed for " + q.name + ": " +
                                   d.complexResult.reason);
        seeds.push_back({q.name, d.cfg, canonicalFaceSet(d.faces)});
    }

    for (const auto& cfg : scanConfigurations()) {
        auto pre = precheck(cfg);
        if (!pre.pass) {
            out.rejections.push_back({cfg.id(), "", pre.reason, pre.detail});
            continue;
        }
        for (const FaceShape& shape : shapeClasses(cfg)) {
            auto res = assemble(cfg, shape);
            if (!res.ok()) {
                out.rejections.push_back({cfg.id(), shape.id(), res.reason, res.witness});
                continue;
            }
            const GeometricPolyhedron& poly = *res.poly;
            if (!poly.complex.isRegular()) {
                out.rejections.push_back({cfg.id(), shape.id(), "not-regular", ""});
                continue;
            }
            auto rep = analyzeSymmetry(cfg, poly.complex);
            if (rep.index != 2) {
                out.rejections.push_back({cfg.id(), shape.id(), "index!=2",
                                          "geometric index " + std::to_string(rep.index)});
                continue;
            }

            FamilyRecord rec;
            rec.familyId = cfg.id() + "-" + shape.id();
            rec.cfg = cfg;
            rec.shape = shape;
            auto sch = poly.complex.schlafli();
            rec.schlafliType = sch.typeString();
            rec.p = sch.p;
            rec.q = sch.q;
            rec.petrie = sch.petrie;
            rec.f0 = sch.f0;
            rec.f1 = sch.f1;
            rec.f2 = sch.f2;
            rec.genus = sch.genus;
            rec.orientable = sch.orientable;

            auto faces = canonicalFaceSet(poly.faces);
            for (const auto& seed : seeds)
                if (seed.cfg == cfg && seed.faces == faces) {
                    rec.generatorName = seed.name;
                    break;
                }
            rec.censusLabel = censusLabelFor(rec.schlafliType, rec.genus);
            rec.planarLambda = findPlanarLambda(cfg, poly.faces).lambda;
            out.families.push_back(std::move(rec));
        }
    }
    return out;
}

const Enumeration& cachedEnumeration() {
    static const Enumeration e = enumerateAll();
    return e;
}

const FamilyRecord* findFamily(const std::string& familyId) {
    for (const auto& rec : cachedEnumeration().families)
        if (rec.familyId == familyId) return &rec;
    return nullptr;
}

}  // namespace index2
