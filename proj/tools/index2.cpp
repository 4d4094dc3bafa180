// Command line surface: enumerate the classification, export meshes at a
// concrete orbit ratio, verify invariants, inspect the rejection ledger and
// the index-1 seed catalogue.
#include "index2/enumerator.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace index2;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmtDouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::optional<FieldElement> parseLambda(const std::string& text) {
    if (text == "tau" || text == "τ") return FieldElement::tau();
    return FieldElement::parse(text);
}

std::string faceVectorStr(int f0, int f1, int f2) {
    return "(" + std::to_string(f0) + "," + std::to_string(f1) + "," + std::to_string(f2) + ")";
}

struct OutputTarget {
    std::ofstream file;
    bool toFile = false;

    // returns nullptr when the file cannot be opened
    std::ostream* open(const std::string& path) {
        if (path.empty()) return &std::cout;
        file.open(path);
        if (!file) return nullptr;
        toFile = true;
        return &file;
    }
};

std::optional<VertexConfiguration> configById(const std::string& id) {
    for (const auto& c : scanConfigurations())
        if (c.id() == id) return c;
    return std::nullopt;
}

struct FamilySpec {
    VertexConfiguration cfg;
    FaceShape shape;
};

// splits "ico1-hrsr" into its configuration and shape halves
std::optional<FamilySpec> parseFamilyId(const std::string& familyId, std::string& error) {
    auto dash = familyId.find('-');
    if (dash == std::string::npos || familyId.find('-', dash + 1) != std::string::npos) {
        error = "family ids look like <configuration>-<shape>, e.g. oct-rr or ico1-hrsr";
        return std::nullopt;
    }
    auto cfg = configById(familyId.substr(0, dash));
    if (!cfg) {
        std::string known;
        for (const auto& c : scanConfigurations()) known += " " + c.id();
        error = "unknown configuration '" + familyId.substr(0, dash) + "'; known:" + known;
        return std::nullopt;
    }
    auto shape = parseShape(familyId.substr(dash + 1));
    if (!shape) {
        error = "cannot parse face shape '" + familyId.substr(dash + 1) + "'";
        return std::nullopt;
    }
    return FamilySpec{*cfg, *shape};
}

ordered_json familyJson(const FamilyRecord& rec) {
    ordered_json j;
    j["familyId"] = rec.familyId;
    j["type"] = rec.schlafliType;
    j["faceVector"] = {rec.f0, rec.f1, rec.f2};
    j["base"] = name(rec.cfg.base);
    j["alignment"] = rec.cfg.alignment == Alignment::Aligned ? "aligned" : "opposed";
    j["edgeLength"] = rec.cfg.edgeLength;
    j["shape"] = rec.shape.str();
    j["generator"] = rec.generatorName.empty() ? ordered_json(nullptr)
                                               : ordered_json(rec.generatorName);
    j["petrie"] = rec.petrie;
    j["genus"] = rec.genus;
    j["orientable"] = rec.orientable;
    j["census"] = rec.censusLabel.empty() ? ordered_json(nullptr)
                                          : ordered_json(rec.censusLabel);
    j["planarLambda"] = rec.planarLambda ? ordered_json(rec.planarLambda->str())
                                         : ordered_json(nullptr);
    return j;
}

// the scan must deliver the full classification before any export
bool checkComplete(const Enumeration& e) {
    if (e.families.size() == 22) return true;
    std::cerr << "error: scan produced " << e.families.size()
              << " families instead of 22; got:";
    for (const auto& rec : e.families) std::cerr << " " << rec.familyId;
    std::cerr << "\n";
    return false;
}

int runEnumerate(const std::string& format, const std::string& outPath) {
    const Enumeration& e = cachedEnumeration();
    if (!checkComplete(e)) return kExitFail;
    OutputTarget target;
    std::ostream* os = target.open(outPath);
    if (!os) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitFail;
    }

    if (format == "json") {
        ordered_json root = ordered_json::array();
        for (const auto& rec : e.families) root.push_back(familyJson(rec));
        *os << root.dump(2) << "\n";
    } else if (format == "csv") {
        *os << "familyId,type,generator,faceVector,edgeLength,shape,petrie,genus,census,"
               "planarLambda\n";
        for (const auto& rec : e.families) {
            *os << rec.familyId << "," << csvField(rec.schlafliType) << ","
                << csvField(rec.generatorName) << ","
                << csvField(faceVectorStr(rec.f0, rec.f1, rec.f2)) << ","
                << rec.cfg.edgeLength << "," << csvField(rec.shape.str()) << "," << rec.petrie
                << "," << rec.genus << "," << rec.censusLabel << ","
                << (rec.planarLambda ? rec.planarLambda->str() : "") << "\n";
        }
    } else if (format == "markdown") {
        *os << "| family | type | generator | faces | d | shape | petrie | genus | census | "
               "planar λ |\n";
        *os << "|---|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& rec : e.families) {
            *os << "| " << rec.familyId << " | " << rec.schlafliType << " | "
                << (rec.generatorName.empty() ? "-" : rec.generatorName) << " | "
                << faceVectorStr(rec.f0, rec.f1, rec.f2) << " | " << rec.cfg.edgeLength
                << " | " << rec.shape.str() << " | " << rec.petrie << " | " << rec.genus
                << " | " << (rec.censusLabel.empty() ? "-" : rec.censusLabel) << " | "
                << (rec.planarLambda ? rec.planarLambda->str() : "-") << " |\n";
        }
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    return kExitPass;
}

int runBuild(const std::string& familyId, const std::string& lambdaText,
             const std::string& outPath, const std::string& faceMode, bool swap) {
    std::string error;
    auto parsed = parseFamilyId(familyId, error);
    if (!parsed) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    auto lambda = parseLambda(lambdaText);
    if (!lambda) {
        std::cerr << "error: cannot parse ratio '" << lambdaText
                  << "'; accepted forms: 3/2, 0.75, 1/2+1/2√5, 2+sqrt5, tau\n";
        return kExitUsage;
    }
    if (lambda->sign() <= 0) {
        std::cerr << "error: the orbit ratio must be positive\n";
        return kExitUsage;
    }
    const bool unit = *lambda == FieldElement(1);
    if (unit && parsed->cfg.alignment == Alignment::Aligned) {
        std::cerr << "error: ratio 1 makes the second orbit coincide with the first; "
                     "pick any other positive value\n";
        return kExitUsage;
    }
    if (unit) {
        std::cerr << "warning: ratio 1 puts both orbits on one sphere; the vertex set "
                     "degenerates to a cube and the family condition fails there\n";
    }
    if (faceMode != "fan" && faceMode != "polyline") {
        std::cerr << "error: face mode must be fan or polyline\n";
        return kExitUsage;
    }

    FaceShape shape = swap ? orbitSwap(parsed->shape) : parsed->shape;
    auto res = assemble(parsed->cfg, shape);
    if (!res.ok()) {
        std::cerr << "error: " << familyId << (swap ? " (swapped)" : "")
                  << " is not a valid family: " << res.reason
                  << (res.witness.empty() ? "" : " (" + res.witness + ")") << "\n";
        return kExitUsage;
    }
    const GeometricPolyhedron& poly = *res.poly;
    auto coords = poly.coordinates(*lambda);
    auto planar = facePlanarity(parsed->cfg, poly.faces, *lambda);
    int planarCount = 0;
    for (bool b : planar) planarCount += b;
    auto sch = poly.complex.schlafli();

    OutputTarget target;
    std::ostream* os = target.open(outPath);
    if (!os) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitFail;
    }

    int n = poly.baseCount;
    *os << "# regular polyhedron of index 2, family " << familyId
        << (swap ? " with swapped orbits" : "") << "\n";
    *os << "# base " << name(parsed->cfg.base) << ", "
        << (parsed->cfg.alignment == Alignment::Aligned ? "aligned" : "opposed")
        << " second orbit, edge length " << parsed->cfg.edgeLength << ", face shape "
        << shape.str() << "\n";
    *os << "# type " << sch.typeString() << ", faces "
        << faceVectorStr(sch.f0, sch.f1, sch.f2) << ", genus " << sch.genus << "\n";
    *os << "# lambda = " << lambda->str() << " (~" << fmtDouble(lambda->toDouble()) << ")\n";
    *os << "# planar faces at this ratio: " << planarCount << " of " << planar.size() << "\n";
    *os << "# vertices 0.." << n - 1 << " on the base orbit, " << n << ".." << 2 * n - 1
        << " on the scaled orbit\n";
    *os << "# exact coordinates:\n";
    for (std::size_t i = 0; i < coords.size(); ++i)
        *os << "#   " << i << ": " << coords[i].str() << "\n";
    for (const auto& v : coords)
        *os << "v " << fmtDouble(v.x.toDouble()) << " " << fmtDouble(v.y.toDouble()) << " "
            << fmtDouble(v.z.toDouble()) << "\n";

    if (faceMode == "fan") {
        // centroid fan: one extra vertex per face keeps skew faces renderable
        std::vector<Vec3> centroids;
        for (const auto& f : poly.faces) {
            Vec3 c;
            for (int id : f) c = c + coords[id];
            centroids.push_back(c * FieldElement(Rational(1, (long)f.size())));
        }
        for (const auto& c : centroids)
            *os << "v " << fmtDouble(c.x.toDouble()) << " " << fmtDouble(c.y.toDouble())
                << " " << fmtDouble(c.z.toDouble()) << "\n";
        for (std::size_t fi = 0; fi < poly.faces.size(); ++fi) {
            const auto& f = poly.faces[fi];
            *os << "# face " << fi << ":";
            for (int id : f) *os << " " << id;
            *os << "\n";
            int ci = static_cast<int>(coords.size() + fi);
            for (std::size_t k = 0; k < f.size(); ++k)
                *os << "f " << ci + 1 << " " << f[k] + 1 << " "
                    << f[(k + 1) % f.size()] + 1 << "\n";
        }
    } else {
        for (std::size_t fi = 0; fi < poly.faces.size(); ++fi) {
            const auto& f = poly.faces[fi];
            *os << "# face " << fi << "\n";
            *os << "l";
            for (int id : f) *os << " " << id + 1;
            *os << " " << f[0] + 1 << "\n";
        }
    }
    if (target.toFile)
        std::cerr << "wrote " << outPath << ": " << coords.size() << " vertices"
                  << (faceMode == "fan" ? " + " + std::to_string(poly.faces.size()) +
                                              " centroids"
                                        : "")
                  << ", " << poly.faces.size() << " faces\n";
    return kExitPass;
}

struct CheckRow {
    std::string name;
    bool pass;
    std::string witness;
};

// runs the full invariant suite for one scanned cell; seeds carry the
// doubled index-1 face sets for generator attribution
ordered_json verifyFamily(const VertexConfiguration& cfg, const FaceShape& shape,
                          const std::vector<std::pair<std::string, std::set<std::vector<int>>>>&
                              seedsForCfg,
                          bool& pass) {
    ordered_json j;
    j["familyId"] = cfg.id() + "-" + shape.id();
    std::vector<CheckRow> checks;
    auto res = assemble(cfg, shape);
    if (!res.ok()) {
        checks.push_back({"assembles", false, res.reason + ": " + res.witness});
    } else {
        const GeometricPolyhedron& poly = *res.poly;
        checks.push_back({"assembles", true, ""});
        auto sch = poly.complex.schlafli();
        j["type"] = sch.typeString();
        j["faceVector"] = {sch.f0, sch.f1, sch.f2};
        j["genus"] = sch.genus;

        checks.push_back({"regular", poly.complex.isRegular(), ""});
        checks.push_back({"orientable", sch.orientable, ""});

        auto autos = poly.complex.automorphisms();
        checks.push_back({"automorphisms 4*f1",
                          static_cast<int>(autos.size()) == 4 * sch.f1,
                          "|Aut| = " + std::to_string(autos.size())});

        auto rep = analyzeSymmetry(cfg, poly.complex);
        j["symmetry"] = {{"order", rep.symGroupOrder},
                         {"rotationOrder", rep.rotSubgroupOrder},
                         {"index", rep.index},
                         {"flagOrbits", rep.flagOrbitsUnderG},
                         {"vertexOrbits", rep.vertexOrbits},
                         {"edgeOrbits", rep.edgeOrbits},
                         {"faceOrbits", rep.faceOrbits},
                         {"faceStabilizer", rep.faceStabilizerShape}};
        checks.push_back({"symmetries 2*f1", rep.symGroupOrder == 2 * sch.f1,
                          "|G| = " + std::to_string(rep.symGroupOrder)});
        checks.push_back({"index 2", rep.index == 2, "index " + std::to_string(rep.index)});
        checks.push_back({"flag orbits 2", rep.flagOrbitsUnderG == 2,
                          std::to_string(rep.flagOrbitsUnderG) + " orbits"});
        checks.push_back({"orbit counts 2/1/1",
                          rep.vertexOrbits == 2 && rep.edgeOrbits == 1 && rep.faceOrbits == 1 &&
                              rep.vertexOrbitsRot == 2 && rep.edgeOrbitsRot == 1 &&
                              rep.faceOrbitsRot == 1,
                          ""});
        auto fs = faceStabilizerCheck(cfg, poly.complex);
        checks.push_back({"face stabilizer dihedral", fs.pass, fs.witness});
        auto na = noAntipodalEdges(cfg, poly.complex);
        checks.push_back({"no antipodal edges", na.pass, na.witness});

        auto pd = petrieDual(poly.complex);
        checks.push_back({"petrie dual valid", pd.ok(), pd.reason});

        std::set<std::vector<int>> canon;
        for (const auto& f : poly.faces) canon.insert(canonicalCycle(f));
        std::string generator;
        for (const auto& [nm, faces] : seedsForCfg)
            if (faces == canon) generator = nm;
        j["generator"] = generator.empty() ? ordered_json(nullptr) : ordered_json(generator);

        auto search = findPlanarLambda(cfg, poly.faces);
        checks.push_back({"planar candidates resolved exactly", search.unverified.empty(),
                          search.unverified.empty()
                              ? ""
                              : std::to_string(search.unverified.size()) + " unresolved"});
        j["planarLambda"] = search.lambda ? ordered_json(search.lambda->str())
                                          : ordered_json(nullptr);
    }

    bool all = true;
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        ordered_json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        if (!c.witness.empty()) row["witness"] = c.witness;
        rows.push_back(row);
    }
    j["checks"] = rows;
    j["pass"] = all;
    pass = all;
    return j;
}

std::vector<std::pair<std::string, std::set<std::vector<int>>>> doubledSeeds(
    const VertexConfiguration& cfg) {
    std::vector<std::pair<std::string, std::set<std::vector<int>>>> out;
    for (const auto& q : catalogue()) {
        auto d = doublePolyhedron(q);
        if (!d.ok() || !(d.cfg == cfg)) continue;
        std::set<std::vector<int>> canon;
        for (const auto& f : d.faces) canon.insert(canonicalCycle(f));
        out.push_back({q.name, std::move(canon)});
    }
    return out;
}

int runVerify(const std::string& target, const std::string& outPath) {
    OutputTarget out;
    std::ostream* os = out.open(outPath);
    if (!os) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitFail;
    }

    if (target == "all") {
        const Enumeration& e = cachedEnumeration();
        bool complete = checkComplete(e);
        ordered_json root;
        ordered_json list = ordered_json::array();
        int failures = complete ? 0 : 1;
        for (const auto& rec : e.families) {
            bool pass = false;
            list.push_back(verifyFamily(rec.cfg, rec.shape, doubledSeeds(rec.cfg), pass));
            failures += !pass;
        }
        root["families"] = list;
        root["familyCount"] = e.families.size();
        root["failures"] = failures;
        root["pass"] = failures == 0;
        *os << root.dump(2) << "\n";
        std::cerr << (failures == 0 ? "verify all: 22/22 pass\n"
                                    : "verify all: " + std::to_string(failures) + " failures\n");
        return failures == 0 ? kExitPass : kExitFail;
    }

    std::string error;
    auto parsed = parseFamilyId(target, error);
    if (!parsed) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    auto pre = precheck(parsed->cfg);
    if (!pre.pass) {
        std::cerr << "error: configuration " << parsed->cfg.id()
                  << " fails the scan precheck: " << pre.reason << " (" << pre.detail << ")\n";
        return kExitUsage;
    }
    // verification runs on canonical class representatives
    auto classes = shapeClasses(parsed->cfg);
    bool canonical = false;
    for (const auto& s : classes) canonical = canonical || s == parsed->shape;
    if (!canonical) {
        FaceShape best = parsed->shape;
        for (FaceShape t : {orbitSwap(parsed->shape), reversed(parsed->shape),
                            orbitSwap(reversed(parsed->shape))})
            if (t < best) best = t;
        std::cerr << "error: " << parsed->shape.id() << " is not a canonical shape class of "
                  << parsed->cfg.id() << "; its class representative is " << best.id() << "\n";
        return kExitUsage;
    }
    bool pass = false;
    auto j = verifyFamily(parsed->cfg, parsed->shape, doubledSeeds(parsed->cfg), pass);
    *os << j.dump(2) << "\n";
    return pass ? kExitPass : kExitFail;
}

int runRejectScan(const std::string& format, const std::string& outPath) {
    const Enumeration& e = cachedEnumeration();
    if (!checkComplete(e)) return kExitFail;
    OutputTarget target;
    std::ostream* os = target.open(outPath);
    if (!os) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitFail;
    }
    if (format == "json") {
        ordered_json root = ordered_json::array();
        for (const auto& r : e.rejections) {
            ordered_json j;
            j["configuration"] = r.configuration;
            j["shape"] = r.shape.empty() ? ordered_json(nullptr) : ordered_json(r.shape);
            j["reason"] = r.reason;
            j["witness"] = r.witness;
            root.push_back(j);
        }
        *os << root.dump(2) << "\n";
    } else {
        for (const auto& r : e.rejections)
            *os << r.configuration << " " << (r.shape.empty() ? "-" : r.shape) << " "
                << r.reason << ": " << r.witness << "\n";
    }
    return kExitPass;
}

int runCatalogue(const std::string& format, const std::string& outPath) {
    OutputTarget target;
    std::ostream* os = target.open(outPath);
    if (!os) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitFail;
    }
    if (format == "json") {
        ordered_json root = ordered_json::array();
        for (const auto& q : catalogue()) {
            auto sch = q.complex.schlafli();
            ordered_json j;
            j["name"] = q.name;
            j["vertexSolid"] = name(q.vertexSolid);
            j["edgeDistance"] = q.dist;
            j["type"] = sch.typeString();
            j["faceVector"] = {sch.f0, sch.f1, sch.f2};
            j["orientable"] = sch.orientable;
            j["genus"] = sch.genus;
            root.push_back(j);
        }
        *os << root.dump(2) << "\n";
    } else {
        for (const auto& q : catalogue()) {
            auto sch = q.complex.schlafli();
            char line[160];
            std::snprintf(line, sizeof(line), "%-48s %-12s d=%d %-10s %s genus %d\n",
                          q.name.c_str(), name(q.vertexSolid), q.dist,
                          sch.typeString().c_str(),
                          faceVectorStr(sch.f0, sch.f1, sch.f2).c_str(), sch.genus);
            *os << line;
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "regular polyhedra of index 2 with two vertex orbits\n"
        "family ids combine a configuration and a face shape: tetA/tetO (aligned and "
        "opposed tetrahedra), oct, dod1/dod4, ico1/ico2 (the digit is the combinatorial "
        "edge length), then shape letters, e.g. oct-rr, dod4-rl, ico1-hrsr"};
    app.require_subcommand(1);

    std::string format = "markdown", outPath;
    auto* cmdEnum = app.add_subcommand("enumerate", "produce the 22-family classification table");
    cmdEnum->add_option("--format", format, "json, csv or markdown")->default_str("markdown");
    cmdEnum->add_option("-o,--out", outPath, "write to a file instead of stdout");

    std::string buildFamily, buildLambda, buildOut, buildMode = "fan";
    bool buildSwap = false;
    auto* cmdBuild = app.add_subcommand("build", "export one family as a text mesh at a ratio");
    cmdBuild->add_option("family", buildFamily, "family id, e.g. ico1-hrsr")->required();
    cmdBuild->add_option("-l,--lambda", buildLambda,
                         "orbit ratio: 3/2, 0.75, 1/2+1/2√5, 2+sqrt5, tau")
        ->required();
    cmdBuild->add_option("-o,--out", buildOut, "output path (default stdout)");
    cmdBuild->add_option("--faces", buildMode, "fan (triangulated) or polyline")
        ->default_str("fan");
    cmdBuild->add_flag("--swap", buildSwap, "build the orbit-swapped orientation");

    std::string verifyTarget;
    auto* cmdVerify = app.add_subcommand("verify", "run the invariant suite, report as JSON");
    cmdVerify->add_option("family", verifyTarget, "family id or 'all'")->required();
    cmdVerify->add_option("-o,--out", outPath, "write to a file instead of stdout");

    auto* cmdReject = app.add_subcommand("reject-scan", "list every rejected configuration");
    cmdReject->add_option("--format", format, "text or json")->default_str("text");
    cmdReject->add_option("-o,--out", outPath, "write to a file instead of stdout");

    auto* cmdCat = app.add_subcommand("catalogue", "list the 18 index-1 seed polyhedra");
    cmdCat->add_option("--format", format, "text or json")->default_str("text");
    cmdCat->add_option("-o,--out", outPath, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmdEnum) return runEnumerate(format, outPath);
        if (*cmdBuild) return runBuild(buildFamily, buildLambda, buildOut, buildMode, buildSwap);
        if (*cmdVerify) return runVerify(verifyTarget, outPath);
        if (*cmdReject) return runRejectScan(format == "markdown" ? "text" : format, outPath);
        if (*cmdCat) return runCatalogue(format == "markdown" ? "text" : format, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
