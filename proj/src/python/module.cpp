#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "index2/enumerator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace index2;

namespace {

FieldElement parseRatio(const std::string& text) {
    if (text == "tau") return FieldElement::tau();
    auto v = FieldElement::parse(text);
    if (!v) throw py::value_error("cannot parse ratio '" + text + "'");
    return *v;
}

const FamilyRecord& lookup(const std::string& familyId) {
    const FamilyRecord* rec = findFamily(familyId);
    if (!rec) throw py::key_error("no index-2 family '" + familyId + "'");
    return *rec;
}

py::object maybeStr(const std::string& s) {
    if (s.empty()) return py::none();
    return py::str(s);
}

py::dict familyDict(const FamilyRecord& rec) {
    py::dict d;
    d["id"] = rec.familyId;
    d["configuration"] = rec.cfg.id();
    d["shape"] = rec.shape.id();
    d["type"] = rec.schlafliType;
    d["p"] = rec.p;
    d["q"] = rec.q;
    d["petrie"] = rec.petrie;
    d["face_vector"] = py::make_tuple(rec.f0, rec.f1, rec.f2);
    d["edge_length"] = rec.cfg.edgeLength;
    d["genus"] = rec.genus;
    d["orientable"] = rec.orientable;
    d["generator"] = maybeStr(rec.generatorName);
    d["census"] = maybeStr(rec.censusLabel);
    if (rec.planarLambda) {
        d["planar_ratio"] = rec.planarLambda->str();
        d["planar_ratio_value"] = rec.planarLambda->toDouble();
    } else {
        d["planar_ratio"] = py::none();
        d["planar_ratio_value"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(index2, m) {
    m.doc() = "Regular polyhedra of index 2: exact enumeration, meshes and checks";
    m.attr("__version__") = "0.1.0";

    m.def(
        "families", [] {
            py::list out;
            for (const auto& rec : cachedEnumeration().families) out.append(familyDict(rec));
            return out;
        },
        "All 22 families of the classification, in scan order.");

    m.def(
        "family", [](const std::string& familyId) { return familyDict(lookup(familyId)); },
        py::arg("family_id"), "One family by id, e.g. 'oct-rr'.");

    m.def(
        "rejections", [] {
            py::list out;
            for (const auto& r : cachedEnumeration().rejections) {
                py::dict d;
                d["configuration"] = r.configuration;
                d["shape"] = maybeStr(r.shape);
                d["reason"] = r.reason;
                d["witness"] = r.witness;
                out.append(d);
            }
            return out;
        },
        "Scanned candidates that were rejected, with the stage that killed them.");

    m.def(
        "mesh",
        [](const std::string& familyId, const std::string& ratio, bool swap) {
            const FamilyRecord& rec = lookup(familyId);
            FieldElement lam = parseRatio(ratio);
            if (lam.sign() <= 0) throw py::value_error("ratio must be positive");
            if (rec.cfg.alignment == Alignment::Aligned && lam == FieldElement(1))
                throw py::value_error("ratio 1 makes the second orbit coincide with the first");
            FaceShape shape = swap ? orbitSwap(rec.shape) : rec.shape;
            auto res = assemble(rec.cfg, shape);
            if (!res.ok()) throw py::value_error("assembly failed: " + res.reason);
            const auto& poly = *res.poly;
            auto coords = poly.coordinates(lam);
            py::list verts, exact;
            for (const auto& v : coords) {
                verts.append(py::make_tuple(v.x.toDouble(), v.y.toDouble(), v.z.toDouble()));
                exact.append(py::make_tuple(v.x.str(), v.y.str(), v.z.str()));
            }
            auto planar = facePlanarity(rec.cfg, poly.faces, lam);
            int planarCount = 0;
            for (bool b : planar) planarCount += b;
            py::dict d;
            d["vertices"] = verts;
            d["vertices_exact"] = exact;
            d["faces"] = poly.faces;
            d["ratio"] = lam.str();
            d["planar_faces"] = planarCount;
            return d;
        },
        py::arg("family_id"), py::arg("ratio") = "3/2", py::arg("swap") = false,
        "Concrete vertex coordinates and faces at a scale ratio. The ratio is "
        "an exact expression such as '3/2', '2+sqrt5' or 'tau'.");

    m.def(
        "symmetry",
        [](const std::string& familyId) {
            const FamilyRecord& rec = lookup(familyId);
            auto res = assemble(rec.cfg, rec.shape);
            if (!res.ok()) throw py::value_error("assembly failed: " + res.reason);
            auto rep = analyzeSymmetry(rec.cfg, res.poly->complex);
            py::dict d;
            d["symmetry_order"] = rep.symGroupOrder;
            d["rotation_order"] = rep.rotSubgroupOrder;
            d["index"] = rep.index;
            d["flag_orbits"] = rep.flagOrbitsUnderG;
            d["orbits"] = py::make_tuple(rep.vertexOrbits, rep.edgeOrbits, rep.faceOrbits);
            d["orbits_rotation"] =
                py::make_tuple(rep.vertexOrbitsRot, rep.edgeOrbitsRot, rep.faceOrbitsRot);
            d["face_stabilizer"] = rep.faceStabilizerShape;
            return d;
        },
        py::arg("family_id"), "Ambient symmetry group data for one family.");

    m.def(
        "catalogue", [] {
            py::list out;
            for (const auto& q : catalogue()) {
                auto s = q.complex.schlafli();
                py::dict d;
                d["name"] = q.name;
                d["type"] = s.typeString();
                d["face_vector"] = py::make_tuple(s.f0, s.f1, s.f2);
                d["vertex_solid"] = name(q.vertexSolid);
                d["edge_length"] = q.dist;
                out.append(d);
            }
            return out;
        },
        "The 18 single-orbit regular polyhedra used as doubling seeds.");

    m.def(
        "configurations", [] {
            py::list out;
            for (const auto& cfg : scanConfigurations()) out.append(cfg.id());
            return out;
        },
        "Ids of every (solid, alignment, edge length) cell the scan visits.");

    m.def(
        "turn_alphabet",
        [](const std::string& cfgId) {
            for (const auto& cfg : scanConfigurations())
                if (cfg.id() == cfgId) {
                    std::vector<std::string> out;
                    for (Turn t : turnAlphabet(cfg)) out.emplace_back(name(t));
                    return out;
                }
            throw py::key_error("no configuration '" + cfgId + "'");
        },
        py::arg("configuration_id"), "Turn symbols available at the vertices of a cell.");

    m.def(
        "shape_classes",
        [](const std::string& cfgId) {
            for (const auto& cfg : scanConfigurations())
                if (cfg.id() == cfgId) {
                    std::vector<std::string> out;
                    for (const auto& s : shapeClasses(cfg)) out.push_back(s.id());
                    return out;
                }
            throw py::key_error("no configuration '" + cfgId + "'");
        },
        py::arg("configuration_id"),
        "Face-shape class representatives of a cell, smallest member first.");
}
