#pragma once

#include "index2/analysis.hpp"
#include "index2/doubling.hpp"
#include "index2/tracer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace index2 {

/// One family of the classification. Everything here is computed by the
/// scan; the only external ingredient is the census name lookup.
struct FamilyRecord {
    std::string familyId;  // configuration id + shape id, e.g. "ico1-hrsr"
    VertexConfiguration cfg;
    FaceShape shape;
    std::string schlafliType;  // "{p,q}_r"
    int p = 0, q = 0, petrie = 0;
    int f0 = 0, f1 = 0, f2 = 0;
    int genus = 0;
    bool orientable = true;
    std::string generatorName;  // index-1 seed whose doubling gives this family; empty if none
    std::string censusLabel;    // regular-map census name; empty below the census range
    std::optional<FieldElement> planarLambda;
};

/// A scanned candidate that did not survive, with the stage that killed it.
/// Configuration-level rejections leave the shape empty.
struct RejectionRecord {
    std::string configuration;
    std::string shape;
    std::string reason;
    std::string witness;
};

struct Enumeration {
    std::vector<FamilyRecord> families;
    std::vector<RejectionRecord> rejections;
};

/// The turn alphabet available at the vertices of a prechecked
/// configuration, in rank order (r < l < f, hr < sr < sl < hl).
std::vector<Turn> turnAlphabet(const VertexConfiguration& cfg);

/// Face-shape representatives: all alphabet pairs modulo traversal reversal
/// and orbit swap, keeping the smallest member of each class.
std::vector<FaceShape> shapeClasses(const VertexConfiguration& cfg);

/// Census name for an accepted family's map, or "" when the map predates
/// the census range (the two sphere and torus types).
std::string censusLabelFor(const std::string& schlafliType, int genus);

/// Scan every configuration and shape class, assemble, validate, and split
/// the outcomes into accepted families and the rejection ledger. Families
/// arrive grouped by base solid in scan order.
Enumeration enumerateAll();

/// Lookup by family id, e.g. "oct-rr". Scans lazily and caches.
const FamilyRecord* findFamily(const std::string& familyId);
const Enumeration& cachedEnumeration();

}  // namespace index2
