#include "index2/tracer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace index2 {

const char* name(Turn t) {
    switch (t) {
        case Turn::R: return "r";
        case Turn::L: return "l";
        case Turn::F: return "f";
        case Turn::HR: return "hr";
        case Turn::SR: return "sr";
        case Turn::SL: return "sl";
        case Turn::HL: return "hl";
    }
    return "?";
}

std::optional<Turn> parseTurn(std::string_view s) {
    for (Turn t : {Turn::R, Turn::L, Turn::F, Turn::HR, Turn::SR, Turn::SL, Turn::HL})
        if (s == name(t)) return t;
    return std::nullopt;
}

Turn mirrorTurn(Turn t) {
    switch (t) {
        case Turn::R: return Turn::L;
        case Turn::L: return Turn::R;
        case Turn::F: return Turn::F;
        case Turn::HR: return Turn::HL;
        case Turn::SR: return Turn::SL;
        case Turn::SL: return Turn::SR;
        case Turn::HL: return Turn::HR;
    }
    return t;
}

int turnRank(Turn t) {
    switch (t) {
        case Turn::R: case Turn::HR: return 0;
        case Turn::L: case Turn::SR: return 1;
        case Turn::F: case Turn::SL: return 2;
        case Turn::HL: return 3;
        default: return 4;
    }
}

std::string FaceShape::str() const {
    return std::string("[") + name(a) + "," + name(b) + "]";
}

std::string FaceShape::id() const { return std::string(name(a)) + name(b); }

FaceShape reversed(FaceShape s) { return {mirrorTurn(s.a), mirrorTurn(s.b)}; }
FaceShape orbitSwap(FaceShape s) { return {s.b, s.a}; }

std::optional<FaceShape> parseShape(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ',' && c != ' ') t += c;
    // split into two valid symbols
    for (std::size_t cut = 1; cut < t.size(); ++cut) {
        auto a = parseTurn(std::string_view(t).substr(0, cut));
        auto b = parseTurn(std::string_view(t).substr(cut));
        if (a && b) return FaceShape{*a, *b};
    }
    return std::nullopt;
}

std::vector<Turn> classifyDirections(const Vec3& prevDir, const Vec3& curDir,
                                     const std::vector<Vec3>& candidates) {
    const Vec3& n = curDir;
    const FieldElement nn = n.normSq();
    // direction of travel arriving at n, tangent to the great circle from prev
    Vec3 dIn = n * prevDir.dot(n) - prevDir * nn;
    if (dIn.isZero())
        throw std::logic_error("turn classification: previous vertex projects onto the current one");
    const FieldElement dInSq = dIn.normSq();

    struct Entry {
        std::size_t idx;
        FieldElement dot, tOutSq;
    };
    std::vector<Entry> left, right;
    std::vector<Turn> out(candidates.size(), Turn::F);
    std::size_t forward = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Vec3 tOut = candidates[i] * nn - n * candidates[i].dot(n);
        if (tOut.isZero())
            throw std::logic_error("turn classification: candidate projects onto the current vertex");
        int side = det3(n, dIn, tOut).sign();
        FieldElement dot = dIn.dot(tOut);
        if (side == 0) {
            if (dot.sign() <= 0)
                throw std::logic_error("turn classification: candidate reverses the incoming arc");
            out[i] = Turn::F;
            ++forward;
        } else {
            (side > 0 ? left : right).push_back({i, dot, tOut.normSq()});
        }
    }

    auto assign = [&](std::vector<Entry>& grp, Turn plain, Turn hard, Turn soft) {
        if (grp.size() == 1) {
            out[grp[0].idx] = plain;
        } else if (grp.size() == 2) {
            int c = compareRootQuotients(grp[0].dot, dInSq * grp[0].tOutSq, grp[1].dot,
                                         dInSq * grp[1].tOutSq);
            if (c == 0) throw std::logic_error("turn classification: ambiguous ordering");
            // the smaller cosine is the sharper turn
            out[grp[0].idx] = c < 0 ? hard : soft;
            out[grp[1].idx] = c < 0 ? soft : hard;
        } else if (!grp.empty()) {
            throw std::logic_error("turn classification: more than two candidates on one side");
        }
    };
    assign(left, Turn::L, Turn::HL, Turn::SL);
    assign(right, Turn::R, Turn::HR, Turn::SR);

    const std::size_t k = candidates.size();
    bool shapeOk = (k == 2 && left.size() == 1 && right.size() == 1 && forward == 0) ||
                   (k == 3 && left.size() == 1 && right.size() == 1 && forward == 1) ||
                   (k == 4 && left.size() == 2 && right.size() == 2 && forward == 0);
    if (!shapeOk)
        throw std::logic_error("turn classification: candidate pattern does not fill an alphabet");
    return out;
}

namespace {

Vec3 projectedDirection(const VertexConfiguration& cfg, int side, int base) {
    const Vec3& v = Solid::get(cfg.base).vertices[base];
    if (cfg.alignment == Alignment::Opposed && side == 1) return -v;
    return v;
}

}  // namespace

std::vector<std::pair<int, Turn>> classifyCandidates(const VertexConfiguration& cfg, int curSide,
                                                     int prevBase, int curBase) {
    auto bases = successorCandidates(cfg, prevBase, curBase);
    const int otherSide = 1 - curSide;
    std::vector<Vec3> dirs;
    for (int w : bases) dirs.push_back(projectedDirection(cfg, otherSide, w));
    auto turns = classifyDirections(projectedDirection(cfg, otherSide, prevBase),
                                    projectedDirection(cfg, curSide, curBase), dirs);
    std::vector<std::pair<int, Turn>> out;
    for (std::size_t i = 0; i < bases.size(); ++i) out.emplace_back(bases[i], turns[i]);
    return out;
}

std::vector<int> traceFace(const VertexConfiguration& cfg, int startBase, int headBase,
                           FaceShape shape) {
    const Solid& s = Solid::get(cfg.base);
    const int n = static_cast<int>(s.vertices.size());
    if (combDistance(cfg, startBase, headBase) != cfg.edgeLength)
        throw std::invalid_argument("traceFace: start is not an edge of the configuration");
    const std::size_t bound = 4 * static_cast<std::size_t>(n) * s.valency + 2;

    std::vector<int> seq;
    int prevSide = 0, prevBase = startBase, curSide = 1, curBase = headBase;
    while (true) {
        seq.push_back(prevSide * n + prevBase);
        Turn want = curSide == 1 ? shape.a : shape.b;
        int next = -1;
        for (const auto& [w, t] : classifyCandidates(cfg, curSide, prevBase, curBase))
            if (t == want) {
                next = w;
                break;
            }
        if (next < 0) throw std::logic_error("traceFace: no candidate matches the shape symbol");
        prevSide = curSide;
        prevBase = curBase;
        curSide = 1 - curSide;
        curBase = next;
        if (prevSide == 0 && prevBase == startBase && curSide == 1 && curBase == headBase) break;
        if (seq.size() > bound) throw std::logic_error("traceFace: walk exceeded the edge bound");
    }
    return seq;
}

AssembleOutcome assemble(const VertexConfiguration& cfg, FaceShape shape) {
    const Solid& s = Solid::get(cfg.base);
    const int n = static_cast<int>(s.vertices.size());

    std::set<std::vector<int>> keys;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (combDistance(cfg, i, j) != cfg.edgeLength) continue;
            keys.insert(canonicalCycle(traceFace(cfg, i, j, shape)));
        }

    AssembleOutcome out;
    out.tracedFaces.assign(keys.begin(), keys.end());
    for (const auto& f : out.tracedFaces) {
        if (f.size() % 2 != 0)
            throw std::logic_error("assemble: traced face has odd length");
        for (std::size_t k = 0; k < f.size(); ++k)
            if (f[k] / n == f[(k + 1) % f.size()] / n)
                throw std::logic_error("assemble: face does not alternate between the orbits");
    }

    const std::size_t directed = 2 * static_cast<std::size_t>(n) * s.valency;
    std::size_t covered = 0;
    for (const auto& f : out.tracedFaces) covered += f.size();
    if (covered != directed) {
        std::ostringstream os;
        os << "distinct faces cover " << covered << " of " << directed << " directed edges";
        out.reason = "disconnected";
        out.witness = os.str();
        return out;
    }

    auto res = fromFaces(2 * n, out.tracedFaces);
    if (!res.ok()) {
        out.reason = res.reason;
        out.witness = res.witness;
        return out;
    }
    GeometricPolyhedron poly;
    poly.cfg = cfg;
    poly.shape = shape;
    poly.baseCount = n;
    poly.faces = out.tracedFaces;
    poly.complex = std::move(*res.complex);
    out.poly = std::move(poly);
    return out;
}

std::vector<Vec3> GeometricPolyhedron::coordinates(const FieldElement& lambda) const {
    const Solid& s = Solid::get(cfg.base);
    std::vector<Vec3> out;
    out.reserve(2 * s.vertices.size());
    for (const Vec3& v : s.vertices) out.push_back(v);
    for (const Vec3& v : s.vertices)
        out.push_back(cfg.alignment == Alignment::Opposed ? -(v * lambda) : v * lambda);
    return out;
}

UniformTraceResult assembleUniform(SolidKind kind, int dist, Turn turn) {
    const Solid& s = Solid::get(kind);
    const int n = static_cast<int>(s.vertices.size());

    // the same uniform-count and no-antipode conditions as the two-orbit scan
    for (int v = 0; v < n; ++v) {
        int count = 0;
        for (int w = 0; w < n; ++w)
            if (s.dist[v][w] == dist) {
                if (w == s.antipodeOf(v))
                    throw std::invalid_argument("assembleUniform: antipodal adjacency");
                ++count;
            }
        if (count != s.valency)
            throw std::invalid_argument("assembleUniform: adjacency count does not match valency");
    }

    auto step = [&](int prev, int cur) {
        std::vector<int> bases;
        std::vector<Vec3> dirs;
        for (int w = 0; w < n; ++w)
            if (w != prev && s.dist[cur][w] == dist) {
                bases.push_back(w);
                dirs.push_back(s.vertices[w]);
            }
        auto turns = classifyDirections(s.vertices[prev], s.vertices[cur], dirs);
        for (std::size_t i = 0; i < bases.size(); ++i)
            if (turns[i] == turn) return bases[i];
        throw std::logic_error("assembleUniform: no candidate matches the turn");
    };

    std::set<std::vector<int>> keys;
    const std::size_t bound = 4 * static_cast<std::size_t>(n) * s.valency + 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (s.dist[i][j] != dist) continue;
            std::vector<int> seq;
            int prev = i, cur = j;
            while (true) {
                seq.push_back(prev);
                int next = step(prev, cur);
                prev = cur;
                cur = next;
                if (prev == i && cur == j) break;
                if (seq.size() > bound)
                    throw std::logic_error("assembleUniform: walk exceeded the edge bound");
            }
            keys.insert(canonicalCycle(seq));
        }

    UniformTraceResult out;
    out.faces.assign(keys.begin(), keys.end());
    std::size_t covered = 0;
    for (const auto& f : out.faces) covered += f.size();
    if (covered != 2 * static_cast<std::size_t>(n) * s.valency / 2) {
        // the distinct faces must cover every directed edge exactly once
        std::ostringstream os;
        os << "uniform trace covers " << covered << " directed edges";
        out.complexResult = ComplexResult{std::nullopt, "disconnected", os.str()};
        return out;
    }
    out.complexResult = fromFaces(n, out.faces);
    return out;
}

}  // namespace index2
