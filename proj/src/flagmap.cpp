#include "index2/flagmap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace index2 {

std::vector<int> canonicalCycle(const std::vector<int>& cycle) {
    const std::size_t n = cycle.size();
    std::vector<int> best;
    std::vector<int> cand(n);
    const std::vector<int> rev(cycle.rbegin(), cycle.rend());
    for (const std::vector<int>* dir : {&cycle, &rev})
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t i = 0; i < n; ++i) cand[i] = (*dir)[(s + i) % n];
            if (best.empty() || cand < best) best = cand;
        }
    return best;
}

std::string SchlafliData::typeString() const {
    std::ostringstream os;
    os << "{" << p << "," << q << "}_" << petrie;
    return os.str();
}

namespace {

ComplexResult reject(std::string reason, std::string witness) {
    return ComplexResult{std::nullopt, std::move(reason), std::move(witness)};
}

}  // namespace

ComplexResult fromFaces(int vertexCount, const std::vector<std::vector<int>>& faceCycles) {
    for (const auto& f : faceCycles) {
        if (f.size() < 3) throw std::invalid_argument("fromFaces: face shorter than 3");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= vertexCount)
                throw std::invalid_argument("fromFaces: vertex id out of range");
            if (f[i] == f[(i + 1) % f.size()])
                throw std::invalid_argument("fromFaces: repeated consecutive vertex");
        }
    }

    // every undirected edge must occur in exactly two face slots
    std::map<std::array<int, 2>, std::vector<std::array<int, 2>>> occ;  // edge -> (face, slot)
    for (int fi = 0; fi < static_cast<int>(faceCycles.size()); ++fi) {
        const auto& f = faceCycles[fi];
        const int p = static_cast<int>(f.size());
        for (int s = 0; s < p; ++s) {
            std::array<int, 2> key{f[s], f[(s + 1) % p]};
            if (key[0] > key[1]) std::swap(key[0], key[1]);
            occ[key].push_back({fi, s});
        }
    }
    for (const auto& [key, slots] : occ)
        if (slots.size() != 2) {
            std::ostringstream os;
            os << "edge (" << key[0] << "," << key[1] << ") lies in " << slots.size()
               << " face slots";
            return reject("edge-degree", os.str());
        }

    FlagComplex c;
    c.nVertices = vertexCount;
    c.faces = faceCycles;
    std::map<std::array<int, 2>, int> edgeId;
    for (const auto& [key, slots] : occ) {
        edgeId[key] = static_cast<int>(c.edges.size());
        c.edges.push_back(key);
    }

    // edge graph connectivity over all declared vertices
    {
        std::vector<std::vector<int>> adj(vertexCount);
        for (const auto& e : c.edges) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::vector<char> seen(vertexCount, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != vertexCount) {
            std::ostringstream os;
            os << "edge graph reaches " << reached << " of " << vertexCount << " vertices";
            return reject("disconnected", os.str());
        }
    }

    // vertex figures: walk the multigraph whose nodes are the edges at v and
    // whose links come from face corners; demand one simple cycle, length >= 3
    {
        std::vector<std::vector<std::array<int, 2>>> corners(vertexCount);  // (prev, next)
        for (const auto& f : faceCycles) {
            const int p = static_cast<int>(f.size());
            for (int s = 0; s < p; ++s)
                corners[f[s]].push_back({f[(s - 1 + p) % p], f[(s + 1) % p]});
        }
        for (int v = 0; v < vertexCount; ++v) {
            const auto& cs = corners[v];
            const int q = static_cast<int>(cs.size());
            if (q < 3) {
                std::ostringstream os;
                os << "vertex " << v << " has valency " << q;
                return reject("vertex-figure", os.str());
            }
            std::map<int, std::vector<int>> links;  // neighbour -> corner ids
            bool bad = false;
            for (int ci = 0; ci < q && !bad; ++ci) {
                if (cs[ci][0] == cs[ci][1]) bad = true;
                links[cs[ci][0]].push_back(ci);
                links[cs[ci][1]].push_back(ci);
            }
            if (!bad && static_cast<int>(links.size()) != q) bad = true;
            if (!bad)
                for (const auto& [w, ids] : links)
                    if (ids.size() != 2) bad = true;
            if (!bad) {
                // walk corner -> shared neighbour -> other corner
                std::vector<char> usedCorner(q, 0);
                int corner = 0, entry = cs[0][0];
                usedCorner[0] = 1;
                int steps = 1;
                while (true) {
                    int exit = cs[corner][0] == entry ? cs[corner][1] : cs[corner][0];
                    const auto& ids = links[exit];
                    int next = ids[0] == corner ? ids[1] : ids[0];
                    if (next == 0 && cs[0][0] == exit) break;  // closed at the entry side
                    if (usedCorner[next]) { bad = true; break; }
                    usedCorner[next] = 1;
                    ++steps;
                    corner = next;
                    entry = exit;
                }
                if (!bad && steps != q) bad = true;
            }
            if (bad) {
                std::ostringstream os;
                os << "vertex figure at vertex " << v << " is not a single simple cycle";
                return reject("vertex-figure", os.str());
            }
        }
    }

    // flags: (face, slot, end); end 0 = tail of the slot's directed edge
    std::vector<std::array<int, 3>> flagDef;
    std::map<std::array<int, 3>, int> flagIdx;
    for (int fi = 0; fi < static_cast<int>(faceCycles.size()); ++fi)
        for (int s = 0; s < static_cast<int>(faceCycles[fi].size()); ++s)
            for (int e : {0, 1}) {
                flagIdx[{fi, s, e}] = static_cast<int>(flagDef.size());
                flagDef.push_back({fi, s, e});
            }
    const int N = static_cast<int>(flagDef.size());
    c.r0.resize(N);
    c.r1.resize(N);
    c.r2.resize(N);
    c.vertexOf.resize(N);
    c.edgeOf.resize(N);
    c.faceOf.resize(N);
    for (int id = 0; id < N; ++id) {
        auto [fi, s, e] = flagDef[id];
        const auto& f = faceCycles[fi];
        const int p = static_cast<int>(f.size());
        c.faceOf[id] = fi;
        c.vertexOf[id] = f[(s + e) % p];
        std::array<int, 2> key{f[s], f[(s + 1) % p]};
        if (key[0] > key[1]) std::swap(key[0], key[1]);
        c.edgeOf[id] = edgeId[key];
        c.r0[id] = flagIdx.at({fi, s, 1 - e});
        c.r1[id] = e == 0 ? flagIdx.at({fi, (s - 1 + p) % p, 1}) : flagIdx.at({fi, (s + 1) % p, 0});
        const auto& slots = occ.at(key);
        auto other = slots[0] == std::array<int, 2>{fi, s} ? slots[1] : slots[0];
        const auto& of = faceCycles[other[0]];
        const int op = static_cast<int>(of.size());
        int oe = of[other[1]] == c.vertexOf[id] ? 0 : 1;
        if (of[(other[1] + oe) % op] != c.vertexOf[id])
            throw std::logic_error("fromFaces: edge pairing lost its vertex");
        c.r2[id] = flagIdx.at({other[0], other[1], oe});
    }

    for (const auto* r : {&c.r0, &c.r1, &c.r2})
        for (int id = 0; id < N; ++id)
            if ((*r)[id] == id || (*r)[(*r)[id]] != id)
                throw std::logic_error("fromFaces: adjacency is not a free involution");
    for (int id = 0; id < N; ++id) {
        int d = c.r0[c.r2[id]];
        if (d == id || c.r0[c.r2[d]] != id)
            throw std::logic_error("fromFaces: diamond condition violated");
    }

    // strong flag-connectedness
    {
        std::vector<char> seen(N, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto* r : {&c.r0, &c.r1, &c.r2})
                if (!seen[(*r)[u]]) {
                    seen[(*r)[u]] = 1;
                    ++reached;
                    q.push((*r)[u]);
                }
        }
        if (reached != N) {
            std::ostringstream os;
            os << "flag graph reaches " << reached << " of " << N << " flags";
            return reject("disconnected", os.str());
        }
    }

    if (c.flagCount() != 4 * c.edges.size())
        throw std::logic_error("fromFaces: flag count is not four times the edge count");

    return ComplexResult{std::move(c), "", ""};
}

std::vector<std::vector<int>> FlagComplex::automorphisms() const {
    const int N = static_cast<int>(flagCount());
    std::vector<std::vector<int>> result;
    const std::array<const std::vector<int>*, 3> gens{&r0, &r1, &r2};
    for (int image0 = 0; image0 < N; ++image0) {
        std::vector<int> img(N, -1);
        img[0] = image0;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int f = stack.back();
            stack.pop_back();
            for (const auto* g : gens) {
                int from = (*g)[f], to = (*g)[img[f]];
                if (img[from] < 0) {
                    img[from] = to;
                    stack.push_back(from);
                } else if (img[from] != to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(N, 0);
        for (int v : img) {
            if (v < 0 || hit[v]) {
                ok = false;
                break;
            }
            hit[v] = 1;
        }
        if (ok) result.push_back(std::move(img));
    }
    return result;
}

bool FlagComplex::isRegular() const { return automorphisms().size() == flagCount(); }

SchlafliData FlagComplex::schlafli() const {
    SchlafliData d;
    d.f0 = nVertices;
    d.f1 = edgeCount();
    d.f2 = static_cast<int>(faces.size());
    d.p = static_cast<int>(faces.front().size());
    for (const auto& f : faces)
        if (static_cast<int>(f.size()) != d.p)
            throw std::logic_error("schlafli: face length not uniform");
    if (d.p * d.f2 != 2 * d.f1) throw std::logic_error("schlafli: p f2 != 2 f1");
    if ((2 * d.f1) % d.f0 != 0) throw std::logic_error("schlafli: valency not integral");
    d.q = 2 * d.f1 / d.f0;

    // Petrie length: uniform orbit size of the composite step r2 r1 r0
    const int N = static_cast<int>(flagCount());
    std::vector<char> seen(N, 0);
    for (int start = 0; start < N; ++start) {
        if (seen[start]) continue;
        int len = 0, f = start;
        do {
            seen[f] = 1;
            f = r2[r1[r0[f]]];
            ++len;
        } while (f != start);
        if (d.petrie == 0) d.petrie = len;
        else if (d.petrie != len) throw std::logic_error("schlafli: petrie orbits not uniform");
    }

    // orientable iff the flag graph is bipartite
    std::vector<int> colour(N, -1);
    colour[0] = 0;
    std::queue<int> q;
    q.push(0);
    d.orientable = true;
    while (!q.empty() && d.orientable) {
        int u = q.front();
        q.pop();
        for (const auto* r : {&r0, &r1, &r2}) {
            int w = (*r)[u];
            if (colour[w] < 0) {
                colour[w] = 1 - colour[u];
                q.push(w);
            } else if (colour[w] == colour[u]) {
                d.orientable = false;
            }
        }
    }
    int chi = d.f0 - d.f1 + d.f2;
    d.genus = d.orientable ? (2 - chi) / 2 : 2 - chi;
    return d;
}

bool FlagComplex::isIsomorphic(const FlagComplex& other) const {
    if (flagCount() != other.flagCount() || nVertices != other.nVertices ||
        edges.size() != other.edges.size() || faces.size() != other.faces.size())
        return false;
    const int N = static_cast<int>(flagCount());
    const std::array<const std::vector<int>*, 3> g1{&r0, &r1, &r2};
    const std::array<const std::vector<int>*, 3> g2{&other.r0, &other.r1, &other.r2};
    for (int image0 = 0; image0 < N; ++image0) {
        std::vector<int> img(N, -1);
        img[0] = image0;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int f = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3; ++k) {
                int from = (*g1[k])[f], to = (*g2[k])[img[f]];
                if (img[from] < 0) {
                    img[from] = to;
                    stack.push_back(from);
                } else if (img[from] != to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(N, 0);
        for (int v : img) {
            if (v < 0 || hit[v]) {
                ok = false;
                break;
            }
            hit[v] = 1;
        }
        if (ok) return true;
    }
    return false;
}

std::string FlagComplex::toJson() const {
    std::vector<std::vector<int>> keys;
    for (const auto& f : faces) keys.push_back(canonicalCycle(f));
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    os << "{\"vertices\": " << nVertices << ", \"faces\": [";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < keys[i].size(); ++j) os << (j ? "," : "") << keys[i][j];
        os << "]";
    }
    os << "]}";
    return os.str();
}

ComplexResult petrieDual(const FlagComplex& c) {
    const int N = static_cast<int>(c.flagCount());
    std::vector<char> seen(N, 0);
    std::set<std::vector<int>> keys;
    for (int start = 0; start < N; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int f = start;
        do {
            seen[f] = 1;
            cycle.push_back(c.vertexOf[f]);
            f = c.r2[c.r1[c.r0[f]]];
        } while (f != start);
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) {
            std::ostringstream os;
            os << "petrie polygon through flag " << start << " revisits a vertex";
            return reject("petrie", os.str());
        }
        keys.insert(canonicalCycle(cycle));
    }
    std::vector<std::vector<int>> faces(keys.begin(), keys.end());
    return fromFaces(c.nVertices, faces);
}

}  // namespace index2
