#include "index2/pointgroup.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace index2 {

const char* name(GroupKind k) {
    switch (k) {
        case GroupKind::Tetrahedral: return "[3,3]";
        case GroupKind::Octahedral: return "[3,4]";
        case GroupKind::Icosahedral: return "[3,5]";
    }
    return "?";
}

std::size_t expectedOrder(GroupKind k) {
    switch (k) {
        case GroupKind::Tetrahedral: return 24;
        case GroupKind::Octahedral: return 48;
        case GroupKind::Icosahedral: return 120;
    }
    return 0;
}

namespace {

Mat3 fromRows(Vec3 r0, Vec3 r1, Vec3 r2) {
    Mat3 g;
    g.m[0] = {r0.x, r0.y, r0.z};
    g.m[1] = {r1.x, r1.y, r1.z};
    g.m[2] = {r2.x, r2.y, r2.z};
    return g;
}

Mat3 diag(long a, long b, long c) {
    Mat3 g;
    g.m[0][0] = FieldElement(a);
    g.m[1][1] = FieldElement(b);
    g.m[2][2] = FieldElement(c);
    return g;
}

Mat3 swapAxes(int i, int j) {
    Mat3 g = Mat3::identity();
    std::swap(g.m[i], g.m[j]);
    return g;
}

// (x, y, z) -> (y, z, x): rotation of order 3 about the (1,1,1) axis.
Mat3 cyclicShift() {
    Mat3 g;
    g.m[0][1] = FieldElement(1);
    g.m[1][2] = FieldElement(1);
    g.m[2][0] = FieldElement(1);
    return g;
}

// Reflection in the plane with unit normal n: I - 2 n nᵀ.
Mat3 reflection(const Vec3& n) {
    Mat3 g = Mat3::identity();
    const Vec3 cols[3] = {n * (n.x * FieldElement(2)), n * (n.y * FieldElement(2)),
                          n * (n.z * FieldElement(2))};
    for (int j = 0; j < 3; ++j) {
        g.m[0][j] -= cols[j].x;
        g.m[1][j] -= cols[j].y;
        g.m[2][j] -= cols[j].z;
    }
    return g;
}

std::vector<Mat3> seeds(GroupKind kind) {
    switch (kind) {
        case GroupKind::Tetrahedral:
            // Mirrors x<->y and y<->z plus the half-turn about z preserve the
            // tetrahedron on the even-sign cube vertices.
            return {swapAxes(0, 1), swapAxes(1, 2), diag(-1, -1, 1)};
        case GroupKind::Octahedral:
            return {swapAxes(0, 1), swapAxes(1, 2), diag(-1, 1, 1)};
        case GroupKind::Icosahedral: {
            // Coordinate 3-cycle, two coordinate-plane mirrors, and the mirror
            // whose normal runs through an icosahedron edge midpoint.
            FieldElement tau = FieldElement::tau();
            FieldElement half(Rational(1, 2));
            Vec3 n((tau - FieldElement(1)) * half, tau * half, half);
            return {cyclicShift(), diag(1, 1, -1), diag(-1, 1, 1), reflection(n)};
        }
    }
    return {};
}

}  // namespace

PointGroup::PointGroup(GroupKind kind) : kind_(kind) {
    const std::size_t bound = expectedOrder(kind);
    std::set<Mat3, Mat3KeyLess> seen;
    std::vector<Mat3> queue = seeds(kind);
    queue.push_back(Mat3::identity());
    for (const Mat3& g : queue) seen.insert(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Mat3& s : seeds(kind)) {
            Mat3 g = queue[head] * s;
            if (seen.insert(g).second) {
                if (seen.size() > bound)
                    throw std::logic_error("PointGroup: closure exceeds expected order");
                queue.push_back(g);
            }
        }
    }
    if (seen.size() != bound) throw std::logic_error("PointGroup: closure has unexpected order");

    FieldElement one(1);
    for (const Mat3& g : seen) {
        if (!g.isOrthogonal()) throw std::logic_error("PointGroup: non-orthogonal element");
        FieldElement d = g.det();
        if (d != one && d != -one) throw std::logic_error("PointGroup: determinant not ±1");
        if (d == one) rotations_.push_back(elements_.size());
        elements_.push_back(g);
    }
}

const PointGroup& PointGroup::get(GroupKind kind) {
    static const PointGroup tet(GroupKind::Tetrahedral);
    static const PointGroup oct(GroupKind::Octahedral);
    static const PointGroup ico(GroupKind::Icosahedral);
    switch (kind) {
        case GroupKind::Tetrahedral: return tet;
        case GroupKind::Octahedral: return oct;
        case GroupKind::Icosahedral: return ico;
    }
    throw std::logic_error("PointGroup: unknown kind");
}

bool PointGroup::contains(const Mat3& g) const {
    for (const Mat3& e : elements_)
        if (e == g) return true;
    return false;
}

std::vector<Vec3> PointGroup::orbit(const Vec3& p, std::span<const Mat3> group) {
    std::set<Vec3, Vec3KeyLess> out;
    for (const Mat3& g : group) out.insert(g.apply(p));
    return std::vector<Vec3>(out.begin(), out.end());
}

}  // namespace index2
