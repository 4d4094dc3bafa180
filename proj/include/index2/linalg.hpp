#pragma once

#include "index2/field.hpp"

#include <array>
#include <string>

namespace index2 {

struct Vec3 {
    FieldElement x, y, z;

    Vec3() = default;
    Vec3(FieldElement a, FieldElement b, FieldElement c)
        : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const FieldElement& s) const { return {x * s, y * s, z * s}; }

    FieldElement dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    FieldElement normSq() const { return dot(*this); }
    bool isZero() const { return x.isZero() && y.isZero() && z.isZero(); }

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }

    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

/// Container ordering (componentwise key order, not numeric).
struct Vec3KeyLess {
    bool operator()(const Vec3& a, const Vec3& b) const {
        if (a.x != b.x) return FieldElement::keyLess(a.x, b.x);
        if (a.y != b.y) return FieldElement::keyLess(a.y, b.y);
        return FieldElement::keyLess(a.z, b.z);
    }
};

inline FieldElement det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.dot(b.cross(c));
}

/// 3x3 matrix over Q(√5), used for the orthogonal point-group elements.
struct Mat3 {
    std::array<std::array<FieldElement, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = FieldElement(1);
        return r;
    }

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                FieldElement s;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    FieldElement det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    FieldElement trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    bool isOrthogonal() const {
        Mat3 p = *this * transpose();
        Mat3 id = identity();
        return p == id;
    }

    bool operator==(const Mat3& o) const { return m == o.m; }
    bool operator!=(const Mat3& o) const { return !(*this == o); }
};

struct Mat3KeyLess {
    bool operator()(const Mat3& a, const Mat3& b) const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a.m[i][j] != b.m[i][j]) return FieldElement::keyLess(a.m[i][j], b.m[i][j]);
        return false;
    }
};

using Isometry = Mat3;

}  // namespace index2
