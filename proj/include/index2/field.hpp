#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace index2 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the real quadratic field Q(sqrtое5): value = rat + irr * sqrt(5).
/// Both components are arbitrary-precision rationals kept in lowest terms with
/// positive denominator (the backing type canonicalizes on construction).
/// All predicates (sign, comparisons) are exact; no floating point is involved
/// anywhere except the explicit toDouble() conversion.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long v) : a_(v) {}
    FieldElement(Rational a) : a_(std::move(a)) {}
    FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static FieldElement sqrt5() { return FieldElement(Rational(0), Rational(1)); }
    /// The golden ratio (1 + sqrt 5) / 2.
    static FieldElement tau() { return FieldElement(Rational(1, 2), Rational(1, 2)); }

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }

    bool isZero() const { return a_.is_zero() && b_.is_zero(); }
    bool isRational() const { return b_.is_zero(); }
    bool isOne() const { return b_.is_zero() && a_ == 1; }

    FieldElement operator-() const { return FieldElement(-a_, -b_); }
    FieldElement operator+(const FieldElement& o) const { return FieldElement(a_ + o.a_, b_ + o.b_); }
    FieldElement operator-(const FieldElement& o) const { return FieldElement(a_ - o.a_, b_ - o.b_); }
    FieldElement operator*(const FieldElement& o) const {
        return FieldElement(a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Galois conjugate a - b*sqrt(5).
    FieldElement conjugate() const { return FieldElement(a_, -b_); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    /// Exact sign: -1, 0, or +1.
    int sign() const;

    bool operator==(const FieldElement& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return (*this - o).sign() < 0; }
    bool operator>(const FieldElement& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const FieldElement& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const FieldElement& o) const { return (*this - o).sign() >= 0; }

    /// Ordering usable as a container key (lexicographic on components, not
    /// the numeric order; use operator< of the value itself for that).
    static bool keyLess(const FieldElement& x, const FieldElement& y);

    double toDouble() const;

    /// Render as "a", "b√5" or "a+b√5" with rational components, e.g.
    /// "1/2+1/2√5" for tau and "-2" for minus two.
    std::string str() const;

    /// Parse the str() grammar plus conveniences: "sqrt5"/"s5" aliases for
    /// "√5", decimal literals ("0.75" reads as the exact rational 3/4).
    static std::optional<FieldElement> parse(const std::string& text);

private:
    Rational a_;
    Rational b_;
};

inline FieldElement operator*(long s, const FieldElement& x) { return FieldElement(s) * x; }

/// Compare x / sqrt(ax) with y / sqrt(ay) exactly, for ax, ay > 0.
/// Returns the sign of the difference. Used for comparing cosines whose
/// denominators are square roots of field elements.
int compareRootQuotients(const FieldElement& x, const FieldElement& ax,
                         const FieldElement& y, const FieldElement& ay);

}  // namespace index2
