#include "index2/field.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace index2 {

namespace {

int ratSign(const Rational& r) {
    if (r.is_zero()) return 0;
    return r < 0 ? -1 : 1;
}

}  // namespace

FieldElement FieldElement::inverse() const {
    if (isZero()) throw std::domain_error("FieldElement: division by zero");
    // (a + b√5)^-1 = (a - b√5) / (a² - 5b²); the norm is nonzero because
    // √5 is irrational.
    Rational norm = a_ * a_ - 5 * b_ * b_;
    return FieldElement(a_ / norm, -b_ / norm);
}

int FieldElement::sign() const {
    int sa = ratSign(a_);
    int sb = ratSign(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: a + b√5 has the sign of a iff a² > 5b².
    Rational diff = a_ * a_ - 5 * b_ * b_;
    int sd = ratSign(diff);
    if (sd == 0) return 0;  // unreachable: would need √5 rational
    return sd > 0 ? sa : sb;
}

bool FieldElement::keyLess(const FieldElement& x, const FieldElement& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

double FieldElement::toDouble() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * 2.2360679774997896964091736687747;
}

namespace {

std::string ratStr(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace

std::string FieldElement::str() const {
    if (b_.is_zero()) return ratStr(a_);
    std::string irrPart;
    if (b_ == 1) {
        irrPart = "√5";
    } else if (b_ == -1) {
        irrPart = "-√5";
    } else {
        irrPart = ratStr(b_) + "√5";
    }
    if (a_.is_zero()) return irrPart;
    if (b_ > 0) return ratStr(a_) + "+" + irrPart;
    return ratStr(a_) + irrPart;
}

namespace {

// Parses an unsigned decimal or fraction starting at pos; advances pos.
Integer digitsToInt(const std::string& digits) {
    Integer v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return v;
}

bool parseNumber(const std::string& s, size_t& pos, Rational& out) {
    size_t start = pos;
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) return false;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::string frac;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac += s[pos++];
        Integer den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        out = Rational(digitsToInt(digits) * den + digitsToInt(frac), den);
        return true;
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) den += s[pos++];
        if (den.empty()) { pos = start; return false; }
        Integer d = digitsToInt(den);
        if (d.is_zero()) { pos = start; return false; }
        out = Rational(digitsToInt(digits), d);
        return true;
    }
    out = Rational(digitsToInt(digits));
    return true;
}

// Accepts "√5", "sqrt5", "sqrt(5)", "s5" at pos.
bool parseRootToken(const std::string& s, size_t& pos) {
    static const char* forms[] = {"√5", "sqrt(5)", "sqrt5", "s5"};
    for (const char* f : forms) {
        size_t n = std::char_traits<char>::length(f);
        if (s.compare(pos, n, f) == 0) {
            pos += n;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<FieldElement> FieldElement::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    Rational a = 0, b = 0;
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        int sgn = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sgn = -1;
            ++pos;
        } else if (any) {
            return std::nullopt;  // terms must be joined by + or -
        }
        if (pos >= s.size()) return std::nullopt;

        Rational coeff;
        bool haveCoeff = parseNumber(s, pos, coeff);
        size_t rootPos = (haveCoeff && pos < s.size() && s[pos] == '*') ? pos + 1 : pos;
        if (parseRootToken(s, rootPos)) {
            pos = rootPos;
            b += sgn * (haveCoeff ? coeff : Rational(1));
        } else if (haveCoeff) {
            a += sgn * coeff;
        } else {
            return std::nullopt;
        }
        any = true;
    }
    if (!any) return std::nullopt;
    return FieldElement(a, b);
}

int compareRootQuotients(const FieldElement& x, const FieldElement& ax,
                         const FieldElement& y, const FieldElement& ay) {
    if (ax.sign() <= 0 || ay.sign() <= 0)
        throw std::domain_error("compareRootQuotients: radicands must be positive");
    int sx = x.sign();
    int sy = y.sign();
    if (sx != sy) return sx < sy ? -1 : 1;
    if (sx == 0) return 0;
    // Same strict sign: compare x²·ay with y²·ax, flipping for negatives.
    FieldElement lhs = x * x * ay;
    FieldElement rhs = y * y * ax;
    int c = (lhs - rhs).sign();
    return sx > 0 ? c : -c;
}

}  // namespace index2
