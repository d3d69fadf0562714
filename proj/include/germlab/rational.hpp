#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "germlab/errors.hpp"

namespace germlab {

// Exact rational with 64-bit numerator/denominator, always normalized:
// den > 0, gcd(|num|, den) == 1.  Exponents and model coefficients stay exact
// so sheet evaluation at dyadic t introduces no parsing noise.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return double(num) / double(den); }

    bool is_integer() const { return den == 1; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw InvalidInput("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "n" or "n/d"; also accepts a plain decimal like "2.5" with at most
// 9 fractional digits (converted exactly).
Rational parse_rational(const std::string& text);

}  // namespace germlab
