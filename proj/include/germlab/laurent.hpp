#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace germlab {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with exact integer coefficients, c[k] multiplying
// t^k. All arithmetic is exact; division requires an exact quotient.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(long v);
    static IntPoly monomial(int deg, long coeff = 1);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    BigInt coeff(int k) const;
    BigInt eval_int(long t) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    // Exact quotient in integer coefficients; throws if anything remains.
    IntPoly divexact(const IntPoly& d) const;

    std::string str(const std::string& var = "t") const;
};

// Fraction-free determinant; entries stay polynomial at every step.
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m);

// Alexander polynomials are defined up to a unit +-t^k; the normal form
// divides out powers of t and makes the leading coefficient positive.
IntPoly alexander_normal_form(IntPoly p);

}  // namespace germlab
