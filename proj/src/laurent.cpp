#include "germlab/laurent.hpp"

#include <algorithm>

#include "germlab/errors.hpp"

namespace germlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long v) {
    IntPoly p;
    if (v != 0) p.c = {BigInt(v)};
    return p;
}

IntPoly IntPoly::monomial(int deg, long coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c.assign(deg + 1, BigInt(0));
        p.c[deg] = coeff;
    }
    return p;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    return k >= 0 && k < int(c.size()) ? c[k] : BigInt(0);
}

BigInt IntPoly::eval_int(long t) const {
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw ComputationError("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw ComputationError("polynomial division has remainder");
    IntPoly rem = *this;
    IntPoly q;
    q.c.assign(degree() - d.degree() + 1, BigInt(0));
    const BigInt& lead = d.c.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        BigInt top = rem.c.back();
        if (top % lead != 0) throw ComputationError("polynomial division has remainder");
        BigInt f = top / lead;
        q.c[k] = f;
        for (std::size_t i = 0; i < d.c.size(); ++i) rem.c[k + i] -= f * d.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw ComputationError("polynomial division has remainder");
    q.trim();
    return q;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        BigInt v = c[k];
        if (v == 0) continue;
        bool neg = v < 0;
        BigInt mag = neg ? -v : v;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = mag == 1 && k > 0;
        if (!unit) s += mag.str();
        if (k > 0) {
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant needs a square matrix");
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    if (sign < 0) det = IntPoly::constant(0) - det;
    return det;
}

IntPoly alexander_normal_form(IntPoly p) {
    if (p.is_zero()) return p;
    std::size_t shift = 0;
    while (shift < p.c.size() && p.c[shift] == 0) ++shift;
    p.c.erase(p.c.begin(), p.c.begin() + shift);
    if (p.c.back() < 0)
        for (BigInt& v : p.c) v = -v;
    return p;
}

}  // namespace germlab
