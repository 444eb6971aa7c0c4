#pragma once

// Exact integer geometry of Z^2: signed areas, gcd lengths, the interior
// lattice-point count of the triangle spanned by two vectors (Pick's
// theorem), and the SL(2,Z) action on rank/degree pairs.

#include "f1hall/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace f1hall {

struct ZeroVector : std::runtime_error {
    ZeroVector() : std::runtime_error("lattice vector (0,0) is not allowed here") {}
};

struct DegenerateTriangle : std::runtime_error {
    DegenerateTriangle() : std::runtime_error("parallel vectors span a degenerate triangle") {}
};

struct LatticeVec {
    std::int64_t r = 0;  // rank
    std::int64_t d = 0;  // degree

    friend LatticeVec operator+(LatticeVec a, LatticeVec b) {
        return {checked_add(a.r, b.r), checked_add(a.d, b.d)};
    }
    friend LatticeVec operator-(LatticeVec a, LatticeVec b) { return {a.r - b.r, a.d - b.d}; }
    friend LatticeVec operator*(std::int64_t n, LatticeVec a) {
        return {checked_mul(n, a.r), checked_mul(n, a.d)};
    }
    friend bool operator==(LatticeVec a, LatticeVec b) { return a.r == b.r && a.d == b.d; }
    friend bool operator!=(LatticeVec a, LatticeVec b) { return !(a == b); }
    friend bool operator<(LatticeVec a, LatticeVec b) {
        return a.r != b.r ? a.r < b.r : a.d < b.d;
    }

    bool is_zero() const { return r == 0 && d == 0; }

    std::string to_string() const {
        return "(" + std::to_string(r) + "," + std::to_string(d) + ")";
    }
};

inline std::int64_t det2(LatticeVec x, LatticeVec y) {
    return checked_mul(x.r, y.d) - checked_mul(x.d, y.r);
}

inline std::int64_t gcd_vec(LatticeVec x) {
    if (x.is_zero()) throw ZeroVector();
    return std::gcd(x.r, x.d);
}

inline bool is_parallel(LatticeVec x, LatticeVec y) {
    if (x.is_zero() || y.is_zero()) throw ZeroVector();
    return det2(x, y) == 0;
}

// Number of lattice points strictly inside the triangle with vertices
// 0, x, x+y.  Pick: A = I + B/2 - 1 with 2A = |det2(x,y)| and boundary count
// B = gcd(x) + gcd(y) + gcd(x+y).
inline std::int64_t interior_points(LatticeVec x, LatticeVec y) {
    if (is_parallel(x, y)) throw DegenerateTriangle();
    std::int64_t twice_area = det2(x, y);
    if (twice_area < 0) twice_area = -twice_area;
    std::int64_t boundary = gcd_vec(x) + gcd_vec(y) + gcd_vec(x + y);
    std::int64_t twice_interior = twice_area - boundary + 2;
    if (twice_interior % 2 != 0 || twice_interior < 0)
        throw std::logic_error("Pick count is not a nonnegative integer");
    return twice_interior / 2;
}

// Sign convention for the bracket: epsilon(x,y) = sign of det2(x,y).
inline int epsilon(LatticeVec x, LatticeVec y) {
    if (is_parallel(x, y)) throw DegenerateTriangle();
    return det2(x, y) > 0 ? +1 : -1;
}

struct SL2Matrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    SL2Matrix() = default;
    SL2Matrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (checked_mul(a, d) - checked_mul(b, c) != 1)
            throw std::invalid_argument("matrix determinant must be 1");
    }

    // S: (r,d) -> (d,-r)
    static SL2Matrix S() { return {0, 1, -1, 0}; }
    // T: (r,d) -> (r,d+r)
    static SL2Matrix T() { return {1, 0, 1, 1}; }
    static SL2Matrix identity() { return {}; }
    // Generator of the Z-action on the grading lattice.
    static SL2Matrix z_generator() { return T(); }

    friend SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n) {
        return {checked_add(checked_mul(m.a, n.a), checked_mul(m.b, n.c)),
                checked_add(checked_mul(m.a, n.b), checked_mul(m.b, n.d)),
                checked_add(checked_mul(m.c, n.a), checked_mul(m.d, n.c)),
                checked_add(checked_mul(m.c, n.b), checked_mul(m.d, n.d))};
    }

    friend bool operator==(const SL2Matrix& m, const SL2Matrix& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    SL2Matrix inverse() const { return {d, -b, -c, a}; }
};

inline LatticeVec sl2_apply(const SL2Matrix& g, LatticeVec x) {
    return {checked_add(checked_mul(g.a, x.r), checked_mul(g.b, x.d)),
            checked_add(checked_mul(g.c, x.r), checked_mul(g.d, x.d))};
}

}  // namespace f1hall
