#pragma once

// Brute-force reference computations and random generators for the test
// suites.  Everything here is deliberately independent of the library's fast
// paths: triangle interiors are counted by half-plane scans, polynomial
// identities are spot-checked by exact evaluation at rational points, and
// series are re-expanded by naive powering.

#include "f1hall/laurent.hpp"
#include "f1hall/lattice.hpp"
#include "f1hall/series.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracles {

using f1hall::ExpVec;
using f1hall::FormalSeries;
using f1hall::LatticeVec;
using f1hall::LaurentPoly;
using f1hall::Rational;

// Lattice points strictly inside the triangle 0, x, x+y, counted by three
// exact half-plane sign tests over the bounding box.
inline std::int64_t scan_interior_points(LatticeVec x, LatticeVec y) {
    LatticeVec a{0, 0}, b = x, c = x + y;
    auto side = [](LatticeVec p, LatticeVec q, LatticeVec v) {
        return (q.r - p.r) * (v.d - p.d) - (q.d - p.d) * (v.r - p.r);
    };
    std::int64_t lo_r = std::min({a.r, b.r, c.r}), hi_r = std::max({a.r, b.r, c.r});
    std::int64_t lo_d = std::min({a.d, b.d, c.d}), hi_d = std::max({a.d, b.d, c.d});
    std::int64_t count = 0;
    for (std::int64_t r = lo_r; r <= hi_r; ++r) {
        for (std::int64_t d = lo_d; d <= hi_d; ++d) {
            LatticeVec p{r, d};
            std::int64_t s1 = side(a, b, p), s2 = side(b, c, p), s3 = side(c, a, p);
            if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) ++count;
        }
    }
    return count;
}

// Exact evaluation of a Laurent polynomial at nonzero rational points; used
// to cross-check structural identities through an independent route.
inline Rational eval_at(const LaurentPoly& p, const std::map<std::string, Rational>& point) {
    Rational total = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        Rational term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            Rational base = point.at(p.vars()[i]);
            std::int64_t e = exps[i];
            if (e < 0) {
                base = Rational(1) / base;
                e = -e;
            }
            for (std::int64_t k = 0; k < e; ++k) term *= base;
        }
        total += term;
    }
    return total;
}

// exp by naive powering: sum_{j<=order} f^j / j!.
inline FormalSeries exp_by_powers(const FormalSeries& f) {
    FormalSeries sum = FormalSeries::constant(f.var(), f.order(), LaurentPoly::one());
    FormalSeries power = sum;
    Rational fact = 1;
    for (std::int64_t j = 1; j <= f.order(); ++j) {
        power = power * f;
        fact *= j;
        sum = sum + power * LaurentPoly::constant(Rational(1) / fact);
    }
    return sum;
}

// log by naive powering: -sum_{j<=order} (1-g)^j / j.
inline FormalSeries log_by_powers(const FormalSeries& g) {
    FormalSeries one = FormalSeries::constant(g.var(), g.order(), LaurentPoly::one());
    FormalSeries h = one - g;
    FormalSeries sum(g.var(), g.order());
    FormalSeries power = one;
    for (std::int64_t j = 1; j <= g.order(); ++j) {
        power = power * h;
        sum = sum - power * LaurentPoly::constant(Rational(1, j));
    }
    return sum;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
    }

    Rational rational() {
        std::int64_t num = uniform(-6, 6);
        std::int64_t den = uniform(1, 4);
        return Rational(num, den);
    }

    LaurentPoly laurent(const std::vector<std::string>& vars, int max_terms = 4,
                        std::int64_t max_exp = 3) {
        LaurentPoly p;
        int terms = static_cast<int>(uniform(0, max_terms));
        for (int t = 0; t < terms; ++t) {
            LaurentPoly mono = LaurentPoly::constant(rational());
            for (const auto& v : vars)
                mono = mono * LaurentPoly::variable(v, uniform(-max_exp, max_exp));
            p = p + mono;
        }
        return p;
    }

    LatticeVec lattice_vec(std::int64_t bound) {
        while (true) {
            LatticeVec v{uniform(-bound, bound), uniform(-bound, bound)};
            if (!v.is_zero()) return v;
        }
    }
};

}  // namespace oracles
