#pragma once

// The theta/alpha calculus and the zeta identities.
//
// Generic parameters live in the variables sigma, tau with q = sigma^2 and
// t = tau^2, so half-integer powers of q and t are integer exponents.  The
// t = q specialization lands in the single variable s with q = s^2.
//
// theta_k is the w^k coefficient of exp(sum_n alpha_n u_n w^n), computed with
// the u_n as formal variables; alpha_n = (1-q^n)(1-t^-n)(1-q^n t^-n)/n.

#include "f1hall/laurent.hpp"
#include "f1hall/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace f1hall {

inline const std::string kSigma = "sigma";
inline const std::string kTau = "tau";
inline const std::string kS = "s";

namespace detail {
inline std::string u_var(std::int64_t n) { return "u" + std::to_string(n); }
}  // namespace detail

// q^n as a polynomial in sigma.
inline LaurentPoly q_pow(std::int64_t n) { return LaurentPoly::variable(kSigma, 2 * n); }
// t^n as a polynomial in tau.
inline LaurentPoly t_pow(std::int64_t n) { return LaurentPoly::variable(kTau, 2 * n); }

// alpha_n = (1 - q^n)(1 - t^-n)(1 - q^n t^-n)/n
inline LaurentPoly alpha(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("alpha requires n >= 1");
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly qn = q_pow(n);
    LaurentPoly tmn = t_pow(-n);
    return Rational(1, n) * (one - qn) * (one - tmn) * (one - qn * tmn);
}

// Balanced quantum integer [k]_s = (s^k - s^-k)/(s - s^-1).
inline LaurentPoly quantum_integer(std::int64_t k) {
    LaurentPoly sum;
    for (std::int64_t j = 0; j < k; ++j)
        sum = sum + LaurentPoly::variable(kS, k - 1 - 2 * j);
    return sum;
}

// Commutative polynomial in the symbols u_n with coefficients in (sigma,tau).
// A monomial is the multiset of its factors, stored as (n, multiplicity)
// pairs with n ascending.
class ThetaPoly {
public:
    using UMonomial = std::vector<std::pair<std::int64_t, std::int64_t>>;
    using TermMap = std::map<UMonomial, LaurentPoly>;

    ThetaPoly() = default;

    void add_term(UMonomial mono, LaurentPoly coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mono), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }

    // Total u-weight: sum of n * multiplicity, equal across all monomials of
    // a theta polynomial.
    static std::int64_t weight(const UMonomial& m) {
        std::int64_t w = 0;
        for (auto [n, mult] : m) w += checked_mul(n, mult);
        return w;
    }

    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            for (auto [n, mult] : m) {
                out += "*u(" + std::to_string(n) + ")";
                if (mult != 1) out += "^" + std::to_string(mult);
            }
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [m, c] : terms_) {
            nlohmann::json t;
            t["monomial"] = nlohmann::json::array();
            for (auto [n, mult] : m) t["monomial"].push_back({n, mult});
            t["coeff"] = c.to_json();
            j.push_back(std::move(t));
        }
        return j;
    }

private:
    TermMap terms_;
};

namespace detail {

inline ThetaPoly theta_poly_uncached(std::int64_t k) {
    FormalSeries f("w", k);
    for (std::int64_t n = 1; n <= k; ++n)
        f.set_coefficient(n, alpha(n) * LaurentPoly::variable(u_var(n)));
    FormalSeries g = series_exp(f);

    const LaurentPoly& coeff = g.coefficient(k);
    ThetaPoly theta;
    for (const auto& [exps, c] : coeff.terms()) {
        ThetaPoly::UMonomial mono;
        LaurentPoly rest = LaurentPoly::constant(c);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            const std::string& v = coeff.vars()[i];
            if (v.size() > 1 && v[0] == 'u') {
                mono.emplace_back(std::stoll(v.substr(1)), exps[i]);
            } else {
                rest = rest * LaurentPoly::variable(v, exps[i]);
            }
        }
        std::sort(mono.begin(), mono.end());
        if (ThetaPoly::weight(mono) != k)
            throw std::logic_error("theta monomial has wrong u-weight");
        theta.add_term(std::move(mono), std::move(rest));
    }
    return theta;
}

}  // namespace detail

// theta_k: the w^k coefficient of exp(sum_{n>=1} alpha_n u_n w^n).
inline ThetaPoly theta_poly(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("theta_poly requires k >= 1");
    thread_local std::map<std::int64_t, ThetaPoly> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, detail::theta_poly_uncached(k)).first;
    return it->second;
}

// Exact limit of alpha_k/alpha_1 as t -> q, computed by resolving each
// removable factor as a geometric quotient before specializing tau -> sigma,
// sigma -> s.  Equals ([k]_s)^2.
inline LaurentPoly alpha_ratio_limit(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("alpha_ratio_limit requires k >= 1");
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly f1 = exact_divide(one - q_pow(k), one - q_pow(1));
    LaurentPoly f2 = exact_divide(one - t_pow(-k), one - t_pow(-1));
    LaurentPoly f3 = exact_divide(one - q_pow(k) * t_pow(-k), one - q_pow(1) * t_pow(-1));
    LaurentPoly prod = Rational(1, k) * f1 * f2 * f3;
    LaurentPoly at_q = specialize(prod, {{kTau, LaurentPoly::variable(kSigma)}});
    return specialize(at_q, {{kSigma, LaurentPoly::variable(kS)}});
}

// Weil point count N_n = 1 + p^n - q^n - t^-n with p = q/t, in (sigma,tau).
inline LaurentPoly weil_count(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("weil_count requires n >= 1");
    return LaurentPoly::one() + q_pow(n) * t_pow(-n) - q_pow(n) - t_pow(-n);
}

// Checks N_n = n * [z^n] log((1-qz)(1-z/t) / ((1-z)(1-pz))) for n <= order.
inline bool weil_series_check(std::int64_t order) {
    LaurentPoly one = LaurentPoly::one();
    FormalSeries numer = FormalSeries::constant("z", order, one);
    numer.set_coefficient(1, -(q_pow(1) + t_pow(-1)));
    if (order >= 2) numer.set_coefficient(2, q_pow(1) * t_pow(-1));
    FormalSeries zeta = numer * FormalSeries::geometric("z", order, one) *
                        FormalSeries::geometric("z", order, q_pow(1) * t_pow(-1));
    FormalSeries logz = series_log(zeta);
    for (std::int64_t n = 1; n <= order; ++n)
        if (Rational(n) * logz.coefficient(n) != weil_count(n)) return false;
    return true;
}

// Checks exp(sum_{n<=order} (2 - q^n - q^-n) z^n / n) against the expansion
// of (1-qz)(1-z/q)/(1-z)^2 through the given order, in the variable q.
inline bool zeta_check(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("zeta_check requires order >= 1");
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = LaurentPoly::variable("q");

    FormalSeries exponent("z", order);
    for (std::int64_t n = 1; n <= order; ++n) {
        LaurentPoly nn = LaurentPoly::constant(2) - LaurentPoly::variable("q", n) -
                         LaurentPoly::variable("q", -n);
        exponent.set_coefficient(n, Rational(1, n) * nn);
    }
    FormalSeries lhs = series_exp(exponent);

    FormalSeries numer = FormalSeries::constant("z", order, one);
    numer.set_coefficient(1, -(q + LaurentPoly::variable("q", -1)));
    if (order >= 2) numer.set_coefficient(2, one);
    FormalSeries geom = FormalSeries::geometric("z", order, one);
    FormalSeries rhs = numer * geom * geom;

    return lhs == rhs;
}

}  // namespace f1hall
