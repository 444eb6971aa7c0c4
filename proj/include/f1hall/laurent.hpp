#pragma once

// Sparse multivariate Laurent polynomials over exact rationals.
//
// Canonical form: variables sorted by name with unused variables pruned,
// no zero coefficients stored, terms ordered graded-lexicographically
// (descending) for deterministic display and serialization.  Two values are
// equal iff their variable lists and term maps are equal.

#include "f1hall/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace f1hall {

using ExpVec = std::vector<std::int64_t>;

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("no exact Laurent quotient exists") {}
};

// Orders exponent vectors by total degree, then lexicographically, both
// descending, so map iteration starts at the leading term.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0}, checked_add);
        std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0}, checked_add);
        if (da != db) return da > db;
        return a > b;
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GradedLexDesc>;

    LaurentPoly() = default;

    static LaurentPoly constant(Rational c) {
        LaurentPoly p;
        if (c != 0) p.terms_[ExpVec{}] = std::move(c);
        return p;
    }

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return constant(1); }

    static LaurentPoly variable(const std::string& name, std::int64_t exp = 1) {
        return monomial(name, exp, 1);
    }

    static LaurentPoly monomial(const std::string& name, std::int64_t exp, Rational coeff) {
        LaurentPoly p;
        if (coeff == 0) return p;
        if (exp == 0) return constant(std::move(coeff));
        p.vars_ = {name};
        p.terms_[ExpVec{exp}] = std::move(coeff);
        return p;
    }

    static LaurentPoly from_terms(std::vector<std::string> vars,
                                  std::vector<std::pair<ExpVec, Rational>> terms) {
        LaurentPoly p;
        p.vars_ = std::move(vars);
        for (auto& [e, c] : terms) {
            if (e.size() != p.vars_.size())
                throw std::invalid_argument("exponent vector length mismatch");
            if (c == 0) continue;
            auto [it, fresh] = p.terms_.emplace(std::move(e), std::move(c));
            if (!fresh) throw std::invalid_argument("duplicate exponent vector");
        }
        p.canonicalize();
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_one() const { return is_constant() && constant_term() == 1; }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational constant_term() const {
        ExpVec zero_exp(vars_.size(), 0);
        auto it = terms_.find(zero_exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        LaurentPoly r;
        r.vars_ = std::move(vars);
        r.terms_ = std::move(av);
        for (auto& [e, c] : bv) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        r.prune_vars();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        LaurentPoly r;
        r.vars_ = std::move(vars);
        for (const auto& [ea, ca] : av) {
            for (const auto& [eb, cb] : bv) {
                ExpVec e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
                Rational c = ca * cb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        r.prune_vars();
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
        return a * LaurentPoly::constant(c);
    }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
        return a * LaurentPoly::constant(c);
    }

    LaurentPoly pow(std::int64_t n) const {
        if (n < 0) {
            if (!is_monomial()) throw std::invalid_argument("negative power of a non-monomial");
            const auto& [e, c] = *terms_.begin();
            LaurentPoly inv;
            inv.vars_ = vars_;
            ExpVec ie(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ie[i] = checked_mul(e[i], -1);
            inv.terms_.emplace(std::move(ie), Rational(1) / c);
            inv.prune_vars();
            return inv.pow(-n);
        }
        LaurentPoly r = one();
        LaurentPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // Leading term with respect to the display order.
    std::pair<ExpVec, Rational> leading_term() const {
        if (is_zero()) throw std::logic_error("leading term of zero");
        return *terms_.begin();
    }

    std::string to_string() const;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["vars"] = vars_;
        j["terms"] = nlohmann::json::array();
        for (const auto& [e, c] : terms_) {
            nlohmann::json t;
            t["exp"] = e;
            t["num"] = numerator(c).str();
            t["den"] = denominator(c).str();
            j["terms"].push_back(std::move(t));
        }
        return j;
    }

    static LaurentPoly from_json(const nlohmann::json& j) {
        std::vector<std::pair<ExpVec, Rational>> terms;
        for (const auto& t : j.at("terms")) {
            terms.emplace_back(t.at("exp").get<ExpVec>(),
                               rational_from_strings(t.at("num").get<std::string>(),
                                                     t.at("den").get<std::string>()));
        }
        return from_terms(j.at("vars").get<std::vector<std::string>>(), std::move(terms));
    }

    friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly specialize(const LaurentPoly& a,
                                  const std::map<std::string, LaurentPoly>& assignment);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void canonicalize() {
        // sort variables by name, permuting exponent columns along
        std::vector<std::size_t> order(vars_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return vars_[i] < vars_[j]; });
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (vars_[order[i]] == vars_[order[i + 1]])
                throw std::invalid_argument("duplicate variable name");
        bool sorted = std::is_sorted(order.begin(), order.end());
        if (!sorted) {
            std::vector<std::string> nv(vars_.size());
            for (std::size_t i = 0; i < order.size(); ++i) nv[i] = vars_[order[i]];
            TermMap nt;
            for (const auto& [e, c] : terms_) {
                ExpVec ne(e.size());
                for (std::size_t i = 0; i < order.size(); ++i) ne[i] = e[order[i]];
                nt.emplace(std::move(ne), c);
            }
            vars_ = std::move(nv);
            terms_ = std::move(nt);
        }
        prune_vars();
    }

    // Drops variables that no term uses, so canonical form is unique.
    void prune_vars() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            ExpVec ne;
            ne.reserve(nv.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Rewrites both operands over the union of their variable sets.
    static std::tuple<TermMap, TermMap, std::vector<std::string>> aligned(const LaurentPoly& a,
                                                                          const LaurentPoly& b) {
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        auto remap = [&vars](const LaurentPoly& p) {
            std::vector<std::size_t> pos(p.vars_.size());
            for (std::size_t i = 0; i < p.vars_.size(); ++i)
                pos[i] = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin();
            TermMap out;
            for (const auto& [e, c] : p.terms_) {
                ExpVec ne(vars.size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
                out.emplace(std::move(ne), c);
            }
            return out;
        };
        return {remap(a), remap(b), vars};
    }
};

// Exact quotient a/b when it exists.  The Laurent problem is reduced to a
// genuine polynomial division by clearing the per-variable minimum exponents
// of both operands; long division by the leading term (display order) then
// either terminates with zero remainder or proves there is no quotient.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly::zero();

    auto [at, bt, vars] = LaurentPoly::aligned(a, b);
    const std::size_t n = vars.size();

    auto min_exps = [n](const LaurentPoly::TermMap& t) {
        ExpVec m(n, 0);
        bool first = true;
        for (const auto& [e, c] : t) {
            for (std::size_t i = 0; i < n; ++i)
                m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    };
    ExpVec amin = min_exps(at), bmin = min_exps(bt);
    auto shift = [n](LaurentPoly::TermMap& t, const ExpVec& by, std::int64_t sign) {
        LaurentPoly::TermMap out;
        for (auto& [e, c] : t) {
            ExpVec ne(n);
            for (std::size_t i = 0; i < n; ++i) ne[i] = checked_add(e[i], sign * by[i]);
            out.emplace(std::move(ne), std::move(c));
        }
        t = std::move(out);
    };
    shift(at, amin, -1);
    shift(bt, bmin, -1);

    const auto& [lb, cb] = *bt.begin();
    LaurentPoly::TermMap quot;
    while (!at.empty()) {
        const auto& [la, ca] = *at.begin();
        ExpVec q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = la[i] - lb[i];
            if (q[i] < 0) throw NotDivisible();
        }
        Rational qc = ca / cb;
        // at -= (qc * x^q) * bt
        for (const auto& [e, c] : bt) {
            ExpVec ne(n);
            for (std::size_t i = 0; i < n; ++i) ne[i] = checked_add(e[i], q[i]);
            auto it = at.find(ne);
            Rational delta = qc * c;
            if (it == at.end()) {
                at.emplace(std::move(ne), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) at.erase(it);
            }
        }
        quot.emplace(std::move(q), std::move(qc));
    }

    std::vector<std::pair<ExpVec, Rational>> terms;
    for (auto& [e, c] : quot) {
        ExpVec ne(n);
        for (std::size_t i = 0; i < n; ++i) ne[i] = checked_add(e[i], amin[i] - bmin[i]);
        terms.emplace_back(std::move(ne), std::move(c));
    }
    return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

// Homomorphic substitution.  Every assigned image must be a single monomial
// so the result stays Laurent; unassigned variables map to themselves.
inline LaurentPoly specialize(const LaurentPoly& a,
                              const std::map<std::string, LaurentPoly>& assignment) {
    std::vector<const LaurentPoly*> image(a.vars_.size(), nullptr);
    for (std::size_t i = 0; i < a.vars_.size(); ++i) {
        auto it = assignment.find(a.vars_[i]);
        if (it == assignment.end()) continue;
        if (!it->second.is_monomial())
            throw std::invalid_argument("specialize image must be a single monomial");
        image[i] = &it->second;
    }
    LaurentPoly result;
    for (const auto& [e, c] : a.terms_) {
        LaurentPoly t = LaurentPoly::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (image[i] == nullptr)
                t = t * LaurentPoly::variable(a.vars_[i], e[i]);
            else
                t = t * image[i]->pow(e[i]);
        }
        result = result + t;
    }
    return result;
}

inline std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rational_to_string(ac);
        } else {
            if (ac != 1) out << rational_to_string(ac) << "*";
            out << mono;
        }
    }
    return out.str();
}

}  // namespace f1hall
