#pragma once

// Truncated formal power series with LaurentPoly coefficients.
//
// A series carries its truncation order; binary operations truncate to the
// smaller order of the two operands.  exp and log use the standard
// derivative recurrences, so every coefficient is exact.

#include "f1hall/laurent.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1hall {

struct BadConstantTerm : std::runtime_error {
    explicit BadConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

class FormalSeries {
public:
    FormalSeries(std::string var, std::int64_t order)
        : var_(std::move(var)), coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static FormalSeries constant(std::string var, std::int64_t order, LaurentPoly c) {
        FormalSeries s(std::move(var), order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    // 1 + r*z + r^2*z^2 + ...; `ratio` must be a monomial or constant.
    static FormalSeries geometric(std::string var, std::int64_t order, const LaurentPoly& ratio) {
        FormalSeries s(std::move(var), order);
        LaurentPoly acc = LaurentPoly::one();
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
            s.coeffs_[k] = acc;
            acc = acc * ratio;
        }
        return s;
    }

    const std::string& var() const { return var_; }
    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const LaurentPoly& coefficient(std::int64_t k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
        return coeffs_[static_cast<std::size_t>(k)];
    }

    void set_coefficient(std::int64_t k, LaurentPoly c) {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
        coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        check_same_var(a, b);
        FormalSeries r = a.truncated(std::min(a.order(), b.order()));
        for (std::int64_t k = 0; k <= r.order(); ++k)
            r.coeffs_[k] = r.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        check_same_var(a, b);
        FormalSeries r = a.truncated(std::min(a.order(), b.order()));
        for (std::int64_t k = 0; k <= r.order(); ++k)
            r.coeffs_[k] = r.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        check_same_var(a, b);
        FormalSeries r(a.var_, std::min(a.order(), b.order()));
        for (std::int64_t k = 0; k <= r.order(); ++k) {
            LaurentPoly acc;
            for (std::int64_t j = 0; j <= k; ++j)
                acc = acc + a.coeffs_[j] * b.coeffs_[k - j];
            r.coeffs_[k] = std::move(acc);
        }
        return r;
    }

    friend FormalSeries operator*(const FormalSeries& a, const LaurentPoly& c) {
        FormalSeries r = a;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    FormalSeries truncated(std::int64_t order) const {
        if (order >= this->order()) {
            FormalSeries r = *this;
            r.coeffs_.resize(static_cast<std::size_t>(order) + 1);
            return r;
        }
        FormalSeries r(var_, order);
        for (std::int64_t k = 0; k <= order; ++k) r.coeffs_[k] = coeffs_[k];
        return r;
    }

    friend FormalSeries series_exp(const FormalSeries& f) {
        if (!f.coeffs_[0].is_zero())
            throw BadConstantTerm("series_exp requires zero constant term");
        FormalSeries g(f.var_, f.order());
        g.coeffs_[0] = LaurentPoly::one();
        // n*g_n = sum_{k=1..n} k*f_k*g_{n-k}
        for (std::int64_t n = 1; n <= f.order(); ++n) {
            LaurentPoly acc;
            for (std::int64_t k = 1; k <= n; ++k)
                acc = acc + Rational(k) * f.coeffs_[k] * g.coeffs_[n - k];
            g.coeffs_[n] = Rational(1, n) * acc;
        }
        return g;
    }

    friend FormalSeries series_log(const FormalSeries& g) {
        if (!g.coeffs_[0].is_one())
            throw BadConstantTerm("series_log requires constant term one");
        FormalSeries f(g.var_, g.order());
        // f_n = g_n - (1/n) sum_{k=1..n-1} k*f_k*g_{n-k}
        for (std::int64_t n = 1; n <= g.order(); ++n) {
            LaurentPoly acc;
            for (std::int64_t k = 1; k < n; ++k)
                acc = acc + Rational(k) * f.coeffs_[k] * g.coeffs_[n - k];
            f.coeffs_[n] = g.coeffs_[n] - Rational(1, n) * acc;
        }
        return f;
    }

    std::string to_string() const {
        std::string out;
        for (std::int64_t k = 0; k <= order(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeffs_[k].to_string() + ")";
            if (k > 0) out += "*" + var_ + (k > 1 ? "^" + std::to_string(k) : "");
        }
        if (out.empty()) out = "0";
        return out + " + O(" + var_ + "^" + std::to_string(order() + 1) + ")";
    }

private:
    std::string var_;
    std::vector<LaurentPoly> coeffs_;

    static void check_same_var(const FormalSeries& a, const FormalSeries& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("series variable mismatch: " + a.var_ + " vs " + b.var_);
    }
};

}  // namespace f1hall
