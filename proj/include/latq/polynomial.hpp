#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <span>
#include <vector>

#include "latq/rational.hpp"

namespace latq {

// Multivariate polynomial in x_1..x_n with exact complex-rational coefficients.
// Immutable value type: every operation returns a new polynomial. A flat
// double-precision copy of the terms is kept for fast evaluation.
class Polynomial {
  public:
    using Exponents = std::vector<int>;

    explicit Polynomial(int nvars = 0) : n_(nvars) { refresh_cache(); }

    static Polynomial constant(int nvars, RatComplex c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = std::move(c);
        p.refresh_cache();
        return p;
    }

    static Polynomial variable(int nvars, int i, RatComplex scale = RatComplex(1)) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e.at(i) = 1;
        if (!scale.is_zero()) p.terms_[e] = std::move(scale);
        p.refresh_cache();
        return p;
    }

    static Polynomial monomial(int nvars, Exponents e, RatComplex c) {
        Polynomial p(nvars);
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("Polynomial::monomial: exponent arity mismatch");
        if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
        p.refresh_cache();
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, RatComplex>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.n_);
        r.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.refresh_cache();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        r.refresh_cache();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.n_);
                for (int k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end())
                    r.terms_[std::move(e)] = ca * cb;
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        r.refresh_cache();
        return r;
    }

    Polynomial scaled(const RatComplex& s) const {
        Polynomial r(n_);
        if (!s.is_zero())
            for (const auto& [e, c] : terms_) r.terms_[e] = s * c;
        r.refresh_cache();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    Polynomial derivative(int i) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            if (e.at(i) == 0) continue;
            Exponents d = e;
            int k = d[i]--;
            r.terms_[std::move(d)] = Rat(k) * c;
        }
        r.refresh_cache();
        return r;
    }

    // Antiderivative in x_i with zero constant term (exact division by the
    // incremented exponent).
    Polynomial antiderivative(int i) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            Exponents d = e;
            int k = ++d[i];
            r.terms_[std::move(d)] = c / Rat(k);
        }
        r.refresh_cache();
        return r;
    }

    // Substitute x_i = value (exact), eliminating the dependence on x_i while
    // keeping the arity.
    Polynomial fix_variable(int i, const Rat& value) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            Rat pw(1);
            for (int k = 0; k < e.at(i); ++k) pw *= value;
            Exponents d = e;
            d[i] = 0;
            RatComplex add = pw * c;
            auto it = r.terms_.find(d);
            if (it == r.terms_.end()) {
                if (!add.is_zero()) r.terms_[std::move(d)] = std::move(add);
            } else {
                it->second += add;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.refresh_cache();
        return r;
    }

    // Full affine substitution x -> B x + d with rational B (n x n) and d (n).
    Polynomial compose_affine(const std::vector<std::vector<Rat>>& B,
                              const std::vector<Rat>& d) const {
        std::vector<Polynomial> images;
        images.reserve(n_);
        for (int i = 0; i < n_; ++i) {
            Polynomial img = Polynomial::constant(n_, RatComplex(d.at(i)));
            for (int j = 0; j < n_; ++j)
                if (B.at(i).at(j) != 0) img = img + Polynomial::variable(n_, j, RatComplex(B[i][j]));
            images.push_back(std::move(img));
        }
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(n_, c);
            for (int k = 0; k < n_; ++k)
                for (int p = 0; p < e[k]; ++p) term = term * images[k];
            r = r + term;
        }
        return r;
    }

    Polynomial real_part() const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_)
            if (c.re != 0) r.terms_[e] = RatComplex(c.re);
        r.refresh_cache();
        return r;
    }

    Polynomial imag_part() const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_)
            if (c.im != 0) r.terms_[e] = RatComplex(c.im);
        r.refresh_cache();
        return r;
    }

    std::complex<double> eval(std::span<const double> x) const {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& t : flat_) {
            double mono = 1.0;
            for (int k = 0; k < n_; ++k)
                for (int p = 0; p < t.exps[k]; ++p) mono *= x[static_cast<std::size_t>(k)];
            acc += t.coeff * mono;
        }
        return acc;
    }

    std::complex<double> eval(const std::vector<double>& x) const {
        return eval(std::span<const double>(x));
    }

    RatComplex eval_exact(const std::vector<Rat>& x) const {
        RatComplex acc;
        for (const auto& [e, c] : terms_) {
            Rat mono(1);
            for (int k = 0; k < n_; ++k)
                for (int p = 0; p < e[k]; ++p) mono *= x.at(k);
            acc += mono * c;
        }
        return acc;
    }

  private:
    struct FlatTerm {
        Exponents exps;
        std::complex<double> coeff;
    };

    void check_same(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Polynomial: arity mismatch");
    }

    void refresh_cache() {
        flat_.clear();
        flat_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) flat_.push_back({e, c.to_complex()});
    }

    int n_;
    std::map<Exponents, RatComplex> terms_;
    std::vector<FlatTerm> flat_;
};

}  // namespace latq
