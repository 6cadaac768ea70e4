#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace latq {

// Exact rational scalar. Arbitrary precision so antiderivatives and affine
// substitutions never overflow or round.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

// Every IEEE double is mantissa * 2^e, hence exactly rational.
inline Rat rat_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite value");
    return Rat(v);
}

inline Rat rat_of(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rat_of: zero denominator");
    return Rat(num, den);
}

// Complex number with exact rational parts.
struct RatComplex {
    Rat re;
    Rat im;

    RatComplex() : re(0), im(0) {}
    RatComplex(Rat r) : re(std::move(r)), im(0) {}
    RatComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    RatComplex(long long r) : re(r), im(0) {}

    static RatComplex i() { return RatComplex(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    RatComplex conj() const { return {re, -im}; }

    RatComplex operator-() const { return {-re, -im}; }
    RatComplex& operator+=(const RatComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    RatComplex& operator-=(const RatComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend RatComplex operator+(RatComplex a, const RatComplex& b) { return a += b; }
    friend RatComplex operator-(RatComplex a, const RatComplex& b) { return a -= b; }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RatComplex operator*(const Rat& s, const RatComplex& a) { return {s * a.re, s * a.im}; }
    friend RatComplex operator/(const RatComplex& a, const Rat& s) {
        if (s == 0) throw std::invalid_argument("RatComplex: division by zero");
        return {a.re / s, a.im / s};
    }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend std::ostream& operator<<(std::ostream& os, const RatComplex& c) {
        return os << "(" << c.re << (c.im < 0 ? "" : "+") << c.im << "i)";
    }
};

}  // namespace latq
