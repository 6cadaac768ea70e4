#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latq {

// Tail of the dominating product sum: for lattice points at spacing 1/N
// outside radius R of the evaluation point, each axis contributes
//   sum_{j>=0} e^{-a (R + j/N)^2} <= e^{-a R^2} / (1 - e^{-2 a R / N}),
// and the full one-axis sum is bounded by 3 + N sqrt(pi / a), a = c N pi t.
// The n-axis tail is  n * T1(R) * S1^{n-1}  (some coordinate escapes the box).
inline double lattice_tail_bound(double c, int N, double t, double R, int n = 1) {
    if (c <= 0 || N < 1 || t <= 0 || R <= 0) return std::numeric_limits<double>::infinity();
    double a = c * static_cast<double>(N) * std::numbers::pi * t;
    double one_sided = std::exp(-a * R * R) / (1.0 - std::exp(-2.0 * a * R / N));
    double t1 = 2.0 * one_sided;
    double s1 = 3.0 + static_cast<double>(N) * std::sqrt(std::numbers::pi / a);
    return static_cast<double>(n) * t1 * std::pow(s1, n - 1);
}

// Smallest radius R with lattice_tail_bound(c, N, t, R, n) <= eps.
inline double lattice_truncation_radius(double c, int N, double t, double eps, int n = 1) {
    if (eps <= 0) throw std::invalid_argument("lattice_truncation_radius: eps must be positive");
    if (c <= 0 || t <= 0 || N < 1)
        throw std::invalid_argument("lattice_truncation_radius: positive inputs required");
    double lo = 1e-3, hi = 1.0;
    while (lattice_tail_bound(c, N, t, hi, n) > eps) {
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("lattice_truncation_radius: no finite radius");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (lattice_tail_bound(c, N, t, mid, n) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Tail bound for orbit sums enumerated in the transported coordinate, where
// terms obey |term| <= e^{-g d^2} with d the sup-distance from the center and
// at most (2s+4)^n orbit points lie in the sup-ball of radius s.
inline double orbit_tail_bound(double g, double R, int n) {
    if (g <= 0 || R <= 0) return std::numeric_limits<double>::infinity();
    double total = 0;
    for (int j = 0;; ++j) {
        double s = R + j;
        double shell = std::pow(2.0 * (s + 1.0) + 4.0, n) * std::exp(-g * s * s);
        total += shell;
        if (shell < 1e-300 || shell < 1e-18 * total) break;
        if (j > 10000) return std::numeric_limits<double>::infinity();
    }
    return total;
}

inline double orbit_truncation_radius(double g, double eps, int n) {
    if (eps <= 0) throw std::invalid_argument("orbit_truncation_radius: eps must be positive");
    if (g <= 0) throw std::invalid_argument("orbit_truncation_radius: need positive decay");
    double hi = 1.0;
    while (orbit_tail_bound(g, hi, n) > eps) {
        hi *= 1.5;
        if (hi > 1e6) throw std::runtime_error("orbit_truncation_radius: no finite radius");
    }
    double lo = hi / 1.5;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (orbit_tail_bound(g, mid, n) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace latq
