#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace latq {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int order) {
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(order));
    r.weights.resize(static_cast<std::size_t>(order));
    int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[static_cast<std::size_t>(i)] = -x;
        r.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    return r;
}

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Composite Gauss-Legendre rule on [a, b] with the given panel count.
inline Rule1D panel_rule(double a, double b, int panels, int order) {
    GaussRule g = gauss_legendre(order);
    Rule1D r;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (int k = 0; k < order; ++k) {
            r.nodes.push_back(lo + 0.5 * h * (g.nodes[static_cast<std::size_t>(k)] + 1.0));
            r.weights.push_back(0.5 * h * g.weights[static_cast<std::size_t>(k)]);
        }
    }
    return r;
}

// Tensor-product quadrature over a box, invoking f(point) -> accumulated value.
template <typename F>
auto tensor_integrate(const std::vector<Rule1D>& axes, F&& f) {
    int n = static_cast<int>(axes.size());
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> pt(static_cast<std::size_t>(n));
    using R = decltype(f(pt));
    R acc{};
    bool more = true;
    while (more) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            pt[static_cast<std::size_t>(i)] = axes[static_cast<std::size_t>(i)].nodes[idx[static_cast<std::size_t>(i)]];
            w *= axes[static_cast<std::size_t>(i)].weights[idx[static_cast<std::size_t>(i)]];
        }
        acc += w * f(pt);
        more = false;
        for (int i = 0; i < n; ++i) {
            if (++idx[static_cast<std::size_t>(i)] < axes[static_cast<std::size_t>(i)].nodes.size()) {
                more = true;
                break;
            }
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return acc;
}

// Uniform fiber rule on T^n; exact for trigonometric polynomials of degree
// below the grid size, and integrates constants to one exactly.
template <typename F>
auto fiber_integrate(int n, int size, F&& f) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> pt(static_cast<std::size_t>(n));
    using R = decltype(f(pt));
    R acc{};
    bool more = true;
    while (more) {
        for (int i = 0; i < n; ++i)
            pt[static_cast<std::size_t>(i)] =
                static_cast<double>(idx[static_cast<std::size_t>(i)]) / static_cast<double>(size);
        acc += f(pt);
        more = false;
        for (int i = 0; i < n; ++i) {
            if (++idx[static_cast<std::size_t>(i)] < static_cast<std::size_t>(size)) {
                more = true;
                break;
            }
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    double cells = std::pow(static_cast<double>(size), n);
    return acc * (1.0 / cells);
}

}  // namespace latq
