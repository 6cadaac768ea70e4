#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "latq/group_actions.hpp"
#include "latq/polynomial.hpp"

namespace latq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bohr-Sommerfeld point m/N of the fundamental domain, stored by its integer
// numerator vector.
struct BSPoint {
    std::vector<long long> m;

    int dim() const { return static_cast<int>(m.size()); }
    std::vector<double> coords(int N) const {
        std::vector<double> x(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            x[i] = static_cast<double>(m[i]) / static_cast<double>(N);
        return x;
    }
    RatVec coords_exact(int N) const {
        RatVec x(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) x[i] = Rat(m[i], N);
        return x;
    }
    friend bool operator==(const BSPoint& a, const BSPoint& b) { return a.m == b.m; }
    friend bool operator<(const BSPoint& a, const BSPoint& b) { return a.m < b.m; }
};

// Quadratic polynomial F_gamma^i with the first i-1 coordinates frozen at the
// base point of the recursion (zero for the lift formula).
namespace detail {

// For affine u(x) = U x + w the antiderivative of (tA u)_i in x_i evaluated
// from 0 to x_i, with coordinates x_1..x_{i-1} already set to zero, is
//   1/2 S_ii x_i^2 + sum_{j>i} S_ij x_j x_i + (tA w)_i x_i,   S = tA U.
inline double frozen_antiderivative(const Eigen::MatrixXd& S, const Eigen::VectorXd& tAw, int i,
                                    const Eigen::VectorXd& x) {
    double v = 0.5 * S(i, i) * x(i) * x(i) + tAw(i) * x(i);
    for (int j = i + 1; j < x.size(); ++j) v += S(i, j) * x(j) * x(i);
    return v;
}

}  // namespace detail

// tilde-g_gamma(x) = rho_gamma(x).u_gamma(x) - c_gamma.u_gamma(0)
//                    - sum_i F_gamma^i(0,..,0,x_i,..,x_n).  Real valued.
inline double g_tilde(const ActionFamily& fam, const GroupElement& g,
                      const std::vector<double>& x) {
    auto [aff, fib] = fam.eval(g);
    Eigen::MatrixXd A = to_eigen(aff.A), U = to_eigen(fib.U);
    Eigen::VectorXd c = to_eigen(aff.c), w = to_eigen(fib.w);
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::VectorXd rho = A * xv + c;
    Eigen::VectorXd u = U * xv + w;
    double val = rho.dot(u) - c.dot(w);
    Eigen::MatrixXd S = A.transpose() * U;
    Eigen::VectorXd tAw = A.transpose() * w;
    for (int i = 0; i < fam.n; ++i) val -= detail::frozen_antiderivative(S, tAw, i, xv);
    return val;
}

// Same quantity as an exact polynomial in x (used to build transported theta
// coefficients in closed form).
inline Polynomial g_tilde_poly(const ActionFamily& fam, const GroupElement& g) {
    auto [aff, fib] = fam.eval(g);
    int n = fam.n;
    std::vector<Polynomial> rho(static_cast<std::size_t>(n), Polynomial(n));
    std::vector<Polynomial> u(static_cast<std::size_t>(n), Polynomial(n));
    for (int i = 0; i < n; ++i) {
        Polynomial pr = Polynomial::constant(n, RatComplex(aff.c[static_cast<std::size_t>(i)]));
        Polynomial pu = Polynomial::constant(n, RatComplex(fib.w[static_cast<std::size_t>(i)]));
        for (int j = 0; j < n; ++j) {
            if (aff.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                pr = pr + Polynomial::variable(n, j, RatComplex(aff.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            if (fib.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                pu = pu + Polynomial::variable(n, j, RatComplex(fib.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        rho[static_cast<std::size_t>(i)] = std::move(pr);
        u[static_cast<std::size_t>(i)] = std::move(pu);
    }
    Polynomial val(n);
    for (int i = 0; i < n; ++i) val = val + rho[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    val = val - Polynomial::constant(n, RatComplex(rat_dot(aff.c, fib.w)));
    RatMat S = rat_mul(rat_transpose(aff.A), fib.U);
    RatVec tAw = rat_apply(rat_transpose(aff.A), fib.w);
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(n, i);
        Polynomial f = Polynomial::constant(n, RatComplex(Rat(1, 2) * S[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])) * xi * xi;
        for (int j = i + 1; j < n; ++j)
            f = f + Polynomial::constant(n, RatComplex(S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) * xi * Polynomial::variable(n, j);
        f = f + Polynomial::constant(n, RatComplex(tAw[static_cast<std::size_t>(i)])) * xi;
        val = val - f;
    }
    return val;
}

// The closed-form cocycle quantity of the lift-existence test. For a genuine
// lift it must land in (1/N) Z for all gamma_1, gamma_2 and all x.
inline double lift_cocycle_value(const ActionFamily& fam, const GroupElement& g1,
                                 const GroupElement& g2, const std::vector<double>& x) {
    auto [aff1, fib1] = fam.eval(g1);
    auto [aff2, fib2] = fam.eval(g2);
    int n = fam.n;
    Eigen::MatrixXd A1 = to_eigen(aff1.A), A2 = to_eigen(aff2.A);
    Eigen::MatrixXd U1 = to_eigen(fib1.U);
    Eigen::VectorXd c1 = to_eigen(aff1.c), c2 = to_eigen(aff2.c);
    Eigen::VectorXd w1 = to_eigen(fib1.w), w2 = to_eigen(fib2.w);
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));

    Eigen::MatrixXd A1t_inv = A1.transpose().inverse();
    double part_a = -c1.dot(w1) + c1.dot(A1t_inv * w2) + (A1 * c2 + c1).dot(U1 * c2 + w1);

    Eigen::VectorXd xhat = A2 * xv + c2;
    Eigen::MatrixXd S = A1.transpose() * U1;
    Eigen::VectorXd tA1w1 = A1.transpose() * w1;
    double part_b = 0;
    for (int i = 0; i < n; ++i) part_b -= detail::frozen_antiderivative(S, tA1w1, i, xhat);

    Eigen::MatrixXd P = A2.transpose() * A1.transpose() * U1 * A2;
    Eigen::VectorXd q = A2.transpose() * A1.transpose() * (U1 * c2 + w1);
    double part_c = 0;
    for (int i = 0; i < n; ++i) part_c += detail::frozen_antiderivative(P, q, i, xv);

    return part_a + part_b + part_c;
}

struct LiftCheck {
    bool liftable = true;
    std::string witness;
};

inline LiftCheck check_liftable(const ActionFamily& fam, int N, int sample_count = 64,
                                std::uint64_t seed = 1) {
    if (N < 1) throw std::invalid_argument("check_liftable: N >= 1");
    LiftCheck out;
    // (1) N c_gamma integral, exact on generators.
    for (int k = 0; k < fam.n; ++k) {
        GroupElement e = GroupElement::zero(fam.n);
        e.gamma[static_cast<std::size_t>(k)] = 1;
        auto [aff, fib] = fam.eval(e);
        for (int i = 0; i < fam.n; ++i) {
            Rat v = Rat(N) * aff.c[static_cast<std::size_t>(i)];
            if (boost::multiprecision::denominator(v) != 1) {
                std::ostringstream os;
                os << "N*c not integral on generator " << e << " (component " << i << ")";
                return {false, os.str()};
            }
        }
    }
    // (2) cocycle quantity in (1/N) Z on seeded samples.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> gdist(-3, 3);
    std::uniform_real_distribution<double> xdist(-1.5, 1.5);
    for (int s = 0; s < sample_count; ++s) {
        GroupElement g1 = GroupElement::zero(fam.n), g2 = GroupElement::zero(fam.n);
        for (int i = 0; i < fam.n; ++i) {
            g1.gamma[static_cast<std::size_t>(i)] = gdist(rng);
            g2.gamma[static_cast<std::size_t>(i)] = gdist(rng);
        }
        std::vector<double> x(static_cast<std::size_t>(fam.n));
        for (auto& v : x) v = xdist(rng);
        double val = lift_cocycle_value(fam, g1, g2, x) * static_cast<double>(N);
        if (std::abs(val - std::round(val)) > 1e-9) {
            std::ostringstream os;
            os << "cocycle value " << val / N << " not in (1/N)Z at gamma1=" << g1
               << " gamma2=" << g2;
            return {false, os.str()};
        }
    }
    return out;
}

// Tensor power N together with the U(1) phases of the lift ambiguity. The
// phases are given in turns per generator; g(gamma) = exp(2 pi i theta.gamma).
struct PrequantumLift {
    ActionFamily family;
    int N = 1;
    std::vector<double> phase_turns;
    double hermitian_constant = 1.0;
    bool liftable = false;
    std::string failure;

    std::complex<double> g_of(const GroupElement& g) const {
        double t = 0;
        for (int i = 0; i < family.n; ++i)
            t += phase_turns.at(static_cast<std::size_t>(i)) *
                 static_cast<double>(g.gamma.at(static_cast<std::size_t>(i)));
        return std::polar(1.0, kTwoPi * t);
    }
};

inline PrequantumLift make_lift(ActionFamily fam, int N, std::vector<double> phase_turns = {},
                                int sample_count = 64, std::uint64_t seed = 1) {
    PrequantumLift lift;
    if (phase_turns.empty()) phase_turns.assign(static_cast<std::size_t>(fam.n), 0.0);
    if (static_cast<int>(phase_turns.size()) != fam.n)
        throw std::invalid_argument("make_lift: need one phase per generator");
    lift.family = std::move(fam);
    lift.N = N;
    lift.phase_turns = std::move(phase_turns);
    LiftCheck chk = check_liftable(lift.family, N, sample_count, seed);
    lift.liftable = chk.liftable;
    lift.failure = chk.witness;
    if (lift.liftable) {
        // g must respect the group law; sampled because the law may be twisted.
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<long long> gdist(-3, 3);
        for (int s = 0; s < sample_count; ++s) {
            GroupElement g1 = GroupElement::zero(lift.family.n);
            GroupElement g2 = GroupElement::zero(lift.family.n);
            for (int i = 0; i < lift.family.n; ++i) {
                g1.gamma[static_cast<std::size_t>(i)] = gdist(rng);
                g2.gamma[static_cast<std::size_t>(i)] = gdist(rng);
            }
            std::complex<double> lhs = lift.g_of(lift.family.law(g1, g2));
            std::complex<double> rhs = lift.g_of(g1) * lift.g_of(g2);
            if (std::abs(lhs - rhs) > 1e-12) {
                lift.liftable = false;
                std::ostringstream os;
                os << "g is not a homomorphism at gamma1=" << g1 << " gamma2=" << g2;
                lift.failure = os.str();
                break;
            }
        }
    }
    return lift;
}

struct LiftedPoint {
    std::vector<double> x;
    std::vector<double> y;
    std::complex<double> z;
};

// The bundle lift: z -> g_gamma e^{2 pi i N (g~_gamma(x) + c_gamma . tA^{-1} y)} z.
inline LiftedPoint lift_apply(const PrequantumLift& lift, const GroupElement& g,
                              const std::vector<double>& x, const std::vector<double>& y,
                              std::complex<double> z) {
    if (!lift.liftable)
        throw std::invalid_argument("lift_apply: lift failed check_liftable (" + lift.failure + ")");
    const ActionFamily& fam = lift.family;
    auto [aff, fib] = fam.eval(g);
    auto [xp, yp] = act_total(fam, g, x, y);
    Eigen::MatrixXd At_inv = to_eigen(rat_transpose(rat_inverse(aff.A)));
    Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    double phase = g_tilde(fam, g, x) + to_eigen(aff.c).dot(At_inv * yv);
    std::complex<double> zp =
        lift.g_of(g) * std::polar(1.0, kTwoPi * static_cast<double>(lift.N) * phase) * z;
    return {xp, yp, zp};
}

// F intersected with (1/N) Z^n, enumerated exactly through the chart.
inline std::vector<BSPoint> bs_points(const ActionFamily& fam, int N) {
    if (N < 1) throw std::invalid_argument("bs_points: N >= 1");
    int n = fam.n;
    Eigen::MatrixXd chart = to_eigen(fam.fund_box.chart);
    Eigen::VectorXd off = to_eigen(fam.fund_box.offset);
    Eigen::VectorXd lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        double a = off(i), b = off(i);
        for (int j = 0; j < n; ++j) {
            a += std::min(0.0, chart(i, j));
            b += std::max(0.0, chart(i, j));
        }
        lo(i) = static_cast<double>(N) * a;
        hi(i) = static_cast<double>(N) * b;
    }
    RatMat chart_inv = rat_inverse(fam.fund_box.chart);
    std::vector<BSPoint> out;
    std::vector<long long> blo(static_cast<std::size_t>(n)), bhi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        blo[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(lo(i) - 1e-9));
        bhi[static_cast<std::size_t>(i)] = static_cast<long long>(std::ceil(hi(i) + 1e-9));
    }
    std::vector<long long> cur = blo;
    do {
        RatVec p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(i)] =
                Rat(cur[static_cast<std::size_t>(i)], N) - fam.fund_box.offset[static_cast<std::size_t>(i)];
        RatVec t = rat_apply(chart_inv, p);
        bool inside = true;
        for (int i = 0; i < n; ++i)
            if (t[static_cast<std::size_t>(i)] < 0 || t[static_cast<std::size_t>(i)] >= 1) inside = false;
        if (inside) out.push_back(BSPoint{cur});
    } while (detail::next_lattice_point(cur, blo, bhi));
    std::sort(out.begin(), out.end());
    return out;
}

// N rho_gamma(m/N), the Fourier index carried by the translated BS point.
inline std::vector<long long> orbit_index(const ActionFamily& fam, int N, const GroupElement& g,
                                          const BSPoint& bs) {
    RatVec p = bs.coords_exact(N);
    RatVec img = act_base_exact(fam, g, p);
    std::vector<long long> out(static_cast<std::size_t>(fam.n));
    for (int i = 0; i < fam.n; ++i) {
        Rat v = Rat(N) * img[static_cast<std::size_t>(i)];
        if (boost::multiprecision::denominator(v) != 1)
            throw std::invalid_argument("orbit_index: N rho_gamma(m/N) is not integral");
        out[static_cast<std::size_t>(i)] = v.convert_to<long long>();
    }
    return out;
}

// Inverse of the orbit bijection: recovers (gamma, m) from the Fourier index.
inline std::optional<std::pair<GroupElement, BSPoint>> orbit_lookup(const ActionFamily& fam, int N,
                                                                    const std::vector<long long>& l) {
    RatVec p(static_cast<std::size_t>(fam.n));
    for (int i = 0; i < fam.n; ++i) p[static_cast<std::size_t>(i)] = Rat(l[static_cast<std::size_t>(i)], N);
    auto red = reduce_to_fundamental_exact(fam, p);
    if (!red) return std::nullopt;
    std::vector<long long> m(static_cast<std::size_t>(fam.n));
    for (int i = 0; i < fam.n; ++i) {
        Rat v = Rat(N) * red->second[static_cast<std::size_t>(i)];
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        m[static_cast<std::size_t>(i)] = v.convert_to<long long>();
    }
    return std::make_pair(red->first, BSPoint{m});
}

}  // namespace latq
