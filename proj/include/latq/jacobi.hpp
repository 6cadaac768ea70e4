#pragma once

#include "latq/analysis.hpp"

namespace latq {

struct Characteristics {
    RatVec a;
    RatVec b;
};

struct SiegelModulus {
    Eigen::MatrixXcd T;

    explicit SiegelModulus(Eigen::MatrixXcd t) : T(std::move(t)) {
        if ((T - T.transpose().eval()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("SiegelModulus: T must be symmetric");
        Eigen::LLT<Eigen::MatrixXd> llt(T.imag());
        if (llt.info() != Eigen::Success)
            throw std::invalid_argument("SiegelModulus: Im T is not positive definite");
    }
};

// theta[a, b](z, T) = sum_{k in Z^n} e^{pi i (k+a).T(k+a) + 2 pi i (k+a).(z+b)},
// truncated with a certified Gaussian tail <= eps. The summand peaks at
// k = -a - (Im T)^{-1} Im z, so the enumeration box is centered there.
inline std::complex<double> jacobi_theta(const Characteristics& chars,
                                         const Eigen::VectorXcd& z, const SiegelModulus& mod,
                                         double eps) {
    const int n = static_cast<int>(z.size());
    Eigen::MatrixXd imT = mod.T.imag();
    Eigen::VectorXd av = to_eigen(chars.a);
    Eigen::VectorXd w = imT.inverse() * z.imag();
    Eigen::VectorXd center = -av - w;
    double peak = std::exp(std::numbers::pi * w.dot(imT * w) -
                           2.0 * std::numbers::pi * av.dot(z.imag()));
    // |term| = peak' * e^{-pi (k + a + w).ImT(k + a + w)} with a bounded
    // prefactor; certify the tail against eps relative to the peak size.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(imT);
    double lam = es.eigenvalues().minCoeff();
    double radius = lattice_truncation_radius(lam, 1, 1.0, eps / std::max(peak, 1e-300), n);

    std::vector<long long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        lo[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(center(i) - radius));
        hi[static_cast<std::size_t>(i)] = static_cast<long long>(std::ceil(center(i) + radius));
    }
    const std::complex<double> I{0, 1};
    std::complex<double> acc{0, 0};
    std::vector<long long> cur = lo;
    bool more = true;
    while (more) {
        Eigen::VectorXcd ka(n);
        for (int i = 0; i < n; ++i)
            ka(i) = static_cast<double>(cur[static_cast<std::size_t>(i)]) + av(i);
        Eigen::VectorXcd zb = z;
        for (int i = 0; i < n; ++i) zb(i) += to_double(chars.b[static_cast<std::size_t>(i)]);
        std::complex<double> lin{0, 0};
        for (int i = 0; i < n; ++i) lin += ka(i) * zb(i);
        std::complex<double> expo =
            std::numbers::pi * I * (ka.transpose() * mod.T * ka)(0) + kTwoPi * I * lin;
        acc += std::exp(expo);
        more = detail::next_lattice_point(cur, lo, hi);
    }
    return acc;
}

// F(x, y) = N(-Omega x + y) and its bundle companion
// F~(x, y, w) = (F(x, y), e^{-pi i N x . Omega x} w). Constant Omega only.
inline Eigen::VectorXcd map_F(const std::vector<double>& x, const std::vector<double>& y, int N,
                              const Eigen::MatrixXcd& omega) {
    const int n = static_cast<int>(x.size());
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), n), yv(y.data(), n);
    return static_cast<double>(N) *
           (-omega * xv.cast<std::complex<double>>() + yv.cast<std::complex<double>>());
}

struct LiftedF {
    Eigen::VectorXcd z;
    std::complex<double> w;
};

inline LiftedF map_F_tilde(const std::vector<double>& x, const std::vector<double>& y,
                           std::complex<double> w, int N, const Eigen::MatrixXcd& omega) {
    const int n = static_cast<int>(x.size());
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
    std::complex<double> q{0, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q += xv(i) * omega(i, j) * xv(j);
    const std::complex<double> I{0, 1};
    return {map_F(x, y, N, omega),
            std::exp(-std::numbers::pi * I * static_cast<double>(N) * q) * w};
}

// Inverse of F as a real-linear map: x = -(Im Omega)^{-1} Im z / N,
// y = Re z / N + (Re Omega) x.
inline std::pair<std::vector<double>, std::vector<double>> map_F_inverse(
    const Eigen::VectorXcd& z, int N, const Eigen::MatrixXcd& omega) {
    Eigen::VectorXd x = -omega.imag().inverse() * z.imag() / static_cast<double>(N);
    Eigen::VectorXd y = z.real() / static_cast<double>(N) + omega.real() * x;
    return {to_std(x), to_std(y)};
}

// Max residual of the identification
//   theta_{m/N}(x, y) = e^{pi i N x . Omega x} theta[m/N; 0](N(-Omega x + y), N Omega)
// over the supplied points, for the unit-lattice torus with trivial phases.
inline double relation_check(const Eigen::MatrixXcd& omega_const, const BSPoint& m, int N,
                             const std::vector<std::pair<std::vector<double>, std::vector<double>>>&
                                 points,
                             double eps = 1e-13) {
    const int n = static_cast<int>(omega_const.rows());
    PrequantumLift lift = make_lift(flat_torus(rat_identity(n)), N);
    OmegaMap om = OmegaMap::constant(omega_const);
    ThetaSection theta = make_theta_section(lift, scale_adiabatic(om, 1.0), m, eps);

    Characteristics chars;
    chars.a.resize(static_cast<std::size_t>(n));
    chars.b.assign(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        chars.a[static_cast<std::size_t>(i)] = Rat(m.m[static_cast<std::size_t>(i)], N);
    SiegelModulus mod((static_cast<double>(N) * omega_const).eval());

    const std::complex<double> I{0, 1};
    double worst = 0;
    for (const auto& [x, y] : points) {
        std::complex<double> lhs = theta.eval(x, y);
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
        std::complex<double> q{0, 0};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += xv(i) * omega_const(i, j) * xv(j);
        std::complex<double> pref =
            std::exp(std::numbers::pi * I * static_cast<double>(N) * q);
        std::complex<double> rhs = pref * jacobi_theta(chars, map_F(x, y, N, omega_const), mod, eps);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// Central-difference |d/d conj(z_k)| residual of an arbitrary map C^n -> C
// over the sampled points.
inline double cauchy_riemann_residual(
    const std::function<std::complex<double>(const Eigen::VectorXcd&)>& h, int n,
    const std::vector<Eigen::VectorXcd>& zs, double step) {
    if (step < 1e-6 || step > 1e-2)
        throw std::invalid_argument("cauchy_riemann_residual: step outside [1e-6, 1e-2]");
    const std::complex<double> I{0, 1};
    double worst = 0;
    for (const Eigen::VectorXcd& z : zs) {
        for (int k = 0; k < n; ++k) {
            Eigen::VectorXcd zp = z, zm = z, zpi = z, zmi = z;
            zp(k) += step;
            zm(k) -= step;
            zpi(k) += I * step;
            zmi(k) -= I * step;
            std::complex<double> du = (h(zp) - h(zm)) / (2.0 * step);
            std::complex<double> dv = (h(zpi) - h(zmi)) / (2.0 * step);
            // d/d conj(z) = (d/dRe + i d/dIm) / 2
            worst = std::max(worst, 0.5 * std::abs(du + I * dv));
        }
    }
    return worst;
}

// Finite-difference Cauchy-Riemann test of the theta section read through the
// F coordinates (with the Jacobi prefactor removed); O(step^2) for the exact
// sections of an integrable structure.
inline double holomorphy_check(const ThetaSection& theta, const Eigen::MatrixXcd& omega_const,
                               const std::vector<Eigen::VectorXcd>& zs, double step) {
    const int n = static_cast<int>(omega_const.rows());
    const int N = theta.lift().N;
    const std::complex<double> I{0, 1};
    auto h = [&](const Eigen::VectorXcd& z) {
        auto [x, y] = map_F_inverse(z, N, omega_const);
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
        std::complex<double> q{0, 0};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += xv(i) * omega_const(i, j) * xv(j);
        return theta.eval(x, y) * std::exp(-std::numbers::pi * I * static_cast<double>(N) * q);
    };
    return cauchy_riemann_residual(h, n, zs, step);
}

}  // namespace latq
