#pragma once

#include <cmath>
#include <map>
#include <string>

#include "latq/quadrature.hpp"
#include "latq/theta.hpp"

namespace latq {

// Grid parameters for the three integration domains: tensor Gauss-Legendre
// panels over the fundamental domain, a uniform rule over the fiber torus and
// a Gaussian-weighted box over R^n.
struct QuadratureGrid {
    int base_panels = 6;
    int base_order = 10;
    int fiber_size = 24;
    int gauss_panels = 8;
    int gauss_order = 14;
    double quad_tol = 1e-9;

    QuadratureGrid doubled() const {
        QuadratureGrid g = *this;
        g.base_panels *= 2;
        g.gauss_panels *= 2;
        g.fiber_size *= 2;
        return g;
    }
};

// Integral over F = chart [0,1)^n + offset, pulled back to the unit box.
template <typename F>
auto integrate_fundamental(const ActionFamily& fam, const QuadratureGrid& grid, F&& f) {
    int n = fam.n;
    std::vector<Rule1D> axes(static_cast<std::size_t>(n),
                             panel_rule(0.0, 1.0, grid.base_panels, grid.base_order));
    Eigen::MatrixXd chart = to_eigen(fam.fund_box.chart);
    Eigen::VectorXd off = to_eigen(fam.fund_box.offset);
    double jac = std::abs(chart.determinant());
    auto g = [&](const std::vector<double>& t) {
        Eigen::Map<const Eigen::VectorXd> tv(t.data(), n);
        Eigen::VectorXd x = chart * tv + off;
        return f(to_std(x));
    };
    return tensor_integrate(axes, g) * jac;
}

// Integral over the box [center - r, center + r]^n.
template <typename F>
auto integrate_box(const std::vector<double>& center, double radius, const QuadratureGrid& grid,
                   F&& f) {
    std::vector<Rule1D> axes;
    for (double c : center) axes.push_back(panel_rule(c - radius, c + radius, grid.gauss_panels, grid.gauss_order));
    return tensor_integrate(axes, f);
}

// Radius at which the weight e^{-decay * d^2} (times a mild polynomial) is
// negligible against the quadrature tolerance. The margin scales with the
// Gaussian width so panel resolution stays t-independent along sweeps.
inline double gaussian_domain_radius(double decay, double tol) {
    return std::sqrt((std::log(std::max(1e4, 1.0 / tol)) + 20.0) / decay);
}

struct LpNorm {
    double value = 0;          // the L^p norm itself
    double closed_form = 0;    // Gaussian closed form, when M is constant
    bool has_closed_form = false;
    double rel_err = 0;
    bool stable = true;        // Richardson doubling within 10 x quad_tol
};

namespace detail {

inline double lp_power_integral(const ThetaSection& theta, int p, const QuadratureGrid& grid) {
    const ActionFamily& fam = theta.lift().family;
    double herm = theta.lift().hermitian_constant;
    double nn = std::pow(static_cast<double>(theta.lift().N), fam.n);
    double integral = integrate_fundamental(fam, grid, [&](const std::vector<double>& x) {
        double s = 0;
        for (const auto& mode : theta.modes_at(x)) {
            double a = mode.coeff->coeff.modulus(x);
            s += p == 1 ? a : a * a;
        }
        return s;
    });
    return herm * nn * integral;
}

}  // namespace detail

// L^p norm of a theta section via the fiber-collapsed quadrature, together
// with the Gaussian closed form C sqrt(det M) (N / (p t))^{n/2} for the p-th
// power, valid whenever the coefficient Gaussians share the constant matrix
// M^{-1} = Im Omega_{m/N}.
inline LpNorm lp_norm(const ThetaSection& theta, int p, const QuadratureGrid& grid) {
    if (p != 1 && p != 2) throw std::invalid_argument("lp_norm: p must be 1 or 2");
    LpNorm out;
    double v1 = detail::lp_power_integral(theta, p, grid);
    double v2 = detail::lp_power_integral(theta, p, grid.doubled());
    out.stable = std::abs(v2 - v1) <= 10.0 * grid.quad_tol * std::max(1.0, std::abs(v2));
    out.value = std::pow(v2, 1.0 / p);

    const int n = theta.lift().family.n;
    std::vector<double> mhat = theta.bs().coords(theta.lift().N);
    Eigen::MatrixXd W = theta.omega().base.eval_im(mhat);  // Im Omega at m/N, t = 1
    double detM = 1.0 / W.determinant();
    double power = theta.lift().hermitian_constant * std::sqrt(detM) *
                   std::pow(static_cast<double>(theta.lift().N) / (p * theta.t()), 0.5 * n);
    out.closed_form = std::pow(power, 1.0 / p);
    out.has_closed_form = true;
    out.rel_err = std::abs(out.value - out.closed_form) / std::abs(out.closed_form);
    return out;
}

// ---------------------------------------------------------------------------
// Equivariant test sections
// ---------------------------------------------------------------------------

// A section presented by one seed coefficient per Bohr-Sommerfeld point and
// extended to the whole space by the transport law; equivariant by build.
struct EquivariantTest {
    PrequantumLift lift;
    std::map<std::vector<long long>, CoefficientClosedForm> seeds;
};

// Gaussian seed a(x) = scale e^{-pi width ||x - m/N||^2}.
inline CoefficientClosedForm gaussian_seed(const std::vector<long long>& m, int N, double width,
                                           std::complex<double> scale) {
    int n = static_cast<int>(m.size());
    Polynomial q(n);
    for (int i = 0; i < n; ++i) {
        Polynomial d = Polynomial::variable(n, i) -
                       Polynomial::constant(n, RatComplex(Rat(m[static_cast<std::size_t>(i)], N)));
        q = q + (d * d).scaled(RatComplex(Rat(0), -rat_from_double(width) / 2));
    }
    return {scale, std::move(q)};
}

inline std::complex<double> equivariant_test_eval(const EquivariantTest& test,
                                                  const std::vector<double>& x,
                                                  const std::vector<double>& y, double radius) {
    std::complex<double> acc{0, 0};
    const ActionFamily& fam = test.lift.family;
    for (const auto& [m, seed] : test.seeds) {
        BSPoint bs{m};
        std::vector<double> center = bs.coords(test.lift.N);
        for (const GroupElement& g : fam.orbit_enumerator(x, center, radius)) {
            std::vector<long long> l = orbit_index(fam, test.lift.N, g, bs);
            CoefficientClosedForm al = transport_coefficient(test.lift, seed, m, g);
            double phase = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                phase += static_cast<double>(l[i]) * y[i];
            acc += al.eval(x) * std::polar(1.0, kTwoPi * phase);
        }
    }
    return acc;
}

inline double equivariant_test_residual(const EquivariantTest& test, const GroupElement& gamma,
                                        const std::vector<double>& x, const std::vector<double>& y,
                                        double radius) {
    std::complex<double> z = equivariant_test_eval(test, x, y, radius);
    LiftedPoint moved = lift_apply(test.lift, gamma, x, y, z);
    std::complex<double> direct = equivariant_test_eval(test, moved.x, moved.y, radius);
    return std::abs(moved.z - direct);
}

struct PairingResult {
    std::complex<double> lhs;  // <test, theta / ||theta||_{L^1}> over M
    std::complex<double> rhs;  // fiber pairing with the delta section
};

// Both sides of the delta-convergence pairing. The fiber integral collapses
// by Fourier orthogonality: only the orbit of the section's own index
// survives, and unitary transport reduces the orbit sum to one R^n integral
// of seed * conj(base coefficient).
inline PairingResult delta_pairing(const EquivariantTest& test, const ThetaSection& theta,
                                   const QuadratureGrid& grid) {
    const ActionFamily& fam = theta.lift().family;
    const int n = fam.n;
    if (test.lift.N != theta.lift().N)
        throw std::invalid_argument("delta_pairing: tensor powers differ");

    // sampled equivariance pre-check (the construction transports seeds, so a
    // failure means inconsistent test data)
    {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        GroupElement g = GroupElement::zero(n);
        g.gamma[0] = 1;
        std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
        for (auto& v : xs) v = dist(rng);
        for (auto& v : ys) v = dist(rng);
        double res = equivariant_test_residual(test, g, xs, ys, 6.0);
        std::complex<double> mag = equivariant_test_eval(test, xs, ys, 6.0);
        if (res > 1e-6 * std::max(1.0, std::abs(mag)))
            throw std::invalid_argument("delta_pairing: test section is not equivariant");
    }

    auto it = test.seeds.find(theta.bs().m);
    if (it == test.seeds.end()) return {0.0, 0.0};
    const CoefficientClosedForm& seed = it->second;

    std::vector<double> mhat = theta.bs().coords(theta.lift().N);
    Eigen::MatrixXd W = theta.omega().base.eval_im(mhat);
    double detM = 1.0 / W.determinant();
    double herm = theta.lift().hermitian_constant;
    double l1 = herm * std::sqrt(detM) *
                std::pow(static_cast<double>(theta.lift().N) / theta.t(), 0.5 * n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(W);
    double decay = std::numbers::pi * theta.lift().N * theta.t() * es.eigenvalues().minCoeff();
    double radius = gaussian_domain_radius(decay, grid.quad_tol * 1e-4);
    const CoefficientClosedForm& base = theta.base_coefficient();
    std::complex<double> integral =
        integrate_box(mhat, radius, grid, [&](const std::vector<double>& x) {
            return seed.eval(x) * std::conj(base.eval(x));
        });
    PairingResult out;
    out.lhs = herm * std::pow(static_cast<double>(theta.lift().N), n) * integral / l1;
    out.rhs = seed.eval(mhat);
    return out;
}

struct ResidualNorm {
    double value = 0;      // L^2 norm of D^t theta~
    double squared = 0;
    bool stable = true;
};

namespace detail {

inline double residual_reduced_squared(const ThetaSection& theta, const QuadratureGrid& grid) {
    const int n = theta.lift().family.n;
    const int N = theta.lift().N;
    const double t = theta.t();
    const OmegaMap& omega = theta.omega().base;
    std::vector<double> mhat = theta.bs().coords(N);
    Eigen::MatrixXcd om_frozen = omega.eval(mhat);
    Eigen::MatrixXd Minv_frozen = omega.eval_im(mhat);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Minv_frozen);
    double decay = 2.0 * std::numbers::pi * N * t * es.eigenvalues().minCoeff();
    // the quartic prefactor shifts the effective tail by a few widths
    double radius = gaussian_domain_radius(decay, grid.quad_tol * 1e-6);

    double integral = integrate_box(mhat, radius, grid, [&](const std::vector<double>& x) {
        Eigen::MatrixXcd dom = om_frozen - omega.eval(x);
        Eigen::VectorXd d(n);
        for (int i = 0; i < n; ++i) d(i) = mhat[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
        Eigen::MatrixXd M = omega.eval_im(x).inverse();
        Eigen::VectorXd re = dom.real() * d;
        Eigen::VectorXd im = dom.imag() * d;
        double R = re.dot(M * re);
        double I = im.dot(M * im);
        Eigen::VectorXd dm(n);
        for (int i = 0; i < n; ++i) dm(i) = x[static_cast<std::size_t>(i)] - mhat[static_cast<std::size_t>(i)];
        double w = std::exp(-2.0 * std::numbers::pi * N * t * dm.dot(Minv_frozen * dm));
        return (R + t * t * I) * w;
    });
    double pref = 4.0 * std::numbers::pi * std::numbers::pi * theta.lift().hermitian_constant *
                  std::pow(static_cast<double>(N), n + 1) / t;
    return pref * integral;
}

}  // namespace detail

// || D^t theta~ ||_{L^2} through the reduced R^n integral
//   (2 pi)^2 C N^{n+1} / t  *  int (R + t^2 I) e^{-2 pi N t (x-m/N).M^{-1}(x-m/N)}.
inline ResidualNorm dirac_residual_l2(const ThetaSection& theta, const QuadratureGrid& grid) {
    if (theta.lift().family.n < 2)
        throw std::invalid_argument("dirac_residual_l2: the n = 1 case is vacuous");
    ResidualNorm out;
    double v1 = detail::residual_reduced_squared(theta, grid);
    double v2 = detail::residual_reduced_squared(theta, grid.doubled());
    out.stable = std::abs(v2 - v1) <= 10.0 * grid.quad_tol * std::max(1.0, std::abs(v2));
    out.squared = v2;
    out.value = std::sqrt(std::max(0.0, v2));
    return out;
}

// Direct F x T^n quadrature of the same norm; the 2n-dimensional cross-check.
inline double dirac_residual_l2_direct(const ThetaSection& theta, const QuadratureGrid& grid) {
    const ActionFamily& fam = theta.lift().family;
    const int n = fam.n;
    const int N = theta.lift().N;
    const double t = theta.t();
    const OmegaMap& omega = theta.omega().base;
    double integral = integrate_fundamental(fam, grid, [&](const std::vector<double>& x) {
        Eigen::MatrixXd M = omega.eval_im(x).inverse();
        std::vector<ThetaSection::ModeResidual> mrs = theta.dirac_mode_residuals(x);
        return fiber_integrate(n, grid.fiber_size, [&](const std::vector<double>& y) {
            Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n);
            for (const auto& mr : mrs) {
                double phase = 0;
                for (std::size_t i = 0; i < y.size(); ++i)
                    phase += static_cast<double>(mr.l[i]) * y[i];
                r += std::polar(1.0, kTwoPi * phase) * mr.r;
            }
            return (r.adjoint() * M * r)(0).real();
        });
    });
    double pref = theta.lift().hermitian_constant * std::pow(static_cast<double>(N), n - 1) / t;
    return std::sqrt(std::max(0.0, pref * integral));
}

// ---------------------------------------------------------------------------
// Adiabatic sweeps
// ---------------------------------------------------------------------------

struct SweepRecord {
    double t = 0;
    std::string quantity;
    double value = 0;
    double closed_form = std::numeric_limits<double>::quiet_NaN();
    double rel_err = std::numeric_limits<double>::quiet_NaN();
    double tolerance = 0;
    std::string error;  // set when the sub-operation failed for this t
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::map<std::string, double> slopes;  // log-log least-squares slopes

    std::vector<double> values_of(const std::string& quantity) const {
        std::vector<double> v;
        for (const auto& r : records)
            if (r.quantity == quantity && r.error.empty()) v.push_back(r.value);
        return v;
    }
};

inline double fit_loglog_slope(const std::vector<double>& ts, const std::vector<double>& vs) {
    if (ts.size() != vs.size() || ts.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(vs[i] > 0) || !(ts[i] > 0)) continue;
        double lx = std::log(ts[i]), ly = std::log(vs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++k;
    }
    if (k < 2) return std::numeric_limits<double>::quiet_NaN();
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

struct SweepConfig {
    PrequantumLift lift;
    OmegaMap omega;
    BSPoint bs;
    bool approx = false;
    double trunc_eps = 1e-12;
    QuadratureGrid grid;
    // optional pairing test; built per t against the swept section
    bool with_pairing = false;
    CoefficientClosedForm pairing_seed;
    bool with_residual = false;
};

inline SweepResult adiabatic_sweep(const SweepConfig& cfg, const std::vector<double>& t_list) {
    SweepResult out;
    for (std::size_t i = 0; i + 1 < t_list.size(); ++i)
        if (!(t_list[i] < t_list[i + 1]))
            throw std::invalid_argument("adiabatic_sweep: t_list must be ascending and positive");
    for (double t : t_list) {
        if (!(t > 0)) throw std::invalid_argument("adiabatic_sweep: t_list must be positive");
        try {
            AdiabaticOmega om = scale_adiabatic(cfg.omega, t);
            ThetaSection theta(cfg.lift, om, cfg.bs, cfg.trunc_eps, cfg.approx);
            for (int p : {1, 2}) {
                LpNorm norm = lp_norm(theta, p, cfg.grid);
                SweepRecord rec;
                rec.t = t;
                rec.quantity = p == 1 ? "l1_norm" : "l2_norm";
                rec.value = norm.value;
                rec.closed_form = norm.closed_form;
                rec.rel_err = norm.rel_err;
                rec.tolerance = cfg.grid.quad_tol;
                out.records.push_back(rec);
            }
            if (cfg.with_pairing) {
                EquivariantTest test{cfg.lift, {{cfg.bs.m, cfg.pairing_seed}}};
                PairingResult pr = delta_pairing(test, theta, cfg.grid);
                SweepRecord rec;
                rec.t = t;
                rec.quantity = "pairing_error";
                rec.value = std::abs(pr.lhs - pr.rhs);
                rec.tolerance = cfg.grid.quad_tol;
                out.records.push_back(rec);
            }
            if (cfg.with_residual) {
                ResidualNorm rn = dirac_residual_l2(theta, cfg.grid);
                SweepRecord rec;
                rec.t = t;
                rec.quantity = "residual_l2";
                rec.value = rn.value;
                rec.tolerance = cfg.grid.quad_tol;
                out.records.push_back(rec);
            }
        } catch (const std::exception& e) {
            SweepRecord rec;
            rec.t = t;
            rec.quantity = "error";
            rec.error = e.what();
            out.records.push_back(rec);
        }
    }
    for (const char* q : {"l1_norm", "l2_norm", "pairing_error", "residual_l2"}) {
        std::vector<double> ts, vs;
        for (const auto& r : out.records)
            if (r.quantity == q && r.error.empty()) {
                ts.push_back(r.t);
                vs.push_back(r.value);
            }
        if (ts.size() >= 2) out.slopes[q] = fit_loglog_slope(ts, vs);
    }
    return out;
}

}  // namespace latq
