#pragma once

#include <functional>
#include <map>
#include <variant>

#include "latq/acs.hpp"
#include "latq/prequantum.hpp"
#include "latq/truncation.hpp"

namespace latq {

// Coefficient function in closed form: a(x) = scale * e^{-2 pi i E(x)}.
struct CoefficientClosedForm {
    std::complex<double> scale{1.0, 0.0};
    Polynomial exponent;

    std::complex<double> eval(const std::vector<double>& x) const {
        std::complex<double> e = exponent.eval(x);
        // e^{-2 pi i (re + i im)} = e^{2 pi im} e^{-2 pi i re}
        return scale * std::exp(kTwoPi * e.imag()) * std::polar(1.0, -kTwoPi * e.real());
    }

    // |a(x)| without the oscillatory factor; used by truncation certificates.
    double modulus(const std::vector<double>& x) const {
        return std::abs(scale) * std::exp(kTwoPi * exponent.eval(x).imag());
    }
};

// The path integral G_m^i with coordinates 1..i-1 frozen at m/N: the exact
// antiderivative of (Omega(m - N x))_i in x_i from m_i/N to x_i.
inline Polynomial g_path(const OmegaMap& omega, const std::vector<long long>& m, int N, int i) {
    int n = omega.n();
    Polynomial row(n);
    for (int k = 0; k < n; ++k) {
        Polynomial lin = Polynomial::constant(n, RatComplex(Rat(m.at(static_cast<std::size_t>(k))))) +
                         Polynomial::variable(n, k, RatComplex(Rat(-N)));
        row = row + omega.at(i, k) * lin;
    }
    Polynomial anti = row.antiderivative(i);
    Polynomial g = anti - anti.fix_variable(i, Rat(m.at(static_cast<std::size_t>(i)), N));
    for (int j = 0; j < i; ++j) g = g.fix_variable(j, Rat(m.at(static_cast<std::size_t>(j)), N));
    return g;
}

// Exact solution exponent of the reduced Dirac equation at index m:
// a_m(x) = e^{-2 pi i sum_i G_m^i(m_1/N,...,x_i,...,x_n)}, a_m(m/N) = 1.
inline CoefficientClosedForm coefficient(const OmegaMap& omega, const std::vector<long long>& m,
                                         int N) {
    if (!check_bs_commutativity(omega, m, N))
        throw std::domain_error("coefficient: no solution, commutativity fails at this index");
    Polynomial q(omega.n());
    for (int i = 0; i < omega.n(); ++i) q = q + g_path(omega, m, N, i);
    return {std::complex<double>(1.0, 0.0), std::move(q)};
}

// Frozen-matrix solution: a~_m(x) = e^{pi i N (x - m/N) . Omega^t_{m/N} (x - m/N)}.
inline CoefficientClosedForm approx_coefficient(const OmegaMap& omega_t,
                                                const std::vector<long long>& m, int N) {
    int n = omega_t.n();
    RatVec center(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) center[static_cast<std::size_t>(i)] = Rat(m.at(static_cast<std::size_t>(i)), N);
    Polynomial q(n);
    for (int j = 0; j < n; ++j) {
        Polynomial dj = Polynomial::variable(n, j) -
                        Polynomial::constant(n, RatComplex(center[static_cast<std::size_t>(j)]));
        for (int k = 0; k < n; ++k) {
            RatComplex w = omega_t.at(j, k).eval_exact(center);
            if (w.is_zero()) continue;
            Polynomial dk = Polynomial::variable(n, k) -
                            Polynomial::constant(n, RatComplex(center[static_cast<std::size_t>(k)]));
            q = q + (dj * dk).scaled(Rat(-N, 2) * w);
        }
    }
    return {std::complex<double>(1.0, 0.0), std::move(q)};
}

// a_m(x) * e^{2 pi i m . y} or the frozen-matrix variant.
inline std::complex<double> base_section_eval(const CoefficientClosedForm& coeff,
                                              const std::vector<long long>& m,
                                              const std::vector<double>& x,
                                              const std::vector<double>& y) {
    double phase = 0;
    for (std::size_t i = 0; i < y.size(); ++i) phase += static_cast<double>(m[i]) * y[i];
    return coeff.eval(x) * std::polar(1.0, kTwoPi * phase);
}

// Transports the base coefficient to the Fourier index N rho_gamma(m/N):
// a_l(x) = g_gamma e^{2 pi i N (g~_gamma - rho_gamma(m/N) . u_gamma)(x~)} a_m(x~),
// x~ = rho_{gamma^{-1}}(x). Closed form again, with exponent composed exactly.
inline CoefficientClosedForm transport_coefficient(const PrequantumLift& lift,
                                                   const CoefficientClosedForm& base,
                                                   const std::vector<long long>& m,
                                                   const GroupElement& gamma) {
    const ActionFamily& fam = lift.family;
    int n = fam.n;
    auto [aff, fib] = fam.eval(gamma);
    RatVec mhat(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mhat[static_cast<std::size_t>(i)] = Rat(m.at(static_cast<std::size_t>(i)), lift.N);
    RatVec rho_m = rat_add(rat_apply(aff.A, mhat), aff.c);

    // phi(x~) = g~_gamma(x~) - rho_gamma(m/N) . u_gamma(x~)
    Polynomial phi = g_tilde_poly(fam, gamma);
    for (int i = 0; i < n; ++i) {
        Polynomial ui = Polynomial::constant(n, RatComplex(fib.w[static_cast<std::size_t>(i)]));
        for (int j = 0; j < n; ++j)
            if (fib.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                ui = ui + Polynomial::variable(n, j, RatComplex(fib.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        phi = phi - ui.scaled(RatComplex(rho_m[static_cast<std::size_t>(i)]));
    }

    Polynomial expo = base.exponent - phi.scaled(RatComplex(Rat(lift.N)));
    RatMat Ainv = rat_inverse(aff.A);
    RatVec shift = rat_apply(Ainv, aff.c);
    for (auto& v : shift) v = -v;
    Polynomial composed = expo.compose_affine(Ainv, shift);
    return {base.scale * lift.g_of(gamma), std::move(composed)};
}

// Theta section at a Bohr-Sommerfeld point: the orbit sum of the transported
// local kernel sections, truncated with a certified Gaussian tail.
class ThetaSection {
  public:
    ThetaSection(PrequantumLift lift, AdiabaticOmega omega, BSPoint m, double eps,
                 bool approx)
        : lift_(std::move(lift)),
          omega_(std::move(omega)),
          m_(std::move(m)),
          eps_(eps),
          approx_(approx) {
        if (!lift_.liftable)
            throw std::invalid_argument("ThetaSection: lift failed check_liftable");
        const int n = lift_.family.n;
        if (approx_) {
            base_ = approx_coefficient(omega_.scaled, m_.m, lift_.N);
        } else {
            if (!omega_.scaled.map_entries([](const Polynomial& p) { return p.imag_part(); })
                     .constant_entries())
                throw std::invalid_argument(
                    "ThetaSection: convergence certificate needs constant Im Omega");
            base_ = coefficient(omega_.scaled, m_.m, lift_.N);
        }
        // Gaussian matrix of |a_m| in the transported coordinate.
        std::vector<double> mhat = m_.coords(lift_.N);
        Eigen::MatrixXd G = omega_.scaled.eval_im(mhat);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0)
            throw std::invalid_argument("ThetaSection: Im Omega not positive definite at m/N");
        double lam = es.eigenvalues().minCoeff();
        for (int s = 0; s < 5; ++s) {  // positivity probe at shifted translates
            std::vector<double> pt = mhat;
            pt[static_cast<std::size_t>(s % n)] += static_cast<double>(s + 1);
            if (!omega_.scaled.imag_positive_definite_at(pt))
                throw std::invalid_argument(
                    "ThetaSection: Im Omega fails positive-definiteness at a lattice translate");
        }
        double g = std::numbers::pi * static_cast<double>(lift_.N) * lam;
        trunc_radius_ = orbit_truncation_radius(g, 0.9 * eps_, n);
        tail_bound_ = orbit_tail_bound(g, trunc_radius_, n);
    }

    const PrequantumLift& lift() const { return lift_; }
    const AdiabaticOmega& omega() const { return omega_; }
    const BSPoint& bs() const { return m_; }
    bool approx() const { return approx_; }
    double t() const { return omega_.t; }
    double eps() const { return eps_; }
    double trunc_radius() const { return trunc_radius_; }
    double tail_bound() const { return tail_bound_; }
    const CoefficientClosedForm& base_coefficient() const { return base_; }

    struct CachedCoefficient {
        CoefficientClosedForm coeff;
        std::vector<Polynomial> dexp;  // exponent partials, cached for hot loops
    };

    struct Mode {
        std::vector<long long> l;
        GroupElement gamma;
        const CachedCoefficient* coeff;
    };

    // All Fourier modes contributing at base point x, sorted by index.
    std::vector<Mode> modes_at(const std::vector<double>& x) const {
        std::vector<double> center = m_.coords(lift_.N);
        std::vector<GroupElement> gs = lift_.family.orbit_enumerator(x, center, trunc_radius_);
        std::vector<Mode> out;
        out.reserve(gs.size());
        for (const auto& g : gs) {
            std::vector<long long> l = orbit_index(lift_.family, lift_.N, g, m_);
            auto it = cache_.find(l);
            if (it == cache_.end()) {
                CachedCoefficient cc{transport_coefficient(lift_, base_, m_.m, g), {}};
                for (int i = 0; i < lift_.family.n; ++i)
                    cc.dexp.push_back(cc.coeff.exponent.derivative(i));
                it = cache_.emplace(l, std::move(cc)).first;
            }
            out.push_back(Mode{std::move(l), g, &it->second});
        }
        std::sort(out.begin(), out.end(), [](const Mode& a, const Mode& b) { return a.l < b.l; });
        return out;
    }

    std::complex<double> eval(const std::vector<double>& x, const std::vector<double>& y) const {
        std::complex<double> acc{0, 0};
        for (const Mode& mode : modes_at(x)) {
            double phase = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                phase += static_cast<double>(mode.l[i]) * y[i];
            acc += mode.coeff->coeff.eval(x) * std::polar(1.0, kTwoPi * phase);
        }
        return acc;
    }

    struct ModeResidual {
        std::vector<long long> l;
        Eigen::VectorXcd r;  // r_i = d_i a_l + 2 pi i (Omega^t (l - N x))_i a_l at x
    };

    // Per-mode residuals of the reduced Dirac operator at base point x. The
    // derivative and the multiplication term are computed independently so
    // their cancellation is a genuine floating-point check.
    std::vector<ModeResidual> dirac_mode_residuals(const std::vector<double>& x) const {
        const int n = lift_.family.n;
        Eigen::MatrixXcd om = omega_.scaled.eval(x);
        std::vector<ModeResidual> out;
        for (const Mode& mode : modes_at(x)) {
            std::complex<double> a = mode.coeff->coeff.eval(x);
            Eigen::VectorXcd lnx(n);
            for (int k = 0; k < n; ++k)
                lnx(k) = static_cast<double>(mode.l[static_cast<std::size_t>(k)]) -
                         static_cast<double>(lift_.N) * x[static_cast<std::size_t>(k)];
            Eigen::VectorXcd mul = om * lnx;
            Eigen::VectorXcd r(n);
            for (int i = 0; i < n; ++i) {
                std::complex<double> dE = mode.coeff->dexp[static_cast<std::size_t>(i)].eval(x);
                // d_i a + 2 pi i (Omega (l - N x))_i a = 2 pi i a ((Omega(l-Nx))_i - d_i E)
                r(i) = std::complex<double>(0, kTwoPi) * a * (mul(i) - dE);
            }
            out.push_back(ModeResidual{mode.l, std::move(r)});
        }
        return out;
    }

    Eigen::VectorXcd dirac_residual_at(const std::vector<double>& x,
                                       const std::vector<double>& y) const {
        const int n = lift_.family.n;
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
        for (const ModeResidual& mr : dirac_mode_residuals(x)) {
            double phase = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                phase += static_cast<double>(mr.l[i]) * y[i];
            out += std::polar(1.0, kTwoPi * phase) * mr.r;
        }
        return out;
    }

  private:
    PrequantumLift lift_;
    AdiabaticOmega omega_;
    BSPoint m_;
    double eps_;
    bool approx_;
    CoefficientClosedForm base_;
    double trunc_radius_ = 0;
    double tail_bound_ = 0;
    mutable std::map<std::vector<long long>, CachedCoefficient> cache_;
};

inline ThetaSection make_theta_section(const PrequantumLift& lift, const AdiabaticOmega& omega,
                                       const BSPoint& m, double eps) {
    return ThetaSection(lift, omega, m, eps, /*approx=*/false);
}

inline ThetaSection make_approx_theta_section(const PrequantumLift& lift,
                                              const AdiabaticOmega& omega, const BSPoint& m,
                                              double eps) {
    return ThetaSection(lift, omega, m, eps, /*approx=*/true);
}

// | rho''_gamma(theta(x, y)) - theta(rho~_gamma(x, y)) |
inline double theta_equivariance_residual(const ThetaSection& theta, const GroupElement& gamma,
                                          const std::vector<double>& x,
                                          const std::vector<double>& y) {
    std::complex<double> z = theta.eval(x, y);
    LiftedPoint moved = lift_apply(theta.lift(), gamma, x, y, z);
    std::complex<double> direct = theta.eval(moved.x, moved.y);
    return std::abs(moved.z - direct);
}

// ---------------------------------------------------------------------------
// Finite fiber-Fourier sections and the reduced Dirac operator
// ---------------------------------------------------------------------------

using CoefficientFn = std::function<std::complex<double>(const std::vector<double>&)>;

struct FourierMode {
    std::vector<long long> l;
    std::variant<CoefficientClosedForm, CoefficientFn> a;

    std::complex<double> eval_coeff(const std::vector<double>& x) const {
        if (std::holds_alternative<CoefficientClosedForm>(a))
            return std::get<CoefficientClosedForm>(a).eval(x);
        return std::get<CoefficientFn>(a)(x);
    }
};

struct FourierSection {
    int n = 0;
    std::vector<FourierMode> modes;

    std::complex<double> eval(const std::vector<double>& x, const std::vector<double>& y) const {
        std::complex<double> acc{0, 0};
        for (const auto& m : modes) {
            double phase = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                phase += static_cast<double>(m.l[i]) * y[i];
            acc += m.eval_coeff(x) * std::polar(1.0, kTwoPi * phase);
        }
        return acc;
    }
};

// Mode-wise d_i a_l + 2 pi i (Omega^t (l - N x))_i a_l for each i. Closed-form
// coefficients use exact derivatives; callbacks use central differences.
inline std::vector<FourierSection> dirac_apply(const FourierSection& section,
                                               const AdiabaticOmega& omega, int N,
                                               double fd_step = 1e-5) {
    int n = section.n;
    std::vector<FourierSection> out(static_cast<std::size_t>(n));
    for (auto& c : out) c.n = n;
    OmegaMap omega_t = omega.scaled;
    for (const FourierMode& mode : section.modes) {
        for (int i = 0; i < n; ++i) {
            std::vector<long long> l = mode.l;
            FourierMode src = mode;
            CoefficientFn res = [src, omega_t, N, i, fd_step, n](const std::vector<double>& x) {
                Eigen::MatrixXcd om = omega_t.eval(x);
                Eigen::VectorXcd lnx(n);
                for (int k = 0; k < n; ++k)
                    lnx(k) = static_cast<double>(src.l[static_cast<std::size_t>(k)]) -
                             static_cast<double>(N) * x[static_cast<std::size_t>(k)];
                std::complex<double> mul = (om * lnx)(i);
                std::complex<double> da;
                if (std::holds_alternative<CoefficientClosedForm>(src.a)) {
                    const auto& cf = std::get<CoefficientClosedForm>(src.a);
                    da = std::complex<double>(0, -kTwoPi) * cf.exponent.derivative(i).eval(x) *
                         cf.eval(x);
                } else {
                    std::vector<double> xp = x, xm = x;
                    xp[static_cast<std::size_t>(i)] += fd_step;
                    xm[static_cast<std::size_t>(i)] -= fd_step;
                    da = (src.eval_coeff(xp) - src.eval_coeff(xm)) / (2.0 * fd_step);
                }
                return da + std::complex<double>(0, kTwoPi) * mul * src.eval_coeff(x);
            };
            out[static_cast<std::size_t>(i)].modes.push_back(FourierMode{std::move(l), std::move(res)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Independent closed-form evaluators transcribed from the worked examples
// ---------------------------------------------------------------------------

struct ClosedFormParams {
    std::vector<long long> lambda;                       // jordan
    RatMat C;                                            // ex48
    std::vector<std::vector<std::vector<long long>>> u;  // ex48
};

// Returns an evaluator (x, y) -> value for the named configuration's
// approximated theta (exact theta where the configuration is integrable),
// summed over the gamma box ||gamma||_inf <= range.
inline std::function<std::complex<double>(const std::vector<double>&, const std::vector<double>&)>
closed_form_theta(const std::string& example_id, const ClosedFormParams& params,
                  const std::vector<long long>& m, int N, double t,
                  const std::vector<double>& phase_turns, long long range) {
    auto g_of = [phase_turns](const std::vector<long long>& gamma) {
        double turns = 0;
        for (std::size_t i = 0; i < gamma.size(); ++i)
            turns += phase_turns.empty() ? 0.0 : phase_turns[i] * static_cast<double>(gamma[i]);
        return std::polar(1.0, kTwoPi * turns);
    };
    const std::complex<double> I{0, 1};

    if (example_id == "kodaira_thurston") {
        double m1 = static_cast<double>(m.at(0)) / N, m2 = static_cast<double>(m.at(1)) / N;
        return [=](const std::vector<double>& x, const std::vector<double>& y) {
            std::complex<double> acc{0, 0};
            for (long long a = -range; a <= range; ++a)
                for (long long b = -range; b <= range; ++b) {
                    double g1 = static_cast<double>(a), g2 = static_cast<double>(b);
                    std::complex<double> expo =
                        0.5 * (t * I * (x[0] - g1 - m1) * (x[0] - g1 - m1) +
                               (m1 + t * I) * (x[1] - g2 - m2) * (x[1] - g2 - m2)) +
                        (x[1] - g2) * (0.5 * g1 * (x[1] + g2) - (m2 + g2) * g1);
                    double yphase = (static_cast<double>(m.at(0)) + N * g1) * y[0] +
                                    (static_cast<double>(m.at(1)) + N * g2) * y[1];
                    acc += g_of({a, b}) *
                           std::exp(kTwoPi * I * (static_cast<double>(N) * expo)) *
                           std::polar(1.0, kTwoPi * yphase);
                }
            return acc;
        };
    }

    if (example_id == "jordan") {
        double lam = static_cast<double>(params.lambda.at(0));
        double m1 = static_cast<double>(m.at(0)) / N, m2 = static_cast<double>(m.at(1)) / N;
        return [=](const std::vector<double>& x, const std::vector<double>& y) {
            std::complex<double> acc{0, 0};
            for (long long a = -range; a <= range; ++a)
                for (long long b = -range; b <= range; ++b) {
                    double g1 = static_cast<double>(a), g2 = static_cast<double>(b);
                    double X1 = x[0] - g1 - g2 * lam * (x[1] - g2) - m1;
                    double X2 = x[1] - g2 - m2;
                    std::complex<double> expo =
                        0.5 * t * I * X1 * X1 - t * I * lam * m2 * X1 * X2 +
                        0.5 * (m2 + t * I * (lam * lam * m2 * m2 + 1.0)) * X2 * X2 +
                        0.5 * g2 * (x[1] - g2) * (x[1] + g2) - (m2 + g2) * g2 * (x[1] - g2);
                    double yphase =
                        (static_cast<double>(m.at(0)) + g2 * lam * static_cast<double>(m.at(1)) +
                         N * g1) *
                            y[0] +
                        (static_cast<double>(m.at(1)) + N * g2) * y[1];
                    acc += g_of({a, b}) *
                           std::exp(kTwoPi * I * (static_cast<double>(N) * expo)) *
                           std::polar(1.0, kTwoPi * yphase);
                }
            return acc;
        };
    }

    if (example_id == "ex48") {
        int n = static_cast<int>(params.C.size());
        Eigen::MatrixXd C = to_eigen(params.C);
        Eigen::MatrixXd Cinv_t = to_eigen(rat_transpose(rat_inverse(params.C)));
        auto u = params.u;
        std::vector<double> mhat(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) mhat[static_cast<std::size_t>(i)] = static_cast<double>(m.at(static_cast<std::size_t>(i))) / N;
        return [=](const std::vector<double>& x, const std::vector<double>& y) {
            std::complex<double> acc{0, 0};
            std::vector<long long> gamma(static_cast<std::size_t>(n), -range);
            std::vector<long long> lo(static_cast<std::size_t>(n), -range), hi(static_cast<std::size_t>(n), range);
            Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
            bool more = true;
            while (more) {
                Eigen::VectorXd gv(n);
                for (int i = 0; i < n; ++i) gv(i) = static_cast<double>(gamma[static_cast<std::size_t>(i)]);
                Eigen::VectorXd xt = xv - C * gv;  // rho_{gamma^{-1}}(x)
                Eigen::VectorXd dv(n);
                for (int i = 0; i < n; ++i) dv(i) = xt(i) - mhat[static_cast<std::size_t>(i)];
                auto udot = [&](int a, int b, const Eigen::VectorXd& vec) {
                    // (tC^{-1} u_ab) . vec
                    double s = 0;
                    for (int r = 0; r < n; ++r) {
                        double w = 0;
                        for (int l = 0; l < n; ++l)
                            w += Cinv_t(r, l) *
                                 static_cast<double>(u[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(l)]);
                        s += w * vec(r);
                    }
                    return s;
                };
                std::complex<double> expo{0, 0};
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        Eigen::VectorXd vec(n);
                        for (int r = 0; r < i; ++r) vec(r) = mhat[static_cast<std::size_t>(r)];
                        vec(i) = 0.5 * (xt(i) + mhat[static_cast<std::size_t>(i)]);
                        for (int r = i + 1; r < n; ++r) vec(r) = xt(r);
                        expo += dv(i) * dv(j) * udot(i, j, vec);
                    }
                    Eigen::VectorXd vec(n);
                    for (int r = 0; r < i; ++r) vec(r) = mhat[static_cast<std::size_t>(r)];
                    vec(i) = (2.0 * xt(i) + mhat[static_cast<std::size_t>(i)]) / 3.0;
                    for (int r = i + 1; r < n; ++r) vec(r) = xt(r);
                    expo += 0.5 * dv(i) * dv(i) * udot(i, i, vec);
                }
                // 1/2 d . (U(gamma) + t i I) d - 1/2 mhat . U(gamma) mhat
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        double ug = 0;
                        for (int l = 0; l < n; ++l)
                            ug += static_cast<double>(u[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(l)]) *
                                  gv(l);
                        expo += 0.5 * dv(a) * ug * dv(b);
                        expo -= 0.5 * mhat[static_cast<std::size_t>(a)] * ug * mhat[static_cast<std::size_t>(b)];
                    }
                expo += 0.5 * t * I * dv.squaredNorm();
                double yphase = 0;
                for (int i = 0; i < n; ++i) {
                    double rho_m = mhat[static_cast<std::size_t>(i)] + (C * gv)(i);
                    yphase += rho_m * y[static_cast<std::size_t>(i)];
                }
                acc += g_of(gamma) * std::exp(kTwoPi * I * static_cast<double>(N) * expo) *
                       std::polar(1.0, kTwoPi * static_cast<double>(N) * yphase);
                more = detail::next_lattice_point(gamma, lo, hi);
            }
            return acc;
        };
    }
    throw std::invalid_argument("closed_form_theta: unknown example id '" + example_id + "'");
}

}  // namespace latq
