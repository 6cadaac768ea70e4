// Acceptance suite: one pass/fail line per criterion, pinned tolerances.
// Returns a nonzero exit code when any criterion fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "latq/analysis.hpp"
#include "latq/jacobi.hpp"

using namespace latq;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

void note(const std::string& text) { std::cout << "       " << text << "\n"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OmegaMap const_iI(int n) {
    return OmegaMap::constant(
        (std::complex<double>(0, 1) * Eigen::MatrixXcd::Identity(n, n)).eval());
}

std::vector<std::vector<std::vector<long long>>> integrable_twist() {
    std::vector<std::vector<std::vector<long long>>> u(
        2, std::vector<std::vector<long long>>(2, std::vector<long long>(2, 0)));
    u[0][0] = {1, 0};
    u[1][1] = {0, 1};
    return u;
}

// -------------------------------------------------------------------------

void criterion1_jacobi_identification() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> dist(-0.8, 0.8);
    double worst = 0;
    for (int n : {1, 2}) {
        std::vector<Eigen::MatrixXcd> omegas;
        omegas.push_back((std::complex<double>(0, 1) * Eigen::MatrixXcd::Identity(n, n)).eval());
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
        diag(0, 0) = std::complex<double>(1.0, 1.0);
        if (n == 2) diag(1, 1) = std::complex<double>(0.0, 2.0);
        omegas.push_back(diag);
        for (const auto& om : omegas) {
            for (int N : {1, 2, 3}) {
                for (const BSPoint& bs : bs_points(flat_torus(rat_identity(n)), N)) {
                    std::vector<std::pair<std::vector<double>, std::vector<double>>> pts;
                    for (int s = 0; s < 20; ++s) {
                        std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
                        for (auto& v : x) v = dist(rng);
                        for (auto& v : y) v = 0.5 * (dist(rng) + 1.0);
                        pts.push_back({x, y});
                    }
                    worst = std::max(worst, relation_check(om, bs, N, pts, 1e-13));
                }
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "classical-theta identification, max residual " << worst << " (< 1e-10), " << std::fixed
       << std::setprecision(1) << dt << " s (< 10 s)";
    report(1, worst < 1e-10 && dt < 10.0, os.str());
}

void criterion2_lp_formula() {
    auto t0 = std::chrono::steady_clock::now();
    QuadratureGrid grid;
    double worst1 = 0, worst2 = 0;
    {
        PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
        for (double t : {1.0, 4.0, 16.0}) {
            ThetaSection sec =
                make_theta_section(lift, scale_adiabatic(const_iI(1), t), BSPoint{{0}}, 1e-13);
            for (int p : {1, 2}) worst1 = std::max(worst1, lp_norm(sec, p, grid).rel_err);
        }
    }
    {
        PrequantumLift tw = make_lift(twisted_torus(rat_identity(2), integrable_twist()), 2);
        OmegaMap om = ex48_omega(rat_identity(2), integrable_twist());
        PrequantumLift kt = make_lift(kodaira_thurston(), 2);
        for (double t : {1.0, 4.0, 16.0}) {
            ThetaSection sec =
                make_theta_section(tw, scale_adiabatic(om, t), BSPoint{{1, 0}}, 1e-12);
            ThetaSection sec2 = make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t),
                                                          BSPoint{{0, 0}}, 1e-12);
            for (int p : {1, 2}) {
                worst2 = std::max(worst2, lp_norm(sec, p, grid).rel_err);
                worst2 = std::max(worst2, lp_norm(sec2, p, grid).rel_err);
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "Gaussian norm formula, rel err " << worst1 << " at n=1 (< 1e-8), " << worst2
       << " at n=2 (< 1e-4), " << std::fixed << std::setprecision(1) << dt << " s (< 30 s)";
    report(2, worst1 < 1e-8 && worst2 < 1e-4 && dt < 30.0, os.str());
}

void criterion3_dirac_kernel() {
    const double eps = 1e-10;
    std::mt19937_64 rng(1003);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double worst = 0;
    auto run = [&](const ThetaSection& sec) {
        const int n = sec.lift().family.n;
        for (int s = 0; s < 50; ++s) {
            std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
            for (auto& v : x) v = 2.0 * dist(rng) - 0.5;
            for (auto& v : y) v = dist(rng);
            worst = std::max(worst, sec.dirac_residual_at(x, y).cwiseAbs().maxCoeff());
        }
    };
    // constant Omega with nonzero real part
    Eigen::MatrixXcd c2 = Eigen::MatrixXcd::Zero(2, 2);
    c2(0, 0) = std::complex<double>(1.0, 1.0);
    c2(1, 1) = std::complex<double>(0.0, 2.0);
    c2(0, 1) = c2(1, 0) = std::complex<double>(0.5, 0.25);
    PrequantumLift flat = make_lift(flat_torus(rat_identity(2)), 2);
    run(make_theta_section(flat, scale_adiabatic(OmegaMap::constant(c2), 1.0), BSPoint{{1, 0}},
                           eps));
    // nontrivial integrable twist
    PrequantumLift tw = make_lift(twisted_torus(rat_identity(2), integrable_twist()), 2);
    run(make_theta_section(tw, scale_adiabatic(ex48_omega(rat_identity(2), integrable_twist()), 1.0),
                           BSPoint{{0, 1}}, eps));
    std::ostringstream os;
    os << "holomorphic kernel, max Dirac residual " << worst << " (< 10 eps = 1e-9)";
    report(3, worst < 10.0 * eps, os.str());
}

void criterion4_delta_convergence() {
    QuadratureGrid grid;
    bool ok = true;
    std::ostringstream os;
    os << "delta-function pairing:";
    // n = 1 Gaussian configuration
    {
        PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
        EquivariantTest test{lift, {{{0}, gaussian_seed({0}, 1, 0.5, {2.0, 0.0})}}};
        double prev = 1e18, last = 0;
        bool monotone = true;
        for (double t : {1.0, 4.0, 16.0, 64.0}) {
            ThetaSection sec =
                make_theta_section(lift, scale_adiabatic(const_iI(1), t), BSPoint{{0}}, 1e-13);
            PairingResult pr = delta_pairing(test, sec, grid);
            last = std::abs(pr.lhs - pr.rhs);
            if (last >= prev) monotone = false;
            prev = last;
        }
        ok = ok && monotone && last < 1e-2;
        os << " n=1 error(64)=" << last << (monotone ? " strictly decreasing" : " NOT monotone");
    }
    // Kodaira-Thurston frozen sections
    {
        PrequantumLift kt = make_lift(kodaira_thurston(), 2);
        EquivariantTest test{kt, {{{0, 0}, gaussian_seed({0, 0}, 2, 0.5, {2.0, 0.0})}}};
        double prev = 1e18, last = 0;
        bool monotone = true;
        for (double t : {1.0, 4.0, 16.0, 64.0}) {
            ThetaSection sec = make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t),
                                                         BSPoint{{0, 0}}, 1e-12);
            PairingResult pr = delta_pairing(test, sec, grid);
            last = std::abs(pr.lhs - pr.rhs);
            if (last >= prev) monotone = false;
            prev = last;
        }
        ok = ok && monotone && last < 1e-2;
        os << "; KT error(64)=" << last << (monotone ? " strictly decreasing" : " NOT monotone");
        os << " (< 1e-2)";
    }
    report(4, ok, os.str());
}

void criterion5_residual_decay() {
    QuadratureGrid grid;
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    std::vector<double> ts{1.0, 4.0, 16.0, 64.0};
    std::vector<double> vals;
    bool monotone = true;
    double prev = 1e18;
    for (double t : ts) {
        ThetaSection sec =
            make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t), BSPoint{{0, 0}}, 1e-12);
        double v = dirac_residual_l2(sec, grid).value;
        if (v >= prev) monotone = false;
        prev = v;
        vals.push_back(v);
    }
    double slope = fit_loglog_slope(ts, vals);
    bool slope_ok = slope > -1.3 && slope < -0.7;

    ThetaSection sec1 =
        make_approx_theta_section(kt, scale_adiabatic(kt_omega(), 1.0), BSPoint{{0, 0}}, 1e-11);
    double reduced = dirac_residual_l2(sec1, grid).value;
    double direct = dirac_residual_l2_direct(sec1, grid);
    double agree = std::abs(direct - reduced) / reduced;

    std::ostringstream os;
    os << "residual decay (KT, n=2, N=2): " << (monotone ? "strictly decreasing" : "NOT monotone")
       << ", fitted slope " << std::setprecision(4) << slope
       << " (required in [-1.3, -0.7]), reduced/direct agreement " << std::setprecision(3)
       << 100.0 * agree << "% (< 1%)";
    report(5, monotone && slope_ok && agree < 0.01, os.str());
    if (!slope_ok) {
        note("the KT structure has constant Im Omega, so the t^2 I(x') term of the residual");
        note("integral vanishes identically and the norm decays as t^{-2}; the measured values");
        std::ostringstream v;
        v << "match C/(8 t^4) for the squared norm to " << std::scientific << std::setprecision(1)
          << std::abs(vals[0] - std::sqrt(1.0 / 8.0)) << " at t=1";
        note(v.str());
        // the generic rate, with Im Omega varying, on the jordan-block family
        PrequantumLift jl = make_lift(jordan_block({1}), 2);
        std::vector<double> jvals;
        for (double t : ts) {
            ThetaSection sec = make_approx_theta_section(jl, scale_adiabatic(jordan_omega(1), t),
                                                         BSPoint{{0, 0}}, 1e-11);
            jvals.push_back(dirac_residual_l2(sec, grid).value);
        }
        std::ostringstream j;
        j << "for reference, the jordan twist (lambda=1, varying Im Omega) fits slope "
          << std::setprecision(4) << fit_loglog_slope(ts, jvals);
        note(j.str());
    }
}

void criterion6_integrability_classifier() {
    bool ok = true;
    Eigen::MatrixXcd c2 = Eigen::MatrixXcd::Zero(2, 2);
    c2(0, 0) = std::complex<double>(0.5, 1.0);
    c2(1, 1) = std::complex<double>(0.0, 2.0);
    ok = ok && check_integrability(OmegaMap::constant(c2)).integrable;
    IntegrabilityReport kt = check_integrability(kt_omega());
    ok = ok && !kt.integrable && kt.i == 1 && kt.j == 2 && kt.k == 2;
    ok = ok && check_integrability(jordan_omega(0)).integrable;
    ok = ok && !check_integrability(jordan_omega(1)).integrable;
    ok = ok && !check_integrability(jordan_omega(2)).integrable;
    std::ostringstream os;
    os << "integrability classifier: constant integrable, KT witness (" << kt.i << "," << kt.j
       << "," << kt.k << "), jordan integrable iff lambda = 0";
    report(6, ok, os.str());
}

void criterion7_lift_parity() {
    ActionFamily kt = kodaira_thurston();
    bool ok = true;
    std::string witness;
    for (int N : {2, 4}) ok = ok && check_liftable(kt, N, 200, 7).liftable;
    for (int N : {1, 3}) {
        LiftCheck c = check_liftable(kt, N, 200, 7);
        ok = ok && !c.liftable && !c.witness.empty();
        witness = c.witness;
    }
    report(7, ok, "lift parity: N in {2,4} liftable, N in {1,3} fail (" + witness + ")");
}

void criterion8_property_suites() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    os << "property suites:";

    // action axioms, >= 100 samples per family
    for (const ActionFamily& fam :
         {kodaira_thurston(), flat_torus(RatMat{{Rat(2), Rat(1)}, {Rat(0), Rat(1)}}),
          jordan_block({1})}) {
        if (!verify_action_axioms(fam, 100, 81).pass) {
            ok = false;
            os << " action_axioms(" << fam.name << ") FAIL";
        }
    }
    os << " action_axioms";

    // Omega = conj(Z)^{-1}, 100 seeds
    {
        std::mt19937_64 rng(82);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        double worst = 0;
        for (int s = 0; s < 100; ++s) {
            int n = 1 + s % 3;
            Eigen::MatrixXd X(n, n), L(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    X(i, j) = dist(rng);
                    L(i, j) = dist(rng);
                }
            X = 0.5 * (X + X.transpose().eval());
            SiegelPoint z(X, L * L.transpose() + 0.3 * Eigen::MatrixXd::Identity(n, n));
            worst = std::max(worst,
                             (omega_from_Z(z) - z.Z().conjugate().inverse()).cwiseAbs().maxCoeff());
        }
        if (worst > 1e-12) ok = false;
        os << ", conj-inverse " << worst;
    }

    // J^2 = -I and positive metric, 100 seeds
    {
        std::mt19937_64 rng(83);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        double worst = 0;
        for (int s = 0; s < 100; ++s) {
            int n = 1 + s % 3;
            Eigen::MatrixXd X(n, n), L(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    X(i, j) = dist(rng);
                    L(i, j) = dist(rng);
                }
            X = 0.5 * (X + X.transpose().eval());
            SiegelPoint z(X, L * L.transpose() + 0.3 * Eigen::MatrixXd::Identity(n, n));
            auto [J, g] = j_and_g_matrices(z);
            worst = std::max(
                worst, (J * J + Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff());
            Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (g + g.transpose().eval()));
            if (llt.info() != Eigen::Success) ok = false;
        }
        if (worst > 1e-10) ok = false;
        os << ", J^2+I " << worst;
    }

    // theta equivariance, 100 seeded group translates
    {
        PrequantumLift kt = make_lift(kodaira_thurston(), 2);
        ThetaSection sec =
            make_approx_theta_section(kt, scale_adiabatic(kt_omega(), 1.0), BSPoint{{1, 0}}, 1e-11);
        std::mt19937_64 rng(84);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        std::uniform_int_distribution<long long> gd(-2, 2);
        double worst = 0;
        for (int s = 0; s < 100; ++s) {
            GroupElement g{std::vector<long long>{gd(rng), gd(rng)}};
            std::vector<double> x{2.0 * dist(rng) - 1.0, 2.0 * dist(rng) - 1.0};
            std::vector<double> y{dist(rng), dist(rng)};
            worst = std::max(worst, theta_equivariance_residual(sec, g, x, y));
        }
        if (worst > 2.0 * sec.tail_bound() + 1e-12) ok = false;
        os << ", equivariance " << worst;
    }

    // orbit bijection round trip, 100 seeded pairs
    {
        ActionFamily fam = kodaira_thurston();
        auto pts = bs_points(fam, 2);
        std::mt19937_64 rng(85);
        std::uniform_int_distribution<long long> gd(-4, 4);
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (int s = 0; s < 100; ++s) {
            GroupElement g{std::vector<long long>{gd(rng), gd(rng)}};
            BSPoint bs = pts[pick(rng)];
            auto back = orbit_lookup(fam, 2, orbit_index(fam, 2, g, bs));
            if (!back || !(back->first == g) || !(back->second == bs)) ok = false;
        }
        os << ", orbit bijection";
    }

    // path-order independence of the coefficient exponent, 100 indices
    {
        OmegaMap tw = ex48_omega(rat_identity(2), integrable_twist());
        std::mt19937_64 rng(86);
        std::uniform_int_distribution<long long> md(-5, 5);
        auto path_exponent = [&](const std::vector<long long>& m, int N,
                                 const std::vector<int>& order) {
            Polynomial q(2);
            for (std::size_t step = 0; step < order.size(); ++step) {
                int i = order[step];
                Polynomial row(2);
                for (int k = 0; k < 2; ++k) {
                    Polynomial lin =
                        Polynomial::constant(2, RatComplex(Rat(m[static_cast<std::size_t>(k)]))) +
                        Polynomial::variable(2, k, RatComplex(Rat(-N)));
                    row = row + tw.at(i, k) * lin;
                }
                Polynomial anti = row.antiderivative(i);
                Polynomial g = anti - anti.fix_variable(i, Rat(m[static_cast<std::size_t>(i)], N));
                for (std::size_t prev = 0; prev < step; ++prev)
                    g = g.fix_variable(order[prev], Rat(m[static_cast<std::size_t>(order[prev])], N));
                q = q + g;
            }
            return q;
        };
        for (int s = 0; s < 100; ++s) {
            std::vector<long long> m{md(rng), md(rng)};
            if (!(path_exponent(m, 2, {0, 1}) == path_exponent(m, 2, {1, 0}))) ok = false;
        }
        os << ", path order";
    }

    double dt = seconds_since(t0);
    os << "; " << std::fixed << std::setprecision(1) << dt << " s (suite < 60 s)";
    report(8, ok && dt < 60.0, os.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::cout << std::scientific << std::setprecision(3);
    criterion1_jacobi_identification();
    criterion2_lp_formula();
    criterion3_dirac_kernel();
    criterion4_delta_convergence();
    criterion5_residual_decay();
    criterion6_integrability_classifier();
    criterion7_lift_parity();
    criterion8_property_suites();
    double dt = seconds_since(t0);
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ") << (failures ? std::to_string(failures) : "")
              << " (total " << std::fixed << std::setprecision(1) << dt << " s)\n";
    return failures == 0 ? 0 : 1;
}
