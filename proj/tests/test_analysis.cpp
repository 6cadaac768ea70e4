#include <catch2/catch_amalgamated.hpp>

#include "latq/analysis.hpp"

using namespace latq;

namespace {

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

}  // namespace

TEST_CASE("lattice_truncation_radius") {
    double r = lattice_truncation_radius(1.0, 1, 1.0, 1e-12, 1);
    REQUIRE(r > 2.7);
    REQUIRE(r < 4.0);
    // oracle: the actual lattice tail outside the radius is below the target
    double tail = 0;
    for (int k = static_cast<int>(std::ceil(r)); k < 200; ++k)
        tail += 2.0 * std::exp(-std::numbers::pi * k * k);
    REQUIRE(tail < 1e-12);

    // quadrupling t roughly halves the radius
    double r4 = lattice_truncation_radius(1.0, 1, 4.0, 1e-12, 1);
    REQUIRE(r4 / r > 0.4);
    REQUIRE(r4 / r < 0.6);

    // monotone in the target accuracy
    REQUIRE(lattice_truncation_radius(1.0, 1, 1.0, 1e-6, 1) < r);

    // the bound function itself is a valid certificate
    REQUIRE(lattice_tail_bound(1.0, 1, 1.0, r, 1) <= 1e-12);
    REQUIRE_THROWS(lattice_truncation_radius(1.0, 1, 1.0, 0.0, 1));
}

TEST_CASE("quadrature grid integrates constants exactly") {
    QuadratureGrid grid;
    // vol(F) for a shear chart with |det| = 2
    RatMat C{{Rat(2), Rat(1)}, {Rat(0), Rat(1)}};
    ActionFamily fam = flat_torus(C);
    double vol = integrate_fundamental(fam, grid, [](const std::vector<double>&) { return 1.0; });
    REQUIRE(vol == Catch::Approx(2.0).margin(1e-13));

    double one = fiber_integrate(2, grid.fiber_size, [](const std::vector<double>&) { return 1.0; });
    REQUIRE(one == Catch::Approx(1.0).margin(0.0));

    // Gauss-Legendre sanity: a degree-15 polynomial integrates exactly
    Rule1D rule = panel_rule(0.0, 1.0, 1, 8);
    double v = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        v += rule.weights[i] * std::pow(rule.nodes[i], 15);
    REQUIRE(v == Catch::Approx(1.0 / 16.0).margin(1e-15));
}

TEST_CASE("lp_norm against the Gaussian closed form, n = 1") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
    QuadratureGrid grid;
    // p = 1, t = 1: closed form C sqrt(det M) (N/(p t))^{1/2} = 1
    ThetaSection t1 =
        make_theta_section(lift, scale_adiabatic(const_iI(1), 1.0), BSPoint{{0}}, 1e-13);
    LpNorm n1 = lp_norm(t1, 1, grid);
    REQUIRE(n1.has_closed_form);
    REQUIRE(n1.closed_form == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(n1.rel_err < 1e-8);
    REQUIRE(n1.stable);

    // p = 2, t = 4, N = 2: squared norm (2/8)^{1/2} = 0.5
    PrequantumLift l2 = make_lift(flat_torus(rat_identity(1)), 2);
    ThetaSection t2 =
        make_theta_section(l2, scale_adiabatic(const_iI(1), 4.0), BSPoint{{1}}, 1e-13);
    LpNorm n2 = lp_norm(t2, 2, grid);
    REQUIRE(n2.closed_form == Catch::Approx(std::sqrt(0.5)).margin(1e-15));
    REQUIRE(n2.rel_err < 1e-8);

    REQUIRE_THROWS(lp_norm(t1, 3, grid));
}

TEST_CASE("lp_norm against the Gaussian closed form, n = 2") {
    QuadratureGrid grid;
    // exact theta for the integrable twisted torus
    PrequantumLift tw = make_lift(twisted_torus(rat_identity(2), integrable_twist()), 2);
    AdiabaticOmega om = scale_adiabatic(ex48_omega(rat_identity(2), integrable_twist()), 1.0);
    ThetaSection sec = make_theta_section(tw, om, BSPoint{{1, 0}}, 1e-12);
    for (int p : {1, 2}) {
        LpNorm norm = lp_norm(sec, p, grid);
        REQUIRE(norm.rel_err < 1e-4);
        REQUIRE(norm.stable);
    }

    // frozen sections of the Kodaira-Thurston configuration
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    for (double t : {1.0, 4.0}) {
        ThetaSection sec2 =
            make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t), BSPoint{{0, 0}}, 1e-12);
        for (int p : {1, 2}) {
            LpNorm norm = lp_norm(sec2, p, grid);
            REQUIRE(norm.rel_err < 1e-4);
        }
    }
}

TEST_CASE("lp_norm scaling law across the sweep") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
    QuadratureGrid grid;
    for (int p : {1, 2}) {
        std::vector<double> scaled;
        for (double t : {1.0, 4.0, 16.0}) {
            ThetaSection sec =
                make_theta_section(lift, scale_adiabatic(const_iI(1), t), BSPoint{{0}}, 1e-13);
            LpNorm norm = lp_norm(sec, p, grid);
            scaled.push_back(std::pow(norm.value, p) * std::pow(p * t / 1.0, 0.5));
        }
        for (double v : scaled) REQUIRE(v == Catch::Approx(scaled[0]).epsilon(1e-6));
    }
}

TEST_CASE("equivariant tests are exactly transported") {
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    EquivariantTest test{kt, {{{0, 0}, gaussian_seed({0, 0}, 2, 0.5, {2.0, 0.0})}}};
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::uniform_int_distribution<long long> gd(-2, 2);
    for (int s = 0; s < 25; ++s) {
        GroupElement g{std::vector<long long>{gd(rng), gd(rng)}};
        std::vector<double> x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
        REQUIRE(equivariant_test_residual(test, g, x, y, 7.0) < 1e-9);
    }
}

TEST_CASE("delta_pairing: theta against itself approaches 1") {
    // fixed test: the t = 1 section; swept side grows in t
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
    QuadratureGrid grid;
    CoefficientClosedForm base_t1 = coefficient(scale_adiabatic(const_iI(1), 1.0).scaled, {0}, 1);
    EquivariantTest test{lift, {{{0}, base_t1}}};
    double prev = 1e9;
    for (double t : {1.0, 4.0, 16.0, 64.0}) {
        ThetaSection sec =
            make_theta_section(lift, scale_adiabatic(const_iI(1), t), BSPoint{{0}}, 1e-13);
        PairingResult pr = delta_pairing(test, sec, grid);
        REQUIRE(std::abs(pr.rhs - std::complex<double>(1, 0)) < 1e-14);
        double err = std::abs(pr.lhs - pr.rhs);
        // oracle: lhs = sqrt(t / (1 + t)) for these Gaussians
        double expect = std::sqrt(t / (1.0 + t));
        REQUIRE(std::abs(pr.lhs.real() - expect) < 1e-9);
        REQUIRE(err < prev);
        prev = err;
    }
    REQUIRE(prev < 1e-2);
}

TEST_CASE("delta_pairing: smooth test with value 2 at the BS point, n = 1") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
    QuadratureGrid grid;
    EquivariantTest test{lift, {{{0}, gaussian_seed({0}, 1, 0.5, {2.0, 0.0})}}};
    double prev = 1e9;
    for (double t : {1.0, 4.0, 16.0, 64.0}) {
        ThetaSection sec =
            make_theta_section(lift, scale_adiabatic(const_iI(1), t), BSPoint{{0}}, 1e-13);
        PairingResult pr = delta_pairing(test, sec, grid);
        REQUIRE(pr.rhs.real() == Catch::Approx(2.0).margin(1e-14));
        // oracle: lhs = 2 sqrt(t / (1/2 + t))
        double expect = 2.0 * std::sqrt(t / (0.5 + t));
        REQUIRE(std::abs(pr.lhs.real() - expect) < 1e-9);
        double err = std::abs(pr.lhs - pr.rhs);
        REQUIRE(err < prev);
        prev = err;
    }
    REQUIRE(prev < 1e-2);
}

TEST_CASE("delta_pairing: Kodaira-Thurston frozen sections") {
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    QuadratureGrid grid;
    EquivariantTest test{kt, {{{0, 0}, gaussian_seed({0, 0}, 2, 0.5, {2.0, 0.0})}}};
    double prev = 1e9;
    for (double t : {1.0, 4.0, 16.0, 64.0}) {
        ThetaSection sec =
            make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t), BSPoint{{0, 0}}, 1e-12);
        PairingResult pr = delta_pairing(test, sec, grid);
        REQUIRE(pr.rhs.real() == Catch::Approx(2.0).margin(1e-14));
        // oracle: lhs = 2 (2t) / (1/2 + 2t) at m = 0 where Re Omega vanishes
        double expect = 2.0 * (2.0 * t) / (0.5 + 2.0 * t);
        REQUIRE(std::abs(pr.lhs.real() - expect) < 1e-8);
        double err = std::abs(pr.lhs - pr.rhs);
        REQUIRE(err < prev);
        prev = err;
    }
    REQUIRE(prev < 1e-2);
}

TEST_CASE("delta_pairing: disjoint Fourier support gives zero") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 2);
    QuadratureGrid grid;
    EquivariantTest test{lift, {{{1}, gaussian_seed({1}, 2, 1, {1.0, 0.0})}}};
    ThetaSection sec =
        make_theta_section(lift, scale_adiabatic(const_iI(1), 1.0), BSPoint{{0}}, 1e-12);
    PairingResult pr = delta_pairing(test, sec, grid);
    REQUIRE(std::abs(pr.lhs) == 0.0);
    REQUIRE(std::abs(pr.rhs) == 0.0);
}

TEST_CASE("delta_pairing flags a broken transport") {
    // A fiber map with non-symmetric tA U breaks the group law of the bundle
    // lift, so the transported seeds stop being equivariant and the sampled
    // pre-check must flag the test section.
    PrequantumLift good = make_lift(kodaira_thurston(), 2);
    PrequantumLift bad = good;
    bad.family.eval = [](const GroupElement& g) {
        RatMat U = rat_zero(2);
        U[0][1] = g.gamma[0];  // tA U not symmetric when gamma_1 != 0
        RatVec c{Rat(g.gamma[0]), Rat(g.gamma[1])};
        return std::make_pair(AffinePart{rat_identity(2), c}, FiberMap{U, RatVec(2, Rat(0))});
    };
    QuadratureGrid grid;
    EquivariantTest test{bad, {{{0, 0}, gaussian_seed({0, 0}, 2, 0.5, {1.0, 0.0})}}};
    ThetaSection sec =
        make_approx_theta_section(good, scale_adiabatic(kt_omega(), 1.0), BSPoint{{0, 0}}, 1e-10);
    REQUIRE_THROWS(delta_pairing(test, sec, grid));
}

TEST_CASE("dirac_residual_l2: constant Omega gives zero") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(2)), 1);
    QuadratureGrid grid;
    ThetaSection sec =
        make_theta_section(lift, scale_adiabatic(const_iI(2), 1.0), BSPoint{{0, 0}}, 1e-12);
    ResidualNorm rn = dirac_residual_l2(sec, grid);
    REQUIRE(rn.value < 1e-12);
}

TEST_CASE("dirac_residual_l2 rejects n = 1") {
    PrequantumLift lift = make_lift(flat_torus(rat_identity(1)), 1);
    QuadratureGrid grid;
    ThetaSection sec =
        make_theta_section(lift, scale_adiabatic(const_iI(1), 1.0), BSPoint{{0}}, 1e-12);
    REQUIRE_THROWS(dirac_residual_l2(sec, grid));
}

TEST_CASE("dirac_residual_l2: Kodaira-Thurston closed form") {
    // For Omega = diag(i, x_1 + i) at m = 0 the reduced integral evaluates in
    // closed form: the defect matrix is diag(0, m_1/N - x_1), Im(Delta Omega)
    // vanishes, and the Gaussian moments give || D^t theta~ ||^2 = C / (8 t^4).
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    QuadratureGrid grid;
    double prev = 1e18;
    std::vector<double> ts{1.0, 4.0, 16.0, 64.0};
    std::vector<double> vals;
    for (double t : ts) {
        ThetaSection sec =
            make_approx_theta_section(kt, scale_adiabatic(kt_omega(), t), BSPoint{{0, 0}}, 1e-12);
        ResidualNorm rn = dirac_residual_l2(sec, grid);
        double expect = std::sqrt(1.0 / 8.0) / (t * t);
        REQUIRE(rn.value == Catch::Approx(expect).epsilon(1e-6));
        REQUIRE(rn.value < prev);
        REQUIRE(rn.stable);
        prev = rn.value;
        vals.push_back(rn.value);
    }
    // the decay rate of this configuration is exactly t^{-2}
    double slope = fit_loglog_slope(ts, vals);
    REQUIRE(slope == Catch::Approx(-2.0).margin(0.01));
}

TEST_CASE("dirac_residual_l2: jordan twist decays at the generic t^{-1} rate") {
    PrequantumLift jl = make_lift(jordan_block({1}), 2);
    QuadratureGrid grid;
    std::vector<double> ts{1.0, 4.0, 16.0, 64.0};
    std::vector<double> vals;
    double prev = 1e18;
    for (double t : ts) {
        ThetaSection sec = make_approx_theta_section(jl, scale_adiabatic(jordan_omega(1), t),
                                                     BSPoint{{0, 0}}, 1e-12);
        ResidualNorm rn = dirac_residual_l2(sec, grid);
        REQUIRE(rn.value < prev);
        prev = rn.value;
        vals.push_back(rn.value);
    }
    double slope = fit_loglog_slope(ts, vals);
    REQUIRE(slope > -1.3);
    REQUIRE(slope < -0.7);
}

TEST_CASE("dirac_residual_l2: reduced and direct quadrature agree within 1%") {
    QuadratureGrid grid;
    PrequantumLift kt = make_lift(kodaira_thurston(), 2);
    ThetaSection sec =
        make_approx_theta_section(kt, scale_adiabatic(kt_omega(), 1.0), BSPoint{{0, 0}}, 1e-11);
    ResidualNorm reduced = dirac_residual_l2(sec, grid);
    double direct = dirac_residual_l2_direct(sec, grid);
    REQUIRE(std::abs(direct - reduced.value) / reduced.value < 0.01);

    PrequantumLift jl = make_lift(jordan_block({1}), 2);
    ThetaSection secj = make_approx_theta_section(jl, scale_adiabatic(jordan_omega(1), 1.0),
                                                  BSPoint{{1, 1}}, 1e-11);
    ResidualNorm reducedj = dirac_residual_l2(secj, grid);
    double directj = dirac_residual_l2_direct(secj, grid);
    REQUIRE(std::abs(directj - reducedj.value) / reducedj.value < 0.01);
}

TEST_CASE("adiabatic_sweep") {
    QuadratureGrid grid;
    SweepConfig cfg;
    cfg.lift = make_lift(flat_torus(rat_identity(1)), 1);
    cfg.omega = const_iI(1);
    cfg.bs = BSPoint{{0}};
    cfg.grid = grid;
    cfg.with_pairing = true;
    cfg.pairing_seed = gaussian_seed({0}, 1, 0.5, {2.0, 0.0});

    SweepResult res = adiabatic_sweep(cfg, {1.0, 4.0, 16.0, 64.0});
    auto l1 = res.values_of("l1_norm");
    REQUIRE(l1.size() == 4);
    // ratios halve per quadrupling: t^{-1/2} scaling at n = 1
    for (std::size_t i = 0; i + 1 < l1.size(); ++i)
        REQUIRE(l1[i + 1] / l1[i] == Catch::Approx(0.5).epsilon(1e-7));
    REQUIRE(res.slopes.at("l1_norm") == Catch::Approx(-0.5).margin(1e-6));
    auto perr = res.values_of("pairing_error");
    for (std::size_t i = 0; i + 1 < perr.size(); ++i) REQUIRE(perr[i + 1] < perr[i]);

    // empty list gives an empty result
    SweepResult empty = adiabatic_sweep(cfg, {});
    REQUIRE(empty.records.empty());

    // failures are recorded per t, not thrown: the exact construction on the
    // Kodaira-Thurston Omega violates the commutativity precondition
    SweepConfig bad;
    bad.lift = make_lift(kodaira_thurston(), 2);
    bad.omega = kt_omega();
    bad.bs = BSPoint{{0, 0}};
    bad.approx = false;
    bad.grid = grid;
    SweepResult rbad = adiabatic_sweep(bad, {1.0, 4.0});
    REQUIRE(rbad.records.size() == 2);
    for (const auto& r : rbad.records) REQUIRE_FALSE(r.error.empty());

    REQUIRE_THROWS(adiabatic_sweep(cfg, {4.0, 1.0}));
}
