#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latq/linalg.hpp"

namespace latq {

// Element of the acting group, presented in Z^n coordinates. The group law is
// family-specific and not necessarily componentwise addition.
struct GroupElement {
    std::vector<long long> gamma;

    GroupElement() = default;
    explicit GroupElement(std::vector<long long> g) : gamma(std::move(g)) {}
    static GroupElement zero(int n) { return GroupElement(std::vector<long long>(n, 0)); }

    int dim() const { return static_cast<int>(gamma.size()); }
    bool is_zero() const {
        for (long long v : gamma)
            if (v != 0) return false;
        return true;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.gamma == b.gamma;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.gamma < b.gamma;
    }
    friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
        os << "(";
        for (std::size_t i = 0; i < g.gamma.size(); ++i) os << (i ? "," : "") << g.gamma[i];
        return os << ")";
    }
};

// rho_gamma(x) = A x + c with A in GL_n(Z).
struct AffinePart {
    RatMat A;
    RatVec c;
};

// u_gamma(x) = U x + w. The lift choice of u_gamma to R^n is part of the data.
struct FiberMap {
    RatMat U;
    RatVec w;
};

// F = chart * [0,1)^n + offset.
struct FundamentalDomain {
    RatMat chart;
    RatVec offset;
};

struct ActionFamily {
    int n = 0;
    std::string name;
    std::function<std::pair<AffinePart, FiberMap>(const GroupElement&)> eval;
    std::function<GroupElement(const GroupElement&, const GroupElement&)> law;
    FundamentalDomain fund_box;
    // Closed-form reduction to the fundamental domain; empty means brute search.
    std::function<std::optional<GroupElement>(const std::vector<double>&)> reducer;
    // All gamma with || rho_{gamma^{-1}}(x) - center ||_inf <= radius.
    std::function<std::vector<GroupElement>(const std::vector<double>&, const std::vector<double>&,
                                            double)>
        orbit_enumerator;

    Rat fund_volume() const {
        Rat d = rat_det(fund_box.chart);
        return d < 0 ? Rat(-d) : d;
    }
};

namespace detail {

// Iterates integer points of the box [lo_i, hi_i].
inline bool next_lattice_point(std::vector<long long>& v, const std::vector<long long>& lo,
                               const std::vector<long long>& hi) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < hi[i]) {
            ++v[i];
            return true;
        }
        v[i] = lo[i];
    }
    return false;
}

// Integer bounding box of M * [lo, hi] for an interval box in R^n.
inline void image_box_bounds(const Eigen::MatrixXd& M, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi, std::vector<long long>& out_lo,
                             std::vector<long long>& out_hi) {
    int n = static_cast<int>(M.rows());
    out_lo.assign(n, 0);
    out_hi.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        double a = 0, b = 0;
        for (int j = 0; j < M.cols(); ++j) {
            double p = M(i, j) * lo(j), q = M(i, j) * hi(j);
            a += std::min(p, q);
            b += std::max(p, q);
        }
        out_lo[i] = static_cast<long long>(std::floor(a - 1e-9));
        out_hi[i] = static_cast<long long>(std::ceil(b + 1e-9));
    }
}

inline std::vector<double> affine_apply(const Eigen::MatrixXd& A, const Eigen::VectorXd& c,
                                        const std::vector<double>& x) {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::VectorXd r = A * xv + c;
    return to_std(r);
}

}  // namespace detail

inline GroupElement compose(const ActionFamily& fam, const GroupElement& g1,
                            const GroupElement& g2) {
    if (g1.dim() != fam.n || g2.dim() != fam.n)
        throw std::invalid_argument("compose: dimension mismatch");
    return fam.law(g1, g2);
}

inline std::vector<double> act_base(const ActionFamily& fam, const GroupElement& g,
                                    const std::vector<double>& x) {
    auto [aff, fib] = fam.eval(g);
    return detail::affine_apply(to_eigen(aff.A), to_eigen(aff.c), x);
}

inline RatVec act_base_exact(const ActionFamily& fam, const GroupElement& g, const RatVec& x) {
    auto [aff, fib] = fam.eval(g);
    return rat_add(rat_apply(aff.A, x), aff.c);
}

inline std::vector<double> fiber_map_eval(const FiberMap& fib, const std::vector<double>& x) {
    return detail::affine_apply(to_eigen(fib.U), to_eigen(fib.w), x);
}

// total-space action: (x, y) -> (A x + c, tA^{-1} y + u(x) mod Z^n).
inline std::pair<std::vector<double>, std::vector<double>> act_total(const ActionFamily& fam,
                                                                     const GroupElement& g,
                                                                     const std::vector<double>& x,
                                                                     const std::vector<double>& y) {
    auto [aff, fib] = fam.eval(g);
    std::vector<double> xp = detail::affine_apply(to_eigen(aff.A), to_eigen(aff.c), x);
    Eigen::MatrixXd At_inv = to_eigen(rat_transpose(rat_inverse(aff.A)));
    std::vector<double> u = fiber_map_eval(fib, x);
    Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    Eigen::VectorXd yp = At_inv * yv;
    std::vector<double> out(static_cast<std::size_t>(fam.n));
    for (int i = 0; i < fam.n; ++i) {
        double v = yp(i) + u[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = v - std::floor(v);
    }
    return {xp, out};
}

struct ReduceResult {
    GroupElement gamma;
    std::vector<double> x0;
};

inline std::optional<ReduceResult> reduce_to_fundamental(const ActionFamily& fam,
                                                         const std::vector<double>& x,
                                                         long long brute_radius = 4) {
    std::optional<GroupElement> g;
    if (fam.reducer) {
        g = fam.reducer(x);
    } else {
        // Fallback: scan ||gamma||_inf <= brute_radius for a translate landing in F.
        Eigen::MatrixXd chart_inv = to_eigen(fam.fund_box.chart).inverse();
        Eigen::VectorXd off = to_eigen(fam.fund_box.offset);
        std::vector<long long> lo(static_cast<std::size_t>(fam.n), -brute_radius);
        std::vector<long long> hi(static_cast<std::size_t>(fam.n), brute_radius);
        std::vector<long long> cur = lo;
        do {
            GroupElement cand{cur};
            auto [aff, fib] = fam.eval(cand);
            Eigen::MatrixXd A = to_eigen(aff.A);
            Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
            Eigen::VectorXd x0 = A.inverse() * (xv - to_eigen(aff.c));
            Eigen::VectorXd t = chart_inv * (x0 - off);
            bool inside = true;
            for (int i = 0; i < fam.n; ++i)
                if (t(i) < -1e-12 || t(i) >= 1.0 - 1e-12) inside = false;
            if (inside) {
                g = cand;
                break;
            }
        } while (detail::next_lattice_point(cur, lo, hi));
    }
    if (!g) return std::nullopt;
    auto [aff, fib] = fam.eval(*g);
    Eigen::MatrixXd A = to_eigen(aff.A);
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::VectorXd x0 = A.inverse() * (xv - to_eigen(aff.c));
    return ReduceResult{*g, to_std(x0)};
}

// Exact variant used for lattice/BS bookkeeping.
inline std::optional<std::pair<GroupElement, RatVec>> reduce_to_fundamental_exact(
    const ActionFamily& fam, const RatVec& x) {
    std::vector<double> xd(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
    auto red = reduce_to_fundamental(fam, xd);
    if (!red) return std::nullopt;
    auto [aff, fib] = fam.eval(red->gamma);
    RatVec x0 = rat_apply(rat_inverse(aff.A), rat_sub(x, aff.c));
    return std::make_pair(red->gamma, std::move(x0));
}

struct AxiomReport {
    bool pass = true;
    std::string witness;
};

// Samples the group-law identities for (A, c), the u-cocycle mod Z^n, the
// unimodularity of A and the symmetry of tA U.
inline AxiomReport verify_action_axioms(const ActionFamily& fam, int sample_count,
                                        std::uint64_t seed) {
    if (sample_count < 1) throw std::invalid_argument("verify_action_axioms: sample_count >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> gdist(-3, 3);
    std::uniform_real_distribution<double> xdist(-2.0, 2.0);
    AxiomReport rep;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.witness = msg;
    };
    for (int s = 0; s < sample_count && rep.pass; ++s) {
        GroupElement g1 = GroupElement::zero(fam.n), g2 = GroupElement::zero(fam.n);
        for (int i = 0; i < fam.n; ++i) {
            g1.gamma[static_cast<std::size_t>(i)] = gdist(rng);
            g2.gamma[static_cast<std::size_t>(i)] = gdist(rng);
        }
        std::vector<double> x(static_cast<std::size_t>(fam.n));
        for (auto& v : x) v = xdist(rng);

        auto [aff1, fib1] = fam.eval(g1);
        auto [aff2, fib2] = fam.eval(g2);
        GroupElement g12 = fam.law(g1, g2);
        auto [aff12, fib12] = fam.eval(g12);

        Rat det1 = rat_det(aff1.A);
        if (det1 != 1 && det1 != -1) {
            std::ostringstream os;
            os << "det A != +-1 at gamma=" << g1;
            fail(os.str());
            break;
        }
        if (!rat_is_symmetric(rat_mul(rat_transpose(aff1.A), fib1.U))) {
            std::ostringstream os;
            os << "tA.U not symmetric at gamma=" << g1;
            fail(os.str());
            break;
        }
        if (rat_mul(aff1.A, aff2.A) != aff12.A) {
            std::ostringstream os;
            os << "A cocycle fails at gamma1=" << g1 << " gamma2=" << g2;
            fail(os.str());
            break;
        }
        if (rat_add(rat_apply(aff1.A, aff2.c), aff1.c) != aff12.c) {
            std::ostringstream os;
            os << "c cocycle fails at gamma1=" << g1 << " gamma2=" << g2;
            fail(os.str());
            break;
        }
        // u_{g1 g2}(x) = tA_{g1}^{-1} u_{g2}(x) + u_{g1}(rho_{g2}(x)) mod Z^n
        std::vector<double> lhs = fiber_map_eval(fib12, x);
        Eigen::MatrixXd At1_inv = to_eigen(rat_transpose(rat_inverse(aff1.A)));
        std::vector<double> u2 = fiber_map_eval(fib2, x);
        Eigen::Map<const Eigen::VectorXd> u2v(u2.data(), static_cast<Eigen::Index>(u2.size()));
        std::vector<double> rho2x = detail::affine_apply(to_eigen(aff2.A), to_eigen(aff2.c), x);
        std::vector<double> u1r = fiber_map_eval(fib1, rho2x);
        Eigen::VectorXd rhs = At1_inv * u2v;
        double worst = 0;
        for (int i = 0; i < fam.n; ++i) {
            double d = lhs[static_cast<std::size_t>(i)] - rhs(i) - u1r[static_cast<std::size_t>(i)];
            worst = std::max(worst, std::abs(d - std::round(d)));
        }
        if (worst > 1e-10) {
            std::ostringstream os;
            os << "u cocycle residual " << worst << " at gamma1=" << g1 << " gamma2=" << g2;
            fail(os.str());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Catalog families
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<GroupElement> enumerate_translation_orbit(const RatMat& C,
                                                             const std::vector<double>& x,
                                                             const std::vector<double>& center,
                                                             double radius) {
    // rho_{gamma^{-1}}(x) = x - C gamma, so C gamma must land in x - center -+ r.
    int n = static_cast<int>(x.size());
    Eigen::MatrixXd Cinv = to_eigen(rat_inverse(C));
    Eigen::VectorXd lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo(i) = x[static_cast<std::size_t>(i)] - center[static_cast<std::size_t>(i)] - radius;
        hi(i) = x[static_cast<std::size_t>(i)] - center[static_cast<std::size_t>(i)] + radius;
    }
    std::vector<long long> blo, bhi;
    image_box_bounds(Cinv, lo, hi, blo, bhi);
    Eigen::MatrixXd Cd = to_eigen(C);
    std::vector<GroupElement> out;
    std::vector<long long> cur = blo;
    do {
        Eigen::VectorXd g(n);
        for (int i = 0; i < n; ++i) g(i) = static_cast<double>(cur[static_cast<std::size_t>(i)]);
        Eigen::VectorXd shift = Cd * g;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            double xt = x[static_cast<std::size_t>(i)] - shift(i);
            if (std::abs(xt - center[static_cast<std::size_t>(i)]) > radius + 1e-12) ok = false;
        }
        if (ok) out.push_back(GroupElement{cur});
    } while (next_lattice_point(cur, blo, bhi));
    return out;
}

inline std::optional<GroupElement> reduce_translation(const RatMat& C,
                                                      const std::vector<double>& x) {
    Eigen::MatrixXd Cinv = to_eigen(rat_inverse(C));
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::VectorXd t = Cinv * xv;
    std::vector<long long> g(x.size());
    for (int i = 0; i < t.size(); ++i)
        g[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(t(i) + 1e-13));
    return GroupElement{g};
}

}  // namespace detail

// Example "B times T": pure translations by the columns of C, trivial fiber map.
inline ActionFamily flat_torus(const RatMat& C) {
    int n = static_cast<int>(C.size());
    if (rat_det(C) == 0) throw std::invalid_argument("flat_torus: C is singular");
    ActionFamily fam;
    fam.n = n;
    fam.name = "flat_torus";
    fam.eval = [C, n](const GroupElement& g) {
        RatVec gv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) gv[static_cast<std::size_t>(i)] = g.gamma.at(static_cast<std::size_t>(i));
        return std::make_pair(AffinePart{rat_identity(n), rat_apply(C, gv)},
                              FiberMap{rat_zero(n), RatVec(static_cast<std::size_t>(n), Rat(0))});
    };
    fam.law = [](const GroupElement& a, const GroupElement& b) {
        GroupElement r = a;
        for (std::size_t i = 0; i < r.gamma.size(); ++i) r.gamma[i] += b.gamma[i];
        return r;
    };
    fam.fund_box = {C, RatVec(static_cast<std::size_t>(n), Rat(0))};
    fam.reducer = [C](const std::vector<double>& x) { return detail::reduce_translation(C, x); };
    fam.orbit_enumerator = [C](const std::vector<double>& x, const std::vector<double>& c,
                               double r) { return detail::enumerate_translation_orbit(C, x, c, r); };
    return fam;
}

// Example "Ex4.8": integer translation lattice C with linear fiber twist
// u_gamma(x) = [u_jk . gamma] x, where the integer vectors satisfy u_jk = u_kj.
inline ActionFamily twisted_torus(const RatMat& C,
                                  const std::vector<std::vector<std::vector<long long>>>& u) {
    int n = static_cast<int>(C.size());
    if (rat_det(C) == 0) throw std::invalid_argument("twisted_torus: C is singular");
    if (static_cast<int>(u.size()) != n) throw std::invalid_argument("twisted_torus: u must be n x n");
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (static_cast<int>(u[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].size()) != n)
                throw std::invalid_argument("twisted_torus: u_jk must have length n");
            if (u[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
                u[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                throw std::invalid_argument("twisted_torus: u_jk != u_kj");
        }
    ActionFamily fam;
    fam.n = n;
    fam.name = "twisted_torus";
    fam.eval = [C, u, n](const GroupElement& g) {
        RatVec gv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) gv[static_cast<std::size_t>(i)] = g.gamma.at(static_cast<std::size_t>(i));
        RatMat U = rat_zero(n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                long long dot = 0;
                for (int i = 0; i < n; ++i)
                    dot += u[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]
                            [static_cast<std::size_t>(i)] *
                           g.gamma.at(static_cast<std::size_t>(i));
                U[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = dot;
            }
        return std::make_pair(AffinePart{rat_identity(n), rat_apply(C, gv)},
                              FiberMap{U, RatVec(static_cast<std::size_t>(n), Rat(0))});
    };
    fam.law = [](const GroupElement& a, const GroupElement& b) {
        GroupElement r = a;
        for (std::size_t i = 0; i < r.gamma.size(); ++i) r.gamma[i] += b.gamma[i];
        return r;
    };
    fam.fund_box = {C, RatVec(static_cast<std::size_t>(n), Rat(0))};
    fam.reducer = [C](const std::vector<double>& x) { return detail::reduce_translation(C, x); };
    fam.orbit_enumerator = [C](const std::vector<double>& x, const std::vector<double>& c,
                               double r) { return detail::enumerate_translation_orbit(C, x, c, r); };
    return fam;
}

// Example "Kodaira-Thurston": n = 2, unit translations, u_gamma(x) = (0, gamma_1 x_2).
inline ActionFamily kodaira_thurston() {
    std::vector<std::vector<std::vector<long long>>> u(
        2, std::vector<std::vector<long long>>(2, std::vector<long long>(2, 0)));
    u[1][1] = {1, 0};  // u_22 = e_1, so (U_gamma)_{22} = gamma_1
    ActionFamily fam = twisted_torus(rat_identity(2), u);
    fam.name = "kodaira_thurston";
    return fam;
}

// Example "Jordan block2": A_gamma = Lambda^{gamma_n}, c_gamma = gamma,
// u_gamma(x) = gamma_n x_n e_n, with Lambda the unit upper bidiagonal matrix.
inline ActionFamily jordan_block(const std::vector<long long>& lambda) {
    int n = static_cast<int>(lambda.size()) + 1;
    if (n < 2) throw std::invalid_argument("jordan_block: need n >= 2");
    RatMat L = rat_identity(n);
    for (int i = 0; i + 1 < n; ++i) L[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = lambda[static_cast<std::size_t>(i)];
    ActionFamily fam;
    fam.n = n;
    fam.name = "jordan_block";
    fam.eval = [L, n](const GroupElement& g) {
        RatMat A = rat_pow(L, g.gamma.at(static_cast<std::size_t>(n) - 1));
        RatVec c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = g.gamma.at(static_cast<std::size_t>(i));
        RatMat U = rat_zero(n);
        U[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1] =
            g.gamma.at(static_cast<std::size_t>(n) - 1);
        return std::make_pair(AffinePart{std::move(A), std::move(c)},
                              FiberMap{std::move(U), RatVec(static_cast<std::size_t>(n), Rat(0))});
    };
    fam.law = [L, n](const GroupElement& a, const GroupElement& b) {
        RatMat Ak = rat_pow(L, a.gamma.at(static_cast<std::size_t>(n) - 1));
        GroupElement r = GroupElement::zero(n);
        for (int i = 0; i < n; ++i) {
            Rat v(0);
            for (int j = 0; j < n; ++j)
                v += Ak[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b.gamma.at(static_cast<std::size_t>(j));
            v += a.gamma.at(static_cast<std::size_t>(i));
            r.gamma[static_cast<std::size_t>(i)] = v.convert_to<long long>();
        }
        return r;
    };
    fam.fund_box = {rat_identity(n), RatVec(static_cast<std::size_t>(n), Rat(0))};
    fam.reducer = [L, n](const std::vector<double>& x) -> std::optional<GroupElement> {
        // Last coordinate of rho_{gamma^{-1}}(x) is x_n - gamma_n; the remaining
        // coordinates follow by back substitution through Lambda^{-gamma_n}.
        std::vector<long long> g(static_cast<std::size_t>(n), 0);
        g[static_cast<std::size_t>(n) - 1] =
            static_cast<long long>(std::floor(x[static_cast<std::size_t>(n) - 1] + 1e-13));
        Eigen::MatrixXd P = to_eigen(rat_pow(L, -g[static_cast<std::size_t>(n) - 1]));
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
        Eigen::VectorXd v = P * xv;
        for (int i = n - 2; i >= 0; --i) {
            double acc = v(i);
            for (int j = i + 1; j < n; ++j) acc -= P(i, j) * static_cast<double>(g[static_cast<std::size_t>(j)]);
            g[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(acc + 1e-13));
        }
        return GroupElement{g};
    };
    fam.orbit_enumerator = [L, n](const std::vector<double>& x, const std::vector<double>& center,
                                  double r) {
        std::vector<GroupElement> out;
        double kn_lo = x[static_cast<std::size_t>(n) - 1] - center[static_cast<std::size_t>(n) - 1] - r;
        double kn_hi = x[static_cast<std::size_t>(n) - 1] - center[static_cast<std::size_t>(n) - 1] + r;
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
        for (long long kn = static_cast<long long>(std::floor(kn_lo));
             kn <= static_cast<long long>(std::ceil(kn_hi)); ++kn) {
            Eigen::MatrixXd P = to_eigen(rat_pow(L, -kn));     // Lambda^{-gamma_n}
            Eigen::MatrixXd Pi = to_eigen(rat_pow(L, kn));     // Lambda^{gamma_n}
            // Need P(x - gamma) in center -+ r, i.e. P gamma in [P x - center -+ r].
            Eigen::VectorXd lo(n), hi(n);
            Eigen::VectorXd px = P * xv;
            for (int i = 0; i < n; ++i) {
                lo(i) = px(i) - center[static_cast<std::size_t>(i)] - r;
                hi(i) = px(i) - center[static_cast<std::size_t>(i)] + r;
            }
            std::vector<long long> blo, bhi;
            detail::image_box_bounds(Pi, lo, hi, blo, bhi);
            blo[static_cast<std::size_t>(n) - 1] = bhi[static_cast<std::size_t>(n) - 1] = kn;
            std::vector<long long> cur = blo;
            do {
                Eigen::VectorXd g(n);
                for (int i = 0; i < n; ++i) g(i) = static_cast<double>(cur[static_cast<std::size_t>(i)]);
                Eigen::VectorXd xt = P * (xv - g);
                bool ok = true;
                for (int i = 0; i < n; ++i)
                    if (std::abs(xt(i) - center[static_cast<std::size_t>(i)]) > r + 1e-12) ok = false;
                if (ok) out.push_back(GroupElement{cur});
            } while (detail::next_lattice_point(cur, blo, bhi));
        }
        return out;
    };
    return fam;
}

struct CatalogParams {
    RatMat C;
    std::vector<std::vector<std::vector<long long>>> u;
    std::vector<long long> lambda;
};

inline ActionFamily catalog(const std::string& name, const CatalogParams& p) {
    if (name == "flat_torus") return flat_torus(p.C);
    if (name == "kodaira_thurston") return kodaira_thurston();
    if (name == "twisted_torus") return twisted_torus(p.C, p.u);
    if (name == "jordan_block") return jordan_block(p.lambda);
    throw std::invalid_argument("catalog: unknown family '" + name + "'");
}

}  // namespace latq
