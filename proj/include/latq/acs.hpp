#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "latq/group_actions.hpp"
#include "latq/polynomial.hpp"

namespace latq {

// Symmetric n x n matrix of polynomials in the base coordinates with
// positive-definite imaginary part on the working region. Only the upper
// triangle is stored, so symmetry holds by construction.
class OmegaMap {
  public:
    OmegaMap() = default;
    OmegaMap(int n, std::vector<Polynomial> upper) : n_(n), upper_(std::move(upper)) {
        if (static_cast<int>(upper_.size()) != n_ * (n_ + 1) / 2)
            throw std::invalid_argument("OmegaMap: wrong number of entries");
        for (const auto& p : upper_)
            if (p.nvars() != n_) throw std::invalid_argument("OmegaMap: entry arity mismatch");
    }

    static OmegaMap constant(const Eigen::MatrixXcd& m) {
        int n = static_cast<int>(m.rows());
        std::vector<Polynomial> up;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (std::abs(m(i, j) - m(j, i)) > 0)
                    throw std::invalid_argument("OmegaMap::constant: matrix not symmetric");
                up.push_back(Polynomial::constant(
                    n, RatComplex(rat_from_double(m(i, j).real()), rat_from_double(m(i, j).imag()))));
            }
        return OmegaMap(n, std::move(up));
    }

    int n() const { return n_; }

    const Polynomial& at(int i, int j) const {
        if (i > j) std::swap(i, j);
        return upper_[static_cast<std::size_t>(index(i, j))];
    }

    Eigen::MatrixXcd eval(const std::vector<double>& x) const {
        Eigen::MatrixXcd m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j) m(i, j) = m(j, i) = at(i, j).eval(x);
        return m;
    }

    Eigen::MatrixXd eval_im(const std::vector<double>& x) const {
        return eval(x).imag();
    }

    bool constant_entries() const {
        for (const auto& p : upper_)
            if (p.degree() > 0) return false;
        return true;
    }

    bool imag_positive_definite_at(const std::vector<double>& x) const {
        Eigen::LLT<Eigen::MatrixXd> llt(eval_im(x));
        return llt.info() == Eigen::Success;
    }

    OmegaMap map_entries(const std::function<Polynomial(const Polynomial&)>& f) const {
        std::vector<Polynomial> up;
        up.reserve(upper_.size());
        for (const auto& p : upper_) up.push_back(f(p));
        return OmegaMap(n_, std::move(up));
    }

  private:
    int index(int i, int j) const { return i * n_ - i * (i - 1) / 2 + (j - i); }

    int n_ = 0;
    std::vector<Polynomial> upper_;
};

// Point of the Siegel upper half space: Z = X + iY, both symmetric, Y > 0.
struct SiegelPoint {
    Eigen::MatrixXd X;
    Eigen::MatrixXd Y;

    SiegelPoint(Eigen::MatrixXd x, Eigen::MatrixXd y) : X(std::move(x)), Y(std::move(y)) {
        if ((X - X.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
            (Y - Y.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("SiegelPoint: X, Y must be symmetric");
        Eigen::LLT<Eigen::MatrixXd> llt(Y);
        if (llt.info() != Eigen::Success)
            throw std::invalid_argument("SiegelPoint: Y is not positive definite");
    }

    Eigen::MatrixXcd Z() const {
        return X.cast<std::complex<double>>() +
               std::complex<double>(0, 1) * Y.cast<std::complex<double>>();
    }
};

// Omega = (Y + X Y^{-1} X)^{-1} Z Y^{-1}; equals conj(Z)^{-1}.
inline Eigen::MatrixXcd omega_from_Z(const SiegelPoint& zp) {
    Eigen::MatrixXd Yinv = zp.Y.inverse();
    Eigen::MatrixXd M = zp.Y + zp.X * Yinv * zp.X;
    return M.inverse().cast<std::complex<double>>() * zp.Z() * Yinv.cast<std::complex<double>>();
}

struct SiegelFromOmega {
    SiegelPoint Z;
    Eigen::MatrixXd M;  // Y + X Y^{-1} X = (Im Omega)^{-1}
};

inline SiegelFromOmega z_from_omega(const Eigen::MatrixXcd& omega) {
    Eigen::MatrixXd im = omega.imag();
    Eigen::LLT<Eigen::MatrixXd> llt(im);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("z_from_omega: Im Omega is not positive definite");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(omega);
    if (!lu.isInvertible()) throw std::invalid_argument("z_from_omega: Omega is singular");
    Eigen::MatrixXcd Z = lu.inverse().conjugate();
    Eigen::MatrixXd X = 0.5 * (Z.real() + Z.real().transpose().eval());
    Eigen::MatrixXd Y = 0.5 * (Z.imag() + Z.imag().transpose().eval());
    return {SiegelPoint(X, Y), im.inverse()};
}

struct JAndG {
    Eigen::MatrixXd J;
    Eigen::MatrixXd g;
};

// J_Z in the (d/dx, d/dy) frame and the metric g = omega_0(. , J .).
inline JAndG j_and_g_matrices(const SiegelPoint& zp) {
    int n = static_cast<int>(zp.X.rows());
    Eigen::MatrixXd Yinv = zp.Y.inverse();
    Eigen::MatrixXd XYinv = zp.X * Yinv;
    Eigen::MatrixXd M = zp.Y + XYinv * zp.X;
    Eigen::MatrixXd J(2 * n, 2 * n), g(2 * n, 2 * n);
    J.topLeftCorner(n, n) = XYinv;
    J.topRightCorner(n, n) = -M;
    J.bottomLeftCorner(n, n) = Yinv;
    J.bottomRightCorner(n, n) = -Yinv * zp.X;
    g.topLeftCorner(n, n) = Yinv;
    g.topRightCorner(n, n) = -Yinv * zp.X;
    g.bottomLeftCorner(n, n) = -XYinv;
    g.bottomRightCorner(n, n) = M;
    return {J, g};
}

struct AdiabaticOmega {
    OmegaMap base;
    double t = 1.0;
    OmegaMap scaled;  // Re(base) + t i Im(base), exact in the coefficients

    Eigen::MatrixXcd eval(const std::vector<double>& x) const { return scaled.eval(x); }
};

inline AdiabaticOmega scale_adiabatic(const OmegaMap& omega, double t) {
    if (!(t > 0)) throw std::invalid_argument("scale_adiabatic: t must be positive");
    Rat tr = rat_from_double(t);
    OmegaMap scaled = omega.map_entries([&tr](const Polynomial& p) {
        return p.real_part() + p.imag_part().scaled(RatComplex(Rat(0), tr));
    });
    return AdiabaticOmega{omega, t, std::move(scaled)};
}

struct IntegrabilityReport {
    bool integrable = true;
    int i = 0, j = 0, k = 0;  // 1-based witness indices
};

// d_i Omega_jk == d_j Omega_ik, exact on the coefficients.
inline IntegrabilityReport check_integrability(const OmegaMap& omega) {
    int n = omega.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!(omega.at(j, k).derivative(i) == omega.at(i, k).derivative(j)))
                    return {false, i + 1, j + 1, k + 1};
    return {};
}

// ((d_i Omega)(m - N x))_j == ((d_j Omega)(m - N x))_i as polynomials in x.
inline bool check_bs_commutativity(const OmegaMap& omega, const std::vector<long long>& m, int N) {
    int n = omega.n();
    auto contracted = [&](int di, int row) {
        Polynomial acc(n);
        for (int k = 0; k < n; ++k) {
            Polynomial lin = Polynomial::constant(n, RatComplex(Rat(m.at(static_cast<std::size_t>(k))))) +
                             Polynomial::variable(n, k, RatComplex(Rat(-N)));
            acc = acc + omega.at(row, k).derivative(di) * lin;
        }
        return acc;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(contracted(i, j) == contracted(j, i))) return false;
    return true;
}

struct InvarianceReport {
    bool pass = true;
    std::string witness;
};

// tA_gamma Omega(rho_gamma(x)) == Omega(x) A_gamma^{-1} + t(Du_gamma), sampled.
inline InvarianceReport check_gamma_invariance(const OmegaMap& omega, const ActionFamily& fam,
                                               int sample_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> gdist(-3, 3);
    std::uniform_real_distribution<double> xdist(-2.0, 2.0);
    for (int s = 0; s < sample_count; ++s) {
        GroupElement g = GroupElement::zero(fam.n);
        for (int i = 0; i < fam.n; ++i) g.gamma[static_cast<std::size_t>(i)] = gdist(rng);
        std::vector<double> x(static_cast<std::size_t>(fam.n));
        for (auto& v : x) v = xdist(rng);
        auto [aff, fib] = fam.eval(g);
        Eigen::MatrixXd A = to_eigen(aff.A);
        std::vector<double> rx = act_base(fam, g, x);
        Eigen::MatrixXcd lhs = A.transpose().cast<std::complex<double>>() * omega.eval(rx);
        Eigen::MatrixXcd rhs = omega.eval(x) * A.inverse().cast<std::complex<double>>() +
                               to_eigen(fib.U).transpose().cast<std::complex<double>>();
        double res = (lhs - rhs).cwiseAbs().maxCoeff();
        if (res > 1e-10) {
            std::ostringstream os;
            os << "invariance residual " << res << " at gamma=" << g;
            return {false, os.str()};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Catalog Omega maps
// ---------------------------------------------------------------------------

// Kodaira-Thurston: Omega = diag(i, x_1 + i).
inline OmegaMap kt_omega() {
    std::vector<Polynomial> up(3, Polynomial(2));
    up[0] = Polynomial::constant(2, RatComplex::i());
    up[1] = Polynomial(2);
    up[2] = Polynomial::variable(2, 0) + Polynomial::constant(2, RatComplex::i());
    return OmegaMap(2, std::move(up));
}

// Jordan-block n=2 family: Omega = [[i, -i l x_2], [-i l x_2, x_2 + i(l^2 x_2^2 + 1)]].
inline OmegaMap jordan_omega(long long lambda) {
    Polynomial x2 = Polynomial::variable(2, 1);
    std::vector<Polynomial> up(3, Polynomial(2));
    up[0] = Polynomial::constant(2, RatComplex::i());
    up[1] = x2.scaled(RatComplex(Rat(0), Rat(-lambda)));
    up[2] = x2 + (x2 * x2).scaled(RatComplex(Rat(0), Rat(lambda * lambda))) +
            Polynomial::constant(2, RatComplex::i());
    return OmegaMap(2, std::move(up));
}

// Twisted-torus family: Omega_jk = u_jk . C^{-1} x + i delta_jk.
inline OmegaMap ex48_omega(const RatMat& C,
                           const std::vector<std::vector<std::vector<long long>>>& u) {
    int n = static_cast<int>(C.size());
    RatMat Cinv = rat_inverse(C);
    std::vector<Polynomial> up;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            Polynomial p(n);
            for (int i = 0; i < n; ++i) {
                Rat coeff(0);
                for (int l = 0; l < n; ++l)
                    coeff += Rat(u.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(l))) *
                             Cinv[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
                if (coeff != 0) p = p + Polynomial::variable(n, i, RatComplex(coeff));
            }
            if (j == k) p = p + Polynomial::constant(n, RatComplex::i());
            up.push_back(std::move(p));
        }
    return OmegaMap(n, std::move(up));
}

}  // namespace latq
