#pragma once

#include <Eigen/Dense>
#include <vector>

#include "latq/rational.hpp"

namespace latq {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline RatMat rat_identity(int n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMat rat_zero(int n) { return RatMat(n, RatVec(n, Rat(0))); }

inline RatMat rat_transpose(const RatMat& a) {
    int r = static_cast<int>(a.size()), c = r ? static_cast<int>(a[0].size()) : 0;
    RatMat t(c, RatVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
    int r = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = k ? static_cast<int>(b[0].size()) : 0;
    RatMat m(r, RatVec(c, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
        }
    return m;
}

inline RatVec rat_apply(const RatMat& a, const RatVec& v) {
    int r = static_cast<int>(a.size()), c = static_cast<int>(v.size());
    RatVec out(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline RatVec rat_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVec rat_sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Rat rat_dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat rat_det(RatMat a) {
    int n = static_cast<int>(a.size());
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Exact Gauss-Jordan inverse. Throws on singular input.
inline RatMat rat_inverse(RatMat a) {
    int n = static_cast<int>(a.size());
    RatMat inv = rat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat f = Rat(1) / a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] *= f;
            inv[col][c] *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat g = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= g * a[col][c];
                inv[r][c] -= g * inv[col][c];
            }
        }
    }
    return inv;
}

// Integer matrix power with negative exponents through the exact inverse.
inline RatMat rat_pow(const RatMat& a, long long k) {
    int n = static_cast<int>(a.size());
    RatMat base = k >= 0 ? a : rat_inverse(a);
    long long e = k >= 0 ? k : -k;
    RatMat acc = rat_identity(n);
    while (e > 0) {
        if (e & 1) acc = rat_mul(acc, base);
        base = rat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

inline bool rat_is_symmetric(const RatMat& a) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

inline Eigen::MatrixXd to_eigen(const RatMat& a) {
    int r = static_cast<int>(a.size()), c = r ? static_cast<int>(a[0].size()) : 0;
    Eigen::MatrixXd m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = to_double(a[i][j]);
    return m;
}

inline Eigen::VectorXd to_eigen(const RatVec& v) {
    Eigen::VectorXd out(static_cast<int>(v.size()));
    for (int i = 0; i < out.size(); ++i) out(i) = to_double(v[static_cast<std::size_t>(i)]);
    return out;
}

inline RatVec rat_vec_from(const Eigen::VectorXd& v) {
    RatVec out(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = rat_from_double(v(i));
    return out;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace latq
