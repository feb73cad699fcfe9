#pragma once

// Numeric spectral layer: eigendecomposition with eigenvalue grouping and
// spectral idempotents, closed-form theta roots for T_{l,m}, and the
// analytic per-orbit eigenvectors.

#include "starwalk/exact_poly.hpp"
#include "starwalk/graph.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace starwalk {

using Vector = Eigen::VectorXd;

struct SpectralData {
    std::vector<double> eigenvalues;     // distinct, ascending
    std::vector<int> multiplicities;
    std::vector<Matrix> eigenbases;      // orthonormal columns per eigenvalue
    std::vector<Matrix> idempotents;     // E_theta = V V^T

    int n() const { return idempotents.empty() ? 0 : static_cast<int>(idempotents[0].rows()); }
    size_t count() const { return eigenvalues.size(); }
};

// Full decomposition of a symmetric matrix; eigenvalues closer than
// group_tol are merged into one eigenspace.  group_tol sits between the
// solver accuracy and the smallest gap between distinct eigenvalues of
// the graphs in scope.
inline SpectralData eig_symmetric(const Matrix& A, double group_tol = 1e-7) {
    if (A.rows() != A.cols()) throw std::invalid_argument("matrix must be square");
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(A);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
    const Vector& vals = solver.eigenvalues();
    const Matrix& vecs = solver.eigenvectors();
    const int n = static_cast<int>(A.rows());

    SpectralData out;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && vals(end) - vals(end - 1) <= group_tol) ++end;
        const int mult = end - start;
        Matrix V = vecs.middleCols(start, mult);
        double mean = vals.segment(start, mult).mean();
        out.eigenvalues.push_back(mean);
        out.multiplicities.push_back(mult);
        out.eigenbases.push_back(V);
        out.idempotents.push_back(V * V.transpose());
        start = end;
    }
    return out;
}

struct ThetaTriple {
    double theta1, theta2, theta3;  // ascending, all positive
    std::array<double, 3> as_array() const { return {theta1, theta2, theta3}; }
};

namespace detail {
// Trigonometric solution of a cubic with three distinct real roots.
inline std::array<double, 3> real_cubic_roots(double b, double c, double d) {
    // x^3 + b x^2 + c x + d,  x = y - b/3
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (!(disc > 0.0)) throw std::runtime_error("cubic does not have three distinct real roots");
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double phi = std::acos(std::clamp(3.0 * q / (p * r), -1.0, 1.0)) / 3.0;
    std::array<double, 3> roots;
    for (int k = 0; k < 3; ++k)
        roots[k] = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - b / 3.0;
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline double polish_root(const IntPolynomial& p, double x) {
    const IntPolynomial dp = p.derivative();
    for (int i = 0; i < 50; ++i) {
        double f = p.evaluate(x);
        double df = dp.evaluate(x);
        if (df == 0.0) break;
        double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}
}  // namespace detail

// The three positive roots theta_i of q(x;l,m), obtained as square roots
// of the roots of the resolvent cubic Q, then polished against q.
inline ThetaTriple theta_roots(long l, long m) {
    const double s = static_cast<double>(l + m + 3);
    const double t = static_cast<double>(l * m + l + m + 3);
    auto squares = detail::real_cubic_roots(-s, t, -1.0);
    if (squares[0] <= 0.0) throw std::runtime_error("resolvent cubic root not positive");
    const IntPolynomial q = q_polynomial(l, m);
    ThetaTriple out{
        detail::polish_root(q, std::sqrt(squares[0])),
        detail::polish_root(q, std::sqrt(squares[1])),
        detail::polish_root(q, std::sqrt(squares[2])),
    };
    return out;
}

// Roots of the cubic factor f(x;l,l) = x^3 - x^2 - (l+1)x + 1, ascending.
// These are the simple eigenvalues whose eigenvector takes equal values
// at the two coalescence vertices (the beta = +1 branch).
inline std::array<double, 3> f_ll_roots(long l) {
    auto roots = detail::real_cubic_roots(-1.0, -static_cast<double>(l + 1), 1.0);
    const IntPolynomial q = q_polynomial(l, l);
    for (auto& r : roots) r = detail::polish_root(q, r);
    return roots;
}

// l+m-2 eigenvectors for +1 by differencing adjacent branches (pendant and
// middle set to +-1), and the same count for -1 via the bipartite sign
// flip.  Each basis is orthonormalized.  Empty for l = m = 1.
inline std::pair<Matrix, Matrix> eigenvectors_pm1(int l, int m) {
    const GraphSpec g = build_double_subdivided_star(l, m);
    const int n = g.n;
    const int count = l + m - 2;
    if (count == 0) return {Matrix(n, 0), Matrix(n, 0)};

    const int l_mid = 2, l_pen = 2 + l, m_mid = 2 + 2 * l, m_pen = 2 + 2 * l + m;
    Matrix plus(n, count);
    plus.setZero();
    int col = 0;
    for (int j = 0; j + 1 < l; ++j, ++col) {
        plus(l_mid + j, col) = 1.0;
        plus(l_pen + j, col) = 1.0;
        plus(l_mid + j + 1, col) = -1.0;
        plus(l_pen + j + 1, col) = -1.0;
    }
    for (int k = 0; k + 1 < m; ++k, ++col) {
        plus(m_mid + k, col) = 1.0;
        plus(m_pen + k, col) = 1.0;
        plus(m_mid + k + 1, col) = -1.0;
        plus(m_pen + k + 1, col) = -1.0;
    }

    const std::vector<int> color = bipartition(g);
    Matrix minus = plus;
    for (int v = 0; v < n; ++v)
        if (color[v] == 1) minus.row(v) = -minus.row(v);

    auto orthonormalize = [](const Matrix& M) {
        Eigen::HouseholderQR<Matrix> qr(M);
        Matrix Q = qr.householderQ() * Matrix::Identity(M.rows(), M.cols());
        return Q;
    };
    return {orthonormalize(minus), orthonormalize(plus)};
}

// Analytic eigenvector for a simple eigenvalue theta of T_{l,m},
// normalized v(a) = 1.  Per-orbit values: l-side pendants 1/(theta^2-1),
// l-side middles theta/(theta^2-1); the b-side values follow from the
// eigen-equation at the two centers.
inline Vector eigenvector_simple(int l, int m, double theta, int side_parity = 0) {
    if (std::abs(theta * theta - 1.0) < 1e-8)
        throw std::invalid_argument("eigenvalue +-1 is not simple; use eigenvectors_pm1");
    const int n = 2 * l + 2 * m + 2;
    const double denom = theta * theta - 1.0;
    const double x1 = 1.0 / denom;              // l-side pendants
    const double y1 = theta / denom;            // l-side middles
    const double z1 = 1.0;                      // center a
    const double z2 = theta - l * y1;           // center b, from theta z1 = l y1 + z2
    const double w1 = theta * z2 / denom;       // m-side middles
    const double u1 = z2 / denom;               // m-side pendants
    if (side_parity != 0 && l == m) {
        const double beta = z2 / z1;
        if (beta * side_parity < 0.0)
            throw std::invalid_argument("theta does not belong to the requested parity branch");
    }
    Vector v(n);
    v(0) = z1;
    v(1) = z2;
    for (int j = 0; j < l; ++j) {
        v(2 + j) = y1;
        v(2 + l + j) = x1;
    }
    for (int k = 0; k < m; ++k) {
        v(2 + 2 * l + k) = w1;
        v(2 + 2 * l + m + k) = u1;
    }
    return v;
}

// ||v_j||^2 for the three beta = +1 eigenvectors of T_{l,l} normalized
// v_j(a) = 1, ordered by ascending root of f(x;l,l).  The reciprocals
// sum to 1/2.
inline std::array<double, 3> norm_squared_profile(long l) {
    const auto roots = f_ll_roots(l);
    std::array<double, 3> out;
    for (int j = 0; j < 3; ++j) {
        Vector v = eigenvector_simple(static_cast<int>(l), static_cast<int>(l), roots[j], +1);
        out[j] = v.squaredNorm();
    }
    return out;
}

}  // namespace starwalk
