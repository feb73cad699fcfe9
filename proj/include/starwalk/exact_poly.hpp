#pragma once

// Exact integer-polynomial layer for the T_{l,m} family: characteristic
// polynomials, the reducibility status of the even sextic factor q(x),
// and the integer theta-sum invariant consumed by the classifier.

#include "starwalk/int_poly.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace starwalk {

enum class Parity { Even, Odd };

struct ReducibilityReport {
    bool reducible = false;
    std::optional<IntPolynomial> cubic_factor;  // monic cubic f with q = -f(x)f(-x)
    std::optional<mpz_class> theta_sum;         // -[x^2 coefficient of f]
    std::optional<Parity> theta_sum_parity;
};

// q(x) = x^6 - (l+m+3) x^4 + (lm+l+m+3) x^2 - 1
inline IntPolynomial q_polynomial(long l, long m) {
    if (l < 1 || m < 1) throw std::invalid_argument("q_polynomial requires l,m >= 1");
    mpz_class s = mpz_class(l) + m + 3;
    mpz_class t = mpz_class(l) * m + l + m + 3;
    return IntPolynomial(std::vector<mpz_class>{-1, 0, t, 0, -s, 0, 1});
}

// Q(x) = x^3 - (l+m+3) x^2 + (lm+l+m+3) x - 1, with Q(x^2) = q(x)
inline IntPolynomial Q_polynomial(long l, long m) {
    if (l < 1 || m < 1) throw std::invalid_argument("Q_polynomial requires l,m >= 1");
    mpz_class s = mpz_class(l) + m + 3;
    mpz_class t = mpz_class(l) * m + l + m + 3;
    return IntPolynomial(std::vector<mpz_class>{-1, t, -s, 1});
}

// (x^2 - 1)^{l+m-2} q(x), degree 2l+2m+2
inline IntPolynomial characteristic_polynomial_T(long l, long m) {
    IntPolynomial x2m1{-1, 0, 1};
    return x2m1.pow(static_cast<int>(l + m - 2)) * q_polynomial(l, m);
}

// x (x^2-1)^{l-1} (x^2 - l - 1), degree 2l+1
inline IntPolynomial characteristic_polynomial_SK(long l) {
    if (l < 1) throw std::invalid_argument("characteristic_polynomial_SK requires l >= 1");
    IntPolynomial x{0, 1};
    IntPolynomial x2m1{-1, 0, 1};
    IntPolynomial shifted(std::vector<mpz_class>{mpz_class(-l - 1), 0, 1});
    return x * x2m1.pow(static_cast<int>(l - 1)) * shifted;
}

// Exact check q(x) == -f(x) f(-x) for a monic cubic f.
inline bool verify_factorization(const IntPolynomial& q, const IntPolynomial& f) {
    if (f.degree() != 3 || f.leading() != 1)
        throw std::invalid_argument("verify_factorization expects a monic cubic");
    return q == -(f * f.negate_argument());
}

namespace detail {
// Prefer positive theta-sum: the mirror factor -f(-x) negates it, and the
// sum is never zero for this family.
inline IntPolynomial canonical_cubic(const IntPolynomial& f) {
    if (-f.coeff(2) < 0) return -f.negate_argument();
    return f;
}

inline ReducibilityReport report_from_cubic(const IntPolynomial& f) {
    ReducibilityReport rep;
    rep.reducible = true;
    IntPolynomial g = canonical_cubic(f);
    rep.cubic_factor = g;
    mpz_class sum = -g.coeff(2);
    rep.theta_sum = sum;
    rep.theta_sum_parity = mpz_even_p(sum.get_mpz_t()) ? Parity::Even : Parity::Odd;
    return rep;
}
}  // namespace detail

// Decides whether q(x) factors over Z.  Any factorization has the shape
// q = -f(x) f(-x) with f = x^3 + a x^2 + b x + c monic:  linear and
// quadratic factors are excluded because Q(x) has no rational root
// (Q(1) = lm, Q(-1) = -(lm+2l+2m+8)) and the roots of the even q pair up
// as +-theta.  Expanding gives
//   -f(x) f(-x) = x^6 + (2b - a^2) x^4 + (b^2 - 2ac) x^2 - c^2,
// so c in {-1, 1}, b = (a^2 - (l+m+3)) / 2, and the x^2 coefficient pins a.
// Search bound: |a| = |theta_1+theta_2+theta_3| <= 3 max|theta_i| and
// max theta_i^2 < l+m+3.
inline ReducibilityReport reducibility_report(long l, long m) {
    const IntPolynomial q = q_polynomial(l, m);
    const mpz_class s = mpz_class(l) + m + 3;
    const mpz_class t = mpz_class(l) * m + l + m + 3;
    const long abound = static_cast<long>(std::ceil(3.0 * std::sqrt(static_cast<double>(l + m + 3))));
    for (long a = -abound; a <= abound; ++a) {
        mpz_class a2 = mpz_class(a) * a;
        mpz_class diff = a2 - s;
        if (!mpz_even_p(diff.get_mpz_t())) continue;
        mpz_class b = diff / 2;
        for (int c : {-1, 1}) {
            if (b * b - 2 * mpz_class(a) * c != t) continue;
            IntPolynomial f(std::vector<mpz_class>{mpz_class(c), b, mpz_class(a), 1});
            if (verify_factorization(q, f)) return detail::report_from_cubic(f);
        }
    }
    return {};
}

// Numeric real roots of a squarefree real-rooted polynomial: companion
// matrix eigenvalues polished by Newton iteration.
inline std::vector<double> real_roots(const IntPolynomial& p) {
    const int d = p.degree();
    if (d < 1) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    const double lead = p.leading().get_d();
    for (int i = 0; i < d; ++i) C(i, d - 1) = -p.coeff(i).get_d() / lead;
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    const IntPolynomial dp = p.derivative();
    std::vector<double> roots;
    for (int i = 0; i < d; ++i) {
        double x = es.eigenvalues()(i).real();
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double fx = p.evaluate(x);
            double dfx = dp.evaluate(x);
            if (dfx == 0.0) break;
            double step = fx / dfx;
            x -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) {
                converged = true;
                break;
            }
        }
        if (!converged && std::abs(p.evaluate(x)) > 1e-6)
            throw std::runtime_error("root refinement did not converge");
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Independent factorization oracle: compute the roots numerically, try
// every root subset of size <= 3 as a candidate monic factor, round its
// coefficients to integers and verify by exact division.
inline ReducibilityReport numeric_factor_oracle(const IntPolynomial& q, double precision = 1e-6) {
    const std::vector<double> roots = real_roots(q);
    const int n = static_cast<int>(roots.size());
    ReducibilityReport rep;
    for (int mask = 1; mask < (1 << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > 3 || size == n) continue;
        // monic polynomial with the selected roots
        std::vector<double> coef{1.0};
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1 << i))) continue;
            coef.push_back(0.0);
            for (int k = static_cast<int>(coef.size()) - 1; k >= 1; --k)
                coef[k] = coef[k] - roots[i] * coef[k - 1];
        }
        std::vector<mpz_class> ic(coef.size());
        bool integral = true;
        for (size_t k = 0; k < coef.size(); ++k) {
            double r = std::round(coef[k]);
            if (std::abs(coef[k] - r) > precision) {
                integral = false;
                break;
            }
            ic[coef.size() - 1 - k] = mpz_class(static_cast<long>(r));
        }
        if (!integral) continue;
        IntPolynomial cand(std::move(ic));
        if (cand.degree() < 1) continue;
        if (!q.divide_exact(cand)) continue;
        rep.reducible = true;
        if (cand.degree() == 3 && cand.leading() == 1 && verify_factorization(q, cand))
            return detail::report_from_cubic(cand);
    }
    return rep;
}

// disc(q) must be the square of an integer for this family (it equals
// 64 D^2 with D the square root of disc(Q)).
inline bool discriminant_is_square(long l, long m) {
    mpz_class d = discriminant(q_polynomial(l, m));
    if (d < 0) return false;
    return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

}  // namespace starwalk
