#pragma once

// Dense univariate polynomials with arbitrary-precision integer
// coefficients (GMP).  Coefficient index = degree.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace starwalk {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.push_back(mpz_class(v));
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const mpz_class& v) { return IntPolynomial(std::vector<mpz_class>{v}); }
    // c * x^k
    static IntPolynomial monomial(const mpz_class& c, int k) {
        std::vector<mpz_class> v(k + 1, mpz_class(0));
        v[k] = c;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    const mpz_class& leading() const {
        static const mpz_class z(0);
        return c_.empty() ? z : c_.back();
    }
    mpz_class coeff(int k) const {
        if (k < 0 || k > degree()) return mpz_class(0);
        return c_[k];
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-() const {
        std::vector<mpz_class> r(c_);
        for (auto& v : r) v = -v;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial pow(int e) const {
        IntPolynomial r = constant(1);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // p(q(x))
    IntPolynomial compose(const IntPolynomial& q) const {
        IntPolynomial r;
        for (int k = degree(); k >= 0; --k) r = r * q + constant(c_[k]);
        return r;
    }

    // p(-x)
    IntPolynomial negate_argument() const {
        std::vector<mpz_class> r(c_);
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial derivative() const {
        if (degree() <= 0) return zero();
        std::vector<mpz_class> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
        return IntPolynomial(std::move(r));
    }

    mpz_class evaluate(const mpz_class& x) const {
        mpz_class r(0);
        for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
        return r;
    }

    double evaluate(double x) const {
        double r = 0.0;
        for (int k = degree(); k >= 0; --k) r = r * x + c_[k].get_d();
        return r;
    }

    // Exact quotient if the division leaves no remainder over Z.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (is_zero()) return zero();
        if (degree() < d.degree()) return std::nullopt;
        std::vector<mpz_class> rem(c_);
        std::vector<mpz_class> quot(degree() - d.degree() + 1, mpz_class(0));
        for (int k = degree() - d.degree(); k >= 0; --k) {
            mpz_class lead = rem[k + d.degree()];
            if (lead == 0) continue;
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), d.leading().get_mpz_t());
            if (r != 0) return std::nullopt;
            quot[k] = q;
            for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= q * d.coeff(i);
        }
        for (const auto& v : rem)
            if (v != 0) return std::nullopt;
        return IntPolynomial(std::move(quot));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == 0) continue;
            mpz_class a = c_[k];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            mpz_class mag = abs(a);
            if (mag != 1 || k == 0) os << mag.get_str();
            if (k > 0) os << "x";
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
inline mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
    const int dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) return mpz_class(0);
    const int n = dp + dq;
    std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j <= dp; ++j) M[i][i + j] = p.coeff(dp - j);
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j <= dq; ++j) M[dq + i][i + j] = q.coeff(dq - j);

    mpz_class sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return mpz_class(0);
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_class d;
                mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = d;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p)
inline mpz_class discriminant(const IntPolynomial& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    mpz_class res = resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((d * (d - 1) / 2) % 2 == 1) out = -out;
    return out;
}

}  // namespace starwalk
