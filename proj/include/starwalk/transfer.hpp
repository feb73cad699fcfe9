#pragma once

// Continuous-time quantum walk layer: transition amplitudes, eigenvalue
// supports, strong cospectrality, the periodicity ratio test, and PGST
// time-sequence searches.  Units are dimensionless (hbar = 1, unit
// coupling), so U(t) = exp(itA).

#include "starwalk/exact_poly.hpp"
#include "starwalk/graph.hpp"
#include "starwalk/spectral.hpp"

#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace starwalk {

using Complex = std::complex<double>;

inline constexpr double kSupportTol = 1e-8;
inline constexpr double kCospecTol = 1e-8;

// (theta, e_a^T E_theta e_b) pairs; enough to evaluate the (a,b) entry of
// U(t) at many times cheaply.
struct TransferCoefficients {
    std::vector<double> thetas;
    std::vector<double> weights;

    Complex entry(double t) const {
        Complex sum(0.0, 0.0);
        for (size_t j = 0; j < thetas.size(); ++j)
            sum += weights[j] * std::polar(1.0, t * thetas[j]);
        return sum;
    }
    double fidelity(double t) const { return std::norm(entry(t)); }
};

inline TransferCoefficients transfer_coefficients(const SpectralData& spec, int a, int b) {
    TransferCoefficients tc;
    for (size_t j = 0; j < spec.count(); ++j) {
        tc.thetas.push_back(spec.eigenvalues[j]);
        tc.weights.push_back(spec.idempotents[j](a, b));
    }
    return tc;
}

// e_a^T U(t) e_b = sum_theta exp(it theta) (E_theta)_{ab}
inline Complex transition_entry(const SpectralData& spec, int a, int b, double t) {
    return transfer_coefficients(spec, a, b).entry(t);
}

struct SupportSet {
    int vertex;
    std::vector<double> eigenvalues;  // those with ||E_theta e_vertex|| > tol
};

inline SupportSet eigenvalue_support(const SpectralData& spec, int a, double tol = kSupportTol) {
    SupportSet s{a, {}};
    for (size_t j = 0; j < spec.count(); ++j)
        if (spec.idempotents[j].col(a).norm() > tol) s.eigenvalues.push_back(spec.eigenvalues[j]);
    return s;
}

enum class SupportSign { Plus, Minus, NotInSupport };

struct CospectralityReport {
    int a = 0, b = 0;
    bool strongly_cospectral = false;
    std::map<double, SupportSign> sign_pattern;
};

// E_theta e_a = +- E_theta e_b for every eigenvalue, or failure.
inline CospectralityReport strong_cospectrality(const SpectralData& spec, int a, int b,
                                                double tol = kCospecTol) {
    CospectralityReport rep{a, b, true, {}};
    for (size_t j = 0; j < spec.count(); ++j) {
        const auto& E = spec.idempotents[j];
        const double na = E.col(a).norm(), nb = E.col(b).norm();
        if (na <= tol && nb <= tol) {
            rep.sign_pattern[spec.eigenvalues[j]] = SupportSign::NotInSupport;
            continue;
        }
        if ((E.col(a) - E.col(b)).norm() <= tol)
            rep.sign_pattern[spec.eigenvalues[j]] = SupportSign::Plus;
        else if ((E.col(a) + E.col(b)).norm() <= tol)
            rep.sign_pattern[spec.eigenvalues[j]] = SupportSign::Minus;
        else
            rep.strongly_cospectral = false;
    }
    return rep;
}

struct RationalApprox {
    double value = 0.0;
    long long p = 0, q = 1;     // best approximation with q <= max_denominator
    double error = 0.0;         // |value - p/q|
    bool rational = false;      // continued fraction terminated with q <= max_denominator
    long long max_denominator = 0;
};

// Continued-fraction convergents of x up to the denominator bound.  The
// expansion of a rational terminates (the fractional remainder collapses
// to numeric noise) while its denominator is still small; an irrational
// keeps producing moderate partial quotients until the bound is passed.
inline RationalApprox rational_approx(double x, long long max_denominator) {
    RationalApprox best;
    best.value = x;
    best.max_denominator = max_denominator;
    long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    best.p = p1;
    best.q = 1;
    best.error = std::abs(x - static_cast<double>(p1));
    best.rational = frac < 1e-9;
    for (int it = 0; it < 64 && !best.rational; ++it) {
        double inv = 1.0 / frac;
        long long a = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_denominator || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double err = std::abs(x - static_cast<double>(p1) / static_cast<double>(q1));
        if (err < best.error) {
            best.p = p1;
            best.q = q1;
            best.error = err;
        }
        // terminated: the remainder is numeric noise
        if (frac < 1e-9 || frac > 1.0 - 1e-9) best.rational = true;
    }
    return best;
}

struct RatioConditionReport {
    RationalApprox theta1_over_theta2;
    bool violated = false;  // no rational approximation found -> periodicity impossible
};

// Periodicity at a vertex with support {+-theta_i} forces theta_1/theta_2
// rational; this reports the numeric evidence against it.
inline RatioConditionReport ratio_condition_violation(const ThetaTriple& thetas,
                                                      long long max_denominator = 1000000) {
    RatioConditionReport rep;
    rep.theta1_over_theta2 = rational_approx(thetas.theta1 / thetas.theta2, max_denominator);
    rep.violated = !rep.theta1_over_theta2.rational;
    return rep;
}

struct PstDecision {
    long l = 0, m = 0;
    bool pst = false;  // always false for this family
    std::string justification;
    RatioConditionReport evidence;
};

// No PST in T_{l,m}: periodicity needs theta_1/theta_2 rational, which the
// exact independence results rule out in both reducibility branches.
inline PstDecision pst_decision(long l, long m) {
    PstDecision d;
    d.l = l;
    d.m = m;
    d.pst = false;
    ReducibilityReport red = reducibility_report(l, m);
    d.justification = red.reducible
                          ? "q reducible: 1,theta1,theta2 independent over Q; ratio condition fails"
                          : "q irreducible: 1,theta1,theta2,theta3 independent over Q; ratio condition fails";
    d.evidence = ratio_condition_violation(theta_roots(l, m));
    return d;
}

struct FidelityTrace {
    int a = 0, b = 0;
    std::vector<double> times;
    std::vector<double> fidelities;
    std::vector<Complex> phases;  // unit phase of the entry where defined, else 0
};

inline FidelityTrace fidelity_trace(const SpectralData& spec, int a, int b,
                                    const std::vector<double>& times) {
    FidelityTrace tr;
    tr.a = a;
    tr.b = b;
    const TransferCoefficients tc = transfer_coefficients(spec, a, b);
    for (double t : times) {
        Complex z = tc.entry(t);
        tr.times.push_back(t);
        tr.fidelities.push_back(std::norm(z));
        tr.phases.push_back(std::abs(z) > 1e-15 ? z / std::abs(z) : Complex(0.0, 0.0));
    }
    return tr;
}

enum class SequenceFamily { FourZMinusOneHalfPi, OddMultiplePi, TwoPiZ, Grid };

inline std::string sequence_family_name(SequenceFamily f) {
    switch (f) {
        case SequenceFamily::FourZMinusOneHalfPi: return "(4Z-1)pi/2";
        case SequenceFamily::OddMultiplePi: return "(2Z+1)pi";
        case SequenceFamily::TwoPiZ: return "2piZ";
        case SequenceFamily::Grid: return "unconstrained-grid";
    }
    return "?";
}

inline double sequence_time(SequenceFamily f, long long k, double grid_step) {
    switch (f) {
        case SequenceFamily::FourZMinusOneHalfPi: return (4.0 * k - 1.0) * std::numbers::pi / 2.0;
        case SequenceFamily::OddMultiplePi: return (2.0 * k + 1.0) * std::numbers::pi;
        case SequenceFamily::TwoPiZ: return 2.0 * std::numbers::pi * k;
        case SequenceFamily::Grid: return grid_step * k;
    }
    return 0.0;
}

struct PgstWitness {
    int a = 0, b = 0;
    SequenceFamily family = SequenceFamily::Grid;
    double best_time = 0.0;
    double best_fidelity = 0.0;
    Complex best_phase{0.0, 0.0};
    // best fidelity seen up to k = 10, 100, 1000, ... (convergence trend)
    std::vector<std::pair<long long, double>> envelope;
};

// Evaluates fidelity along t = family(k), k = 1..k_max (for Grid: a
// uniform grid of step grid_step over [0, k_max * grid_step]) and keeps
// the running best.  Ties go to the smaller time, so disjoint k-range
// searches merge deterministically.
inline PgstWitness pgst_search_sequence(const SpectralData& spec, int a, int b,
                                        SequenceFamily family, long long k_max,
                                        double grid_step = std::numbers::pi / 200.0) {
    PgstWitness w;
    w.a = a;
    w.b = b;
    w.family = family;
    const TransferCoefficients tc = transfer_coefficients(spec, a, b);
    long long next_mark = 10;
    for (long long k = 1; k <= k_max; ++k) {
        const double t = sequence_time(family, k, grid_step);
        const Complex z = tc.entry(t);
        const double f = std::norm(z);
        if (f > w.best_fidelity) {
            w.best_fidelity = f;
            w.best_time = t;
            w.best_phase = std::abs(z) > 1e-15 ? z / std::abs(z) : Complex(0.0, 0.0);
        }
        if (k == next_mark || k == k_max) {
            w.envelope.push_back({k, w.best_fidelity});
            if (k == next_mark) next_mark *= 10;
        }
    }
    return w;
}

// Exhaustive search for q in [1, coeff_bound] minimizing
// max_j dist(q theta_j - alpha_j, Z); small residual means t = q * unit is
// close to the target phases simultaneously.
inline long long kronecker_time_hint(const std::vector<double>& thetas,
                                     const std::vector<double>& alphas, long long coeff_bound) {
    if (thetas.empty() || thetas.size() != alphas.size())
        throw std::invalid_argument("kronecker_time_hint: mismatched inputs");
    long long best_q = 1;
    double best_err = std::numeric_limits<double>::infinity();
    for (long long q = 1; q <= coeff_bound; ++q) {
        double err = 0.0;
        for (size_t j = 0; j < thetas.size(); ++j) {
            double x = q * thetas[j] - alphas[j];
            double d = std::abs(x - std::round(x));
            err = std::max(err, d);
        }
        if (err < best_err) {
            best_err = err;
            best_q = q;
        }
    }
    return best_q;
}

// e_a^T U(t) e_b for T_{l,l} in closed form:
// sum_j 2i sin(t theta_j) / ||v_j||^2 over the roots of f(x;l,l), with
// v_j(a) = v_j(b) = 1.  Purely imaginary for all t.
inline Complex closed_form_fidelity_Tll(long l, double t) {
    const auto roots = f_ll_roots(l);
    const auto norms = norm_squared_profile(l);
    double imag = 0.0;
    for (int j = 0; j < 3; ++j) imag += 2.0 * std::sin(t * roots[j]) / norms[j];
    return Complex(0.0, imag);
}

enum class T2mPair { CD, EF };

// ||v_j||^2 for T_{2,m} with v_j normalized to 1 at c (pendant) or e
// (middle), over the three positive theta roots.
inline std::array<double, 3> t2m_norms(long m, T2mPair pair) {
    const ThetaTriple th = theta_roots(2, m);
    const auto thetas = th.as_array();
    std::array<double, 3> out;
    for (int j = 0; j < 3; ++j) {
        const double theta = thetas[j];
        Vector v = eigenvector_simple(2, static_cast<int>(m), theta);
        const double denom = theta * theta - 1.0;
        const double anchor = (pair == T2mPair::CD) ? 1.0 / denom : theta / denom;
        out[j] = v.squaredNorm() / (anchor * anchor);
    }
    return out;
}

// e_c^T U(t) e_d (or e_e^T U(t) e_f) for T_{2,m} in closed form:
// sum_j 2 cos(t theta_j) / ||v_j||^2 - cos(t)/2, using the exact
// E_{+-1} cross terms of -1/4.  Real for all t.
inline Complex closed_form_fidelity_T2m(long m, T2mPair pair, double t) {
    const auto thetas = theta_roots(2, m).as_array();
    const auto norms = t2m_norms(m, pair);
    double real = 0.0;
    for (int j = 0; j < 3; ++j) real += 2.0 * std::cos(t * thetas[j]) / norms[j];
    real -= 0.5 * std::cos(t);
    return Complex(real, 0.0);
}

}  // namespace starwalk
