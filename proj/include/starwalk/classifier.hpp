#pragma once

// Complete PST/PGST verdict table for T_{l,m}.  Every verdict carries a
// justification code naming the exact-arithmetic fact behind it, and
// PGST-yes verdicts can be backed by a numeric sequence-search witness.

#include "starwalk/exact_poly.hpp"
#include "starwalk/graph.hpp"
#include "starwalk/spectral.hpp"
#include "starwalk/transfer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starwalk {

enum class Justification {
    RatioIrrational,   // periodicity ratio condition fails (PST)
    AutAsymmetry,      // a branch-permuting automorphism separates the pair
    DegreeMismatch,    // endpoints of unequal degree
    QIrreducible,      // q irreducible -> full independence (T_{2,m} yes)
    ParityEven,        // q reducible, even theta-sum (T_{2,m} yes)
    ParityOdd,         // q reducible, odd theta-sum (T_{2,m} no)
    P6Special,         // P_6 mirror-pair result
    TllCoalescence,    // T_{l,l} coalescence-pair result
};

inline std::string justification_code(Justification j) {
    switch (j) {
        case Justification::RatioIrrational: return "RATIO-IRRATIONAL";
        case Justification::AutAsymmetry: return "AUT-ASYMMETRY";
        case Justification::DegreeMismatch: return "DEGREE-MISMATCH";
        case Justification::QIrreducible: return "Q-IRREDUCIBLE";
        case Justification::ParityEven: return "PARITY-EVEN";
        case Justification::ParityOdd: return "PARITY-ODD";
        case Justification::P6Special: return "P6-SPECIAL";
        case Justification::TllCoalescence: return "TLL-COALESCENCE";
    }
    return "?";
}

enum class TransferKind { PST, PGST };

struct TransferVerdict {
    long l = 0, m = 0;
    std::string pair;                     // "a,b", "c,d", "e,f", "3,4", or "all-pairs"
    std::optional<std::pair<int, int>> pair_vertices;  // indices in the canonical build
    TransferKind kind = TransferKind::PST;
    bool yes = false;
    std::optional<SequenceFamily> sequence_family;
    Justification justification = Justification::RatioIrrational;
    std::optional<Complex> target_phase;  // limit phase gamma for yes-verdicts
    std::optional<PgstWitness> witness;
};

namespace detail {
inline TransferVerdict make_verdict(long l, long m, std::string pair,
                                    std::optional<std::pair<int, int>> vertices, TransferKind kind,
                                    bool yes, std::optional<SequenceFamily> family, Justification j,
                                    std::optional<Complex> gamma = std::nullopt) {
    TransferVerdict v;
    v.l = l;
    v.m = m;
    v.pair = std::move(pair);
    v.pair_vertices = vertices;
    v.kind = kind;
    v.yes = yes;
    v.sequence_family = family;
    v.justification = j;
    v.target_phase = gamma;
    return v;
}
}  // namespace detail

// The paper's verdict table.  Parameters are canonicalized so l <= m; the
// T_{2,m} pairs c,d,e,f always live on the 2-branch side, so their vertex
// indices refer to build_double_subdivided_star(2, other).
inline std::vector<TransferVerdict> classify(long l, long m) {
    if (l < 1 || m < 1) throw std::invalid_argument("classify requires l,m >= 1");
    if (l > m) std::swap(l, m);
    std::vector<TransferVerdict> out;
    using detail::make_verdict;

    // PST never occurs, for any pair.
    out.push_back(make_verdict(l, m, "all-pairs", std::nullopt, TransferKind::PST, false,
                               std::nullopt, Justification::RatioIrrational));

    const Complex I(0.0, 1.0);
    if (l == 1 && m == 1) {
        // P_6 mirror pairs, path positions (1,6),(2,5),(3,4); vertex ids in
        // the T_{1,1} numbering.
        const std::pair<int, int> mirror[3] = {{3, 5}, {2, 4}, {0, 1}};
        const char* names[3] = {"1,6", "2,5", "3,4"};
        for (int i = 0; i < 3; ++i)
            out.push_back(make_verdict(l, m, names[i], mirror[i], TransferKind::PGST, true,
                                       SequenceFamily::FourZMinusOneHalfPi,
                                       Justification::P6Special, I));
        return out;
    }

    if (l == m) {
        out.push_back(make_verdict(l, m, "a,b", std::pair<int, int>{0, 1}, TransferKind::PGST,
                                   true, SequenceFamily::FourZMinusOneHalfPi,
                                   Justification::TllCoalescence, I));
    }

    if (l == 2 || m == 2) {
        // T_{2,mm}; labels c,d,e,f per build_double_subdivided_star(2, mm).
        const long mm = (l == 2) ? m : l;
        const GraphSpec g = build_double_subdivided_star(2, static_cast<int>(mm));
        const std::pair<int, int> cd{g.label_or_throw('c'), g.label_or_throw('d')};
        const std::pair<int, int> ef{g.label_or_throw('e'), g.label_or_throw('f')};
        const ReducibilityReport red = reducibility_report(2, mm);
        if (!red.reducible) {
            for (auto [name, verts] : {std::pair{"c,d", cd}, std::pair{"e,f", ef}})
                out.push_back(make_verdict(l, m, name, verts, TransferKind::PGST, true,
                                           SequenceFamily::OddMultiplePi,
                                           Justification::QIrreducible, Complex(1.0, 0.0)));
        } else if (*red.theta_sum_parity == Parity::Even) {
            for (auto [name, verts] : {std::pair{"c,d", cd}, std::pair{"e,f", ef}})
                out.push_back(make_verdict(l, m, name, verts, TransferKind::PGST, true,
                                           SequenceFamily::OddMultiplePi,
                                           Justification::ParityEven, Complex(1.0, 0.0)));
        } else {
            for (auto [name, verts] : {std::pair{"c,d", cd}, std::pair{"e,f", ef}})
                out.push_back(make_verdict(l, m, name, verts, TransferKind::PGST, false,
                                           std::nullopt, Justification::ParityOdd));
        }
        return out;
    }

    if (l != m) {
        // l != m and neither equals 2: no PGST anywhere.
        out.push_back(make_verdict(l, m, "a,b", std::pair<int, int>{0, 1}, TransferKind::PGST,
                                   false, std::nullopt, Justification::DegreeMismatch));
        out.push_back(make_verdict(l, m, "all-pairs", std::nullopt, TransferKind::PGST, false,
                                   std::nullopt, Justification::AutAsymmetry));
    }
    return out;
}

struct SweepCell {
    long l = 0, m = 0;
    std::vector<TransferVerdict> verdicts;
};

struct VerdictTable {
    std::vector<SweepCell> cells;
};

// Attach numeric witnesses: sequence searches for PGST-yes verdicts and a
// dense-grid supremum (reported, not asserted) for PARITY-ODD verdicts.
inline void attach_witnesses(SweepCell& cell, long long k_max,
                             double grid_step = std::numbers::pi / 200.0) {
    std::optional<SpectralData> spec;       // for the (l,m) build
    std::optional<SpectralData> spec_2m;    // for the (2, other) build when needed
    for (auto& v : cell.verdicts) {
        if (v.kind != TransferKind::PGST || !v.pair_vertices) continue;
        const bool t2m_pair = (v.pair == "c,d" || v.pair == "e,f");
        SpectralData* sp;
        if (t2m_pair) {
            if (!spec_2m) {
                long mm = (cell.l == 2) ? cell.m : cell.l;
                spec_2m = eig_symmetric(
                    adjacency(build_double_subdivided_star(2, static_cast<int>(mm))));
            }
            sp = &*spec_2m;
        } else {
            if (!spec)
                spec = eig_symmetric(adjacency(build_double_subdivided_star(
                    static_cast<int>(cell.l), static_cast<int>(cell.m))));
            sp = &*spec;
        }
        auto [a, b] = *v.pair_vertices;
        if (v.yes) {
            v.witness = pgst_search_sequence(*sp, a, b, *v.sequence_family, k_max);
        } else if (v.justification == Justification::ParityOdd) {
            v.witness = pgst_search_sequence(*sp, a, b, SequenceFamily::Grid, k_max, grid_step);
        }
    }
}

inline VerdictTable verdict_table(long l_max, long m_max, bool with_numeric_witnesses,
                                  long long k_max = 100000) {
    if (l_max < 1 || m_max < 1) throw std::invalid_argument("verdict_table bounds must be >= 1");
    VerdictTable table;
    for (long l = 1; l <= l_max; ++l)
        for (long m = 1; m <= m_max; ++m) {
            SweepCell cell{l, m, classify(l, m)};
            if (with_numeric_witnesses) attach_witnesses(cell, k_max);
            table.cells.push_back(std::move(cell));
        }
    return table;
}

}  // namespace starwalk
