#include "starwalk/classifier.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace starwalk;

namespace {
const TransferVerdict* find_verdict(const std::vector<TransferVerdict>& vs, TransferKind kind,
                                    const std::string& pair) {
    for (const auto& v : vs)
        if (v.kind == kind && v.pair == pair) return &v;
    return nullptr;
}
}  // namespace

TEST_CASE("classify emits the PST-no verdict everywhere") {
    for (auto [l, m] : {std::pair{1, 1}, {2, 2}, {3, 5}, {2, 7}, {6, 6}}) {
        auto vs = classify(l, m);
        const auto* pst = find_verdict(vs, TransferKind::PST, "all-pairs");
        REQUIRE(pst != nullptr);
        CHECK(!pst->yes);
        CHECK(pst->justification == Justification::RatioIrrational);
    }
}

TEST_CASE("P_6 mirror pairs") {
    auto vs = classify(1, 1);
    for (const char* pair : {"1,6", "2,5", "3,4"}) {
        const auto* v = find_verdict(vs, TransferKind::PGST, pair);
        REQUIRE(v != nullptr);
        CHECK(v->yes);
        CHECK(v->justification == Justification::P6Special);
        CHECK(*v->sequence_family == SequenceFamily::FourZMinusOneHalfPi);
    }
    // silent on non-mirror pairs
    CHECK(vs.size() == 4);
}

TEST_CASE("T_{l,l} coalescence verdict") {
    for (int l : {2, 4, 9}) {
        auto vs = classify(l, l);
        const auto* v = find_verdict(vs, TransferKind::PGST, "a,b");
        REQUIRE(v != nullptr);
        CHECK(v->yes);
        CHECK(v->justification == Justification::TllCoalescence);
        CHECK(*v->sequence_family == SequenceFamily::FourZMinusOneHalfPi);
        CHECK(v->target_phase->imag() == Catch::Approx(1.0));
    }
}

TEST_CASE("T_{2,m} trichotomy") {
    SECTION("(2,1): q irreducible") {
        auto vs = classify(2, 1);
        for (const char* pair : {"c,d", "e,f"}) {
            const auto* v = find_verdict(vs, TransferKind::PGST, pair);
            REQUIRE(v != nullptr);
            CHECK(v->yes);
            CHECK(v->justification == Justification::QIrreducible);
            CHECK(*v->sequence_family == SequenceFamily::OddMultiplePi);
        }
    }
    SECTION("(2,2): both rules fire") {
        auto vs = classify(2, 2);
        const auto* ab = find_verdict(vs, TransferKind::PGST, "a,b");
        REQUIRE(ab != nullptr);
        CHECK(ab->yes);
        for (const char* pair : {"c,d", "e,f"}) {
            const auto* v = find_verdict(vs, TransferKind::PGST, pair);
            REQUIRE(v != nullptr);
            CHECK(!v->yes);
            CHECK(v->justification == Justification::ParityOdd);
        }
    }
    SECTION("justification always matches the reducibility report") {
        for (long m = 1; m <= 30; ++m) {
            if (m == 2) continue;
            auto vs = classify(2, m);
            const auto* v = find_verdict(vs, TransferKind::PGST, "c,d");
            REQUIRE(v != nullptr);
            ReducibilityReport red = reducibility_report(2, m);
            if (!red.reducible) CHECK(v->justification == Justification::QIrreducible);
            else if (*red.theta_sum_parity == Parity::Even)
                CHECK(v->justification == Justification::ParityEven);
            else
                CHECK(v->justification == Justification::ParityOdd);
            CHECK(v->yes == (v->justification != Justification::ParityOdd));
        }
    }
}

TEST_CASE("asymmetric case is all-no") {
    for (auto [l, m] : {std::pair{3, 5}, {4, 6}, {1, 3}}) {
        auto vs = classify(l, m);
        for (const auto& v : vs)
            if (v.kind == TransferKind::PGST) CHECK(!v.yes);
        const auto* all = find_verdict(vs, TransferKind::PGST, "all-pairs");
        REQUIRE(all != nullptr);
        CHECK(all->justification == Justification::AutAsymmetry);
        const auto* ab = find_verdict(vs, TransferKind::PGST, "a,b");
        REQUIRE(ab != nullptr);
        CHECK(ab->justification == Justification::DegreeMismatch);
    }
}

TEST_CASE("classify is symmetric in l and m") {
    for (auto [l, m] : {std::pair{2, 5}, {3, 3}, {1, 4}, {2, 1}}) {
        auto a = classify(l, m);
        auto b = classify(m, l);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].pair == b[i].pair);
            CHECK(a[i].yes == b[i].yes);
            CHECK(a[i].justification == b[i].justification);
        }
    }
}

TEST_CASE("PGST-yes pairs are strongly cospectral") {
    for (auto [l, m] : {std::pair{1, 1}, {3, 3}, {2, 1}, {2, 3}}) {
        for (const auto& v : classify(l, m)) {
            if (v.kind != TransferKind::PGST || !v.yes) continue;
            REQUIRE(v.pair_vertices.has_value());
            const bool t2m_pair = (v.pair == "c,d" || v.pair == "e,f");
            int bl = t2m_pair ? 2 : static_cast<int>(std::min(l, m));
            int bm = t2m_pair ? static_cast<int>((l == 2) ? m : l) : static_cast<int>(std::max(l, m));
            SpectralData spec = eig_symmetric(adjacency(build_double_subdivided_star(bl, bm)));
            CHECK(strong_cospectrality(spec, v.pair_vertices->first, v.pair_vertices->second)
                      .strongly_cospectral);
        }
    }
}

TEST_CASE("verdict table") {
    VerdictTable t = verdict_table(3, 3, false);
    CHECK(t.cells.size() == 9);
    for (const auto& cell : t.cells) CHECK(!cell.verdicts.empty());

    // witnesses at a small search depth
    VerdictTable tw = verdict_table(2, 2, true, 2000);
    for (const auto& cell : tw.cells)
        for (const auto& v : cell.verdicts) {
            if (v.kind == TransferKind::PGST && v.yes) {
                REQUIRE(v.witness.has_value());
                CHECK(v.witness->best_fidelity > 0.9);
            }
            if (v.justification == Justification::ParityOdd) {
                REQUIRE(v.witness.has_value());
                CHECK(v.witness->best_fidelity < 0.999);
            }
        }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(classify(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verdict_table(0, 1, false), std::invalid_argument);
}
