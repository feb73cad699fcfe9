#pragma once

// JSON / CSV export.  Polynomial coefficients serialize as decimal
// strings (ascending degree); reals print with 17 significant digits so
// they round-trip.

#include "starwalk/classifier.hpp"
#include "starwalk/exact_poly.hpp"
#include "starwalk/graph.hpp"
#include "starwalk/spectral.hpp"
#include "starwalk/transfer.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

namespace starwalk {

using nlohmann::json;

inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline json to_json(const GraphSpec& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    json labels = json::object();
    for (const auto& [role, v] : g.labels) labels[std::string(1, role)] = v;
    json out{{"n", g.n}, {"edges", edges}, {"labels", labels}, {"family", family_name(g.family)}};
    if (g.family == Family::DoubleSubdividedStar) {
        out["l"] = g.family_l;
        out["m"] = g.family_m;
    } else if (g.family != Family::General) {
        out["l"] = g.family_l;
    }
    if (g.duplicate_edges_collapsed) out["duplicate_edges_collapsed"] = true;
    return out;
}

inline json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

inline json to_json(const SpectralData& spec, bool include_idempotents = false) {
    json out;
    out["eigenvalues"] = spec.eigenvalues;
    out["multiplicities"] = spec.multiplicities;
    if (include_idempotents) {
        json mats = json::array();
        for (const auto& E : spec.idempotents) {
            json rows = json::array();
            for (int i = 0; i < E.rows(); ++i) {
                json row = json::array();
                for (int j = 0; j < E.cols(); ++j) row.push_back(E(i, j));
                rows.push_back(row);
            }
            mats.push_back(rows);
        }
        out["idempotents"] = mats;
    }
    return out;
}

inline json to_json(const SupportSet& s) {
    return json{{"vertex", s.vertex}, {"eigenvalues", s.eigenvalues}};
}

inline json to_json(const CospectralityReport& r) {
    json pattern = json::object();
    for (const auto& [theta, sign] : r.sign_pattern) {
        const char* s = sign == SupportSign::Plus ? "+1"
                        : sign == SupportSign::Minus ? "-1"
                                                     : "not-in-support";
        pattern[format_real(theta)] = s;
    }
    return json{{"pair", {r.a, r.b}},
                {"strongly_cospectral", r.strongly_cospectral},
                {"sign_pattern", pattern}};
}

inline json to_json(const PgstWitness& w) {
    json env = json::array();
    for (const auto& [k, f] : w.envelope) env.push_back({{"k", k}, {"best_fidelity", f}});
    return json{{"pair", {w.a, w.b}},
                {"sequence_family", sequence_family_name(w.family)},
                {"best_time", w.best_time},
                {"best_fidelity", w.best_fidelity},
                {"best_phase", {w.best_phase.real(), w.best_phase.imag()}},
                {"envelope", env}};
}

inline json to_json(const TransferVerdict& v) {
    json out{{"l", v.l},
             {"m", v.m},
             {"pair", v.pair},
             {"kind", v.kind == TransferKind::PST ? "PST" : "PGST"},
             {"verdict", v.yes ? "yes" : "no"},
             {"justification", justification_code(v.justification)}};
    if (v.pair_vertices) out["pair_vertices"] = {v.pair_vertices->first, v.pair_vertices->second};
    if (v.sequence_family) out["sequence_family"] = sequence_family_name(*v.sequence_family);
    if (v.target_phase) out["target_phase"] = {v.target_phase->real(), v.target_phase->imag()};
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

inline json to_json(const VerdictTable& t) {
    json cells = json::array();
    for (const auto& cell : t.cells) {
        json verdicts = json::array();
        for (const auto& v : cell.verdicts) verdicts.push_back(to_json(v));
        cells.push_back({{"l", cell.l}, {"m", cell.m}, {"verdicts", verdicts}});
    }
    return json{{"cells", cells}};
}

// CSV: time, fidelity, re(phase), im(phase)
inline std::string to_csv(const FidelityTrace& tr) {
    std::ostringstream os;
    os << "time,fidelity,re_phase,im_phase\n";
    for (size_t i = 0; i < tr.times.size(); ++i)
        os << format_real(tr.times[i]) << ',' << format_real(tr.fidelities[i]) << ','
           << format_real(tr.phases[i].real()) << ',' << format_real(tr.phases[i].imag()) << '\n';
    return os.str();
}

// CSV: l, m, pair, kind, verdict, justification, best_fidelity, best_time
inline std::string to_csv(const VerdictTable& t) {
    std::ostringstream os;
    os << "l,m,pair,kind,verdict,justification,best_fidelity,best_time\n";
    for (const auto& cell : t.cells)
        for (const auto& v : cell.verdicts) {
            os << cell.l << ',' << cell.m << ',' << '"' << v.pair << '"' << ','
               << (v.kind == TransferKind::PST ? "PST" : "PGST") << ','
               << (v.yes ? "yes" : "no") << ',' << justification_code(v.justification) << ',';
            if (v.witness)
                os << format_real(v.witness->best_fidelity) << ','
                   << format_real(v.witness->best_time);
            else
                os << ',';
            os << '\n';
        }
    return os.str();
}

}  // namespace starwalk
