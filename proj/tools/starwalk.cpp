// starwalk CLI: analyze graphs, classify T_{l,m}, sweep parameter
// rectangles, emit fidelity traces.
//
// Exit codes: 0 ok, 2 usage, 3 numeric failure, 4 I/O.

#include "starwalk/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

using namespace starwalk;

namespace {

struct GraphArgs {
    std::string family;  // T, SK, P, or empty when edge-list given
    int l = 1, m = 1, n = 1;
    std::string edge_list_path;
};

GraphSpec build_graph(const GraphArgs& args) {
    if (!args.edge_list_path.empty()) {
        std::ifstream in(args.edge_list_path);
        if (!in) throw std::ios_base::failure("cannot open " + args.edge_list_path);
        return parse_edge_list(in);
    }
    if (args.family == "T") return build_double_subdivided_star(args.l, args.m);
    if (args.family == "SK") return build_subdivided_star(args.l);
    if (args.family == "P") return build_path(args.n);
    throw CLI::ValidationError("--family must be T, SK, or P (or use --edge-list)");
}

int parse_vertex(const GraphSpec& g, const std::string& tok) {
    if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'f') return g.label_or_throw(tok[0]);
    return std::stoi(tok);
}

std::pair<int, int> parse_pair(const GraphSpec& g, const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--pair expects u,v");
    int a = parse_vertex(g, s.substr(0, comma));
    int b = parse_vertex(g, s.substr(comma + 1));
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) throw CLI::ValidationError("pair out of range");
    return {a, b};
}

// "start:end:step"
std::vector<double> parse_range(const std::string& s) {
    double start, end, step;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> start >> c1 >> end >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw CLI::ValidationError("range must be start:end:step with step > 0");
    std::vector<double> times;
    for (double t = start; t <= end + 1e-12; t += step) times.push_back(t);
    return times;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << content;
}

json analyze_report(const GraphSpec& g, std::pair<int, int> pair, const std::string& trace_range) {
    SpectralData spec = eig_symmetric(adjacency(g));
    json report;
    report["graph"] = to_json(g);
    report["spectrum"] = to_json(spec);
    report["support"] = {to_json(eigenvalue_support(spec, pair.first)),
                         to_json(eigenvalue_support(spec, pair.second))};
    report["cospectrality"] = to_json(strong_cospectrality(spec, pair.first, pair.second));
    if (!trace_range.empty()) {
        FidelityTrace tr = fidelity_trace(spec, pair.first, pair.second, parse_range(trace_range));
        json jt;
        jt["times"] = tr.times;
        jt["fidelities"] = tr.fidelities;
        report["trace"] = jt;
    }
    return report;
}

// Cells already present in an existing CSV are skipped on re-run.
std::set<std::pair<long, long>> cells_in_csv(const std::string& path) {
    std::set<std::pair<long, long>> seen;
    std::ifstream in(path);
    if (!in) return seen;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::istringstream is(line);
        long l, m;
        char comma;
        if (is >> l >> comma >> m) seen.insert({l, m});
    }
    return seen;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state transfer analysis on double subdivided stars"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand name

    std::string out_path, format = "json", config_path;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    unsigned long seed = 0;
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.set_config("--config", "", "flat key=value config file; flags win");
    app.add_option("--workers", workers, "worker threads for sweeps");
    app.add_option("--seed", seed, "seed for randomized sampling");

    GraphArgs gargs;
    std::string pair_str = "a,b", trace_range;
    long l = 1, m = 1, lmax = 1, mmax = 1;
    bool witness = false;
    long long kmax = 100000;

    auto* analyze = app.add_subcommand("analyze", "spectrum, supports, cospectrality");
    analyze->add_option("--family", gargs.family, "T, SK, or P");
    analyze->add_option("--l", gargs.l);
    analyze->add_option("--m", gargs.m);
    analyze->add_option("--n", gargs.n);
    analyze->add_option("--edge-list", gargs.edge_list_path);
    analyze->add_option("--pair", pair_str, "vertex pair, labels or indices");
    analyze->add_option("--trace", trace_range, "start:end:step fidelity trace");

    auto* classify_cmd = app.add_subcommand("classify", "PST/PGST verdicts for T_{l,m}");
    classify_cmd->add_option("--l", l)->required();
    classify_cmd->add_option("--m", m)->required();
    classify_cmd->add_flag("--witness", witness, "attach numeric witnesses");
    classify_cmd->add_option("--kmax", kmax, "sequence search length");

    auto* sweep = app.add_subcommand("sweep", "verdict table over a rectangle");
    sweep->add_option("--lmax", lmax)->required();
    sweep->add_option("--mmax", mmax)->required();
    sweep->add_flag("--witness", witness);
    sweep->add_option("--kmax", kmax);

    auto* trace = app.add_subcommand("trace", "fidelity trace as CSV");
    trace->add_option("--family", gargs.family);
    trace->add_option("--l", gargs.l);
    trace->add_option("--m", gargs.m);
    trace->add_option("--n", gargs.n);
    trace->add_option("--edge-list", gargs.edge_list_path);
    trace->add_option("--pair", pair_str);
    trace->add_option("--range", trace_range, "start:end:step")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            GraphSpec g = build_graph(gargs);
            auto pair = parse_pair(g, pair_str);
            json report = analyze_report(g, pair, trace_range);
            if (format == "csv" && !trace_range.empty()) {
                SpectralData spec = eig_symmetric(adjacency(g));
                FidelityTrace tr =
                    fidelity_trace(spec, pair.first, pair.second, parse_range(trace_range));
                write_output(out_path, to_csv(tr));
            } else {
                write_output(out_path, report.dump(2) + "\n");
            }
        } else if (*classify_cmd) {
            SweepCell cell{std::min(l, m), std::max(l, m), starwalk::classify(l, m)};
            if (witness) attach_witnesses(cell, kmax);
            if (format == "csv") {
                VerdictTable t;
                t.cells.push_back(cell);
                write_output(out_path, to_csv(t));
            } else {
                json verdicts = json::array();
                for (const auto& v : cell.verdicts) verdicts.push_back(to_json(v));
                write_output(out_path, verdicts.dump(2) + "\n");
            }
        } else if (*sweep) {
            const bool csv = (format == "csv");
            std::set<std::pair<long, long>> done;
            if (csv && !out_path.empty()) done = cells_in_csv(out_path);

            std::vector<std::pair<long, long>> todo;
            for (long li = 1; li <= lmax; ++li)
                for (long mi = 1; mi <= mmax; ++mi)
                    if (!done.count({li, mi})) todo.push_back({li, mi});

            std::vector<SweepCell> cells(todo.size());
            std::atomic<size_t> next{0};
            auto work = [&] {
                for (size_t i = next++; i < todo.size(); i = next++) {
                    auto [li, mi] = todo[i];
                    cells[i] = SweepCell{li, mi, starwalk::classify(li, mi)};
                    if (witness) attach_witnesses(cells[i], kmax);
                }
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < std::max(1, workers); ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();

            VerdictTable table;
            table.cells = cells;
            std::map<std::string, long> counts;
            for (const auto& cell : table.cells)
                for (const auto& v : cell.verdicts) ++counts[justification_code(v.justification)];

            if (csv) {
                std::string body = to_csv(table);
                if (!done.empty()) {
                    // append only the new rows, keeping the existing file intact
                    std::ofstream out(out_path, std::ios::app);
                    if (!out) throw std::ios_base::failure("cannot open " + out_path);
                    out << body.substr(body.find('\n') + 1);
                } else {
                    write_output(out_path, body);
                }
            } else {
                write_output(out_path, to_json(table).dump(2) + "\n");
            }
            std::cerr << "sweep summary:";
            for (const auto& [code, count] : counts) std::cerr << " " << code << "=" << count;
            std::cerr << " (skipped " << done.size() << " existing cells)\n";
        } else if (*trace) {
            GraphSpec g = build_graph(gargs);
            auto pair = parse_pair(g, pair_str);
            SpectralData spec = eig_symmetric(adjacency(g));
            FidelityTrace tr =
                fidelity_trace(spec, pair.first, pair.second, parse_range(trace_range));
            write_output(out_path, to_csv(tr));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
