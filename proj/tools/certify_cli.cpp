// Batch certification front end: runs the exact-arithmetic scans and emits
// JSON-lines plus a Markdown summary. Exit status: 0 all pass, 1 any failed
// certification or internal error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qcert/definiteness.hpp"
#include "qcert/linsys.hpp"
#include "qcert/noncompact.hpp"
#include "qcert/parallel.hpp"
#include "qcert/pohozaev4.hpp"
#include "qcert/pohozaev6.hpp"
#include "qcert/radial.hpp"
#include "qcert/suites.hpp"

namespace {

using namespace qcert;

struct OutputOptions {
    std::string json_path;
    std::string md_path;
    int jobs = 1;
    bool quiet = false;
};

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

std::vector<Family> parse_families(const std::string& text) {
    if (text == "all") return {Family::D, Family::W, Family::H};
    if (text == "D") return {Family::D};
    if (text == "W") return {Family::W};
    if (text == "H") return {Family::H};
    throw CLI::ValidationError("--family", "must be D, W, H or all");
}

int finish(const std::vector<VerificationReport>& reports, const OutputOptions& opt) {
    if (!opt.json_path.empty()) {
        std::ofstream os(opt.json_path);
        write_json_lines(os, reports);
    }
    if (!opt.md_path.empty()) {
        std::ofstream os(opt.md_path);
        write_markdown_summary(os, reports);
    }
    long pass = 0, fail = 0, err = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case VerificationReport::Verdict::pass: ++pass; break;
            case VerificationReport::Verdict::fail: ++fail; break;
            default: ++err; break;
        }
        if (!opt.quiet && !r.passed()) std::cerr << to_json_line(r) << "\n";
    }
    if (!opt.quiet)
        std::cout << pass << " pass, " << fail << " fail, " << err << " error\n";
    return (fail == 0 && err == 0) ? 0 : 1;
}

std::string dump_matrix_json(const SymMatrix& M) {
    std::string out = "{\"dim\":" + std::to_string(M.dim()) +
                      ",\"pi_half_power\":" + std::to_string(M.common_pi_half_power()) +
                      ",\"entries\":[";
    for (long i = 0; i < M.dim(); ++i) {
        if (i) out += ",";
        out += "[";
        for (long j = 0; j < M.dim(); ++j) {
            if (j) out += ",";
            out += "\"" + to_string(M.at(i, j).coeff()) + "\"";
        }
        out += "]";
    }
    out += "],\"decimal\":[";
    for (long i = 0; i < M.dim(); ++i) {
        if (i) out += ",";
        out += "[";
        for (long j = 0; j < M.dim(); ++j) {
            if (j) out += ",";
            out += "\"" + decimal_string(M.at(i, j).coeff(), 6) + "\"";
        }
        out += "]";
    }
    return out + "]}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcert: exact certification of the Q-curvature compactness computations"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global output flags may follow the subcommand

    OutputOptions opt;
    app.add_option("--json", opt.json_path, "write JSON-lines report stream to PATH");
    app.add_option("--md", opt.md_path, "write Markdown summary to PATH");
    app.add_option("--jobs", opt.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
    app.add_flag("--quiet", opt.quiet, "suppress stdout besides the exit status");

    std::string n_range = "8..24", family = "all", s_spec = "all", order_spec = "all";
    long k_opt = -1;
    bool cross_order = false, with_tables = false;

    auto* q4 = app.add_subcommand("q4", "fourth-order Pohozaev matrix scan");
    q4->add_option("--n", n_range, "dimension range A..B");
    q4->add_option("--family", family, "D|W|H|all");
    q4->add_option("--s", s_spec, "spherical-harmonic index or 'all'");

    auto* q6 = app.add_subcommand("q6", "sixth-order Pohozaev matrix scan");
    q6->add_option("--n", n_range, "dimension range A..B");
    q6->add_option("--family", family, "D|W|H|all");
    q6->add_option("--s", s_spec, "spherical-harmonic index or 'all'");

    auto* lin = app.add_subcommand("linearized", "linearized bubble systems A Gamma = b");
    lin->add_option("--order", order_spec, "2|4|6|all");
    lin->add_option("--n", n_range, "dimension range A..B");
    lin->add_option("--k", k_opt, "restrict to one polynomial degree");
    lin->add_option("--s", s_spec, "restrict to one sub-index");
    lin->add_flag("--cross-order", cross_order, "also certify Gamma(2)=Gamma(4)=Gamma(6)");

    auto* nc = app.add_subcommand("noncompact", "blow-up direction certificates (n >= 27)");
    nc->add_option("--n", n_range, "dimension range A..B");
    nc->add_flag("--with-paper-a0-tables", with_tables,
                 "also cross-check the published closed-form tables");

    auto* rad = app.add_subcommand("radial-selftest", "radial kernel oracles and recurrences");

    std::string which = "q4";
    auto* mat = app.add_subcommand("matrix", "dump one matrix with exact entries");
    mat->add_option("--problem", which, "q4|q6");
    mat->add_option("--n", n_range, "dimension");
    mat->add_option("--family", family, "D|W|H");
    mat->add_option("--s", s_spec, "spherical-harmonic index");

    auto* all = app.add_subcommand("all", "every acceptance-criterion suite in one run");
    all->add_flag("--with-paper-a0-tables", with_tables,
                  "also cross-check the published closed-form tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::vector<VerificationReport> reports;
        const auto [n_lo, n_hi] = parse_range(n_range);
        const std::optional<long> s_filter =
            s_spec == "all" ? std::nullopt : std::optional<long>(std::stol(s_spec));

        if (q4->parsed()) {
            reports = scan_q4(n_lo, n_hi, parse_families(family), s_filter, opt.jobs);
        } else if (q6->parsed()) {
            reports = scan_q6(n_lo, n_hi, parse_families(family), s_filter, opt.jobs);
        } else if (lin->parsed()) {
            std::vector<Order> orders;
            if (order_spec == "all") orders = {Order::two, Order::four, Order::six};
            else if (order_spec == "2") orders = {Order::two};
            else if (order_spec == "4") orders = {Order::four};
            else if (order_spec == "6") orders = {Order::six};
            else throw CLI::ValidationError("--order", "must be 2, 4, 6 or all");
            std::vector<ProblemIndex> grid;
            for (Order o : orders) {
                const long n_min = o == Order::six ? 12 : 10;
                for (long n = std::max(n_lo, n_min); n <= n_hi; ++n) {
                    const long K = o == Order::six ? n - 8 : n - 6;
                    for (long k = 2; k <= K - 2; ++k) {
                        if (k_opt >= 0 && k != k_opt) continue;
                        for (long s = 0; s <= (k - 2) / 2; ++s) {
                            if (s_filter && *s_filter != s) continue;
                            grid.push_back({o, n, k, s});
                        }
                    }
                }
            }
            reports.resize(grid.size());
            parallel_for(grid.size(), opt.jobs,
                         [&](std::size_t i) { reports[i] = certify_cancellation(grid[i]); });
            if (cross_order) {
                for (long n = std::max(n_lo, 12L); n <= n_hi; ++n)
                    for (long k = 2; k <= n - 10; ++k) {
                        if (k_opt >= 0 && k != k_opt) continue;
                        for (long s = 0; s <= (k - 2) / 2; ++s) {
                            if (s_filter && *s_filter != s) continue;
                            VerificationReport rep;
                            rep.check_id = "linearized-cross-order";
                            rep.params = {{"n", std::to_string(n)},
                                          {"k", std::to_string(k)},
                                          {"s", std::to_string(s)}};
                            rep.expected = "Gamma(2)=Gamma(4)=Gamma(6)";
                            const bool ok = check_cross_order(n, k, s);
                            rep.actual = ok ? "equal" : "solutions differ";
                            rep.verdict = ok ? VerificationReport::Verdict::pass
                                             : VerificationReport::Verdict::fail;
                            if (!ok) rep.witness = {{"detail", "entrywise comparison failed"}};
                            reports.push_back(std::move(rep));
                        }
                    }
            }
        } else if (nc->parsed()) {
            reports = suites::noncompactness(std::max(n_lo, 27L), n_hi, with_tables, opt.jobs);
        } else if (rad->parsed()) {
            reports = suites::radial_oracles(opt.jobs);
        } else if (mat->parsed()) {
            const long s = s_spec == "all" ? 2 : std::stol(s_spec);
            const Family f = parse_families(family == "all" ? "D" : family)[0];
            const SymMatrix M = which == "q6" ? matrix_q6({f, n_lo, s})
                                              : matrix_q4({f, n_lo, s});
            std::cout << dump_matrix_json(M) << "\n";
            return 0;
        } else if (all->parsed()) {
            for (auto&& part :
                 {suites::q4_thresholds(opt.jobs), suites::q6_thresholds(opt.jobs),
                  suites::pinned_entry(), suites::linearized_systems(60, opt.jobs),
                  suites::radial_oracles(opt.jobs),
                  suites::noncompactness(27, 120, with_tables, opt.jobs),
                  suites::definiteness_properties(1000), suites::fault_injection()})
                for (auto& r : part) reports.push_back(std::move(r));
        }
        return finish(reports, opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
