/**
 * @file cuspquot.cpp
 * @brief Command-line front end: series, motive, verify, conjecture.
 *
 * Exit codes: 0 success, 1 a check failed, 2 usage or range error.
 */
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspquot/acceptance.hpp"
#include "cuspquot/cache.hpp"
#include "cuspquot/qalgebra.hpp"
#include "cuspquot/series.hpp"
#include "cuspquot/varieties.hpp"

namespace {

using namespace cuspquot;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SeriesArgs {
    int d = 0;
    std::optional<unsigned> prime;
    std::optional<int> order;
    std::string format = "json";
};

nlohmann::json series_json(int d, const Mode& mode, const TSeries& s) {
    nlohmann::json j = to_json(s);
    return {{"d", d}, {"mode", mode.name()}, {"num", j["num"]}, {"den", j["den"]}};
}

nlohmann::json coeff_json(const LaurentPoly& c, const Mode& mode) {
    if (mode.is_symbolic()) return c.to_string();
    return bigint_to_json(c.coeff(0));
}

void csv_rows(std::ostream& os, const std::string& name, const TPoly& f) {
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (const auto& [e, c] : f.coeffs()[i].terms()) os << name << "," << i << "," << e << "," << c << "\n";
}

int run_series(const SeriesArgs& a) {
    if (a.d < 0) throw std::out_of_range("--d must be >= 0");
    if (!a.prime && a.d > 3) throw std::out_of_range("symbolic series need --d <= 3; pass --prime for larger d");
    if (a.order && *a.order < 0) throw std::out_of_range("--order must be >= 0");
    Mode mode = a.prime ? Mode::at_prime(*a.prime) : Mode::symbolic();
    TSeries h = hilb_series(a.d, mode), q = quot_series(a.d, mode);
    if (a.format == "csv") {
        std::cout << "series,t_exp,q_exp,coefficient\n";
        csv_rows(std::cout, "H_num", h.num);
        csv_rows(std::cout, "H_den", h.den);
        csv_rows(std::cout, "Q_num", q.num);
        csv_rows(std::cout, "Q_den", q.den);
        if (a.order) {
            auto hc = h.expand(*a.order), qc = q.expand(*a.order);
            std::cout << "\nseries,t_exp,coefficient\n";
            for (int n = 0; n <= *a.order; ++n) std::cout << "H," << n << "," << hc[static_cast<size_t>(n)].to_string() << "\n";
            for (int n = 0; n <= *a.order; ++n) std::cout << "Q," << n << "," << qc[static_cast<size_t>(n)].to_string() << "\n";
        }
        return 0;
    }
    nlohmann::json out = {{"d", a.d}, {"mode", mode.name()}};
    out["H"] = series_json(a.d, mode, h);
    out["Q"] = series_json(a.d, mode, q);
    out["NH"] = to_json(h.num);
    out["NQ"] = to_json(q.num);
    if (a.order) {
        nlohmann::json hc = nlohmann::json::array(), qc = nlohmann::json::array();
        for (const auto& c : h.expand(*a.order)) hc.push_back(coeff_json(c, mode));
        for (const auto& c : q.expand(*a.order)) qc.push_back(coeff_json(c, mode));
        out["coefficients"] = {{"H", hc}, {"Q", qc}};
    }
    if (!mode.is_symbolic() && a.d >= 4)
        out["note"] = "numeric evidence: classes of unstable pure-K data of rank >= 4 are point counts at this prime";
    std::cout << out.dump() << "\n";
    return 0;
}

int run_motive(std::optional<int> d, const std::vector<int>& table, const std::string& format) {
    if (format != "text" && format != "csv") throw std::out_of_range("--format must be text or csv");
    if (!table.empty()) {
        if (format == "csv") throw std::out_of_range("--table prints a single class; use --d with --format csv");
        std::cout << motive_table().get(table[0], table[1]).to_string() << "\n";
        return 0;
    }
    if (!d) throw std::out_of_range("motive needs --d or --table");
    if (*d < 0 || *d > 64) throw std::out_of_range("--d must lie in [0, 64]");
    if (format == "csv")
        std::cout << motive_table().csv_d(*d);
    else
        std::cout << staircase_motive(*d).to_string() << "\n";
    return 0;
}

int run_verify(const std::string& level, bool use_cache, bool times) {
    if (level != "quick" && level != "full") throw std::out_of_range("--level must be quick or full");
    AcceptanceOptions opts;
    opts.level = level == "full" ? Level::full : Level::quick;
    std::optional<ResultCache> cache;
    if (use_cache) {
        cache.emplace(default_cache_dir());
        for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << "\n";
        opts.cache = &*cache;
    }
    auto results = run_acceptance(opts);
    std::cout << format_results(results, times);
    bool ok = all_passed(results);
    std::cout << (ok ? "all criteria pass" : "some criteria fail") << "\n";
    return ok ? 0 : kExitFail;
}

int run_conjecture(int max_d) {
    if (max_d < 0 || max_d > 40) throw std::out_of_range("--max-d must lie in [0, 40]");
    auto chain = solve_nh_chain(max_d);
    bool ok = true;
    for (size_t d = 0; d < chain.size(); ++d) {
        const auto& r = chain[d];
        bool match = r.consistent && r.poly == nh_guess(static_cast<int>(d));
        std::cout << "d=" << d << ": ";
        if (!r.consistent)
            std::cout << "inconsistent (" << r.message << ")";
        else
            std::cout << "consistent, " << (match ? "matches closed form" : "differs from closed form");
        std::cout << "\n";
        ok = ok && match;
    }
    if (static_cast<int>(chain.size()) <= max_d) ok = false;
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts of Quot schemes of the cusp x^2 = y^3"};
    app.require_subcommand(1);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "H_d, Q_d and their numerators over (t;q)_d");
    series->add_option("--d", sa.d, "rank d")->required();
    series->add_option("--prime", sa.prime, "evaluate at q = p");
    series->add_option("--order", sa.order, "also print coefficients of t^0..t^K");
    series->add_option("--format", sa.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::optional<int> md;
    std::vector<int> mtable;
    std::string mformat = "text";
    auto* motive = app.add_subcommand("motive", "class [V_d] or [V_{a,b}] of the staircase variety");
    auto* md_opt = motive->add_option("--d", md, "rank d, at most 64");
    motive->add_option("--table", mtable, "a b")->expected(2)->excludes(md_opt);
    motive->add_option("--format", mformat, "text or csv");

    std::string level = "quick";
    bool no_cache = false, times = false;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--no-cache", no_cache, "do not read or write the result cache");
    verify->add_flag("--times", times, "print wall-clock time per criterion");

    int max_d = 8;
    auto* conj = app.add_subcommand("conjecture", "solve for NH_d recursively and compare with the closed form");
    conj->add_option("--max-d", max_d, "largest d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*series) return run_series(sa);
        if (*motive) return run_motive(md, mtable, mformat);
        if (*verify) return run_verify(level, !no_cache, times);
        if (*conj) return run_conjecture(max_d);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
