#pragma once

// Command-line front end. Exit status: 0 success, 1 usage error, 2 invalid input data,
// 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <minertia/minertia.hpp>
#include <minertia/selfcheck.hpp>

namespace minertia::cli {

enum ExitCode { kOk = 0, kUsage = 1, kBadInput = 2, kInconsistent = 3 };

namespace detail {

inline json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(path);
        if (!f) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

inline HermitianMatrix read_matrix(const std::string& path, std::istream& in) {
    json j = read_json(path, in);
    try {
        return j.get<HermitianMatrix>();
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("bad matrix document: ") + e.what());
    }
}

/// "A..B" with A <= B.
inline std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) fail(ErrorKind::InvalidInput, "range must look like A..B, got '" + s + "'");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        long lo = std::stol(a, &used_a), hi = std::stol(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidInput, "range must look like A..B with A <= B, got '" + s + "'");
    }
}

/// "b=B,fibers=l1,l2,..." (the fibers list may be empty or absent).
inline PencilData parse_pencil(const std::string& s) {
    PencilData p;
    bool have_b = false, in_fibers = false;
    std::stringstream ss(s);
    std::string tok;
    auto to_long = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            long v = std::stol(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidInput, "bad number '" + t + "' in --pencil");
        }
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.rfind("b=", 0) == 0) {
            p.b = to_long(tok.substr(2));
            have_b = true;
            in_fibers = false;
        } else if (tok.rfind("fibers=", 0) == 0) {
            in_fibers = true;
            if (tok.size() > 7) p.fiber_components.push_back(to_long(tok.substr(7)));
        } else if (in_fibers) {
            p.fiber_components.push_back(to_long(tok));
        } else {
            fail(ErrorKind::InvalidInput, "unexpected token '" + tok + "' in --pencil");
        }
    }
    if (!have_b) fail(ErrorKind::InvalidInput, "--pencil needs b=B");
    return p;
}

inline std::string csv_bool(bool b) { return b ? "true" : "false"; }

inline void print_degree_csv(std::ostream& out, const std::vector<DegreeRecord>& rows) {
    out << "q,degree,v2,is_odd,q_is_2k_plus_1\n";
    for (const auto& r : rows)
        out << r.q << "," << (r.degree ? r.degree->get_str() : "omitted") << "," << r.v2 << "," << csv_bool(r.is_odd)
            << "," << csv_bool(r.q_is_2k_plus_1) << "\n";
}

inline void print_bound_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
    out << "q,best,best_names";
    if (!rows.empty())
        for (const auto& b : rows.front().bounds) out << "," << b.name;
    out << "\n";
    for (const auto& r : rows) {
        std::string names;
        for (const auto& n : r.best_names) names += (names.empty() ? "" : ";") + n;
        out << r.q << "," << r.best << "," << names;
        for (const auto& b : r.bounds) out << "," << (b.value ? std::to_string(*b.value) : "");
        out << "\n";
    }
}

struct SearchFlags {
    std::uint64_t seed = 0;
    std::size_t samples = SearchConfig{}.samples;
    std::size_t descent_steps = SearchConfig{}.descent_steps;
    std::size_t workers = SearchConfig{}.workers;
    double tolerance = SearchConfig{}.float_tolerance;
    std::uint64_t denominator_cap = SearchConfig{}.denominator_cap;

    void attach(CLI::App* app) {
        app->add_option("--seed", seed, "RNG seed")->required();
        app->add_option("--samples", samples, "random starts per falsification")->check(CLI::PositiveNumber);
        app->add_option("--descent-steps", descent_steps, "coordinate descent sweeps per start");
        app->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        app->add_option("--tolerance", tolerance, "float sign tolerance")->check(CLI::PositiveNumber);
        app->add_option("--denominator-cap", denominator_cap, "rounding denominator cap")->check(CLI::PositiveNumber);
    }

    SearchConfig config() const {
        SearchConfig c;
        c.seed = seed;
        c.samples = samples;
        c.descent_steps = descent_steps;
        c.workers = workers;
        c.float_tolerance = tolerance;
        c.denominator_cap = denominator_cap;
        return c;
    }
};

inline check::Implementations faulty(const std::string& fault) {
    check::Implementations impl;
    if (fault == "inertia") {
        // Miscounts a zero pivot as positive.
        impl.inertia = [](const HermitianMatrix& x) {
            Inertia in = inertia(x);
            if (in.n_zero > 0) {
                --in.n_zero;
                ++in.n_plus;
            }
            return in;
        };
    } else if (fault == "degree") {
        impl.degree = [](long q) { return degree_product_form(q) + (q > 40 ? 1 : 0); };
    } else if (fault == "bound") {
        impl.bound = [](const Assumptions& a) {
            BoundReport r = best_bound(a);
            r.best -= 1;
            return r;
        };
    }
    return impl;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact inertia, determinantal strata, degree parity and h11 bounds for Hermitian matrices"};
    app.name("minertia");
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    };

    std::string matrix_path;
    auto* inertia_cmd = app.add_subcommand("inertia", "exact inertia of a Hermitian matrix");
    inertia_cmd->add_option("--matrix", matrix_path, "matrix JSON file, '-' for stdin")->required();
    add_format(inertia_cmd);

    bool want_cone = false;
    auto* classify_cmd = app.add_subcommand("classify", "rank <= 2 stratum and cone membership");
    classify_cmd->add_option("--matrix", matrix_path, "matrix JSON file, '-' for stdin")->required();
    classify_cmd->add_flag("--cone", want_cone, "also classify against the cone with apex I (q >= 5)");

    long q = 0;
    std::string table;
    bool parity_only = false;
    auto* degree_cmd = app.add_subcommand("degree", "degree of the rank <= 2 locus and its parity");
    auto* degree_q = degree_cmd->add_option("--q", q, "matrix size");
    auto* degree_table = degree_cmd->add_option("--table", table, "range A..B");
    degree_q->excludes(degree_table);
    degree_cmd->add_flag("--parity-only", parity_only, "skip materializing the degree");
    add_format(degree_cmd);

    long pg = -1;
    bool no_pencils = false, minimal_surface = false;
    std::string pencil;
    auto* bound_cmd = app.add_subcommand("bound", "lower bounds for h11");
    auto* bound_q = bound_cmd->add_option("--q", q, "irregularity");
    auto* bound_table = bound_cmd->add_option("--table", table, "sweep range A..B");
    bound_q->excludes(bound_table);
    bound_cmd->add_option("--pg", pg, "geometric genus")->check(CLI::NonNegativeNumber);
    bound_cmd->add_flag("--no-irregular-pencils", no_pencils, "no irregular pencils of genus >= 2");
    bound_cmd->add_option("--pencil", pencil, "b=B,fibers=l1,l2,...");
    bound_cmd->add_flag("--minimal", minimal_surface, "surface is minimal");
    add_format(bound_cmd);

    long dim = 0;
    std::string basis_path;
    detail::SearchFlags search_flags;
    auto* search_cmd = app.add_subcommand("search", "falsify minimal inertia >= 2 on a subspace");
    auto* search_q = search_cmd->add_option("--q", q, "matrix size");
    auto* search_dim = search_cmd->add_option("--dim", dim, "subspace dimension");
    auto* search_basis = search_cmd->add_option("--basis", basis_path, "basis JSON file instead of a random span");
    search_basis->excludes(search_q)->excludes(search_dim);
    search_flags.attach(search_cmd);

    long target = 0;
    std::size_t proposals = kGrowProposalsPerStep;
    detail::SearchFlags grow_flags;
    auto* grow_cmd = app.add_subcommand("grow", "greedy search for large spans with minimal inertia >= 2");
    grow_cmd->add_option("--q", q, "matrix size")->required();
    grow_cmd->add_option("--target", target, "target dimension")->required();
    grow_cmd->add_option("--proposals", proposals, "proposals per growth step")->check(CLI::PositiveNumber);
    grow_flags.attach(grow_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "known surfaces and their h11");
    add_format(catalog_cmd);

    std::size_t check_samples = check::CheckOptions{}.matrices_per_size;
    std::string fault;
    auto* check_cmd = app.add_subcommand("check", "built-in self test");
    check_cmd->add_option("--samples", check_samples, "random matrices per property")->check(CLI::PositiveNumber);
    check_cmd->add_option("--inject-fault", fault, "run against a deliberately broken implementation")
        ->check(CLI::IsMember({"inertia", "degree", "bound"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*inertia_cmd) {
            Inertia r = inertia(detail::read_matrix(matrix_path, in));
            if (format == "csv")
                out << "n_plus,n_minus,n_zero,rank,minimal_inertia\n"
                    << r.n_plus << "," << r.n_minus << "," << r.n_zero << "," << r.rank() << "," << r.minimal() << "\n";
            else
                out << json(r).dump() << "\n";
        } else if (*classify_cmd) {
            HermitianMatrix x = detail::read_matrix(matrix_path, in);
            Classification c{x.q(), classify_d2(x), std::nullopt};
            if (want_cone) c.cone = classify_cone(x);
            out << json(c).dump() << "\n";
        } else if (*degree_cmd) {
            std::vector<DegreeRecord> rows;
            if (!table.empty()) {
                auto [lo, hi] = detail::parse_range(table);
                for (long v = lo; v <= hi; ++v) rows.push_back(parity_record(v, !parity_only));
            } else if (degree_q->count() > 0) {
                rows.push_back(parity_record(q, !parity_only));
            } else {
                err << "degree: one of --q or --table is required\n";
                return kUsage;
            }
            if (format == "csv") detail::print_degree_csv(out, rows);
            else out << (table.empty() ? json(rows.front()) : json(rows)).dump() << "\n";
        } else if (*bound_cmd) {
            Assumptions a;
            if (pg >= 0) a.p_g = pg;
            a.no_irregular_pencils_genus_ge2 = no_pencils;
            a.minimal_surface = minimal_surface;
            if (!pencil.empty()) a.pencil = detail::parse_pencil(pencil);
            std::vector<BoundReport> rows;
            if (!table.empty()) {
                auto [lo, hi] = detail::parse_range(table);
                for (long v = lo; v <= hi; ++v) {
                    a.q = v;
                    rows.push_back(best_bound(a));
                }
            } else if (bound_q->count() > 0) {
                a.q = q;
                rows.push_back(best_bound(a));
            } else {
                err << "bound: one of --q or --table is required\n";
                return kUsage;
            }
            if (format == "csv") detail::print_bound_csv(out, rows);
            else out << (table.empty() ? json(rows.front()) : json(rows)).dump() << "\n";
        } else if (*search_cmd) {
            const SearchConfig cfg = search_flags.config();
            std::optional<SubspaceBasis> basis;
            if (!basis_path.empty()) {
                basis = parse_basis(detail::read_json(basis_path, in));
            } else if (search_q->count() > 0 && search_dim->count() > 0) {
                if (q < 1 || dim < 1) fail(ErrorKind::InvalidInput, "--q and --dim must be positive");
                basis = random_subspace(static_cast<std::size_t>(q), static_cast<std::size_t>(dim), cfg.seed);
            } else {
                err << "search: give --q and --dim, or --basis\n";
                return kUsage;
            }
            out << search_report_json(search_report(std::move(*basis), cfg)).dump() << "\n";
        } else if (*grow_cmd) {
            if (q < 1 || target < 0) fail(ErrorKind::InvalidInput, "--q must be positive and --target non-negative");
            const SearchConfig cfg = grow_flags.config();
            GrowReport r = grow_subspace(static_cast<std::size_t>(q), static_cast<std::size_t>(target), cfg, proposals);
            out << grow_report_json(r, cfg.seed).dump() << "\n";
        } else if (*catalog_cmd) {
            auto records = catalog();
            if (format == "csv") {
                out << "name,q,p_g,h11,no_irregular_pencils,note\n";
                for (const auto& s : records)
                    out << '"' << s.name << "\"," << s.q << "," << (s.p_g ? std::to_string(*s.p_g) : "") << ","
                        << s.h11 << "," << detail::csv_bool(s.no_irregular_pencils) << ",\"" << s.note << "\"\n";
            } else {
                out << json(records).dump() << "\n";
            }
        } else if (*check_cmd) {
            check::CheckOptions opt;
            opt.matrices_per_size = check_samples;
            const auto results = check::run_self_check(opt, fault.empty() ? check::Implementations{} : detail::faulty(fault));
            bool all = true;
            json checks = json::array();
            for (const auto& r : results) {
                all = all && r.passed;
                checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                err << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
            }
            out << json{{"passed", all}, {"checks", checks}}.dump() << "\n";
            return all ? kOk : kInconsistent;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Inconsistency ? kInconsistent : kBadInput;
    }
    return kOk;
}

} // namespace minertia::cli
