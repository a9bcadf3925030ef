// mpkostka: Kostka tables, verification suites and parameter specialization.
//
// Exit codes: 0 ok, 1 a verification identity failed, 2 usage or bounds,
// 3 internal invariant breach.

#include "mpk/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mpk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 0, r = 1, m = 0;
    std::string sign = "minus", method = "solve", params, format = "json", out, in;
    std::string suite = "all";
    int n_max = 3, r_max = 0;
    unsigned jobs = default_jobs();
    std::string cache_dir;
    bool allow_large = false;
};

void check_bounds(const RunConfig& c, int n, int r) {
    int n_cap = c.allow_large ? 1000 : 8, r_cap = c.allow_large ? 1000 : 4;
    if (n < 1 || n > n_cap) throw UsageError("n must be in 1.." + std::to_string(n_cap) + " (got " + std::to_string(n) + ")");
    if (r < 1 || r > r_cap) throw UsageError("r must be in 1.." + std::to_string(r_cap) + " (got " + std::to_string(r) + ")");
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
}

std::string render(const RunConfig& c, const KostkaTable& t) {
    if (c.format == "csv") return table_to_csv(t);
    return table_to_json(t).dump(1) + "\n";
}

int cmd_table(const RunConfig& c) {
    check_bounds(c, c.n, c.r);
    Sign sign = parse_sign(c.sign);
    Method method = parse_method(c.method);
    if (c.m != 0 && method != Method::PF) throw UsageError("--m applies to --method pf only");
    Params params = c.params.empty() ? Params::generic(c.r) : Params::parse(c.r, c.params);
    std::cerr << "table n=" << c.n << " r=" << c.r << " sign=" << sign_name(sign) << " method=" << method_name(method)
              << " jobs=" << c.jobs << "\n";
    SymContext ctx(c.n, c.r, params, c.jobs);
    KostkaTable t = c.m != 0 ? kostka_by_pf(ctx, sign, c.m) : cached_table(ctx, sign, method, c.cache_dir);
    emit(c, render(c, t));
    return 0;
}

int cmd_verify(const RunConfig& c, bool r_given) {
    VerifyOptions opt;
    opt.n_max = c.n_max;
    opt.jobs = c.jobs;
    if (r_given) {
        check_bounds(c, c.n_max, c.r);
        opt.r_values = {c.r};
    } else if (c.r_max > 0) {
        check_bounds(c, c.n_max, c.r_max);
        opt.r_values.clear();
        for (int r = 1; r <= c.r_max; ++r) opt.r_values.push_back(r);
    } else {
        check_bounds(c, c.n_max, 3);
    }
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw UsageError("unknown suite '" + c.suite + "'");
    std::cerr << "verify suite=" << c.suite << " n-max=" << c.n_max << "\n";
    auto results = run_suite(c.suite, opt);
    for (const auto& res : results) std::cerr << (res.ok ? "  pass " : "  FAIL ") << res.name << "\n";
    nlohmann::json report = report_to_json(c.suite, results);
    emit(c, report.dump(1) + "\n");
    return report["ok"].get<bool>() ? 0 : 1;
}

int cmd_specialize(const RunConfig& c) {
    if (c.in.empty()) throw UsageError("--in is required");
    std::ifstream f(c.in, std::ios::binary);
    if (!f) throw UsageError("cannot read " + c.in);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    KostkaTable t;
    try {
        if (!text.empty() && text[0] == '#') {
            t = table_from_csv(text);
        } else {
            t = table_from_json(nlohmann::json::parse(text));
        }
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse table: ") + e.what());
    }
    KostkaTable s;
    try {
        s = specialize(t, c.params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad assignment: ") + e.what());
    }
    s.source = c.in;
    emit(c, render(c, s));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-parameter Hall-Littlewood functions and Kostka functions"};
    app.set_config("--config", "", "Read options from a TOML/INI file (flags win)");
    app.require_subcommand(1);
    RunConfig c;
    if (const char* env = std::getenv("KOSTKA_CACHE")) c.cache_dir = env;

    app.add_option("--n", c.n, "Size n");
    auto* r_opt = app.add_option("--r", c.r, "Number of components r");
    app.add_option("--sign", c.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus", "+", "-"}));
    app.add_option("--method", c.method, "solve, pf, gram-schmidt or raising")
        ->check(CLI::IsMember({"solve", "pf", "gram-schmidt", "raising"}));
    app.add_option("--m", c.m, "Padding for the partition-function method")->check(CLI::NonNegativeNumber);
    app.add_option("--params", c.params, "Parameter assignment, e.g. \"t1=t,t2=t\"");
    app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", c.out, "Output path (default: standard output)");
    app.add_option("--in", c.in, "Input table (specialize)");
    app.add_option("--suite", c.suite, "Verification suite");
    app.add_option("--n-max", c.n_max, "Largest n for verification");
    app.add_option("--r-max", c.r_max, "Verify r = 1..r-max");
    app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", c.cache_dir, "Table cache directory (env KOSTKA_CACHE)");
    app.add_flag("--allow-large", c.allow_large, "Lift the n <= 8, r <= 4 bounds; runtime may be very long");

    auto* table = app.add_subcommand("table", "Compute a Kostka table")->fallthrough();
    auto* verify = app.add_subcommand("verify", "Run verification suites")->fallthrough();
    auto* spec = app.add_subcommand("specialize", "Substitute parameters in a stored table")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return cmd_table(c);
        if (verify->parsed()) return cmd_verify(c, r_opt->count() > 0);
        if (spec->parsed()) return cmd_specialize(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InexactDivision& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
