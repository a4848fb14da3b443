#include "ehall/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "ehall/cache.hpp"
#include "ehall/checks.hpp"
#include "ehall/conventions.hpp"
#include "ehall/ctengine.hpp"
#include "ehall/io.hpp"
#include "ehall/macdonald.hpp"
#include "ehall/operators.hpp"
#include "ehall/rectcomb.hpp"

namespace ehall {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<int, int> int_pair(const std::string& text, const char* what)
{
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            throw std::invalid_argument(text);
        }
        std::size_t used = 0;
        const int a = std::stoi(text.substr(0, comma), &used);
        if (used != comma) {
            throw std::invalid_argument(text);
        }
        const std::string rest = text.substr(comma + 1);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument(text);
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError(std::string(what) + " expects two integers A,B, got \"" + text + "\"");
    }
}

struct Specialized {
    SymFun value;
    std::string tname = "t";
    std::vector<Partition> poles;
};

Specialized specialize_at(const SymFun& f, const std::string& at)
{
    Specialized r{f, "t", {}};
    if (at.empty()) {
        return r;
    }
    Substitution sub;
    if (at == "t=1") {
        sub = Substitution::t_one();
    } else if (at == "q=1") {
        sub = Substitution::q_one();
    } else if (at == "qt=1" || at == "q=t=1") {
        sub = Substitution::qt_one();
    } else if (at == "t=1+r") {
        sub = Substitution::t_one_plus_r();
        r.tname = "r";
    } else if (at == "t=1/q") {
        sub = Substitution::t_inverse_q();
    } else {
        throw UsageError("unknown specialization \"" + at + "\" (use t=1, q=1, qt=1, t=1+r or t=1/q)");
    }
    SymFun out(f.basis());
    for (const auto& [mu, c] : f.terms()) {
        try {
            out.add_term(mu, specialize(c, sub));
        } catch (const PoleError&) {
            r.poles.push_back(mu);
        }
    }
    r.value = std::move(out);
    return r;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool latex = false;
    bool no_cache = false;

    void emit(const SymFun& f, const std::string& tname = "t", const std::vector<Partition>& poles = {}) const
    {
        if (latex) {
            out << to_latex(f, tname) << '\n';
            for (const auto& mu : poles) {
                err << "pole in coefficient of " << mu.to_string() << '\n';
            }
            return;
        }
        auto j = to_json(f, tname);
        if (!poles.empty()) {
            j["poles"] = nlohmann::json::array();
            for (const auto& mu : poles) {
                j["poles"].push_back(mu.parts());
            }
        }
        out << j.dump() << '\n';
    }

    /// Looks up op/params in the cache, computing and storing on a miss.
    SymFun cached(const std::string& op, const std::string& params, const std::function<SymFun()>& compute) const
    {
        if (no_cache) {
            return compute();
        }
        const Cache cache = Cache::from_env();
        const std::string key = cache.key(op, params);
        if (auto hit = cache.get(key, &err)) {
            try {
                return symfun_from_json(nlohmann::json::parse(*hit));
            } catch (const std::exception& e) {
                err << "warning: ignoring unreadable cache value (" << e.what() << ")\n";
            }
        }
        const auto start = std::chrono::steady_clock::now();
        SymFun f = compute();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        try {
            cache.put(key, to_json(f).dump(), ms);
        } catch (const std::exception& e) {
            err << "warning: cache write failed (" << e.what() << ")\n";
        }
        return f;
    }
};

std::string canonical(const SymFun& f)
{
    return to_json(f).dump();
}

int cmd_check(const Context& ctx, const std::string& name, const std::string& grid_text, const std::string& report)
{
    const auto [gm, gn] = int_pair(grid_text, "--grid");
    const Grid grid{gm, gn};
    std::vector<std::string> names;
    if (name == "all") {
        names = check_names();
    } else {
        const auto& known = check_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw UsageError("unknown check \"" + name + "\"");
        }
        names.push_back(name);
    }
    std::vector<Verdict> all;
    for (const auto& n : names) {
        auto vs = run_check(n, grid);
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& v : vs) {
            ++counts[static_cast<int>(v.status)];
        }
        ctx.err << n << ": " << vs.size() << " cases, " << counts[0] << " hold, " << counts[2] << " reported, " << counts[1]
                << " fail\n";
        all.insert(all.end(), std::make_move_iterator(vs.begin()), std::make_move_iterator(vs.end()));
    }
    const std::string json = report_json(all);
    if (report.empty()) {
        ctx.out << json << '\n';
    } else {
        std::ofstream f(report);
        f << json << '\n';
        if (!f) {
            throw std::runtime_error("cannot write report " + report);
        }
    }
    return report_ok(all) ? exit_ok : exit_verification;
}

int cmd_dyck(const Context& ctx, int m, int n, const std::string& returns, bool enumerator, bool parking_fns)
{
    if (m < 1 || n < 1) {
        throw UsageError("dyck expects positive M and N");
    }
    std::optional<Composition> alpha;
    if (!returns.empty()) {
        std::vector<int> parts;
        std::stringstream ss(returns);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                parts.push_back(std::stoi(item));
            } catch (const std::logic_error&) {
                throw UsageError("--returns expects a comma-separated composition");
            }
        }
        alpha = Composition(parts);
        if (alpha->size() != std::gcd(m, n)) {
            throw UsageError("--returns must be a composition of gcd(M,N) = " + std::to_string(std::gcd(m, n)));
        }
    }
    if (enumerator) {
        ctx.emit(path_enumerator(m, n, alpha));
        return exit_ok;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : enumerate_paths(m, n, alpha)) {
        if (!parking_fns) {
            arr.push_back(p.to_string());
            continue;
        }
        for (const auto& pf : parking(p)) {
            arr.push_back({{"path", p.to_string()},
                           {"labels", pf.labels},
                           {"word", pf.word()},
                           {"descent", descent_comp(pf).parts()}});
        }
    }
    ctx.out << arr.dump() << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Elliptic Hall algebra operators on symmetric functions", "ehall"};
    app.require_subcommand(1);
    Context ctx{out, err};
    app.add_flag("--latex", ctx.latex, "Paper-style LaTeX output instead of JSON");
    app.add_flag("--no-cache", ctx.no_cache, "Bypass the result cache");

    std::string expr;
    std::string basis = "s";
    auto* expand = app.add_subcommand("expand", "Expand an expression in a basis");
    expand->add_option("expr", expr, "Expression, e.g. \"e[2] + q*s[11]\"")->required();
    expand->add_option("--basis", basis, "Target basis: s e h p m q");

    std::string seed;
    std::string ab;
    std::string arg;
    std::string at;
    auto* theta_cmd = app.add_subcommand("theta", "Theta_{a,b}(seed) applied to 1 or to --arg");
    theta_cmd->add_option("--seed", seed, "Seed expression")->required();
    theta_cmd->add_option("--ab", ab, "Slope A,B with gcd 1")->required();
    theta_cmd->add_option("--arg", arg, "Argument (default 1)");
    theta_cmd->add_option("--at", at, "Specialization: t=1, q=1, qt=1, t=1+r, t=1/q");
    theta_cmd->add_option("--basis", basis, "Output basis");

    int power = 1;
    auto* nabla_cmd = app.add_subcommand("nabla", "nabla^P of an expression");
    nabla_cmd->add_option("--power", power, "Exponent, may be negative");
    nabla_cmd->add_option("expr", expr, "Expression")->required();
    nabla_cmd->add_option("--basis", basis, "Output basis");

    int m = 0;
    int n = 0;
    std::string returns;
    bool enumerator = false;
    bool parking_fns = false;
    auto* dyck = app.add_subcommand("dyck", "(M,N)-Dyck paths");
    dyck->add_option("M", m)->required();
    dyck->add_option("N", n)->required();
    dyck->add_option("--returns", returns, "Composition of gcd(M,N) fixing the returns to the diagonal");
    dyck->add_flag("--enumerator", enumerator, "Sum of q^area e_risers instead of the path list");
    dyck->add_flag("--parking", parking_fns, "List parking functions");

    bool primitive = false;
    auto* ct = app.add_subcommand("ct", "Constant-term formula at t = 1");
    ct->add_option("M", m)->required();
    ct->add_option("N", n)->required();
    ct->add_flag("--primitive", primitive, "Paths without interior returns");

    std::string check_name;
    std::string grid = "6,6";
    std::string report;
    auto* check = app.add_subcommand("check", "Run a named check (or all) over a grid");
    check->add_option("name", check_name, "Check name or \"all\"")->required();
    check->add_option("--grid", grid, "Bounds M,N on ad and bd");
    check->add_option("--report", report, "Write the JSON report here instead of stdout");

    std::string action;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
    cache_cmd->add_option("action", action, "stats or clear")->required()->check(CLI::IsMember({"stats", "clear"}));

    for (auto* sub : {expand, theta_cmd, nabla_cmd, dyck, ct, check, cache_cmd}) {
        sub->fallthrough();
    }

    std::vector<std::string> argv_store{"ehall"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (expand->parsed()) {
            ctx.emit(convert(parse_expr(expr), parse_basis(basis)));
        } else if (theta_cmd->parsed()) {
            const auto [a, b] = int_pair(ab, "--ab");
            if (b < 1 || std::gcd(a, b) != 1) {
                throw UsageError("--ab needs b >= 1 and gcd(a,b) = 1");
            }
            const SymFun f = parse_expr(seed);
            const std::optional<SymFun> g = arg.empty() ? std::nullopt : std::optional<SymFun>(parse_expr(arg));
            const Basis target = parse_basis(basis);
            std::string params = "a=" + std::to_string(a) + ";b=" + std::to_string(b) + ";seed=" + canonical(f);
            if (g) {
                params += ";arg=" + canonical(*g);
            }
            const SymFun r = ctx.cached("theta", params, [&] {
                return g ? convert(theta(a, b, f, *g), Basis::s) : convert(slope_image(a, b, f), Basis::s);
            });
            const Specialized sp = specialize_at(r, at);
            ctx.emit(convert(sp.value, target), sp.tname, sp.poles);
        } else if (nabla_cmd->parsed()) {
            const SymFun f = parse_expr(expr);
            const std::string params = "power=" + std::to_string(power) + ";f=" + canonical(f);
            const SymFun r = ctx.cached("nabla", params, [&] { return nabla(f, power); });
            ctx.emit(convert(r, parse_basis(basis)));
        } else if (dyck->parsed()) {
            return cmd_dyck(ctx, m, n, returns, enumerator, parking_fns);
        } else if (ct->parsed()) {
            if (m < 1 || n < 1) {
                throw UsageError("ct expects positive M and N");
            }
            const std::string params = "m=" + std::to_string(m) + ";n=" + std::to_string(n) + ";primitive=" + (primitive ? "1" : "0");
            ctx.emit(ctx.cached("ct", params, [&] { return ct_t1(m, n, primitive); }));
        } else if (check->parsed()) {
            return cmd_check(ctx, check_name, grid, report);
        } else if (cache_cmd->parsed()) {
            const Cache cache = Cache::from_env();
            if (action == "stats") {
                const auto s = cache.stats();
                out << nlohmann::json{{"dir", cache.dir().string()},
                                      {"version", conventions::cache_version},
                                      {"entries", s.entries},
                                      {"bytes", s.bytes}}
                           .dump()
                    << '\n';
            } else {
                out << nlohmann::json{{"removed", cache.clear()}}.dump() << '\n';
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

} // namespace ehall
