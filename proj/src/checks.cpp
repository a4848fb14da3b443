#include "ehall/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "ehall/macdonald.hpp"
#include "ehall/operators.hpp"
#include "ehall/rectcomb.hpp"
#include "json.hpp"

namespace ehall {

namespace {

bool nonnegative_integral(const QTScalar& c)
{
    if (!c.is_polynomial()) {
        return false;
    }
    for (const auto& term : c.num().terms()) {
        if (sgn(term.coeff) < 0 || term.coeff.get_den() != 1) {
            return false;
        }
    }
    return true;
}

Verdict positivity(const SymFun& f, Basis b, const char* name)
{
    Verdict v;
    v.name = name;
    const SymFun g = convert(f, b);
    for (const auto& [mu, c] : g.terms()) {
        if (!nonnegative_integral(c)) {
            v.status = Status::fails;
            v.witness = Witness{mu, c};
            break;
        }
    }
    return v;
}

QTScalar mqt_pow(int e)
{
    return (-(QTScalar::q() * QTScalar::t())).pow(e);
}

SymFun normalized_schur(const Partition& mu)
{
    return schur(mu) * mqt_pow(-mu.iota());
}

SymFun signed_monomial(const Partition& mu)
{
    const SymFun m = monomial_sym(mu);
    return (mu.size() - mu.length()) % 2 == 0 ? m : -m;
}

/// N_j = (-qt)^{-j} s_{(j|k)} with j + k = d - 1.
SymFun normalized_hook(int j, int d)
{
    return hook_schur(j, d - 1 - j) * mqt_pow(-j);
}

struct Slope {
    int a, b, d;
};

std::vector<Slope> slopes(const Grid& g)
{
    std::vector<Slope> out;
    for (int a = 1; a <= g.max_m; ++a) {
        for (int b = 1; b <= g.max_n; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            for (int d = 1; a * d <= g.max_m && b * d <= g.max_n; ++d) {
                out.push_back({a, b, d});
            }
        }
    }
    return out;
}

using Params = std::map<std::string, std::string>;

Params slope_params(const Slope& s)
{
    return {{"a", std::to_string(s.a)}, {"b", std::to_string(s.b)}, {"d", std::to_string(s.d)}};
}

Params mn_params(int m, int n)
{
    return {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
}

std::string comp_string(const Composition& c)
{
    std::string out;
    for (const int p : c.parts()) {
        out += (out.empty() ? "" : ",") + std::to_string(p);
    }
    return out;
}

struct Task {
    Params params;
    std::function<Verdict()> run;
};

/// Verdict for lhs = rhs; the witness is the first term of lhs - rhs.
Verdict equality(const SymFun& lhs, const SymFun& rhs)
{
    Verdict v;
    const SymFun diff = lhs - rhs;
    if (!diff.is_zero()) {
        const auto& [mu, c] = *diff.terms().begin();
        v.status = Status::fails;
        v.witness = Witness{mu, c};
    }
    return v;
}

Verdict scalar_equality(const QTScalar& got, const QTScalar& want, const Partition& mu)
{
    Verdict v;
    if (got != want) {
        v.status = Status::fails;
        v.witness = Witness{mu, got};
        v.note = "expected " + want.to_string();
    }
    return v;
}

Verdict shifted_inclusion(const SymFun& lhs, const SymFun& rhs, int shift)
{
    return is_schur_positive(rhs - lhs * QTScalar::q().pow(shift));
}

const Substitution& one_plus_r()
{
    static const Substitution s = Substitution::t_one_plus_r();
    return s;
}

SymFun e_mn(int m, int n)
{
    return family_mn(m, n, elementary);
}

/// (-qt)^{1-d} h_{m,n}.
SymFun h_mn(int m, int n)
{
    return family_mn(m, n, complete) * mqt_pow(1 - std::gcd(m, n));
}

/// Seeds used for the transpose check: normalized Schur, signed monomial and C_alpha(1).
std::vector<std::pair<std::string, SymFun>> transpose_seeds(int d)
{
    std::vector<std::pair<std::string, SymFun>> out;
    for (const auto& mu : partitions_of(d)) {
        out.emplace_back("s" + mu.to_string(), normalized_schur(mu));
    }
    for (const auto& mu : partitions_of(d)) {
        out.emplace_back("m" + mu.to_string(), signed_monomial(mu));
    }
    for (const auto& alpha : compositions_of(d)) {
        out.emplace_back("C(" + comp_string(alpha) + ")", c_alpha(alpha));
    }
    return out;
}

std::vector<Task> build_tasks(const std::string& name, const Grid& g)
{
    std::vector<Task> tasks;
    const auto add = [&](Params p, std::function<Verdict()> fn) { tasks.push_back({std::move(p), std::move(fn)}); };
    const auto t1 = Substitution::t_one();
    const auto qt1 = Substitution::qt_one();

    if (name == "schur-seed" || name == "monomial-seed" || name == "epos-m-r") {
        for (const auto& sl : slopes(g)) {
            for (const auto& mu : partitions_of(sl.d)) {
                Params p = slope_params(sl);
                p["mu"] = mu.to_string();
                add(p, [=] {
                    if (name == "schur-seed") {
                        return is_schur_positive(slope_image(sl.a, sl.b, normalized_schur(mu)));
                    }
                    const SymFun f = slope_image(sl.a, sl.b, signed_monomial(mu));
                    if (name == "monomial-seed") {
                        return is_schur_positive(f);
                    }
                    return is_e_positive(specialize(f, one_plus_r()));
                });
            }
        }
    } else if (name == "incl-e" || name == "incl-eh") {
        for (int m = 2; m <= g.max_m; ++m) {
            for (int n = 1; n <= g.max_n; ++n) {
                const int shift = name == "incl-e" ? shift_alpha(m, n) : shift_beta(m, n);
                Params p = mn_params(m, n);
                p["shift"] = std::to_string(shift);
                add(p, [=] {
                    const SymFun rhs = name == "incl-e" ? e_mn(m, n) : h_mn(m, n);
                    return shifted_inclusion(e_mn(m - 1, n), rhs, shift);
                });
            }
        }
    } else if (name == "incl-bar" || name == "incl-eh-bar") {
        for (int m = 1; m <= g.max_m; ++m) {
            for (int n = 2; n <= g.max_n; ++n) {
                const int d = std::gcd(m, n);
                const int predicted = name == "incl-bar" ? shift_alpha_prime(m, n) : shift_alpha_prime(m, n) - d + 1;
                Params p = mn_params(m, n);
                p["predicted"] = std::to_string(predicted);
                add(p, [=] {
                    const SymFun lhs = bar(e_mn(m, n - 1));
                    const SymFun rhs = name == "incl-bar" ? bar(e_mn(m, n)) : bar(h_mn(m, n));
                    const int limit = std::max(predicted, 0) + 4;
                    const int best = max_shift(lhs, rhs, limit);
                    Verdict v = shifted_inclusion(lhs, rhs, std::max(predicted, 0));
                    v.params["max_shift"] = std::to_string(best);
                    v.note = "empirical maximal shift " + std::to_string(best) + ", predicted " + std::to_string(predicted);
                    return v;
                });
            }
        }
    } else if (name == "incl-hook" || name == "epos-hook-r") {
        for (const auto& sl : slopes(g)) {
            for (int j = 0; j + 1 < sl.d; ++j) {
                Params p = slope_params(sl);
                p["j"] = std::to_string(j);
                add(p, [=] {
                    const SymFun diff = slope_image(sl.a, sl.b, normalized_hook(j, sl.d))
                        - slope_image(sl.a, sl.b, normalized_hook(j + 1, sl.d)) * QTScalar::q();
                    return name == "incl-hook" ? is_schur_positive(diff) : is_e_positive(specialize(diff, one_plus_r()));
                });
            }
        }
    } else if (name == "epos-h") {
        for (const auto& sl : slopes(g)) {
            add(slope_params(sl), [=] {
                const SymFun f = slope_image(sl.a, sl.b, complete(sl.d)) * mqt_pow(1 - sl.d);
                return is_e_positive(specialize(f, one_plus_r()));
            });
        }
    } else if (name == "epos-e-r") {
        for (int m = 2; m <= g.max_m; ++m) {
            for (int n = 1; n <= g.max_n; ++n) {
                for (const std::string form : {"e", "eh"}) {
                    const int shift = form == "e" ? shift_alpha(m, n) : shift_beta(m, n);
                    Params p = mn_params(m, n);
                    p["form"] = form;
                    p["shift"] = std::to_string(shift);
                    add(p, [=] {
                        const SymFun rhs = form == "e" ? e_mn(m, n) : h_mn(m, n);
                        const SymFun diff = rhs - e_mn(m - 1, n) * QTScalar::q().pow(shift);
                        return is_e_positive(specialize(diff, one_plus_r()));
                    });
                }
            }
        }
    } else if (name == "transpose") {
        const int bound = std::min(g.max_m, g.max_n);
        for (const auto& sl : slopes({bound, bound})) {
            if (sl.b <= sl.a) {
                continue;
            }
            for (const auto& [label, seed] : transpose_seeds(sl.d)) {
                Params p = slope_params(sl);
                p["seed"] = label;
                add(p, [=, seed = seed] {
                    return is_schur_positive(bar(slope_image(sl.a, sl.b, seed)) - bar(slope_image(sl.b, sl.a, seed)));
                });
            }
        }
    } else if (name == "t1-mult") {
        for (const auto& sl : slopes(g)) {
            for (const auto& nu : {Partition{1}, Partition{2}, Partition{1, 1}}) {
                if (sl.b * sl.d + nu.size() > g.max_n) {
                    continue;
                }
                Params p = slope_params(sl);
                p["form"] = "operator";
                p["g"] = nu.to_string();
                add(p, [=] {
                    const SymFun arg = schur(nu);
                    const SymFun lhs = specialize(theta(sl.a, sl.b, elementary(sl.d), arg), t1);
                    return equality(lhs, specialize(slope_image(sl.a, sl.b, elementary(sl.d)), t1) * arg);
                });
            }
            for (int i = 1; 2 * i <= sl.d; ++i) {
                Params p = slope_params(sl);
                p["form"] = "product";
                p["split"] = std::to_string(i) + "+" + std::to_string(sl.d - i);
                add(p, [=] {
                    const auto img = [&](const SymFun& f) { return specialize(slope_image(sl.a, sl.b, f), t1); };
                    return equality(img(elementary(i) * elementary(sl.d - i)), img(elementary(i)) * img(elementary(sl.d - i)));
                });
            }
        }
    } else if (name == "retours") {
        for (const auto& sl : slopes(g)) {
            for (const auto& alpha : compositions_of(sl.d)) {
                Params p = slope_params(sl);
                p["alpha"] = comp_string(alpha);
                add(p, [=] {
                    const SymFun lhs = specialize(slope_image(sl.a, sl.b, c_alpha(alpha)), t1);
                    return equality(lhs, path_enumerator(sl.a * sl.d, sl.b * sl.d, alpha));
                });
            }
        }
    } else if (name == "dim-delta" || name == "dim-eps" || name == "qt1-formula") {
        for (const auto& sl : slopes(g)) {
            for (const auto& mu : partitions_of(sl.d)) {
                Params p = slope_params(sl);
                p["mu"] = mu.to_string();
                add(p, [=] {
                    const SymFun f = specialize(slope_image(sl.a, sl.b, SymFun(Basis::q, mu)), qt1);
                    const int a = sl.a;
                    const int b = sl.b;
                    if (name == "dim-delta") {
                        // n!/prod (bk)! * prod (ak)^{bk} / a
                        mpz_class want = 1;
                        for (int i = 2; i <= b * sl.d; ++i) {
                            want *= i;
                        }
                        for (const int k : mu.parts()) {
                            mpz_class pw;
                            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a * k), static_cast<unsigned long>(b * k));
                            for (int i = 2; i <= b * k; ++i) {
                                want /= i;
                            }
                            want = want * pw / a;
                        }
                        return scalar_equality(delta_dim(f), QTScalar(mpq_class(want)), mu);
                    }
                    if (name == "dim-eps") {
                        mpq_class want = 1;
                        for (const int k : mu.parts()) {
                            mpq_class c(binomial((a + b) * k, b * k), mpz_class(a + b));
                            c.canonicalize();
                            want *= c;
                        }
                        return scalar_equality(eps_dim(f), QTScalar(want), mu);
                    }
                    SymFun want = SymFun::constant(1, Basis::e);
                    for (const int k : mu.parts()) {
                        want = want * q_at_one(a, b, k);
                    }
                    return equality(f, want);
                });
            }
            Params p = slope_params(sl);
            if (name == "qt1-formula") {
                p["form"] = "power-sum";
                add(p, [=] {
                    const SymFun qd = specialize(slope_image(sl.a, sl.b, qfun(sl.d)), qt1);
                    const SymFun pd = specialize(slope_image(sl.a, sl.b, power_sum(sl.d)), qt1);
                    return equality(qd, sl.d % 2 == 1 ? pd : -pd);
                });
            }
        }
    }
    return tasks;
}

int thread_count()
{
    const char* env = std::getenv("EHALL_THREADS");
    if (env == nullptr) {
        return 1;
    }
    const int n = std::atoi(env);
    return n > 0 ? n : 1;
}

} // namespace

const char* status_name(Status s)
{
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::reported: return "reported";
    }
    return "?";
}

Verdict is_schur_positive(const SymFun& f)
{
    return positivity(f, Basis::s, "schur-positive");
}

Verdict is_e_positive(const SymFun& f)
{
    return positivity(f, Basis::e, "e-positive");
}

int shift_alpha(int m, int n)
{
    int a = 0;
    for (int k = 1; k <= n; ++k) {
        a += (k - 1) * m / n - (k - 1) * (m - 1) / n;
    }
    return a;
}

int shift_alpha_prime(int m, int n)
{
    return shift_alpha(n, m);
}

int shift_beta(int m, int n)
{
    return shift_alpha(m, n) - std::gcd(m, n) + 1;
}

QTScalar delta_dim(const SymFun& f)
{
    QTScalar out;
    for (const int d : f.degrees()) {
        SymFun p1n = SymFun::constant(1, Basis::p);
        for (int i = 0; i < d; ++i) {
            p1n = p1n * power_sum(1);
        }
        out += hall_scalar(p1n, f.homogeneous_part(d));
    }
    return out;
}

QTScalar eps_dim(const SymFun& f)
{
    QTScalar out;
    for (const int d : f.degrees()) {
        out += hall_scalar(d == 0 ? SymFun::constant(1, Basis::e) : elementary(d), f.homogeneous_part(d));
    }
    return out;
}

SymFun slope_image(int a, int b, const SymFun& f)
{
    if (b >= 1 && a >= b) {
        const int r = a % b;
        const SymFun base = r == 0 ? f : theta(r, b, f);
        return nabla(base, a / b);
    }
    return theta(a, b, f);
}

SymFun family_mn(int m, int n, SymFun (*seed)(int))
{
    if (m == 0) {
        return seed(n);
    }
    const int d = std::gcd(m, n);
    return slope_image(m / d, n / d, seed(d));
}

int max_shift(const SymFun& lhs, const SymFun& rhs, int limit)
{
    const SymFun l = convert(lhs, Basis::s);
    const SymFun r = convert(rhs, Basis::s);
    for (int s = limit; s >= 0; --s) {
        if (shifted_inclusion(l, r, s).status == Status::holds) {
            return s;
        }
    }
    return -1;
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "schur-seed", "monomial-seed", "incl-e",   "incl-bar", "incl-hook", "incl-eh",   "incl-eh-bar", "transpose",  "t1-mult",
        "epos-h",     "epos-hook-r",   "epos-m-r", "epos-e-r", "retours",   "dim-delta", "dim-eps",     "qt1-formula",
    };
    return names;
}

bool is_conjectural(const std::string& name)
{
    return name != "dim-delta" && name != "dim-eps" && name != "qt1-formula";
}

std::vector<Verdict> run_check(const std::string& name, const Grid& grid)
{
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown check: " + name);
    }
    if (grid.max_m < 1 || grid.max_n < 1) {
        throw std::invalid_argument("grid bounds must be positive");
    }
    const std::vector<Task> tasks = build_tasks(name, grid);
    std::vector<Verdict> out(tasks.size());
    const bool conjectural = is_conjectural(name);

    const auto run_one = [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = tasks[i].run();
        } catch (const PoleError& err) {
            v = Verdict{};
            v.status = Status::reported;
            v.note = err.what();
        }
        v.name = name;
        for (const auto& [k, val] : tasks[i].params) {
            v.params.emplace(k, val);
        }
        if (v.status == Status::fails && conjectural) {
            v.status = Status::reported;
        }
        v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out[i] = std::move(v);
    };

    const int nthreads = std::min<int>(thread_count(), static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            run_one(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int k = 0; k < nthreads; ++k) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                try {
                    run_one(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

std::string report_json(const std::vector<Verdict>& vs)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vs) {
        nlohmann::json j;
        j["name"] = v.name;
        j["params"] = v.params;
        j["status"] = status_name(v.status);
        j["conjectural"] = is_conjectural(v.name);
        if (v.witness) {
            j["witness"] = {{"partition", v.witness->mu.parts()}, {"coeff", v.witness->coeff.to_string()}};
        }
        j["runtimeMillis"] = v.runtime_ms;
        if (!v.note.empty()) {
            j["note"] = v.note;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

bool report_ok(const std::vector<Verdict>& vs)
{
    return std::none_of(vs.begin(), vs.end(),
                        [](const Verdict& v) { return v.status == Status::fails && !is_conjectural(v.name); });
}

} // namespace ehall
