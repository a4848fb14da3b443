#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "ehall/checks.hpp"
#include "ehall/macdonald.hpp"
#include "ehall/operators.hpp"
#include "ehall/rectcomb.hpp"
#include "json.hpp"

using namespace ehall;

namespace {

const QTScalar q = QTScalar::q();
const QTScalar t = QTScalar::t();

SymFun s(std::initializer_list<int> mu)
{
    return schur(Partition(mu));
}

SymFun e(std::initializer_list<int> mu)
{
    return SymFun(Basis::e, Partition(mu));
}

SymFun normalized_schur(const Partition& mu)
{
    return schur(mu) * (-(q * t)).pow(-mu.iota());
}

SymFun p1_power(int n)
{
    SymFun r = SymFun::constant(1, Basis::p);
    for (int i = 0; i < n; ++i) {
        r = r * power_sum(1);
    }
    return r;
}

mpz_class factorial(int n)
{
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// Truncated power series in z with SymFun coefficients.
using Series = std::vector<SymFun>;

Series series_mul(const Series& a, const Series& b)
{
    const std::size_t N = a.size();
    Series r(N, SymFun(Basis::e));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; i + j < N; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series series_exp(const Series& arg)
{
    const std::size_t N = arg.size();
    Series result(N, SymFun(Basis::e));
    result[0] = SymFun::constant(1, Basis::e);
    Series power = result;
    mpz_class fact = 1;
    for (std::size_t j = 1; j < N; ++j) {
        power = series_mul(power, arg);
        fact *= static_cast<unsigned long>(j);
        for (std::size_t i = 0; i < N; ++i) {
            result[i] += power[i] * QTScalar(mpq_class(1, fact));
        }
    }
    return result;
}

} // namespace

TEST_CASE("positivity predicates")
{
    CHECK(is_schur_positive(nabla(elementary(2))).status == Status::holds);

    const Verdict v = is_schur_positive(qfun(2));
    CHECK(v.status == Status::fails);
    REQUIRE(v.witness);
    CHECK(v.witness->mu == Partition{2});
    CHECK(v.witness->coeff == -(q * t).pow(-1));

    const Verdict w = is_e_positive(s({2}));
    CHECK(w.status == Status::fails);
    REQUIRE(w.witness);
    CHECK(w.witness->mu == Partition{2});
    CHECK(w.witness->coeff == QTScalar(-1));

    CHECK(is_e_positive(e({2}) * q + e({1, 1})).status == Status::holds);
    CHECK(is_schur_positive(s({2}) * QTScalar(mpq_class(1, 2))).status == Status::fails);
    CHECK(is_schur_positive(s({2}) * (QTScalar(1) - q).pow(-1)).status == Status::fails);
    CHECK(is_schur_positive(s({1}) * (q - t)).status == Status::fails);
    CHECK(is_schur_positive(SymFun(Basis::s)).status == Status::holds);
}

TEST_CASE("staircase shifts")
{
    CHECK(shift_alpha(5, 4) == 0);
    CHECK(shift_alpha_prime(4, 6) == 2);
    CHECK(shift_beta(6, 4) == shift_alpha(6, 4) - 1);
    // alpha counts the cells between the two staircases
    for (int m = 2; m <= 9; ++m) {
        for (int n = 1; n <= 9; ++n) {
            const auto hi = staircase(m, n).word;
            const auto lo = staircase(m - 1, n).word;
            const int cells = std::accumulate(hi.begin(), hi.end(), 0) - std::accumulate(lo.begin(), lo.end(), 0);
            CHECK(shift_alpha(m, n) == cells);
            CHECK(shift_beta(m, n) == cells - std::gcd(m, n) + 1);
        }
    }
}

TEST_CASE("dimension functionals")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(delta_dim(complete(n)) == QTScalar(1));
        CHECK(eps_dim(elementary(n)) == QTScalar(1));
        CHECK(delta_dim(p1_power(n)) == QTScalar(mpq_class(factorial(n))));
    }
    // (2/4) binom(4,2)
    const SymFun q2 = specialize(slope_image(1, 1, qfun(2)), Substitution::qt_one());
    CHECK(eps_dim(q2) == QTScalar(3));
    CHECK(eps_dim(q2) == hall_scalar(elementary(2), q2));
}

TEST_CASE("slope images agree with theta")
{
    const std::vector<std::pair<int, int>> slopes{{1, 1}, {2, 1}, {3, 2}, {1, 2}, {5, 3}};
    for (const auto& [a, b] : slopes) {
        for (int d = 1; a * d <= 5 && b * d <= 4; ++d) {
            CHECK(slope_image(a, b, elementary(d)) == theta(a, b, elementary(d)));
        }
    }
    CHECK(family_mn(0, 3, elementary) == elementary(3));
    CHECK(family_mn(4, 6, elementary) == theta(2, 3, elementary(2)));
}

TEST_CASE("maximal shift")
{
    CHECK(max_shift(s({2}), s({2}) * q.pow(2) + s({1, 1}), 5) == 2);
    CHECK(max_shift(s({2}), s({1, 1}), 5) == -1);
    CHECK(max_shift(SymFun(Basis::s), s({1}), 3) == 3);
}

TEST_CASE("printed consecutive hook differences")
{
    const auto N = [](std::initializer_list<int> mu) { return slope_image(1, 1, normalized_schur(Partition(mu))); };
    const SymFun d1 = N({3, 1}) - N({4}) * q;
    CHECK(d1 == s({2, 2}) * t.pow(2) + s({3, 1}) * t + s({2, 1, 1}) * (t * (t * t + q + t))
              + s({1, 1, 1, 1}) * (t * t * (t * t + q)));
    const SymFun d2 = N({2, 1, 1}) - N({3, 1}) * q;
    CHECK(d2 == s({3, 1}) * t.pow(2) + s({2, 2}) * (t * (t * t + q)) + s({2, 1, 1}) * (t * t * (t * t + q + t))
              + s({1, 1, 1, 1}) * (t.pow(3) * (t * t + q)));
    const SymFun d3 = N({1, 1, 1, 1}) - N({2, 1, 1}) * q;
    CHECK(d3.coeff(Partition{4}) == QTScalar(1));
    CHECK(d3 == s({4}) + s({2, 2}) * (t.pow(4) + q * t * t + q * q + q * t + t * t)
              + s({3, 1}) * (t.pow(3) + q * q + q * t + t * t + q + t)
              + s({2, 1, 1}) * (t.pow(5) + q * t.pow(3) + t.pow(4) + q.pow(3) + 2 * q * q * t + 2 * q * t * t + t.pow(3) + q * t)
              + s({1, 1, 1, 1}) * (t * (t.pow(5) + q * t.pow(3) + q.pow(3) + q * q * t + q * t * t)));
}

TEST_CASE("printed transpose example")
{
    const SymFun lo = bar(slope_image(5, 3, elementary(1)));
    CHECK(lo == s({2}) * (q + t) + s({1}) * ((q + t) * (q * q + t * t + q + t))
              + SymFun::constant(q.pow(4) + q.pow(3) * t + q * q * t * t + q * t.pow(3) + t.pow(4) + q * q * t + q * t * t));
    const SymFun hi = bar(slope_image(3, 5, elementary(1)));
    CHECK(hi - lo == s({2, 1}) + s({1, 1}) * (q * q + q * t + t * t + q + t));
}

TEST_CASE("printed bar inclusion example")
{
    const SymFun diff = bar(family_mn(4, 6, elementary)) - bar(family_mn(4, 5, elementary)) * q.pow(2);
    const SymFun want
        = SymFun::constant(q * t.pow(7) + t.pow(8) + q * q * t.pow(5) + q * t.pow(6) + q.pow(4) * t * t + q.pow(3) * t.pow(3)
                           + 2 * q * q * t.pow(4) + q * t.pow(5))
        + s({1}) * (t * (q + t) * (t.pow(5) + q * t.pow(3) + t.pow(4) + q.pow(3) + q * q * t + 2 * q * t * t + t.pow(3) + q * t))
        + s({2}) * (t * (q * t.pow(3) + t.pow(4) + q.pow(3) + q * q * t + 2 * q * t * t + t.pow(3) + q * q + 2 * q * t + t * t))
        + s({1, 1}) * (q * t.pow(5) + t.pow(6) + q * q * t.pow(3) + 2 * q * t.pow(4) + t.pow(5) + q.pow(4) + 2 * q.pow(3) * t
                       + 4 * q * q * t * t + 4 * q * t.pow(3) + 2 * t.pow(4) + q * q * t + q * t * t)
        + s({3}) * (t * (q + t)) + s({2, 1}) * ((q + t) * (t.pow(3) + q * q + q * t + 2 * t * t + q + t))
        + s({1, 1, 1}) * ((q * q + q * t + t * t) * (q.pow(3) + t.pow(3) + q * t + q + t))
        + s({3, 1}) * (q + t) + s({2, 2}) * (q * q + q * t + t * t);
    CHECK(diff == want);
    CHECK(shift_alpha_prime(4, 6) == 2);
}

TEST_CASE("monomial seed at t = 1 + r")
{
    // r is carried in the t slot
    const QTScalar r = t;
    const SymFun f = specialize(slope_image(1, 1, -monomial_sym(Partition{2, 1})), Substitution::t_one_plus_r());
    const SymFun want = e({1, 1, 1}) * QTScalar(2)
        + e({2, 1}) * (q * q * r + q * r * r + 3 * q * q + 4 * q * r + 2 * r * r + 5 * q + 6 * r)
        + e({3}) * (q.pow(3) * r + q * q * r * r + q * r.pow(3) + 3 * q.pow(3) + 3 * q * q * r + 4 * q * r * r + 2 * r.pow(3)
                    + 5 * q * r + 4 * r * r);
    CHECK(f == want);
    CHECK(is_e_positive(f).status == Status::holds);
}

TEST_CASE("Bizley-like exponential relation at t = 1")
{
    const int N = 3;
    const auto t1 = Substitution::t_one();
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        Series arg(N + 1, SymFun(Basis::e));
        for (int j = 1; j <= N; ++j) {
            const SymFun pj = convert(specialize(slope_image(a, b, power_sum(j)), t1), Basis::e);
            arg[static_cast<std::size_t>(j)] = pj * QTScalar(mpq_class(j % 2 == 1 ? 1 : -1, j));
        }
        const Series lhs = series_exp(arg);
        for (int d = 1; d <= N; ++d) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(d);
            CHECK(lhs[static_cast<std::size_t>(d)] == specialize(slope_image(a, b, elementary(d)), t1));
        }
    }
}

TEST_CASE("q_mu at q = t = 1 is a product of plethysms")
{
    const auto qt1 = Substitution::qt_one();
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}}) {
        for (int d = 1; d <= 4 && b * d <= 6; ++d) {
            for (const auto& mu : partitions_of(d)) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(mu.to_string());
                SymFun want = SymFun::constant(1, Basis::e);
                for (const int k : mu.parts()) {
                    want = want * q_at_one(a, b, k);
                }
                const SymFun got = specialize(slope_image(a, b, SymFun(Basis::q, mu)), qt1);
                CHECK(got == want);

                // product formulas for the two functionals
                const int n = b * d;
                mpz_class delta = factorial(n);
                mpq_class eps = 1;
                for (const int k : mu.parts()) {
                    delta /= factorial(b * k);
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a * k), static_cast<unsigned long>(b * k));
                    delta *= pw;
                    mpq_class ek(binomial((a + b) * k, b * k), mpz_class(a + b));
                    ek.canonicalize();
                    eps *= ek;
                    delta /= a;
                }
                CHECK(delta_dim(got) == QTScalar(mpq_class(delta)));
                CHECK(eps_dim(got) == QTScalar(eps));
                CHECK(delta_dim(got) == hall_scalar(p1_power(n), got));
            }
        }
    }
}

TEST_CASE("sum of e-coefficients at q = t = 1 is the sign multiplicity")
{
    const auto qt1 = Substitution::qt_one();
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}}) {
        for (int d = 1; b * d <= 5; ++d) {
            for (const auto& mu : partitions_of(d)) {
                const SymFun f = convert(specialize(slope_image(a, b, normalized_schur(mu)), qt1), Basis::e);
                QTScalar sum;
                for (const auto& [nu, c] : f.terms()) {
                    sum += c;
                }
                CHECK(sum == eps_dim(f));
            }
        }
    }
}

TEST_CASE("multiplicativity at t = 1")
{
    const auto t1 = Substitution::t_one();
    const std::vector<SymFun> seeds{elementary(1), elementary(2), s({2}), s({2, 1}), complete(3)};
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}}) {
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            for (std::size_t j = i; j < seeds.size(); ++j) {
                const int deg = seeds[i].max_degree() + seeds[j].max_degree();
                if (deg > 4 || b * deg > 9) {
                    continue;
                }
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(i);
                CAPTURE(j);
                const SymFun lhs = specialize(slope_image(a, b, seeds[i] * seeds[j]), t1);
                const SymFun rhs = specialize(slope_image(a, b, seeds[i]), t1) * specialize(slope_image(a, b, seeds[j]), t1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("theta at t = 1 acts by multiplication")
{
    const auto t1 = Substitution::t_one();
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        for (int d = 1; b * d + 2 <= 5; ++d) {
            for (const SymFun& g : {s({1}), s({2}), s({1, 1})}) {
                const SymFun lhs = specialize(theta(a, b, elementary(d), g), t1);
                CHECK(lhs == specialize(slope_image(a, b, elementary(d)), t1) * g);
            }
        }
    }
}

TEST_CASE("harness")
{
    const auto& names = check_names();
    CHECK(names.size() == 17);
    CHECK_THROWS_AS(run_check("no-such-check", Grid{}), std::invalid_argument);
    CHECK_THROWS_AS(run_check("schur-seed", Grid{0, 3}), std::invalid_argument);
    CHECK_FALSE(is_conjectural("dim-delta"));
    CHECK(is_conjectural("schur-seed"));

    const Grid small{3, 3};
    for (const auto& name : names) {
        CAPTURE(name);
        const auto vs = run_check(name, small);
        CHECK_FALSE(vs.empty());
        for (const auto& v : vs) {
            CAPTURE(v.note);
            CHECK(v.name == name);
            CHECK(v.status == Status::holds);
            if (v.status == Status::fails) {
                CHECK(v.witness.has_value());
            }
        }
        CHECK(report_ok(vs));
    }

    const auto vs = run_check("schur-seed", Grid{2, 2});
    // (1,1) with d = 1, 2 and (1,2), (2,1) with d = 1
    CHECK(vs.size() == 1 + 2 + 1 + 1);
    const auto j = nlohmann::json::parse(report_json(vs));
    REQUIRE(j.is_array());
    CHECK(j.size() == vs.size());
    CHECK(j[0]["name"] == "schur-seed");
    CHECK(j[0]["status"] == "holds");
    CHECK(j[0].contains("params"));
    CHECK(j[0].contains("runtimeMillis"));
}

TEST_CASE("report status")
{
    Verdict bad;
    bad.name = "dim-eps";
    bad.status = Status::fails;
    bad.witness = Witness{Partition{1}, QTScalar(-1)};
    CHECK_FALSE(report_ok({bad}));
    bad.name = "schur-seed";
    bad.status = Status::reported;
    CHECK(report_ok({bad}));
    const auto j = nlohmann::json::parse(report_json({bad}));
    CHECK(j[0]["witness"]["partition"] == nlohmann::json::array({1}));
    CHECK(j[0]["witness"]["coeff"] == "-1");
}
