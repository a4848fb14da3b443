#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ehall/io.hpp"
#include "support.hpp"

using namespace ehall;

namespace {

const QTScalar q = QTScalar::q();
const QTScalar t = QTScalar::t();

SymFun s(std::initializer_list<int> mu)
{
    return schur(Partition(mu));
}

} // namespace

TEST_CASE("expression parser")
{
    CHECK(parse_expr("e[2]") == elementary(2));
    CHECK(convert(parse_expr("e[2]"), Basis::s) == s({1, 1}));
    CHECK(parse_expr("(-qt)^-2*s[3]") == s({3}) * (q * t).pow(-2));
    CHECK(parse_expr("(-qt)^-1 * s[21]") == -(s({2, 1}) * (q * t).pow(-1)));
    CHECK(parse_expr("s[21]") == parse_expr("s[2,1]"));
    CHECK(parse_expr("s[10,2]") == s({10, 2}));
    CHECK(parse_expr("e[2,1]") == elementary(2) * elementary(1));
    CHECK(parse_expr("e[12]") == elementary(12));
    CHECK(parse_expr("h[3] - m[111]") == complete(3) - monomial_sym(Partition{1, 1, 1}));
    CHECK(parse_expr("q[2]") == qfun(2));
    CHECK(parse_expr("p[2]^2") == power_sum(2) * power_sum(2));
    CHECK(parse_expr("s[]") == SymFun::constant(1));
    CHECK(parse_expr("2q t s[1]") == s({1}) * (2 * q * t));
    CHECK(parse_expr("s[2]/(1 - q)") == s({2}) * (QTScalar(1) - q).pow(-1));
    CHECK(parse_expr("-s[1] + 3/2*q^2*t") == -s({1}) + SymFun::constant(QTScalar(mpq_class(3, 2)) * q * q * t));
    CHECK(parse_scalar("(q + t)/(q*t)") == (q + t) / (q * t));
    CHECK(parse_scalar("r^2 + 1", "r") == t * t + QTScalar(1));

    for (const char* bad : {"", "s[", "e[x]", "s[2]^-1", "1/s[1]", "foo", "e[2] +", "s[2,0]", "(q", "q t)", "1/0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_expr(bad), ParseError);
    }
    CHECK_THROWS_AS(parse_scalar("s[1]"), ParseError);
}

TEST_CASE("scalar strings parse back")
{
    std::mt19937 rng(314);
    for (int i = 0; i < 60; ++i) {
        const QTScalar c = testing::random_scalar(rng);
        CHECK(parse_scalar(c.to_string()) == c);
        CHECK(parse_scalar(c.to_string("q", "r"), "r") == c);
    }
}

TEST_CASE("json round trip")
{
    std::mt19937 rng(2718);
    for (const Basis b : {Basis::s, Basis::e, Basis::m, Basis::p, Basis::h, Basis::q}) {
        for (int d = 0; d <= 4; ++d) {
            SymFun f = testing::random_symfun(rng, d, b);
            f.add_term(partitions_of(d).front(), testing::random_scalar(rng));
            const auto j = to_json(f);
            const SymFun g = symfun_from_json(nlohmann::json::parse(j.dump()));
            CHECK(g.basis() == b);
            CHECK(g.terms() == f.terms());
            CHECK(to_json(g) == j);
            CHECK(symfun_from_json(to_json(f, "r")).terms() == f.terms());
        }
    }
    CHECK(to_json(s({2, 1}) * (q + t)).dump() == R"({"basis":"s","terms":[{"coeff":"q + t","partition":[2,1]}],"vars":["q","t"]})");
    CHECK_THROWS_AS(symfun_from_json(nlohmann::json::parse(R"({"basis":"x","terms":[]})")), ParseError);
    CHECK_THROWS_AS(symfun_from_json(nlohmann::json::parse(R"({"basis":"s"})")), ParseError);
}

TEST_CASE("latex display")
{
    CHECK(to_latex(s({2}) + s({1, 1}) * (q + t)) == "s_{2} + \\left(q + t\\right)\\,s_{11}");
    CHECK(to_latex(-(s({2}) * (q * q * t))) == "-q^{2}t\\,s_{2}");
    CHECK(to_latex(s({3, 2, 1}) + s({2, 2, 2}) * QTScalar(2)) == "s_{321} + 2\\,s_{222}");
    CHECK(to_latex(SymFun(Basis::e, Partition{12, 1}) - SymFun(Basis::e, Partition{})) == "e_{12,1} - 1");
    CHECK(to_latex(SymFun(Basis::s)) == "0");
    CHECK(to_latex(QTScalar(mpq_class(1, 2))) == "\\frac{1}{2}");
    CHECK(to_latex(QTScalar(1) / (q * t)) == "\\frac{1}{qt}");
    CHECK(to_latex(QTScalar(mpq_class(-3, 2)) * q) == "-\\frac{3}{2}q");
}
