#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "ehall/ctengine.hpp"
#include "ehall/operators.hpp"
#include "ehall/rectcomb.hpp"

using namespace ehall;

TEST_CASE("z exponents")
{
    CHECK(z_exponents(3, 2) == std::vector<int>{0, 1, 1});
    CHECK(z_exponents(2, 2) == std::vector<int>{1, 1});
    CHECK(z_exponents(4, 6) == std::vector<int>{1, 2, 1, 2});
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            const auto s = z_exponents(m, n);
            CHECK(std::accumulate(s.begin(), s.end(), 0) == n);
        }
    }
}

TEST_CASE("small constant terms")
{
    const SymFun e11 = elementary(1) * elementary(1);
    CHECK(ct_t1(2, 2) == elementary(2) * QTScalar::q() + e11);
    CHECK(ct_t1(3, 2) == elementary(2) * QTScalar::q() + e11);
    for (int n = 1; n <= 6; ++n) {
        CHECK(ct_t1(1, n) == elementary(n));
    }
    CHECK_THROWS(ct_t1(0, 2));
}

TEST_CASE("constant term enumerates Dyck paths")
{
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(ct_t1(m, n) == path_enumerator(m, n));
        }
    }
}

TEST_CASE("primitive constant term")
{
    CHECK(ct_t1(2, 2, true) == elementary(2) * QTScalar::q());
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const Composition whole{std::vector<int>{std::gcd(m, n)}};
            CHECK(ct_t1(m, n, true) == path_enumerator(m, n, whole));
        }
    }
}

TEST_CASE("larger instances stay in N[q]")
{
    CHECK_NOTHROW(ct_t1(8, 8));
    CHECK_NOTHROW(ct_t1(9, 6, true));
    const SymFun f = specialize(ct_t1(8, 6), Substitution::q_one());
    CHECK(hall_scalar(f, elementary(6)) == QTScalar(static_cast<long>(count_paths(8, 6))));
}

TEST_CASE("constant term matches the operator side at t = 1")
{
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            for (int d = 1; a * d <= 5 && b * d <= 5; ++d) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(d);
                const SymFun op = specialize(theta(a, b, elementary(d)), Substitution::t_one());
                CHECK(op == ct_t1(a * d, b * d));
            }
        }
    }
}
