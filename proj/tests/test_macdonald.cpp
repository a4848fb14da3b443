#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ehall/macdonald.hpp"
#include "ehall/operators.hpp"
#include "support.hpp"

using namespace ehall;

namespace {

const QTScalar q = QTScalar::q();
const QTScalar t = QTScalar::t();

const EigenVector& find(const EigenBasis& B, const Partition& mu)
{
    for (const auto& v : B.vectors) {
        if (v.mu == mu) {
            return v;
        }
    }
    FAIL("missing eigenvector " << mu.to_string());
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("small eigenbases")
{
    const auto& b1 = eigenbasis(1);
    REQUIRE(b1.vectors.size() == 1);
    CHECK(b1.vectors[0].H == schur(Partition{1}));

    const auto& b2 = eigenbasis(2);
    CHECK(find(b2, Partition{2}).H == schur(Partition{2}) + schur(Partition{1, 1}) * q);
    CHECK(find(b2, Partition{1, 1}).H == schur(Partition{2}) + schur(Partition{1, 1}) * t);
    CHECK(find(b2, Partition{2}).nabla_eig == q);
    CHECK(find(b2, Partition{1, 1}).nabla_eig == t);
}

TEST_CASE("eigenvectors of D_0")
{
    for (int n = 1; n <= 4; ++n) {
        const auto& B = eigenbasis(n);
        std::set<std::string> eigs;
        for (const auto& v : B.vectors) {
            CHECK(apply_D(0, v.H) == v.H * v.d0_eig);
            CHECK(v.d0_eig == QTScalar(1) - QTScalar::M() * cell_sum(v.mu));
            CHECK(v.nabla_eig == QTScalar::monomial(1, v.mu.conjugate().nstat(), v.mu.nstat()));
            CHECK(convert(v.H, Basis::s).coeff(Partition{n}) == QTScalar(1));
            eigs.insert(v.d0_eig.to_string());
        }
        CHECK(eigs.size() == partitions_of(n).size());
    }
}

TEST_CASE("modified Macdonald specializations")
{
    // at q = t = 1 every H_mu collapses to h_1^n
    for (int n = 2; n <= 4; ++n) {
        const SymFun h1n = [&] {
            SymFun r = SymFun::constant(1, Basis::p);
            for (int i = 0; i < n; ++i) {
                r = r * power_sum(1);
            }
            return r;
        }();
        for (const auto& v : eigenbasis(n).vectors) {
            CHECK(specialize(v.H, Substitution::qt_one()) == h1n);
        }
    }
}

TEST_CASE("nabla on low degrees")
{
    CHECK(nabla(SymFun::constant(1)) == SymFun::constant(1));
    CHECK(nabla(elementary(1)) == elementary(1));
    CHECK(nabla(elementary(2)) == schur(Partition{2}) + schur(Partition{1, 1}) * (q + t));
}

TEST_CASE("nabla inverse")
{
    std::mt19937 rng(99);
    for (int d = 1; d <= 5; ++d) {
        const SymFun f = testing::random_symfun(rng, d, Basis::s, 2);
        CHECK(nabla(nabla(f), -1) == f);
    }
}

TEST_CASE("parking function count from nabla e_n")
{
    for (int n = 1; n <= 5; ++n) {
        long expect = 1;
        for (int i = 1; i < n; ++i) {
            expect *= n + 1;
        }
        SymFun p1n = SymFun::constant(1, Basis::p);
        for (int i = 0; i < n; ++i) {
            p1n = p1n * power_sum(1);
        }
        const QTScalar c = hall_scalar(specialize(nabla(elementary(n)), Substitution::qt_one()), p1n);
        CHECK(c == QTScalar(expect));
    }
}

TEST_CASE("nabla is multiplicative at t = 1")
{
    std::mt19937 rng(5);
    const auto t1 = Substitution::t_one();
    for (int d1 = 1; d1 <= 2; ++d1) {
        for (int d2 = d1; d1 + d2 <= 5; ++d2) {
            const SymFun f = specialize(testing::random_symfun(rng, d1, Basis::s, 2), t1);
            const SymFun g = specialize(testing::random_symfun(rng, d2, Basis::s, 2), t1);
            CHECK(specialize(nabla(f * g), t1) == specialize(nabla(f) * nabla(g), t1));
        }
    }
}

TEST_CASE("nabla agrees with theta of slope (1,1)")
{
    std::mt19937 rng(11);
    for (int d = 1; d <= 5; ++d) {
        const SymFun f = d <= 3 ? testing::random_symfun(rng, d, Basis::s, 2) : elementary(d);
        CHECK(nabla(f) == theta(1, 1, f));
    }
}
