#pragma once

#include <random>

#include "ehall/symfun.hpp"

namespace ehall::testing {

inline QTPoly random_poly(std::mt19937& rng, int max_terms = 3, int max_exp = 2)
{
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<int> co(-3, 3);
    QTPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        p += QTPoly::monomial(co(rng), static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng)));
    }
    return p;
}

inline QTScalar random_scalar(std::mt19937& rng)
{
    QTPoly den;
    while (den.is_zero()) {
        den = random_poly(rng, 2, 1);
    }
    return QTScalar::fraction(random_poly(rng), den);
}

inline QTScalar random_poly_scalar(std::mt19937& rng)
{
    return QTScalar(random_poly(rng));
}

/// Random homogeneous f of degree d in basis b with polynomial coefficients.
inline SymFun random_symfun(std::mt19937& rng, int d, Basis b = Basis::s, int max_terms = 3)
{
    const auto& parts = partitions_of(d);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    SymFun f(b);
    for (int i = 0; i < max_terms; ++i) {
        f.add_term(parts[pick(rng)], random_poly_scalar(rng));
    }
    return f;
}

} // namespace ehall::testing
