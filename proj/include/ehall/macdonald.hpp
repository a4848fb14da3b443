#pragma once

#include "ehall/symfun.hpp"

namespace ehall {

struct EigenVector {
    Partition mu;
    SymFun H;          // s basis, coefficient of s_(n) equal to 1
    QTScalar d0_eig;   // 1 - M B_mu
    QTScalar nabla_eig; // t^{n(mu)} q^{n(mu')}
};

struct EigenBasis {
    int degree = 0;
    std::vector<EigenVector> vectors; // partitions_of(degree) order
    /// Inverse of the matrix whose columns are the H_mu in the s basis.
    std::vector<std::vector<QTScalar>> inverse;
};

/// B_mu = sum over cells of t^row q^col.
QTScalar cell_sum(const Partition& mu);

const EigenBasis& eigenbasis(int n);

/// nabla^power f, degreewise; result in s basis.
SymFun nabla(const SymFun& f, int power = 1);

} // namespace ehall
