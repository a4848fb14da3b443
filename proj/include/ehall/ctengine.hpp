#pragma once

#include "ehall/symfun.hpp"

namespace ehall {

/// Exponents s_i = floor(i n/m) - floor((i-1) n/m) of z_{m,n}, i = 1..m.
std::vector<int> z_exponents(int m, int n);

/// CT( z_{m,n}^{-1} prod_{i<m} z_i/(z_i - q z_{i+1}) prod_i Omega'[x; z_i] ),
/// extracting z_m first. The primitive variant keeps only the terms whose
/// carries stay positive at the interior diagonal points (paths without
/// interior returns), still weighted by q^area.
/// Result in basis e; coefficients are asserted to lie in N[q].
SymFun ct_t1(int m, int n, bool primitive = false);

} // namespace ehall
