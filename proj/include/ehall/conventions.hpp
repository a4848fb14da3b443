#pragma once

// Operator conventions fixed by calibration against the printed anchors:
// Q_{1,1}(1) = e_1, the Q_{43} and Q_{63} bracket words, and the Theta_{1,2}
// tables of Section 2. Changing any value here changes cached results, so the
// cache version below must be bumped with it.

namespace ehall::conventions {

/// Q_{mn} = (1/M) [Q_{kl}, Q_{uv}] with [A,B] = AB - BA.
inline constexpr bool left_factor_is_kl = true;
/// Split condition m*l - n*k = +gcd(m,n), i.e. det((u,v),(k,l)) = -gcd.
inline constexpr int determinant_sign = +1;
/// Q_{1,0} = D_0 (rather than -D_1, which has the wrong bidegree).
inline constexpr int axis_leaf_sign = +1;
/// All m variables of the t = 1 constant term carry an Omega' factor.
inline constexpr bool ct_last_variable_has_omega = true;
/// z_{m,n} exponents are taken in reverse order, s_i = ceil(in/m) - ceil((i-1)n/m).
inline constexpr bool ct_exponents_reversed = true;

inline constexpr const char* cache_version = "ehall-1:kl-left:det+:Q10=D0:ct-omega-all:ct-ceil";

} // namespace ehall::conventions
