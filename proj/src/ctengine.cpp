#include "ehall/ctengine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ehall/conventions.hpp"

namespace ehall {

std::vector<int> z_exponents(int m, int n)
{
    std::vector<int> s;
    for (int i = 1; i <= m; ++i) {
        s.push_back(i * n / m - (i - 1) * n / m);
    }
    return s;
}

namespace {

// Weighted e-products keyed by the geometric carry k_i still owed to z_i.
using Carry = std::map<int, std::map<std::vector<int>, QTPoly>>;

} // namespace

SymFun ct_t1(int m, int n, bool primitive)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("ct_t1 needs m,n >= 1");
    }
    std::vector<int> s = z_exponents(m, n);
    if (conventions::ct_exponents_reversed) {
        std::reverse(s.begin(), s.end());
    }
    // Primitive paths keep a positive carry k_{ja} at each lattice point of
    // the diagonal. Shifting k_{ja} by one moves a unit of exponent from
    // position ja+1 to ja and costs a factor q.
    int shift = 0;
    if (primitive) {
        const int d = std::gcd(m, n);
        const int a = m / d;
        for (int j = 1; j < d; ++j) {
            ++s[static_cast<std::size_t>(j * a - 1)];
            --s[static_cast<std::size_t>(j * a)];
        }
        shift = d - 1;
    }
    // Factor i expands as sum_k q^k (z_{i+1}/z_i)^k, so the z_i exponent is
    // n_i - s_i - k_i + k_{i-1}; its vanishing fixes n_i = s_i + k_i - k_{i-1}.
    Carry cur;
    cur[0][{}] = QTPoly::monomial(1, static_cast<std::uint32_t>(shift), 0);
    for (int i = m; i >= 1; --i) {
        Carry next;
        const int si = s[static_cast<std::size_t>(i - 1)];
        const bool omega = i < m || conventions::ct_last_variable_has_omega;
        for (const auto& [ki, terms] : cur) {
            const int avail = si + ki;
            for (int kprev = 0; kprev <= avail; ++kprev) {
                if (i == 1 && kprev != 0) {
                    break;
                }
                const int ni = avail - kprev;
                if (!omega && ni != 0) {
                    continue;
                }
                const QTPoly w = QTPoly::monomial(1, static_cast<std::uint32_t>(kprev), 0);
                for (const auto& [parts, c] : terms) {
                    std::vector<int> np = parts;
                    if (ni > 0) {
                        np.push_back(ni);
                    }
                    next[kprev][np] += c * w;
                }
            }
        }
        cur = std::move(next);
    }
    SymFun out(Basis::e);
    for (const auto& [parts, c] : cur[0]) {
        out.add_term(Partition::from_unsorted(parts), QTScalar(c));
    }
    for (const auto& [mu, c] : out.terms()) {
        for (const auto& term : c.num().terms()) {
            if (term.exp().t != 0 || term.coeff < 0 || term.coeff.get_den() != 1) {
                throw std::logic_error("constant term coefficient outside N[q]: " + c.to_string());
            }
        }
    }
    return out;
}

} // namespace ehall
