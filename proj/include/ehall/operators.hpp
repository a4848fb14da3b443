#pragma once

#include <memory>
#include <string>
#include <utility>

#include "ehall/symfun.hpp"

namespace ehall {

/// Dense matrix over Q(q,t) acting on s-basis coordinate vectors; column j is
/// the image of the j-th partition of the source degree.
struct OpMatrix {
    int src_degree = 0;
    int dst_degree = 0;
    std::vector<std::vector<QTScalar>> rows;

    [[nodiscard]] std::vector<QTScalar> apply(const std::vector<QTScalar>& v) const;
};

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator-(const OpMatrix& a, const OpMatrix& b);

/// Homogeneous component of f of degree d as an s-basis vector.
std::vector<QTScalar> s_vector(const SymFun& f, int d);
SymFun from_s_vector(int d, const std::vector<QTScalar>& v);

/// Coefficient of z^k in g[x + M/z] * sum_n e_n (-z)^n.
SymFun apply_D(int k, const SymFun& g);

/// D_0 on degree d, in the s basis.
const OpMatrix& d0_matrix(int d);
/// Multiplication by e_1 from degree d to d+1.
const OpMatrix& e1_matrix(int d);

struct BracketTree {
    enum class Kind { leaf_q0k, leaf_qk0, bracket };
    int m = 0;
    int n = 0;
    Kind kind = Kind::bracket;
    std::shared_ptr<const BracketTree> left;  // Q_{kl}
    std::shared_ptr<const BracketTree> right; // Q_{uv}

    /// Word over {D0, e1}, e.g. "[[e1,D0],D0]".
    [[nodiscard]] std::string word() const;
    /// Number of bracket nodes (the power of M in the denominator).
    [[nodiscard]] int bracket_count() const;
    [[nodiscard]] int count_d0() const;
    [[nodiscard]] int count_e1() const;
};

struct Split {
    int k, l, u, v;
};

/// Splitting rule for Q_{mn}, m,n >= 1. Throws std::logic_error when the
/// optimum is not unique for coprime (m,n).
Split q_split(int m, int n);
std::shared_ptr<const BracketTree> bracket_tree(int m, int n);

/// Matrix of Q_{mn} from degree d to degree d+n.
const OpMatrix& q_matrix(int m, int n, int d);
SymFun apply_Q(int m, int n, const SymFun& g);

/// Theta_{a,b}(f)(g); gcd(a,b) = 1, b >= 1, any integer a.
SymFun theta(int a, int b, const SymFun& f, const SymFun& g);
/// Theta_{a,b}(f)(1).
SymFun theta(int a, int b, const SymFun& f);

/// C_a(f) = (-t)^{1-a} f[x - (t-1)/(tz)] sum_m z^m h_m |_{z^a}.
SymFun c_op(int a, const SymFun& f);
/// C_alpha(1) = C_{a_1} ... C_{a_l}(1).
SymFun c_alpha(const Composition& alpha);

} // namespace ehall
