#include "ehall/operators.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "ehall/conventions.hpp"
#include "ehall/macdonald.hpp"

namespace ehall {

std::vector<QTScalar> OpMatrix::apply(const std::vector<QTScalar>& v) const
{
    std::vector<QTScalar> r(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero() && !rows[i][j].is_zero()) {
                r[i] += rows[i][j] * v[j];
            }
        }
    }
    return r;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b)
{
    if (a.src_degree != b.dst_degree) {
        throw std::logic_error("operator degree mismatch");
    }
    OpMatrix r;
    r.src_degree = b.src_degree;
    r.dst_degree = a.dst_degree;
    const std::size_t inner = b.rows.size();
    const std::size_t cols = partitions_of(b.src_degree).size();
    r.rows.assign(a.rows.size(), std::vector<QTScalar>(cols));
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a.rows[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b.rows[k][j].is_zero()) {
                    r.rows[i][j] += a.rows[i][k] * b.rows[k][j];
                }
            }
        }
    }
    return r;
}

OpMatrix operator-(const OpMatrix& a, const OpMatrix& b)
{
    OpMatrix r = a;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
            r.rows[i][j] -= b.rows[i][j];
        }
    }
    return r;
}

std::vector<QTScalar> s_vector(const SymFun& f, int d)
{
    std::vector<QTScalar> v(partitions_of(d).size());
    const SymFun fs = convert(f.homogeneous_part(d), Basis::s);
    for (const auto& [mu, c] : fs.terms()) {
        v[partition_index(mu)] = c;
    }
    return v;
}

SymFun from_s_vector(int d, const std::vector<QTScalar>& v)
{
    SymFun r(Basis::s);
    const auto& parts = partitions_of(d);
    for (std::size_t i = 0; i < v.size(); ++i) {
        r.add_term(parts[i], v[i]);
    }
    return r;
}

SymFun apply_D(int k, const SymFun& g)
{
    SymFun out(Basis::p);
    if (g.is_zero()) {
        return convert(out, Basis::s);
    }
    const int bound = std::max(g.max_degree(), 0);
    const ZLaurent G = plethys(g, Alphabet::plus_M_over_z(), bound);
    for (int j = 0; j <= bound; ++j) {
        const int n = k + j;
        if (n < 0) {
            continue;
        }
        const SymFun gj = G.at(-j);
        if (gj.is_zero()) {
            continue;
        }
        const SymFun en = convert(elementary(n), Basis::p);
        out += QTScalar(n % 2 == 0 ? 1L : -1L) * (gj * en);
    }
    return convert(out, Basis::s);
}

namespace {

struct OpCache {
    std::shared_mutex mu;
    std::map<int, OpMatrix> d0;
    std::map<int, OpMatrix> e1;
    std::map<std::tuple<int, int, int>, OpMatrix> q;
    std::map<std::pair<int, int>, std::shared_ptr<const BracketTree>> trees;
};

OpCache& op_cache()
{
    static OpCache c;
    return c;
}

template <class Map, class Key, class Build>
const typename Map::mapped_type& memo(Map& map, const Key& key, Build&& build)
{
    auto& c = op_cache();
    {
        std::shared_lock lock(c.mu);
        auto it = map.find(key);
        if (it != map.end()) {
            return it->second;
        }
    }
    auto value = build();
    std::unique_lock lock(c.mu);
    return map.try_emplace(key, std::move(value)).first->second;
}

OpMatrix matrix_from_images(int src, int dst, const std::function<SymFun(const Partition&)>& image)
{
    OpMatrix r;
    r.src_degree = src;
    r.dst_degree = dst;
    const auto& sp = partitions_of(src);
    r.rows.assign(partitions_of(dst).size(), std::vector<QTScalar>(sp.size()));
    for (std::size_t j = 0; j < sp.size(); ++j) {
        const auto col = s_vector(image(sp[j]), dst);
        for (std::size_t i = 0; i < col.size(); ++i) {
            r.rows[i][j] = col[i];
        }
    }
    return r;
}

// Pieri rule for s_lambda * s_1.
SymFun add_a_box(const Partition& lambda)
{
    SymFun r(Basis::s);
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i <= p.size(); ++i) {
        const int cur = i < p.size() ? p[i] : 0;
        if (i == 0 || p[i - 1] > cur) {
            std::vector<int> np = p;
            if (i == p.size()) {
                np.push_back(1);
            } else {
                ++np[i];
            }
            r.add_term(Partition(std::move(np)), 1);
        }
    }
    return r;
}

OpMatrix build_q(int m, int n, int d);

} // namespace

const OpMatrix& d0_matrix(int d)
{
    return memo(op_cache().d0, d, [d] {
        return matrix_from_images(d, d, [](const Partition& lam) { return apply_D(0, schur(lam)); });
    });
}

const OpMatrix& e1_matrix(int d)
{
    return memo(op_cache().e1, d, [d] { return matrix_from_images(d, d + 1, add_a_box); });
}

// ---------------------------------------------------------------------------
// Bracket trees

std::string BracketTree::word() const
{
    switch (kind) {
    case Kind::leaf_q0k:
        return n == 1 ? "e1" : "Q0" + std::to_string(n);
    case Kind::leaf_qk0:
        return m == 1 ? "D0" : "Q" + std::to_string(m) + "0";
    case Kind::bracket:
        return "[" + left->word() + "," + right->word() + "]";
    }
    return {};
}

int BracketTree::bracket_count() const
{
    return kind == Kind::bracket ? 1 + left->bracket_count() + right->bracket_count() : 0;
}

int BracketTree::count_d0() const
{
    if (kind == Kind::bracket) {
        return left->count_d0() + right->count_d0();
    }
    return kind == Kind::leaf_qk0 ? m : 0;
}

int BracketTree::count_e1() const
{
    if (kind == Kind::bracket) {
        return left->count_e1() + right->count_e1();
    }
    return kind == Kind::leaf_q0k ? n : 0;
}

Split q_split(int m, int n)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("q_split needs m, n >= 1");
    }
    const int d = std::gcd(m, n);
    if (d > 1) {
        const Split base = q_split(m / d, n / d);
        return {base.k, base.l, m - base.k, n - base.l};
    }
    std::vector<Split> found;
    for (int k = 0; k <= m; ++k) {
        for (int l = 0; l <= n; ++l) {
            const int u = m - k;
            const int v = n - l;
            if ((k == 0 && l == 0) || (u == 0 && v == 0)) {
                continue;
            }
            if (conventions::determinant_sign * (m * l - n * k) == d) {
                found.push_back({k, l, u, v});
            }
        }
    }
    if (found.size() != 1) {
        throw std::logic_error("q_split(" + std::to_string(m) + "," + std::to_string(n) + "): " +
                               std::to_string(found.size()) + " admissible splits");
    }
    return found.front();
}

std::shared_ptr<const BracketTree> bracket_tree(int m, int n)
{
    if (m < 0 || n < 0 || (m == 0 && n == 0)) {
        throw std::invalid_argument("bracket_tree needs (m,n) != (0,0), nonnegative");
    }
    return memo(op_cache().trees, std::pair{m, n}, [m, n] {
        auto t = std::make_shared<BracketTree>();
        t->m = m;
        t->n = n;
        if (m == 0) {
            t->kind = BracketTree::Kind::leaf_q0k;
        } else if (n == 0) {
            t->kind = BracketTree::Kind::leaf_qk0;
        } else {
            const Split s = q_split(m, n);
            t->kind = BracketTree::Kind::bracket;
            t->left = bracket_tree(s.k, s.l);
            t->right = bracket_tree(s.u, s.v);
        }
        return std::shared_ptr<const BracketTree>(std::move(t));
    });
}

namespace {

OpMatrix build_q(int m, int n, int d)
{
    if (m == 0) {
        const SymFun qn = qfun(n);
        return matrix_from_images(d, d + n, [&](const Partition& lam) { return schur(lam) * qn; });
    }
    if (n == 0) {
        if (m != 1) {
            throw std::logic_error("axis leaf Q_{" + std::to_string(m) + ",0} is not calibrated");
        }
        OpMatrix r = d0_matrix(d);
        if (conventions::axis_leaf_sign < 0) {
            for (auto& row : r.rows) {
                for (auto& x : row) {
                    x = -x;
                }
            }
        }
        return r;
    }
    const Split s = q_split(m, n);
    // [Q_kl, Q_uv] = Q_kl Q_uv - Q_uv Q_kl
    const OpMatrix& a1 = q_matrix(s.u, s.v, d);
    const OpMatrix& a2 = q_matrix(s.k, s.l, d + s.v);
    const OpMatrix& b1 = q_matrix(s.k, s.l, d);
    const OpMatrix& b2 = q_matrix(s.u, s.v, d + s.l);
    OpMatrix r = conventions::left_factor_is_kl ? (a2 * a1) - (b2 * b1) : (b2 * b1) - (a2 * a1);
    const QTScalar M = QTScalar::M();
    for (auto& row : r.rows) {
        for (auto& x : row) {
            if (!x.is_zero()) {
                x /= M;
            }
        }
    }
    return r;
}

} // namespace

const OpMatrix& q_matrix(int m, int n, int d)
{
    if (m == 1 && n == 0) {
        if (conventions::axis_leaf_sign > 0) {
            return d0_matrix(d);
        }
    }
    if (m == 0 && n == 1) {
        return e1_matrix(d);
    }
    return memo(op_cache().q, std::tuple{m, n, d}, [m, n, d] { return build_q(m, n, d); });
}

SymFun apply_Q(int m, int n, const SymFun& g)
{
    if (m < 0 || n < 0 || (m == 0 && n == 0)) {
        throw std::invalid_argument("apply_Q needs (m,n) != (0,0), nonnegative");
    }
    SymFun out(Basis::s);
    for (const int d : g.degrees()) {
        out += from_s_vector(d + n, q_matrix(m, n, d).apply(s_vector(g, d)));
    }
    return out;
}

SymFun theta(int a, int b, const SymFun& f, const SymFun& g)
{
    if (b < 1) {
        throw std::invalid_argument("theta needs b >= 1");
    }
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument("theta needs gcd(a,b) = 1");
    }
    if (a < 0) {
        const int k = (-a + b - 1) / b;
        return nabla(theta(a + k * b, b, f, nabla(g, k)), -k);
    }
    SymFun out(Basis::s);
    const SymFun fq = expand_in_q(f);
    for (const auto& [mu, c] : fq.terms()) {
        SymFun v = g;
        // the factors commute; apply the smallest first to keep degrees low
        for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it) {
            v = apply_Q(a * *it, b * *it, v);
        }
        out += c * v;
    }
    return out;
}

SymFun theta(int a, int b, const SymFun& f)
{
    return theta(a, b, f, SymFun::constant(1));
}

SymFun c_op(int a, const SymFun& f)
{
    if (a < 1) {
        throw std::invalid_argument("C_a needs a >= 1");
    }
    SymFun out(Basis::p);
    if (f.is_zero()) {
        return convert(out, Basis::s);
    }
    const int bound = std::max(f.max_degree(), 0);
    const ZLaurent F = plethys(f, Alphabet::minus_t_minus_one_over_tz(), bound);
    for (int j = 0; j <= bound; ++j) {
        const SymFun fj = F.at(-j);
        if (!fj.is_zero()) {
            out += fj * convert(complete(a + j), Basis::p);
        }
    }
    // (-t)^{1-a}
    out *= QTScalar::monomial((a - 1) % 2 == 0 ? 1 : -1, 0, 1 - a);
    return convert(out, Basis::s);
}

SymFun c_alpha(const Composition& alpha)
{
    SymFun v = SymFun::constant(1);
    for (auto it = alpha.parts().rbegin(); it != alpha.parts().rend(); ++it) {
        v = c_op(*it, v);
    }
    return v;
}

} // namespace ehall
