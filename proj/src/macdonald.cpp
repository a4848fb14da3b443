#include "ehall/macdonald.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ehall/operators.hpp"

namespace ehall {

namespace {

using Matrix = std::vector<std::vector<QTScalar>>;

// Fraction-free elimination to row echelon form; returns the pivot columns.
std::vector<std::size_t> bareiss(Matrix& a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    QTScalar prev(1L);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                QTScalar x = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = x.is_zero() ? x : x / prev;
            }
            a[i][c] = QTScalar();
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix invert(Matrix a)
{
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) {
            ++p;
        }
        if (p == n) {
            throw std::logic_error("Macdonald change of basis is singular");
        }
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const QTScalar piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[c][j].is_zero()) a[c][j] /= piv;
            if (!inv[c][j].is_zero()) inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) {
                continue;
            }
            const QTScalar f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
                if (!inv[c][j].is_zero()) inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

EigenBasis build(int n)
{
    EigenBasis eb;
    eb.degree = n;
    const auto& parts = partitions_of(n);
    const std::size_t dim = parts.size();
    const OpMatrix& D = d0_matrix(n);
    const QTScalar M = QTScalar::M();
    for (const auto& mu : parts) {
        EigenVector ev;
        ev.mu = mu;
        ev.d0_eig = QTScalar(1) - M * cell_sum(mu);
        ev.nabla_eig = QTScalar::monomial(1, mu.conjugate().nstat(), mu.nstat());
        for (const auto& other : eb.vectors) {
            if (other.d0_eig == ev.d0_eig) {
                throw std::logic_error("repeated D0 eigenvalue in degree " + std::to_string(n));
            }
        }
        Matrix a = D.rows;
        for (std::size_t i = 0; i < dim; ++i) {
            a[i][i] -= ev.d0_eig;
        }
        const auto pivots = bareiss(a);
        if (pivots.size() + 1 != dim) {
            throw std::logic_error("eigenspace of " + mu.to_string() + " is not one-dimensional");
        }
        std::size_t free_col = dim - 1;
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            if (pivots[j] != j) {
                free_col = j;
                break;
            }
        }
        std::vector<QTScalar> x(dim);
        x[free_col] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            QTScalar s;
            for (std::size_t j = pc + 1; j < dim; ++j) {
                if (!x[j].is_zero() && !a[k][j].is_zero()) {
                    s += a[k][j] * x[j];
                }
            }
            x[pc] = s.is_zero() ? s : -s / a[k][pc];
        }
        const QTScalar lead = x[0]; // s_(n) comes first
        if (lead.is_zero()) {
            throw std::logic_error("eigenvector of " + mu.to_string() + " has no s_(n) term");
        }
        for (auto& c : x) {
            if (!c.is_zero()) c /= lead;
        }
        ev.H = from_s_vector(n, x);
        eb.vectors.push_back(std::move(ev));
    }
    Matrix H(dim, std::vector<QTScalar>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (const auto& [nu, c] : eb.vectors[j].H.terms()) {
            H[partition_index(nu)][j] = c;
        }
    }
    eb.inverse = invert(std::move(H));
    return eb;
}

} // namespace

QTScalar cell_sum(const Partition& mu)
{
    QTPoly b;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        for (int j = 0; j < mu.parts()[i]; ++j) {
            b += QTPoly::monomial(1, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i));
        }
    }
    return QTScalar(b);
}

const EigenBasis& eigenbasis(int n)
{
    static std::shared_mutex mu;
    static std::map<int, EigenBasis> cache;
    {
        std::shared_lock lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) {
            return it->second;
        }
    }
    EigenBasis eb = build(n);
    std::unique_lock lock(mu);
    return cache.try_emplace(n, std::move(eb)).first->second;
}

SymFun nabla(const SymFun& f, int power)
{
    SymFun out(Basis::s);
    for (const int d : f.degrees()) {
        const EigenBasis& eb = eigenbasis(d);
        const auto v = s_vector(f, d);
        const std::size_t dim = v.size();
        for (std::size_t i = 0; i < dim; ++i) {
            QTScalar a;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!v[j].is_zero() && !eb.inverse[i][j].is_zero()) {
                    a += eb.inverse[i][j] * v[j];
                }
            }
            if (a.is_zero()) {
                continue;
            }
            out += (a * eb.vectors[i].nabla_eig.pow(power)) * eb.vectors[i].H;
        }
    }
    return out;
}

} // namespace ehall
