#include "ehall/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace ehall {

const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::q: return "q";
    }
    return "?";
}

Basis parse_basis(const std::string& name)
{
    static const std::map<std::string, Basis> names{
        {"m", Basis::m}, {"e", Basis::e}, {"h", Basis::h}, {"p", Basis::p}, {"s", Basis::s}, {"q", Basis::q}};
    auto it = names.find(name);
    if (it == names.end()) {
        throw std::invalid_argument("unknown basis '" + name + "'");
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// SymFun

SymFun::SymFun(Basis b, const Partition& mu, QTScalar c) : basis_(b)
{
    if (!c.is_zero()) {
        terms_.emplace(mu, std::move(c));
    }
}

SymFun SymFun::constant(QTScalar c, Basis b)
{
    return SymFun(b, Partition{}, std::move(c));
}

QTScalar SymFun::coeff(const Partition& mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? QTScalar() : it->second;
}

void SymFun::add_term(const Partition& mu, const QTScalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::vector<int> SymFun::degrees() const
{
    std::vector<int> d;
    for (const auto& [mu, c] : terms_) {
        if (d.empty() || d.back() != mu.size()) {
            d.push_back(mu.size());
        }
    }
    return d;
}

int SymFun::max_degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

bool SymFun::is_homogeneous() const
{
    return degrees().size() <= 1;
}

SymFun SymFun::homogeneous_part(int d) const
{
    SymFun r(basis_);
    for (const auto& [mu, c] : terms_) {
        if (mu.size() == d) {
            r.terms_.emplace(mu, c);
        }
    }
    return r;
}

SymFun& SymFun::operator+=(const SymFun& o)
{
    if (o.basis_ != basis_) {
        return *this += convert(o, basis_);
    }
    for (const auto& [mu, c] : o.terms_) {
        add_term(mu, c);
    }
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o)
{
    return *this += -o;
}

SymFun& SymFun::operator*=(const QTScalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, x] : terms_) {
        x *= c;
    }
    return *this;
}

SymFun SymFun::operator-() const
{
    SymFun r = *this;
    for (auto& [mu, x] : r.terms_) {
        x = -x;
    }
    return r;
}

namespace {

bool multiplicative_basis(Basis b)
{
    return b == Basis::p || b == Basis::e || b == Basis::h || b == Basis::q;
}

SymFun join_product(const SymFun& a, const SymFun& b)
{
    SymFun r(a.basis());
    for (const auto& [mu, x] : a.terms()) {
        for (const auto& [nu, y] : b.terms()) {
            r.add_term(mu.joined(nu), x * y);
        }
    }
    return r;
}

} // namespace

SymFun operator*(const SymFun& a, const SymFun& b)
{
    if (multiplicative_basis(a.basis())) {
        return join_product(a, b.basis() == a.basis() ? b : convert(b, a.basis()));
    }
    const SymFun pa = convert(a, Basis::p);
    const SymFun pb = convert(b, Basis::p);
    return convert(join_product(pa, pb), a.basis());
}

bool operator==(const SymFun& a, const SymFun& b)
{
    if (a.basis_ == b.basis_) {
        if (a.terms_.size() != b.terms_.size()) {
            return false;
        }
        auto it = b.terms_.begin();
        for (const auto& [mu, c] : a.terms_) {
            if (!(it->first == mu) || it->second != c) {
                return false;
            }
            ++it;
        }
        return true;
    }
    return a == convert(b, a.basis_);
}

SymFun SymFun::map_coeffs(const std::function<QTScalar(const QTScalar&)>& fn) const
{
    SymFun r(basis_);
    for (const auto& [mu, c] : terms_) {
        QTScalar v = fn(c);
        if (!v.is_zero()) {
            r.terms_.emplace(mu, std::move(v));
        }
    }
    return r;
}

std::size_t SymFun::hash() const noexcept
{
    std::size_t h = static_cast<std::size_t>(basis_) * 0x9e3779b97f4a7c15ull;
    for (const auto& [mu, c] : terms_) {
        h ^= PartitionHash{}(mu) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= c.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::string SymFun::to_string(const char* qname, const char* tname) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c.to_string(qname, tname) << ")*" << basis_name(basis_) << '[';
        for (std::size_t i = 0; i < mu.parts().size(); ++i) {
            os << (i ? "," : "") << mu.parts()[i];
        }
        os << ']';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Characters and transition matrices

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

struct ConversionCache {
    std::shared_mutex mu;
    std::map<std::pair<int, int>, RatMatrix> to_p;   // (basis, degree)
    std::map<std::pair<int, int>, RatMatrix> from_p; // (basis, degree)
    std::map<int, std::unordered_map<Partition, std::size_t, PartitionHash>> index;
    std::map<std::pair<Partition, Partition>, mpz_class> chars;
    std::map<int, std::vector<SymFun>> q_in_p; // degree -> q_mu in p, index order
};

ConversionCache& cache()
{
    static ConversionCache c;
    return c;
}

// Murnaghan-Nakayama on beta sets.
mpz_class chi_rec(const Partition& lambda, const Partition& rho, std::size_t from)
{
    if (from == rho.parts().size()) {
        return lambda.size() == 0 ? 1 : 0;
    }
    const int k = rho.parts()[from];
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)] + (len - 1 - i);
    }
    mpz_class total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int nb = b - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) {
            continue;
        }
        int between = 0;
        for (const int x : beta) {
            if (x > nb && x < b) {
                ++between;
            }
        }
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            const int p = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (p > 0) {
                parts.push_back(p);
            }
        }
        const mpz_class sub = chi_rec(Partition(std::move(parts)), rho, from + 1);
        if (between % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    return total;
}

RatMatrix invert(RatMatrix a)
{
    const std::size_t n = a.size();
    RatMatrix inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            throw ArithmeticError("singular transition matrix");
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const mpq_class p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Coefficients of p-expansions of e_n or h_n: sum_rho sign * p_rho / z_rho.
std::map<Partition, mpq_class> eh_in_p(int n, bool elementary)
{
    std::map<Partition, mpq_class> r;
    for (const auto& rho : partitions_of(n)) {
        mpq_class c(mpz_class(1), rho.z());
        c.canonicalize();
        if (elementary && (n - rho.length()) % 2 != 0) {
            c = -c;
        }
        r.emplace(rho, c);
    }
    return r;
}

// Number of ways to distribute the parts of rho into blocks with sums lambda.
mpz_class count_fillings(const std::vector<int>& rho, std::size_t i, std::vector<int>& cap)
{
    if (i == rho.size()) {
        return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    mpz_class total = 0;
    for (auto& c : cap) {
        if (c >= rho[i]) {
            c -= rho[i];
            total += count_fillings(rho, i + 1, cap);
            c += rho[i];
        }
    }
    return total;
}

RatMatrix build_to_p(Basis b, int d)
{
    const auto& parts = partitions_of(d);
    const std::size_t n = parts.size();
    RatMatrix mat(n, std::vector<mpq_class>(n));
    switch (b) {
    case Basis::p:
        for (std::size_t i = 0; i < n; ++i) {
            mat[i][i] = 1;
        }
        break;
    case Basis::s:
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                mpq_class c(character(parts[col], parts[row]), parts[row].z());
                c.canonicalize();
                mat[row][col] = c;
            }
        }
        break;
    case Basis::e:
    case Basis::h:
        for (std::size_t col = 0; col < n; ++col) {
            std::map<Partition, mpq_class> acc{{Partition{}, mpq_class(1)}};
            for (const int k : parts[col].parts()) {
                const auto fac = eh_in_p(k, b == Basis::e);
                std::map<Partition, mpq_class> next;
                for (const auto& [mu, x] : acc) {
                    for (const auto& [nu, y] : fac) {
                        next[mu.joined(nu)] += x * y;
                    }
                }
                acc = std::move(next);
            }
            for (const auto& [mu, x] : acc) {
                mat[partition_index(mu)][col] = x;
            }
        }
        break;
    case Basis::m: {
        // p_rho = sum_lambda L[rho][lambda] m_lambda; m -> p is its inverse
        RatMatrix L(n, std::vector<mpq_class>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<int> cap = parts[c].parts();
                L[c][r] = count_fillings(parts[r].parts(), 0, cap);
            }
        }
        // L as written maps p-coordinates to m-coordinates: column r is p_rho
        mat = invert(L);
        break;
    }
    case Basis::q:
        throw std::logic_error("q basis has no rational transition matrix");
    }
    return mat;
}

const RatMatrix& matrix(Basis b, int d, bool to_p)
{
    auto& c = cache();
    const std::pair key{static_cast<int>(b), d};
    {
        std::shared_lock lock(c.mu);
        auto& m = to_p ? c.to_p : c.from_p;
        auto it = m.find(key);
        if (it != m.end()) {
            return it->second;
        }
    }
    RatMatrix forward = build_to_p(b, d);
    RatMatrix backward = invert(forward);
    std::unique_lock lock(c.mu);
    c.to_p.try_emplace(key, std::move(forward));
    c.from_p.try_emplace(key, std::move(backward));
    return to_p ? c.to_p.at(key) : c.from_p.at(key);
}

// q_mu in the p basis for all mu |- d, in partitions_of(d) order.
const std::vector<SymFun>& q_products_in_p(int d)
{
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.q_in_p.find(d);
        if (it != c.q_in_p.end()) {
            return it->second;
        }
    }
    std::vector<SymFun> out;
    std::map<int, SymFun> single;
    for (const auto& mu : partitions_of(d)) {
        SymFun acc = SymFun::constant(1, Basis::p);
        for (const int k : mu.parts()) {
            auto it = single.find(k);
            if (it == single.end()) {
                it = single.emplace(k, convert(qfun(k), Basis::p)).first;
            }
            acc = acc * it->second;
        }
        out.push_back(std::move(acc));
    }
    std::unique_lock lock(c.mu);
    return c.q_in_p.try_emplace(d, std::move(out)).first->second;
}

std::map<int, std::vector<QTScalar>> to_vectors(const SymFun& f)
{
    std::map<int, std::vector<QTScalar>> out;
    for (const auto& [mu, c] : f.terms()) {
        auto& v = out[mu.size()];
        if (v.empty()) {
            v.resize(partitions_of(mu.size()).size());
        }
        v[partition_index(mu)] = c;
    }
    return out;
}

std::vector<QTScalar> mat_apply(const RatMatrix& m, const std::vector<QTScalar>& v)
{
    std::vector<QTScalar> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] != 0 && !v[j].is_zero()) {
                r[i] += v[j] * QTScalar(m[i][j]);
            }
        }
    }
    return r;
}

std::vector<QTScalar> q_to_p(int d, const std::vector<QTScalar>& v)
{
    const auto& qs = q_products_in_p(d);
    std::vector<QTScalar> r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) {
            continue;
        }
        for (const auto& [nu, c] : qs[j].terms()) {
            r[partition_index(nu)] += c * v[j];
        }
    }
    return r;
}

std::vector<QTScalar> p_to_q(int d, const std::vector<QTScalar>& w)
{
    const auto& parts = partitions_of(d);
    const auto& qs = q_products_in_p(d);
    std::vector<std::size_t> order(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return parts[a].length() < parts[b].length(); });
    std::vector<QTScalar> c(parts.size());
    for (const std::size_t nu : order) {
        QTScalar rhs = w[nu];
        for (const std::size_t mu : order) {
            if (parts[mu].length() >= parts[nu].length()) {
                break;
            }
            if (!c[mu].is_zero()) {
                rhs -= c[mu] * qs[mu].coeff(parts[nu]);
            }
        }
        const QTScalar diag = qs[nu].coeff(parts[nu]);
        if (diag.is_zero()) {
            throw std::logic_error("q basis expansion is not triangular");
        }
        c[nu] = rhs / diag;
    }
    return c;
}

SymFun from_vectors(Basis b, const std::map<int, std::vector<QTScalar>>& vs)
{
    SymFun r(b);
    for (const auto& [d, v] : vs) {
        const auto& parts = partitions_of(d);
        for (std::size_t i = 0; i < v.size(); ++i) {
            r.add_term(parts[i], v[i]);
        }
    }
    return r;
}

} // namespace

std::size_t partition_index(const Partition& mu)
{
    auto& c = cache();
    const int d = mu.size();
    {
        std::shared_lock lock(c.mu);
        auto it = c.index.find(d);
        if (it != c.index.end()) {
            return it->second.at(mu);
        }
    }
    std::unordered_map<Partition, std::size_t, PartitionHash> idx;
    const auto& parts = partitions_of(d);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        idx.emplace(parts[i], i);
    }
    std::unique_lock lock(c.mu);
    return c.index.try_emplace(d, std::move(idx)).first->second.at(mu);
}

mpz_class character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) {
        throw ShapeError("character arguments of different sizes");
    }
    auto& c = cache();
    const auto key = std::make_pair(lambda, rho);
    {
        std::shared_lock lock(c.mu);
        auto it = c.chars.find(key);
        if (it != c.chars.end()) {
            return it->second;
        }
    }
    mpz_class v = chi_rec(lambda, rho, 0);
    std::unique_lock lock(c.mu);
    c.chars.try_emplace(key, v);
    return v;
}

SymFun convert(const SymFun& f, Basis target)
{
    if (f.basis() == target) {
        return f;
    }
    std::map<int, std::vector<QTScalar>> out;
    for (auto& [d, v] : to_vectors(f)) {
        std::vector<QTScalar> pv = f.basis() == Basis::q ? q_to_p(d, v) : mat_apply(matrix(f.basis(), d, true), v);
        out[d] = target == Basis::q ? p_to_q(d, pv) : mat_apply(matrix(target, d, false), pv);
    }
    return from_vectors(target, out);
}

SymFun expand_in_q(const SymFun& f)
{
    return convert(f, Basis::q);
}

// ---------------------------------------------------------------------------

SymFun elementary(int n)
{
    return SymFun(Basis::e, n == 0 ? Partition{} : Partition{n});
}

SymFun complete(int n)
{
    return SymFun(Basis::h, n == 0 ? Partition{} : Partition{n});
}

SymFun power_sum(int n)
{
    return SymFun(Basis::p, n == 0 ? Partition{} : Partition{n});
}

SymFun schur(const Partition& mu)
{
    return SymFun(Basis::s, mu);
}

SymFun monomial_sym(const Partition& mu)
{
    return SymFun(Basis::m, mu);
}

SymFun hook_schur(int j, int k)
{
    return SymFun(Basis::s, hook(j, k));
}

SymFun qfun(int d)
{
    if (d < 1) {
        throw ShapeError("q_d needs d >= 1");
    }
    SymFun r(Basis::s);
    for (int j = 0; j <= d - 1; ++j) {
        r.add_term(hook(j, d - 1 - j), QTScalar::monomial(j % 2 == 0 ? 1 : -1, -j, -j));
    }
    return r;
}

QTScalar hall_scalar(const SymFun& f, const SymFun& g)
{
    const SymFun a = convert(f, Basis::s);
    const SymFun b = convert(g, Basis::s);
    QTScalar r;
    for (const auto& [mu, c] : a.terms()) {
        auto it = b.terms().find(mu);
        if (it != b.terms().end()) {
            r += c * it->second;
        }
    }
    return r;
}

SymFun omega(const SymFun& f)
{
    SymFun r(Basis::s);
    const SymFun fs = convert(f, Basis::s);
    for (const auto& [mu, c] : fs.terms()) {
        r.add_term(mu.conjugate(), c);
    }
    return f.basis() == Basis::s ? r : convert(r, f.basis());
}

SymFun omega_star(const SymFun& f)
{
    SymFun w = omega(convert(f, Basis::s));
    const Substitution inv = Substitution::invert();
    SymFun r(Basis::s);
    for (const auto& [mu, c] : w.terms()) {
        const int d = mu.size();
        // (-1/qt)^{d-1}
        const QTScalar pref = QTScalar::monomial((d - 1) % 2 == 0 ? 1 : -1, 1 - d, 1 - d);
        r.add_term(mu, pref * specialize(c, inv));
    }
    return f.basis() == Basis::s ? r : convert(r, f.basis());
}

SymFun bar(const SymFun& f)
{
    SymFun r(Basis::s);
    const SymFun fs = convert(f, Basis::s);
    for (const auto& [mu, c] : fs.terms()) {
        r.add_term(mu.bar(), c);
    }
    return r;
}

SymFun specialize(const SymFun& f, const Substitution& s)
{
    SymFun r(f.basis());
    for (const auto& [mu, c] : f.terms()) {
        r.add_term(mu, specialize(c, s));
    }
    return r;
}

SymFun composition_schur(const Composition& alpha)
{
    const auto& c = alpha.parts();
    const int k = alpha.length();
    if (k == 0) {
        return SymFun::constant(1);
    }
    // permutation expansion of det(h_{c_i - i + j})
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }
    SymFun acc(Basis::h);
    do {
        std::vector<int> idx;
        bool zero = false;
        for (int i = 0; i < k; ++i) {
            const int v = c[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
            if (v < 0) {
                zero = true;
                break;
            }
            if (v > 0) {
                idx.push_back(v);
            }
        }
        if (zero) {
            continue;
        }
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) {
                    ++inversions;
                }
            }
        }
        acc.add_term(Partition::from_unsorted(idx), QTScalar(inversions % 2 == 0 ? 1L : -1L));
    } while (std::next_permutation(perm.begin(), perm.end()));
    SymFun r = convert(acc, Basis::s);
    if (r.terms().size() > 1) {
        throw std::logic_error("composition Schur function is not a signed Schur function");
    }
    for (const auto& [mu, x] : r.terms()) {
        if (!(x.is_one() || (-x).is_one())) {
            throw std::logic_error("composition Schur function has coefficient other than +-1");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Plethysm

Alphabet Alphabet::plus_M_over_z()
{
    // M/z = (1 - t - q + qt)/z
    return {1, {{1, 0, 0, -1}, {-1, 0, 1, -1}, {-1, 1, 0, -1}, {1, 1, 1, -1}}};
}

Alphabet Alphabet::minus_t_minus_one_over_tz()
{
    // -(t-1)/(tz) = 1/(tz) - 1/z
    return {1, {{1, 0, -1, -1}, {-1, 0, 0, -1}}};
}

SymFun ZLaurent::at(int e) const
{
    if (e > bound || e < -bound) {
        throw TruncationError("coefficient z^" + std::to_string(e) + " lies outside truncation bound " +
                              std::to_string(bound));
    }
    auto it = coeffs.find(e);
    return it == coeffs.end() ? SymFun(Basis::p) : it->second;
}

ZLaurent plethys(const SymFun& f, const Alphabet& A, int z_truncation)
{
    ZLaurent out;
    out.bound = z_truncation;
    const SymFun fp = convert(f, Basis::p);
    // cache p_k[A] as z-exponent -> (coefficient of p_k, scalar part)
    struct Image {
        QTScalar base;                    // coefficient of p_k, at z^0
        std::map<int, QTScalar> scalars;  // z exponent -> scalar
    };
    std::map<int, Image> images;
    auto image = [&](int k) -> const Image& {
        auto it = images.find(k);
        if (it != images.end()) {
            return it->second;
        }
        Image im;
        im.base = A.base_scale.power_substituted(static_cast<unsigned>(k));
        for (const auto& x : A.extras) {
            im.scalars[x.z * k] += QTScalar::monomial(x.sign, x.q * k, x.t * k);
        }
        return images.emplace(k, std::move(im)).first->second;
    };

    for (const auto& [lambda, c] : fp.terms()) {
        // z exponent -> (p-partition -> coefficient)
        std::map<int, std::map<Partition, QTScalar>> acc{{0, {{Partition{}, c}}}};
        for (const int k : lambda.parts()) {
            const Image& im = image(k);
            std::map<int, std::map<Partition, QTScalar>> next;
            for (const auto& [ze, terms] : acc) {
                for (const auto& [mu, x] : terms) {
                    if (!im.base.is_zero()) {
                        auto& slot = next[ze][mu.joined(Partition{k})];
                        slot += x * im.base;
                    }
                    for (const auto& [se, s] : im.scalars) {
                        if (s.is_zero()) {
                            continue;
                        }
                        next[ze + se][mu] += x * s;
                    }
                }
            }
            acc = std::move(next);
        }
        for (const auto& [ze, terms] : acc) {
            if (ze > z_truncation || ze < -z_truncation) {
                continue;
            }
            auto [it, ins] = out.coeffs.try_emplace(ze, Basis::p);
            for (const auto& [mu, x] : terms) {
                it->second.add_term(mu, x);
            }
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    }
    return out;
}

} // namespace ehall
