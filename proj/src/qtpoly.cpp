#include "ehall/qtpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ehall {

namespace {

bool grlex_less(Exponent a, Exponent b)
{
    const auto da = a.q + a.t;
    const auto db = b.q + b.t;
    if (da != db) {
        return da < db;
    }
    return a.q < b.q;
}

void sort_and_merge(std::vector<Term>& v)
{
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        mpq_class acc = std::move(v[i].coeff);
        while (j < v.size() && v[j].key == v[i].key) {
            acc += v[j].coeff;
            ++j;
        }
        if (acc != 0) {
            v[out].key = v[i].key;
            v[out].coeff = std::move(acc);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

// ---------------------------------------------------------------------------
// Dense integer polynomial helpers used by gcd.
// Univariate: index = exponent of t. Bivariate: outer index = exponent of q.

using ZPoly = std::vector<mpz_class>;
using ZZPoly = std::vector<ZPoly>;

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

void trim(ZZPoly& p)
{
    while (!p.empty() && p.back().empty()) {
        p.pop_back();
    }
}

mpz_class content(const ZPoly& p)
{
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

// Exact division in Z[t]; precondition: b divides a.
ZPoly divexact(ZPoly a, const ZPoly& b)
{
    if (a.empty()) {
        return {};
    }
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) {
            continue;
        }
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), a[i].get_mpz_t(), b[db].get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            a[i - db + j] -= c * b[j];
        }
        q[i - db] = std::move(c);
    }
    trim(q);
    return q;
}

ZPoly prem(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        return a;
    }
    const mpz_class& lb = b[db];
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        for (auto& x : a) {
            x *= lb;
        }
        if (c != 0) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[i - db + j] -= c * b[j];
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

ZPoly primitive(ZPoly p)
{
    const mpz_class c = content(p);
    if (c == 0 || c == 1) {
        return p;
    }
    for (auto& x : p) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

ZPoly gcd1(ZPoly a, ZPoly b)
{
    if (a.empty()) {
        return primitive(std::move(b));
    }
    if (b.empty()) {
        return primitive(std::move(a));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        ZPoly r = prem(a, b);
        a = std::move(b);
        b = primitive(std::move(r));
    }
    for (auto& x : a) {
        x *= g;
    }
    if (!a.empty() && a.back() < 0) {
        for (auto& x : a) {
            x = -x;
        }
    }
    return a;
}

ZPoly content(const ZZPoly& p)
{
    ZPoly g;
    for (const auto& c : p) {
        if (c.empty()) {
            continue;
        }
        g = g.empty() ? c : gcd1(g, c);
    }
    if (!g.empty() && g.back() < 0) {
        for (auto& x : g) {
            x = -x;
        }
    }
    return g;
}

ZZPoly primitive(const ZZPoly& p, const ZPoly& c)
{
    ZZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = divexact(p[i], c);
    }
    return r;
}

ZZPoly prem(ZZPoly a, const ZZPoly& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        return a;
    }
    const ZPoly& lb = b[db];
    for (std::size_t i = a.size(); i-- > db;) {
        ZPoly c = a[i];
        for (auto& x : a) {
            x = mul(x, lb);
        }
        if (!c.empty()) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[i - db + j] = sub(a[i - db + j], mul(c, b[j]));
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

ZZPoly gcd2(ZZPoly a, ZZPoly b)
{
    const ZPoly ca = content(a);
    const ZPoly cb = content(b);
    const ZPoly cg = gcd1(ca, cb);
    a = primitive(a, ca);
    b = primitive(b, cb);
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (b.size() > 1) {
        ZZPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
        } else {
            b = primitive(r, content(r));
        }
    }
    if (b.size() == 1) {
        // nonzero remainder free of q: primitive gcd is 1
        a = ZZPoly{ZPoly{mpz_class(1)}};
    }
    for (auto& x : a) {
        x = mul(x, cg);
    }
    return a;
}

// Converts to an integer polynomial, returning the scale factor applied.
ZZPoly to_dense(const QTPoly& p)
{
    mpz_class l = 1;
    for (const auto& term : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coeff.get_den_mpz_t());
    }
    ZZPoly r(p.degree_q() + 1);
    for (const auto& term : p.terms()) {
        const auto e = term.exp();
        auto& row = r[e.q];
        if (row.size() <= e.t) {
            row.resize(e.t + 1);
        }
        mpz_class c = term.coeff.get_num() * (l / term.coeff.get_den());
        row[e.t] = c;
    }
    return r;
}

QTPoly from_dense(const ZZPoly& d)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d[i].size(); ++j) {
            if (d[i][j] != 0) {
                terms.push_back({Exponent{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}.packed(),
                                 mpq_class(d[i][j])});
            }
        }
    }
    return QTPoly::from_terms(std::move(terms));
}

} // namespace

QTPoly::QTPoly(const mpq_class& c)
{
    if (c != 0) {
        terms_.push_back({0, c});
    }
}

QTPoly QTPoly::monomial(const mpq_class& c, std::uint32_t eq, std::uint32_t et)
{
    QTPoly p;
    if (c != 0) {
        p.terms_.push_back({Exponent{eq, et}.packed(), c});
    }
    return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms)
{
    QTPoly p;
    sort_and_merge(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool QTPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

bool QTPoly::is_one() const noexcept
{
    return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1;
}

bool QTPoly::is_integral() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.coeff.get_den() == 1; });
}

mpq_class QTPoly::constant_term() const
{
    if (!terms_.empty() && terms_[0].key == 0) {
        return terms_[0].coeff;
    }
    return 0;
}

mpq_class QTPoly::coeff(std::uint32_t eq, std::uint32_t et) const
{
    const auto k = Exponent{eq, et}.packed();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& a, std::uint64_t v) { return a.key < v; });
    if (it != terms_.end() && it->key == k) {
        return it->coeff;
    }
    return 0;
}

std::uint32_t QTPoly::degree_q() const noexcept
{
    return terms_.empty() ? 0 : terms_.back().exp().q;
}

std::uint32_t QTPoly::degree_t() const noexcept
{
    std::uint32_t d = 0;
    for (const auto& x : terms_) {
        d = std::max(d, x.exp().t);
    }
    return d;
}

std::uint32_t QTPoly::min_q() const noexcept
{
    return terms_.empty() ? 0 : terms_.front().exp().q;
}

std::uint32_t QTPoly::min_t() const noexcept
{
    if (terms_.empty()) {
        return 0;
    }
    std::uint32_t d = terms_.front().exp().t;
    for (const auto& x : terms_) {
        d = std::min(d, x.exp().t);
    }
    return d;
}

const Term& QTPoly::leading_grlex() const
{
    if (terms_.empty()) {
        throw ArithmeticError("leading term of zero polynomial");
    }
    const Term* best = &terms_[0];
    for (const auto& x : terms_) {
        if (grlex_less(best->exp(), x.exp())) {
            best = &x;
        }
    }
    return *best;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b)
{
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].key < a[i].key) {
            r.push_back({b[j].key, negate_b ? mpq_class(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            mpq_class c = negate_b ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
            if (c != 0) {
                r.push_back({a[i].key, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

QTPoly& QTPoly::operator+=(const QTPoly& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.terms_.size() == 1 && a.terms_[0].key == 0) {
        return b * a.terms_[0].coeff;
    }
    if (b.terms_.size() == 1 && b.terms_[0].key == 0) {
        return a * b.terms_[0].coeff;
    }
    QTPoly r;
    if (a.is_integral() && b.is_integral()) {
        std::unordered_map<std::uint64_t, mpz_class> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                auto& slot = acc[x.key + y.key];
                mpz_addmul(slot.get_mpz_t(), x.coeff.get_num_mpz_t(), y.coeff.get_num_mpz_t());
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [k, v] : acc) {
            if (v != 0) {
                r.terms_.push_back({k, mpq_class(v)});
            }
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& u, const Term& v) { return u.key < v.key; });
        return r;
    }
    std::unordered_map<std::uint64_t, mpq_class> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    mpq_class tmp;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            mpq_mul(tmp.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
            acc[x.key + y.key] += tmp;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [k, v] : acc) {
        if (v != 0) {
            r.terms_.push_back({k, std::move(v)});
        }
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& u, const Term& v) { return u.key < v.key; });
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o)
{
    *this = *this * o;
    return *this;
}

QTPoly& QTPoly::operator*=(const mpq_class& c)
{
    if (c == 0) {
        terms_.clear();
    } else if (c != 1) {
        for (auto& x : terms_) {
            x.coeff *= c;
        }
    }
    return *this;
}

QTPoly QTPoly::operator-() const
{
    QTPoly r = *this;
    for (auto& x : r.terms_) {
        x.coeff = -x.coeff;
    }
    return r;
}

bool operator==(const QTPoly& a, const QTPoly& b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

QTPoly QTPoly::pow(unsigned e) const
{
    QTPoly r(1);
    QTPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            r *= base;
        }
        e >>= 1u;
        if (e > 0) {
            base = base * base;
        }
    }
    return r;
}

QTPoly QTPoly::shifted(std::uint32_t eq, std::uint32_t et) const
{
    QTPoly r = *this;
    const auto k = Exponent{eq, et}.packed();
    for (auto& x : r.terms_) {
        x.key += k;
    }
    return r;
}

QTPoly QTPoly::unshifted(std::uint32_t eq, std::uint32_t et) const
{
    QTPoly r = *this;
    for (auto& x : r.terms_) {
        const auto e = x.exp();
        if (e.q < eq || e.t < et) {
            throw ArithmeticError("monomial does not divide polynomial");
        }
        x.key = Exponent{e.q - eq, e.t - et}.packed();
    }
    return r;
}

QTPoly QTPoly::power_substituted(unsigned k) const
{
    QTPoly r = *this;
    for (auto& x : r.terms_) {
        const auto e = x.exp();
        x.key = Exponent{e.q * k, e.t * k}.packed();
    }
    return r;
}

QTPoly QTPoly::swapped() const
{
    std::vector<Term> v = terms_;
    for (auto& x : v) {
        const auto e = x.exp();
        x.key = Exponent{e.t, e.q}.packed();
    }
    return from_terms(std::move(v));
}

std::optional<QTPoly> QTPoly::divide_exact(const QTPoly& d) const
{
    if (d.is_zero()) {
        throw ArithmeticError("division by zero polynomial");
    }
    if (is_zero()) {
        return QTPoly{};
    }
    if (d.is_monomial()) {
        const auto e = d.terms_[0].exp();
        const mpq_class inv = 1 / d.terms_[0].coeff;
        QTPoly r = *this;
        for (auto& x : r.terms_) {
            const auto xe = x.exp();
            if (xe.q < e.q || xe.t < e.t) {
                return std::nullopt;
            }
            x.key = Exponent{xe.q - e.q, xe.t - e.t}.packed();
            x.coeff *= inv;
        }
        return r;
    }
    if (degree_q() < d.degree_q() || degree_t() < d.degree_t()) {
        return std::nullopt;
    }
    const Term& lt = d.terms_.back();
    const auto le = lt.exp();
    const mpq_class inv = 1 / lt.coeff;
    QTPoly rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& rt = rem.terms_.back();
        const auto re = rt.exp();
        if (re.q < le.q || re.t < le.t) {
            return std::nullopt;
        }
        const mpq_class c = rt.coeff * inv;
        const std::uint32_t sq = re.q - le.q;
        const std::uint32_t st = re.t - le.t;
        quot.push_back({Exponent{sq, st}.packed(), c});
        rem -= d.shifted(sq, st) * c;
    }
    return from_terms(std::move(quot));
}

std::size_t QTPoly::hash() const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull ^ terms_.size();
    for (const auto& x : terms_) {
        h ^= std::hash<std::uint64_t>{}(x.key) + 0x9e3779b9 + (h << 6) + (h >> 2);
        const auto n = mpz_size(x.coeff.get_num_mpz_t()) ? mpz_getlimbn(x.coeff.get_num_mpz_t(), 0) : 0;
        const auto d = mpz_getlimbn(x.coeff.get_den_mpz_t(), 0);
        h ^= std::hash<std::uint64_t>{}(n * 31 + d + (mpz_sgn(x.coeff.get_num_mpz_t()) < 0)) + (h << 6) + (h >> 2);
    }
    return h;
}

std::string QTPoly::to_string(const char* qname, const char* tname) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    std::vector<const Term*> order;
    for (const auto& x : terms_) {
        order.push_back(&x);
    }
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return grlex_less(b->exp(), a->exp()); });
    for (const Term* x : order) {
        const auto e = x->exp();
        mpq_class c = x->coeff;
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        if (first) {
            if (neg) {
                os << '-';
            }
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = (c == 1);
        if (!unit || x->key == 0) {
            os << c.get_str();
        }
        bool need_star = !unit;
        auto put = [&](const char* name, std::uint32_t p) {
            if (p == 0) {
                return;
            }
            if (need_star) {
                os << '*';
            }
            os << name;
            if (p > 1) {
                os << '^' << p;
            }
            need_star = true;
        };
        put(qname, e.q);
        put(tname, e.t);
    }
    return os.str();
}

QTPoly gcd(const QTPoly& a, const QTPoly& b)
{
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    const QTPoly* nz = a.is_zero() ? &b : (b.is_zero() ? &a : nullptr);
    QTPoly g;
    if (nz != nullptr) {
        g = *nz;
    } else if (a.is_constant() || b.is_constant()) {
        g = QTPoly(1);
    } else {
        // monomial parts split off first; dense gcd handles the rest
        const std::uint32_t mq = std::min(a.min_q(), b.min_q());
        const std::uint32_t mt = std::min(a.min_t(), b.min_t());
        const QTPoly ar = a.unshifted(a.min_q(), a.min_t());
        const QTPoly br = b.unshifted(b.min_q(), b.min_t());
        if (ar.is_constant() || br.is_constant()) {
            g = QTPoly(1);
        } else if (auto qa = ar.divide_exact(br)) {
            g = br;
        } else if (auto qb = br.divide_exact(ar)) {
            g = ar;
        } else {
            g = from_dense(gcd2(to_dense(ar), to_dense(br)));
        }
        g = g.shifted(mq, mt);
    }
    const mpq_class lc = g.leading_grlex().coeff;
    return g * mpq_class(1 / lc);
}

} // namespace ehall
