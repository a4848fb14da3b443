#include "ehall/qtscalar.hpp"

#include <sstream>
#include <vector>

namespace ehall {

namespace {

QTPoly make_den_monic(QTPoly& num, QTPoly den)
{
    const mpq_class lc = den.leading_grlex().coeff;
    if (lc != 1) {
        const mpq_class inv = 1 / lc;
        num *= inv;
        den *= inv;
    }
    return den;
}

} // namespace

QTScalar QTScalar::fraction(QTPoly num, QTPoly den)
{
    if (den.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    QTScalar r;
    if (num.is_zero()) {
        return r;
    }
    // common monomial factor
    const std::uint32_t mq = std::min(num.min_q(), den.min_q());
    const std::uint32_t mt = std::min(num.min_t(), den.min_t());
    if (mq != 0 || mt != 0) {
        num = num.unshifted(mq, mt);
        den = den.unshifted(mq, mt);
    }
    if (den.is_monomial()) {
        r.den_ = make_den_monic(num, std::move(den));
        r.num_ = std::move(num);
        return r;
    }
    if (auto quot = num.divide_exact(den)) {
        r.num_ = std::move(*quot);
        return r;
    }
    const QTPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
    r.den_ = make_den_monic(num, std::move(den));
    r.num_ = std::move(num);
    return r;
}

QTScalar QTScalar::monomial(const mpq_class& c, int eq, int et)
{
    const auto nq = static_cast<std::uint32_t>(eq > 0 ? eq : 0);
    const auto nt = static_cast<std::uint32_t>(et > 0 ? et : 0);
    const auto dq = static_cast<std::uint32_t>(eq < 0 ? -eq : 0);
    const auto dt = static_cast<std::uint32_t>(et < 0 ? -et : 0);
    QTScalar r;
    r.num_ = QTPoly::monomial(c, nq, nt);
    r.den_ = QTPoly::monomial(1, dq, dt);
    return r;
}

QTScalar QTScalar::M()
{
    return QTScalar((QTPoly(1) - QTPoly::t()) * (QTPoly(1) - QTPoly::q()));
}

mpq_class QTScalar::as_rational() const
{
    if (!is_rational_constant()) {
        throw ArithmeticError("not a rational constant: " + to_string());
    }
    return num_.constant_term();
}

QTScalar& QTScalar::operator+=(const QTScalar& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = fraction(num_ + o.num_, den_);
        return *this;
    }
    if (den_.is_one()) {
        *this = fraction(num_ * o.den_ + o.num_, o.den_);
        return *this;
    }
    if (o.den_.is_one()) {
        *this = fraction(num_ + o.num_ * den_, den_);
        return *this;
    }
    const QTPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    } else {
        const QTPoly a = *den_.divide_exact(g);
        const QTPoly b = *o.den_.divide_exact(g);
        *this = fraction(num_ * b + o.num_ * a, den_ * b);
    }
    return *this;
}

QTScalar& QTScalar::operator-=(const QTScalar& o)
{
    return *this += -o;
}

QTScalar& QTScalar::operator*=(const QTScalar& o)
{
    if (is_zero() || o.is_zero()) {
        return *this = QTScalar();
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    if (o.is_rational_constant()) {
        num_ *= o.num_.constant_term();
        return *this;
    }
    if (is_rational_constant()) {
        const mpq_class c = num_.constant_term();
        *this = o;
        num_ *= c;
        return *this;
    }
    *this = fraction(num_ * o.num_, den_ * o.den_);
    return *this;
}

QTScalar& QTScalar::operator/=(const QTScalar& o)
{
    if (o.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    if (o.is_rational_constant()) {
        num_ *= mpq_class(1 / o.num_.constant_term());
        return *this;
    }
    *this = fraction(num_ * o.den_, den_ * o.num_);
    return *this;
}

QTScalar& QTScalar::operator*=(const mpq_class& c)
{
    if (c == 0) {
        return *this = QTScalar();
    }
    num_ *= c;
    return *this;
}

QTScalar QTScalar::operator-() const
{
    QTScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QTScalar QTScalar::pow(int e) const
{
    if (e < 0) {
        if (is_zero()) {
            throw ArithmeticError("division by zero");
        }
        return fraction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    QTScalar r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

QTScalar QTScalar::power_substituted(unsigned k) const
{
    if (k == 1) {
        return *this;
    }
    return fraction(num_.power_substituted(k), den_.power_substituted(k));
}

QTScalar QTScalar::swapped() const
{
    return fraction(num_.swapped(), den_.swapped());
}

std::size_t QTScalar::hash() const noexcept
{
    return num_.hash() * 1000003u ^ den_.hash();
}

std::string QTScalar::to_string(const char* qname, const char* tname) const
{
    if (den_.is_one()) {
        return num_.to_string(qname, tname);
    }
    std::ostringstream os;
    os << '(' << num_.to_string(qname, tname) << ")/(" << den_.to_string(qname, tname) << ')';
    return os.str();
}

Substitution Substitution::t_equals(const QTScalar& v, std::string label)
{
    return {std::nullopt, v, std::move(label)};
}

Substitution Substitution::t_one_plus_r()
{
    return {std::nullopt, QTScalar(QTPoly(1) + QTPoly::t()), "t=1+r"};
}

Substitution Substitution::t_inverse_q()
{
    return {std::nullopt, QTScalar::monomial(1, -1, 0), "t=1/q"};
}

Substitution Substitution::invert()
{
    return {QTScalar::monomial(1, -1, 0), QTScalar::monomial(1, 0, -1), "q=1/q,t=1/t"};
}

namespace {

// Evaluates p at q = Qn/Qd, t = Tn/Td; returns N with p(Q,T) = N / (Qd^A Td^B),
// A = deg_q p, B = deg_t p.
QTPoly evaluate_cleared(const QTPoly& p, const QTScalar& Q, const QTScalar& T, unsigned A, unsigned B)
{
    std::vector<QTPoly> qn{QTPoly(1)}, qd{QTPoly(1)}, tn{QTPoly(1)}, td{QTPoly(1)};
    for (unsigned i = 1; i <= A; ++i) {
        qn.push_back(qn.back() * Q.num());
        qd.push_back(qd.back() * Q.den());
    }
    for (unsigned i = 1; i <= B; ++i) {
        tn.push_back(tn.back() * T.num());
        td.push_back(td.back() * T.den());
    }
    QTPoly out;
    for (const auto& term : p.terms()) {
        const auto e = term.exp();
        QTPoly x = qn[e.q];
        if (!qd[A - e.q].is_one()) {
            x *= qd[A - e.q];
        }
        if (!tn[e.t].is_one()) {
            x *= tn[e.t];
        }
        if (!td[B - e.t].is_one()) {
            x *= td[B - e.t];
        }
        x *= term.coeff;
        out += x;
    }
    return out;
}

} // namespace

QTScalar specialize(const QTScalar& x, const Substitution& s)
{
    if (x.is_rational_constant()) {
        return x;
    }
    const QTScalar Q = s.q.value_or(QTScalar::q());
    const QTScalar T = s.t.value_or(QTScalar::t());
    const unsigned An = x.num().degree_q();
    const unsigned Bn = x.num().degree_t();
    const unsigned Ad = x.den().degree_q();
    const unsigned Bd = x.den().degree_t();
    QTPoly n = evaluate_cleared(x.num(), Q, T, An, Bn);
    QTPoly d = evaluate_cleared(x.den(), Q, T, Ad, Bd);
    if (d.is_zero()) {
        throw PoleError(s.label.empty() ? std::string("substitution") : s.label);
    }
    // n / (Qd^An Td^Bn)  divided by  d / (Qd^Ad Td^Bd)
    const QTPoly& qd = Q.den();
    const QTPoly& tdp = T.den();
    if (!qd.is_one()) {
        if (Ad >= An) {
            n *= qd.pow(Ad - An);
        } else {
            d *= qd.pow(An - Ad);
        }
    }
    if (!tdp.is_one()) {
        if (Bd >= Bn) {
            n *= tdp.pow(Bd - Bn);
        } else {
            d *= tdp.pow(Bn - Bd);
        }
    }
    return QTScalar::fraction(std::move(n), std::move(d));
}

} // namespace ehall
