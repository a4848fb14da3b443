#pragma once

#include <optional>
#include <string>

#include "ehall/qtpoly.hpp"

namespace ehall {

/// Element of Q(q,t), kept in canonical reduced form: gcd(num, den) = 1 and
/// den monic under graded lex (q before t). Zero is 0/1.
class QTScalar {
public:
    QTScalar() : den_(1) {}
    QTScalar(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    QTScalar(const mpq_class& c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    QTScalar(QTPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)

    /// Reduces num/den to canonical form. Throws ArithmeticError if den = 0.
    static QTScalar fraction(QTPoly num, QTPoly den);
    /// c q^eq t^et with possibly negative exponents.
    static QTScalar monomial(const mpq_class& c, int eq, int et);
    static QTScalar q() { return QTScalar(QTPoly::q()); }
    static QTScalar t() { return QTScalar(QTPoly::t()); }
    /// M = (1-t)(1-q).
    static QTScalar M();

    [[nodiscard]] const QTPoly& num() const noexcept { return num_; }
    [[nodiscard]] const QTPoly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const noexcept { return den_.is_one(); }
    [[nodiscard]] bool is_rational_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
    /// Value when this is a rational constant.
    [[nodiscard]] mpq_class as_rational() const;

    QTScalar& operator+=(const QTScalar& o);
    QTScalar& operator-=(const QTScalar& o);
    QTScalar& operator*=(const QTScalar& o);
    QTScalar& operator/=(const QTScalar& o);
    QTScalar& operator*=(const mpq_class& c);
    friend QTScalar operator+(QTScalar a, const QTScalar& b) { return a += b; }
    friend QTScalar operator-(QTScalar a, const QTScalar& b) { return a -= b; }
    friend QTScalar operator*(QTScalar a, const QTScalar& b) { return a *= b; }
    friend QTScalar operator/(QTScalar a, const QTScalar& b) { return a /= b; }
    QTScalar operator-() const;

    friend bool operator==(const QTScalar& a, const QTScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QTScalar& a, const QTScalar& b) { return !(a == b); }

    [[nodiscard]] QTScalar pow(int e) const;
    /// Plethystic power substitution q -> q^k, t -> t^k.
    [[nodiscard]] QTScalar power_substituted(unsigned k) const;
    /// q <-> t.
    [[nodiscard]] QTScalar swapped() const;

    [[nodiscard]] std::size_t hash() const noexcept;
    [[nodiscard]] std::string to_string(const char* qname = "q", const char* tname = "t") const;

private:
    QTPoly num_;
    QTPoly den_;
};

/// Raised when a specialization makes a denominator vanish.
class PoleError : public ArithmeticError {
public:
    explicit PoleError(const std::string& binding)
        : ArithmeticError("pole at " + binding), binding_(binding)
    {
    }
    [[nodiscard]] const std::string& binding() const noexcept { return binding_; }

private:
    std::string binding_;
};

/// Simultaneous substitution of q and/or t by elements of Q(q,t).
///
/// The t = 1 + r specialization stores r in the t slot of the result; the
/// caller is responsible for reading that slot as r afterwards.
struct Substitution {
    std::optional<QTScalar> q;
    std::optional<QTScalar> t;
    std::string label;

    static Substitution t_equals(const QTScalar& v, std::string label);
    static Substitution t_one() { return t_equals(1, "t=1"); }
    static Substitution q_one() { return {QTScalar(1), std::nullopt, "q=1"}; }
    static Substitution qt_one() { return {QTScalar(1), QTScalar(1), "q=t=1"}; }
    /// t -> 1 + r, with r written into the t slot.
    static Substitution t_one_plus_r();
    /// t -> 1/q.
    static Substitution t_inverse_q();
    /// q -> 1/q, t -> 1/t.
    static Substitution invert();
};

QTScalar specialize(const QTScalar& x, const Substitution& s);

} // namespace ehall
