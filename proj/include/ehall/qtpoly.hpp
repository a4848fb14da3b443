#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ehall {

/// Exponent pair of a monomial q^eq t^et, packed so that integer order equals
/// lexicographic order on (eq, et).
struct Exponent {
    std::uint32_t q = 0;
    std::uint32_t t = 0;

    [[nodiscard]] constexpr std::uint64_t packed() const noexcept
    {
        return (static_cast<std::uint64_t>(q) << 32) | t;
    }
    static constexpr Exponent unpack(std::uint64_t k) noexcept
    {
        return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xffffffffu)};
    }
    friend constexpr bool operator==(Exponent, Exponent) = default;
};

struct Term {
    std::uint64_t key; // Exponent::packed()
    mpq_class coeff;

    [[nodiscard]] Exponent exp() const noexcept { return Exponent::unpack(key); }
};

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse polynomial in q and t with rational coefficients.
///
/// Terms are kept sorted by (q-exponent, t-exponent) ascending, with no zero
/// coefficients. The last term is therefore the leading term for the
/// lexicographic order q > t, which the division routine relies on.
class QTPoly {
public:
    QTPoly() = default;
    explicit QTPoly(const mpq_class& c);
    explicit QTPoly(long c) : QTPoly(mpq_class(c)) {}

    static QTPoly monomial(const mpq_class& c, std::uint32_t eq, std::uint32_t et);
    static QTPoly q() { return monomial(1, 1, 0); }
    static QTPoly t() { return monomial(1, 0, 1); }
    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    static QTPoly from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// True when every coefficient is an integer.
    [[nodiscard]] bool is_integral() const noexcept;
    [[nodiscard]] mpq_class constant_term() const;
    [[nodiscard]] mpq_class coeff(std::uint32_t eq, std::uint32_t et) const;

    [[nodiscard]] std::uint32_t degree_q() const noexcept;
    [[nodiscard]] std::uint32_t degree_t() const noexcept;
    [[nodiscard]] std::uint32_t min_q() const noexcept;
    [[nodiscard]] std::uint32_t min_t() const noexcept;
    /// Leading term under graded lexicographic order, q before t.
    [[nodiscard]] const Term& leading_grlex() const;

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    QTPoly& operator*=(const mpq_class& c);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(QTPoly a, const mpq_class& c) { return a *= c; }
    friend QTPoly operator*(const mpq_class& c, QTPoly a) { return a *= c; }
    QTPoly operator-() const;

    friend bool operator==(const QTPoly& a, const QTPoly& b);
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    [[nodiscard]] QTPoly pow(unsigned e) const;
    /// Multiplies by q^eq t^et.
    [[nodiscard]] QTPoly shifted(std::uint32_t eq, std::uint32_t et) const;
    /// Divides by q^eq t^et; every term must be divisible.
    [[nodiscard]] QTPoly unshifted(std::uint32_t eq, std::uint32_t et) const;
    /// Substitutes q -> q^k, t -> t^k.
    [[nodiscard]] QTPoly power_substituted(unsigned k) const;
    /// Swaps the roles of q and t.
    [[nodiscard]] QTPoly swapped() const;

    /// Returns this / d when d divides this exactly in Q[q,t].
    [[nodiscard]] std::optional<QTPoly> divide_exact(const QTPoly& d) const;

    [[nodiscard]] std::size_t hash() const noexcept;
    [[nodiscard]] std::string to_string(const char* qname = "q", const char* tname = "t") const;

private:
    std::vector<Term> terms_;
};

/// Greatest common divisor in Q[q,t], normalized to be monic under graded lex.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

} // namespace ehall
