#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ehall/partition.hpp"
#include "ehall/qtscalar.hpp"

namespace ehall {

enum class Basis { m, e, h, p, s, q };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// Symmetric function over Q(q,t): a basis tag plus a finitely supported map
/// from partitions to coefficients. Terms of different sizes may coexist; the
/// size of the indexing partition is the degree of the term. In basis q the
/// index mu stands for the product q_{mu_1} q_{mu_2} ...
class SymFun {
public:
    using TermMap = std::map<Partition, QTScalar>;

    explicit SymFun(Basis b = Basis::s) : basis_(b) {}
    SymFun(Basis b, const Partition& mu, QTScalar c = 1);
    /// The constant c (index: empty partition).
    static SymFun constant(QTScalar c, Basis b = Basis::s);

    [[nodiscard]] Basis basis() const noexcept { return basis_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] QTScalar coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const QTScalar& c);

    /// Distinct degrees present, ascending.
    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] SymFun homogeneous_part(int d) const;

    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    SymFun& operator*=(const QTScalar& c);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(SymFun a, const QTScalar& c) { return a *= c; }
    friend SymFun operator*(const QTScalar& c, SymFun a) { return a *= c; }
    SymFun operator-() const;
    /// Ring product; the result is in the basis of the left factor.
    friend SymFun operator*(const SymFun& a, const SymFun& b);

    /// Compares as elements of Lambda, converting bases when they differ.
    friend bool operator==(const SymFun& a, const SymFun& b);
    friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }

    /// Applies fn to each coefficient, dropping zeros.
    [[nodiscard]] SymFun map_coeffs(const std::function<QTScalar(const QTScalar&)>& fn) const;
    [[nodiscard]] std::size_t hash() const noexcept;
    [[nodiscard]] std::string to_string(const char* qname = "q", const char* tname = "t") const;

private:
    Basis basis_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Classical functions

SymFun elementary(int n);      ///< e_n in basis e
SymFun complete(int n);        ///< h_n in basis h
SymFun power_sum(int n);       ///< p_n in basis p
SymFun schur(const Partition& mu);
SymFun monomial_sym(const Partition& mu);
SymFun hook_schur(int j, int k); ///< s_{(j|k)} = s_{(j+1,1^k)}
/// q_d = sum_{j+k=d-1} (-qt)^{-j} s_{(j|k)}, in basis s.
SymFun qfun(int d);

/// Same element of Lambda expressed in the target basis.
SymFun convert(const SymFun& f, Basis target);

/// Expansion in products q_mu, processed degreewise.
SymFun expand_in_q(const SymFun& f);

/// Hall inner product, Schur functions orthonormal.
QTScalar hall_scalar(const SymFun& f, const SymFun& g);

SymFun omega(const SymFun& f);
/// Degreewise f_d -> (-1/qt)^{d-1} omega f_d(x; 1/q, 1/t).
SymFun omega_star(const SymFun& f);
/// Linear extension of first-column removal on Schur indices; result in s.
SymFun bar(const SymFun& f);
/// Applies a coefficient specialization termwise; result in f's basis.
SymFun specialize(const SymFun& f, const Substitution& s);

/// Jacobi-Trudi determinant det(h_{c_i - i + j}), expanded in basis s.
SymFun composition_schur(const Composition& alpha);

// ---------------------------------------------------------------------------
// Plethystic substitution

/// ±q^q t^t z^z with integer exponents.
struct SignedMonomial {
    int sign = 1;
    int q = 0;
    int t = 0;
    int z = 0;
};

/// Formal plethystic argument baseScale * x + sum of signed monomials.
/// p_k[A] = baseScale(q^k, t^k) p_k + sum sign * (q^q t^t z^z)^k.
struct Alphabet {
    QTScalar base_scale = 1;
    std::vector<SignedMonomial> extras;

    static Alphabet identity() { return {}; }
    static Alphabet scaled(QTScalar c) { return {std::move(c), {}}; }
    /// x + M/z
    static Alphabet plus_M_over_z();
    /// x - (t-1)/(t z)
    static Alphabet minus_t_minus_one_over_tz();
};

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Laurent series in z with symmetric-function coefficients (basis p),
/// truncated to exponents with |e| <= bound.
struct ZLaurent {
    int bound = 0;
    std::map<int, SymFun> coeffs;

    /// Coefficient of z^e; requesting |e| > bound is an error.
    [[nodiscard]] SymFun at(int e) const;
};

ZLaurent plethys(const SymFun& f, const Alphabet& A, int z_truncation);

// ---------------------------------------------------------------------------
// Dense linear algebra support shared with the operator modules.

/// Index of mu within partitions_of(|mu|).
std::size_t partition_index(const Partition& mu);
/// chi^lambda(rho) via Murnaghan-Nakayama.
mpz_class character(const Partition& lambda, const Partition& rho);

} // namespace ehall
