#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ehall {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    /// Validates: parts positive, weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i (0-based) or 0 beyond the length.
    [[nodiscard]] int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    [[nodiscard]] Partition conjugate() const;
    /// z = prod_k k^{c_k} c_k!
    [[nodiscard]] mpz_class z() const;
    /// sum_i max(mu_i - i, 0), 1-based i.
    [[nodiscard]] int iota() const;
    /// n(mu) = sum (i-1) mu_i.
    [[nodiscard]] int nstat() const;
    /// Removes the first column.
    [[nodiscard]] Partition bar() const;
    /// Multiplicity of part k.
    [[nodiscard]] int multiplicity(int k) const;
    /// Union of parts (product of the corresponding p's).
    [[nodiscard]] Partition joined(const Partition& o) const;
    [[nodiscard]] bool dominates(const Partition& o) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Total order: size ascending, then reverse lexicographic ((3) before (2,1)).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// The hook (j|k) = (j+1, 1^k).
Partition hook(int j, int k);

/// Composition: sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Partial sums s_1..s_{k-1} of a composition.
std::set<int> composition_to_subset(const Composition& alpha);
/// Inverse of composition_to_subset for compositions of d.
Composition subset_to_composition(int d, const std::set<int>& s);

/// All partitions of d in reverse lexicographic order.
const std::vector<Partition>& partitions_of(int d);
/// All compositions of d in reverse lexicographic order.
std::vector<Composition> compositions_of(int d);

mpz_class factorial(unsigned n);
mpz_class binomial(long n, long k);

} // namespace ehall
