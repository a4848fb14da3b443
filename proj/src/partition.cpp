#include "ehall/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ehall {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw ShapeError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw ShapeError("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(static_cast<std::size_t>(parts_[0]));
        for (const int p : parts_) {
            for (int j = 0; j < p; ++j) {
                ++c[static_cast<std::size_t>(j)];
            }
        }
    }
    return Partition(std::move(c));
}

mpz_class Partition::z() const
{
    mpz_class r = 1;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) {
            ++j;
        }
        const auto c = static_cast<unsigned>(j - i);
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(parts_[i]), c);
        r *= kp * factorial(c);
        i = j;
    }
    return r;
}

int Partition::iota() const
{
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += std::max(parts_[i] - static_cast<int>(i + 1), 0);
    }
    return s;
}

int Partition::nstat() const
{
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += static_cast<int>(i) * parts_[i];
    }
    return s;
}

Partition Partition::bar() const
{
    std::vector<int> b;
    for (const int p : parts_) {
        if (p > 1) {
            b.push_back(p - 1);
        }
    }
    return Partition(std::move(b));
}

int Partition::multiplicity(int k) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::joined(const Partition& o) const
{
    std::vector<int> v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

bool Partition::dominates(const Partition& o) const
{
    if (size_ != o.size_) {
        return false;
    }
    int a = 0;
    int b = 0;
    const std::size_t n = std::max(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        a += part(i);
        b += o.part(i);
        if (a < b) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (a.size_ != b.size_) {
        return a.size_ <=> b.size_;
    }
    // reverse lex: larger first part comes first
    return b.parts_ <=> a.parts_;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (const int x : p.parts()) {
        h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    }
    return h;
}

Partition hook(int j, int k)
{
    if (j < 0 || k < 0) {
        throw ShapeError("hook arms must be nonnegative");
    }
    std::vector<int> v{j + 1};
    v.insert(v.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(v));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (const int p : parts_) {
        if (p <= 0) {
            throw ShapeError("composition parts must be positive");
        }
    }
}

int Composition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ')';
    return os.str();
}

std::set<int> composition_to_subset(const Composition& alpha)
{
    std::set<int> s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        acc += alpha.parts()[i];
        s.insert(acc);
    }
    return s;
}

Composition subset_to_composition(int d, const std::set<int>& s)
{
    if (d < 1) {
        throw ShapeError("compositions need d >= 1");
    }
    std::vector<int> parts;
    int prev = 0;
    for (const int x : s) {
        if (x < 1 || x > d - 1) {
            throw ShapeError("subset element " + std::to_string(x) + " outside {1,...," + std::to_string(d - 1) + "}");
        }
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(d - prev);
    return Composition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int d)
{
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    if (d < 0) {
        throw ShapeError("negative size");
    }
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        gen_partitions(d, d, cur, out);
        it = cache.emplace(d, std::move(out)).first;
    }
    return it->second;
}

std::vector<Composition> compositions_of(int d)
{
    std::vector<Composition> out;
    if (d < 0) {
        throw ShapeError("negative size");
    }
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    // subsets of {1..d-1}; reverse lex order on the part sequences
    std::vector<std::vector<int>> all;
    const unsigned n = static_cast<unsigned>(d - 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (unsigned b = 0; b < n; ++b) {
            if (mask & (1u << b)) {
                s.insert(static_cast<int>(b + 1));
            }
        }
        all.push_back(subset_to_composition(d, s).parts());
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    for (auto& v : all) {
        out.emplace_back(std::move(v));
    }
    return out;
}

mpz_class factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace ehall
