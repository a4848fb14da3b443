#include "ehall/rectcomb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ehall {

namespace {

int ceiling_at(int k, int m, int n) // k is 1-based
{
    return (k - 1) * m / n;
}

std::set<int> return_set(const DyckPath& p)
{
    const int d = std::gcd(p.m, p.n);
    const int b = p.n / d;
    std::set<int> s;
    for (int k = 2; k <= p.n; ++k) {
        if (p.word[static_cast<std::size_t>(k - 1)] * p.n == (k - 1) * p.m) {
            s.insert((k - 1) / b);
        }
    }
    return s;
}

} // namespace

void DyckPath::validate() const
{
    if (m < 1 || n < 1 || static_cast<int>(word.size()) != n) {
        throw ShapeError("Dyck path needs m,n >= 1 and n letters");
    }
    for (int k = 1; k <= n; ++k) {
        const int a = word[static_cast<std::size_t>(k - 1)];
        if (a < 0 || a * n > (k - 1) * m || (k > 1 && a < word[static_cast<std::size_t>(k - 2)])) {
            throw ShapeError("not an (" + std::to_string(m) + "," + std::to_string(n) + ")-Dyck word: " + to_string());
        }
    }
}

std::string DyckPath::to_string() const
{
    std::ostringstream os;
    bool wide = std::any_of(word.begin(), word.end(), [](int a) { return a > 9; });
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (wide && i) os << ',';
        os << word[i];
    }
    return os.str();
}

std::vector<int> ParkingFun::word() const
{
    std::vector<int> w(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        w[static_cast<std::size_t>(labels[k] - 1)] = path.word[k];
    }
    return w;
}

DyckPath staircase(int m, int n)
{
    DyckPath p{m, n, {}};
    if (m < 1 || n < 1) {
        throw ShapeError("staircase needs m,n >= 1");
    }
    for (int k = 1; k <= n; ++k) {
        p.word.push_back(ceiling_at(k, m, n));
    }
    return p;
}

std::vector<DyckPath> enumerate_paths(int m, int n, const std::optional<Composition>& returns_at)
{
    if (m < 1 || n < 1) {
        throw ShapeError("enumerate_paths needs m,n >= 1");
    }
    std::optional<std::set<int>> want;
    if (returns_at) {
        const int d = std::gcd(m, n);
        if (returns_at->size() != d) {
            throw ShapeError("returns composition must have size gcd(m,n) = " + std::to_string(d));
        }
        want = composition_to_subset(*returns_at);
    }
    std::vector<int> ceil(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        ceil[static_cast<std::size_t>(k - 1)] = ceiling_at(k, m, n);
    }
    std::vector<DyckPath> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
        DyckPath p{m, n, w};
        if (!want || return_set(p) == *want) {
            out.push_back(std::move(p));
        }
        // odometer step: rightmost position that can grow
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == ceil[static_cast<std::size_t>(i)]) {
            --i;
        }
        if (i < 0) {
            break;
        }
        const int v = ++w[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            w[static_cast<std::size_t>(j)] = v;
        }
    }
    return out;
}

std::size_t count_paths(int m, int n)
{
    return enumerate_paths(m, n).size();
}

int area(const DyckPath& p)
{
    int s = 0;
    for (int k = 1; k <= p.n; ++k) {
        s += ceiling_at(k, p.m, p.n) - p.word[static_cast<std::size_t>(k - 1)];
    }
    return s;
}

Composition riser_comp(const DyckPath& p)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (i == 0 || p.word[i] != p.word[i - 1]) {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    return Composition(std::move(parts));
}

Composition returns_comp(const DyckPath& p)
{
    return subset_to_composition(std::gcd(p.m, p.n), return_set(p));
}

SymFun path_enumerator(int m, int n, const std::optional<Composition>& returns_at)
{
    SymFun f(Basis::e);
    for (const auto& p : enumerate_paths(m, n, returns_at)) {
        f.add_term(Partition::from_unsorted(riser_comp(p).parts()),
                   QTScalar::monomial(1, area(p), 0));
    }
    return f;
}

SymFun primitive_enumerator(int m, int n)
{
    SymFun f(Basis::e);
    for (const auto& p : enumerate_paths(m, n, Composition{std::gcd(m, n)})) {
        f.add_term(Partition::from_unsorted(riser_comp(p).parts()), 1);
    }
    return f;
}

SymFun q_at_one(int a, int b, int k)
{
    const SymFun e = plethys(elementary(b * k), Alphabet::scaled(QTScalar(static_cast<long>(a * k))), 0).at(0);
    return convert(QTScalar(mpq_class(1, a)) * e, Basis::e);
}

namespace {

SymFun bizley_sum(int a, int b, int d, bool primitive)
{
    if (std::gcd(a, b) != 1 || d < 1) {
        throw std::invalid_argument("bizley needs gcd(a,b) = 1 and d >= 1");
    }
    std::map<int, SymFun> qk;
    SymFun out(Basis::e);
    for (const auto& mu : partitions_of(d)) {
        SymFun prod = SymFun::constant(1, Basis::e);
        for (const int k : mu.parts()) {
            auto it = qk.find(k);
            if (it == qk.end()) {
                it = qk.emplace(k, q_at_one(a, b, k)).first;
            }
            prod = prod * it->second;
            if (primitive && k % 2 == 0) {
                prod = -prod;
            }
        }
        out += QTScalar(mpq_class(mpz_class(1), mu.z())) * prod;
    }
    return out;
}

} // namespace

SymFun bizley(int a, int b, int d)
{
    return bizley_sum(a, b, d, false);
}

SymFun bizley_primitive(int a, int b, int d)
{
    return bizley_sum(a, b, d, true);
}

long rank(int x, int y, int m, int n)
{
    return static_cast<long>(n) * m - static_cast<long>(y) * m - static_cast<long>(x) * n;
}

std::vector<ParkingFun> parking(const DyckPath& p)
{
    p.validate();
    // distinct rearrangements pi of the entries; label i goes to a step in column pi_i
    std::vector<int> pi = p.word;
    std::sort(pi.begin(), pi.end());
    std::vector<ParkingFun> out;
    do {
        ParkingFun pf{p, std::vector<int>(static_cast<std::size_t>(p.n))};
        std::map<int, std::vector<int>> by_col; // column -> labels ascending
        for (int i = 0; i < p.n; ++i) {
            by_col[pi[static_cast<std::size_t>(i)]].push_back(i + 1);
        }
        // steps of a column run top to bottom; the smallest label sits lowest
        for (auto& [col, labels] : by_col) {
            std::vector<int> steps;
            for (int k = 0; k < p.n; ++k) {
                if (p.word[static_cast<std::size_t>(k)] == col) {
                    steps.push_back(k);
                }
            }
            for (std::size_t j = 0; j < steps.size(); ++j) {
                pf.labels[static_cast<std::size_t>(steps[steps.size() - 1 - j])] = labels[j];
            }
        }
        out.push_back(std::move(pf));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

Composition descent_comp(const ParkingFun& pf)
{
    const int n = pf.path.n;
    std::vector<long> rank_of(static_cast<std::size_t>(n + 1));
    for (int k = 0; k < n; ++k) {
        const int x = pf.path.word[static_cast<std::size_t>(k)];
        const int y = n - 1 - k;
        rank_of[static_cast<std::size_t>(pf.labels[static_cast<std::size_t>(k)])] = rank(x, y, pf.path.m, n);
    }
    std::set<int> des;
    for (int i = 1; i < n; ++i) {
        if (rank_of[static_cast<std::size_t>(i)] >= rank_of[static_cast<std::size_t>(i + 1)]) {
            des.insert(i);
        }
    }
    return subset_to_composition(n, des);
}

} // namespace ehall
