#pragma once

#include <optional>
#include <vector>

#include "ehall/symfun.hpp"

namespace ehall {

struct DyckPath {
    int m = 0;
    int n = 0;
    std::vector<int> word; // a_1 <= ... <= a_n, a_k <= (k-1)m/n

    /// Throws ShapeError unless the word is an (m,n)-Dyck path.
    void validate() const;
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

struct ParkingFun {
    DyckPath path;
    std::vector<int> labels; // labels[k] labels the k-th south step (0-based, top to bottom)

    /// pi_i = column of the step carrying label i.
    [[nodiscard]] std::vector<int> word() const;
};

DyckPath staircase(int m, int n);
/// Lexicographic order; with returns_at, only paths whose returns match.
std::vector<DyckPath> enumerate_paths(int m, int n, const std::optional<Composition>& returns_at = std::nullopt);
std::size_t count_paths(int m, int n);

int area(const DyckPath& p);
Composition riser_comp(const DyckPath& p);
/// Return positions k = jb+1 (0 < j < d) encoded as a composition of d.
Composition returns_comp(const DyckPath& p);

/// Sum of q^area e_{riser} over the (filtered) path set, basis e.
SymFun path_enumerator(int m, int n, const std::optional<Composition>& returns_at = std::nullopt);
/// Sum of e_{riser} over paths without interior returns, basis e.
SymFun primitive_enumerator(int m, int n);

/// sum_{mu |- d} q_mu^{(a,b)}(x;1,1) / z_mu with q_k^{(a,b)}(x;1,1) = (1/a) e_{bk}[ak x]; basis e.
SymFun bizley(int a, int b, int d);
/// sum_{mu |- d} p_mu^{(a,b)}(x;1,1) / z_mu with p_k^{(a,b)} = (-1)^{k-1} q_k^{(a,b)}; basis e.
SymFun bizley_primitive(int a, int b, int d);
/// (1/a) e_{bk}[ak x] in basis e.
SymFun q_at_one(int a, int b, int k);

std::vector<ParkingFun> parking(const DyckPath& p);
long rank(int x, int y, int m, int n);
Composition descent_comp(const ParkingFun& pf);

} // namespace ehall
