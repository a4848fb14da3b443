#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ehall/symfun.hpp"

namespace ehall {

enum class Status { holds, fails, reported };

const char* status_name(Status s);

struct Witness {
    Partition mu;
    QTScalar coeff;
};

struct Verdict {
    std::string name;
    std::map<std::string, std::string> params;
    Status status = Status::holds;
    std::optional<Witness> witness;
    double runtime_ms = 0;
    std::string note;
};

/// Every s-coefficient lies in N[q,t] (den = 1, nonnegative integers).
Verdict is_schur_positive(const SymFun& f);
/// Same test in the e basis. After a t = 1 + r specialization the t slot holds r.
Verdict is_e_positive(const SymFun& f);

/// Cells between the (m,n) and (m-1,n) staircases.
int shift_alpha(int m, int n);
/// Transposed count, alpha(n, m).
int shift_alpha_prime(int m, int n);
/// alpha(m,n) - gcd(m,n) + 1.
int shift_beta(int m, int n);

/// <p_1^n, f> summed over the homogeneous components of f.
QTScalar delta_dim(const SymFun& f);
/// <e_n, f> summed over the homogeneous components of f.
QTScalar eps_dim(const SymFun& f);

/// f^{(a,b)} = Theta_{a,b}(f)(1). For a >= b the slope is first reduced with
/// f^{(a+b,b)} = nabla f^{(a,b)}, which avoids the deep bracket recursion.
SymFun slope_image(int a, int b, const SymFun& f);
/// f_{m,n} = f_d^{(m/d, n/d)} for the seed family f_d; m = 0 gives f_n itself.
SymFun family_mn(int m, int n, SymFun (*seed)(int));

/// Largest s in [0, limit] with q^s lhs <= rhs in the Schur order, or -1.
int max_shift(const SymFun& lhs, const SymFun& rhs, int limit);

/// Bounds on m = ad and n = bd.
struct Grid {
    int max_m = 6;
    int max_n = 6;
};

const std::vector<std::string>& check_names();
/// True for checks of statements the paper labels as questions or conjectures.
bool is_conjectural(const std::string& name);

/// Runs one named check over the grid. Verdicts come back in grid order; the
/// work is spread over EHALL_THREADS threads (default 1). Throws
/// std::invalid_argument for unknown names or non-positive bounds.
std::vector<Verdict> run_check(const std::string& name, const Grid& grid);

/// JSON array of verdict records.
std::string report_json(const std::vector<Verdict>& vs);
/// True when no non-conjectural verdict has status fails.
bool report_ok(const std::vector<Verdict>& vs);

} // namespace ehall
