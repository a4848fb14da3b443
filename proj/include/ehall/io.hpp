#pragma once

#include <stdexcept>
#include <string>

#include "ehall/symfun.hpp"
#include "json.hpp"

namespace ehall {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the CLI expression language:
///   e[d] h[d] p[d] q[d]   (comma lists give products, e[2,1] = e_2 e_1)
///   s[mu] m[mu]           (s[21] or s[2,1]; s[] is 1)
///   integers, q, t, sums, differences, products (explicit or by juxtaposition),
///   division by scalars and integer powers (negative only for scalars).
/// tname renames the second coefficient variable, e.g. "r" after t = 1 + r.
SymFun parse_expr(const std::string& text, const std::string& tname = "t");
/// Parses an element of Q(q,t) in the same language.
QTScalar parse_scalar(const std::string& text, const std::string& tname = "t");

/// {"basis": "s", "vars": ["q","t"], "terms": [{"partition": [2,1], "coeff": "q + t"}]}
nlohmann::json to_json(const SymFun& f, const std::string& tname = "t");
SymFun symfun_from_json(const nlohmann::json& j);

/// Paper-style display, partitions in reverse lexicographic order.
std::string to_latex(const SymFun& f, const std::string& tname = "t");
std::string to_latex(const QTScalar& c, const std::string& tname = "t");

} // namespace ehall
