#include "ehall/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ehall {

namespace {

bool is_scalar(const SymFun& f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& kv) { return kv.first.size() == 0; });
}

QTScalar scalar_value(const SymFun& f)
{
    return f.coeff(Partition{});
}

SymFun constant(const QTScalar& c)
{
    return SymFun::constant(c);
}

class Parser {
public:
    Parser(const std::string& text, const std::string& tname) : s_(text), tname_(tname) {}

    SymFun parse()
    {
        skip();
        if (pos_ == s_.size()) {
            fail("empty expression");
        }
        SymFun v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return v;
    }

private:
    const std::string& s_;
    const std::string& tname_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        if (pos_ - start > 9) {
            fail("integer too large");
        }
        return std::stol(s_.substr(start, pos_ - start));
    }

    SymFun expr()
    {
        SymFun v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    bool starts_atom()
    {
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    SymFun term()
    {
        SymFun v = factor();
        for (;;) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                const SymFun d = factor();
                if (!is_scalar(d)) {
                    fail("division by a non-scalar");
                }
                const QTScalar c = scalar_value(d);
                if (c.is_zero()) {
                    fail("division by zero");
                }
                v *= QTScalar(1) / c;
            } else if (starts_atom()) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    SymFun factor()
    {
        if (accept('-')) {
            return -factor();
        }
        SymFun base = atom();
        if (!accept('^')) {
            return base;
        }
        const bool neg = accept('-');
        const long e = integer();
        if (neg) {
            if (!is_scalar(base)) {
                fail("negative power of a non-scalar");
            }
            const QTScalar c = scalar_value(base);
            if (c.is_zero()) {
                fail("negative power of zero");
            }
            return constant(c.pow(-static_cast<int>(e)));
        }
        if (is_scalar(base)) {
            return constant(scalar_value(base).pow(static_cast<int>(e)));
        }
        SymFun r = SymFun::constant(1, base.basis());
        for (long i = 0; i < e; ++i) {
            r = r * base;
        }
        return r;
    }

    std::vector<int> bracket(bool digit_parts)
    {
        if (!accept('[')) {
            fail("expected '['");
        }
        std::vector<int> parts;
        if (accept(']')) {
            return parts;
        }
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',' || s_[pos_] == ' ')) {
            ++pos_;
        }
        std::string body = s_.substr(start, pos_ - start);
        if (!accept(']')) {
            fail("expected ']'");
        }
        body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
        if (body.empty()) {
            fail("empty index");
        }
        if (digit_parts && body.find(',') == std::string::npos) {
            for (const char c : body) {
                parts.push_back(c - '0');
            }
        } else {
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty() || item.size() > 6) {
                    fail("bad index entry");
                }
                parts.push_back(std::stoi(item));
            }
            if (body.back() == ',') {
                fail("bad index entry");
            }
        }
        if (std::any_of(parts.begin(), parts.end(), [](int p) { return p <= 0; })) {
            fail("index entries must be positive");
        }
        return parts;
    }

    SymFun atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SymFun v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return constant(QTScalar(integer()));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
        }
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '[') {
            switch (c) {
            case 'e':
            case 'h':
            case 'p':
            case 'q': {
                const auto parts = bracket(false);
                SymFun r = SymFun::constant(1, c == 'e' ? Basis::e : c == 'h' ? Basis::h : c == 'p' ? Basis::p : Basis::q);
                for (const int k : parts) {
                    r = r * (c == 'e' ? elementary(k) : c == 'h' ? complete(k) : c == 'p' ? power_sum(k) : SymFun(Basis::q, Partition{k}));
                }
                return r;
            }
            case 's':
            case 'm': {
                auto parts = bracket(true);
                std::sort(parts.rbegin(), parts.rend());
                const Partition mu(parts);
                return c == 's' ? schur(mu) : monomial_sym(mu);
            }
            default:
                fail("unknown function '" + std::string(1, c) + "'");
            }
        }
        if (c == 'q') {
            return constant(QTScalar::q());
        }
        if (std::string(1, c) == tname_) {
            return constant(QTScalar::t());
        }
        --pos_;
        fail("unknown symbol '" + std::string(1, c) + "'");
    }
};

std::string latex_rational(const mpq_class& c)
{
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string latex_poly(const QTPoly& p, const std::string& tname)
{
    if (p.is_zero()) {
        return "0";
    }
    std::vector<const Term*> order;
    for (const auto& x : p.terms()) {
        order.push_back(&x);
    }
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        const auto ea = a->exp();
        const auto eb = b->exp();
        if (ea.q + ea.t != eb.q + eb.t) {
            return ea.q + ea.t > eb.q + eb.t;
        }
        return ea.q > eb.q;
    });
    std::string out;
    for (const Term* x : order) {
        mpq_class c = x->coeff;
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const auto e = x->exp();
        std::string mono;
        const auto put = [&](const std::string& name, std::uint32_t k) {
            if (k == 1) {
                mono += name;
            } else if (k > 1) {
                mono += name + "^{" + std::to_string(k) + "}";
            }
        };
        put("q", e.q);
        put(tname, e.t);
        if (c != 1 || mono.empty()) {
            out += latex_rational(c);
        }
        out += mono;
    }
    return out;
}

std::string latex_index(const Partition& mu)
{
    const bool wide = std::any_of(mu.parts().begin(), mu.parts().end(), [](int p) { return p >= 10; });
    std::string out;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(mu.parts()[i]);
    }
    return out;
}

} // namespace

SymFun parse_expr(const std::string& text, const std::string& tname)
{
    try {
        return Parser(text, tname).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    } catch (const ArithmeticError& e) {
        throw ParseError(e.what());
    }
}

QTScalar parse_scalar(const std::string& text, const std::string& tname)
{
    const SymFun f = parse_expr(text, tname);
    if (!is_scalar(f)) {
        throw ParseError("expected a scalar: \"" + text + "\"");
    }
    return scalar_value(f);
}

nlohmann::json to_json(const SymFun& f, const std::string& tname)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mu, c] : f.terms()) {
        terms.push_back({{"partition", mu.parts()}, {"coeff", c.to_string("q", tname.c_str())}});
    }
    return {{"basis", basis_name(f.basis())}, {"vars", {"q", tname}}, {"terms", std::move(terms)}};
}

SymFun symfun_from_json(const nlohmann::json& j)
{
    try {
        const Basis b = parse_basis(j.at("basis").get<std::string>());
        std::string tname = "t";
        if (j.contains("vars")) {
            tname = j.at("vars").at(1).get<std::string>();
        }
        SymFun f(b);
        for (const auto& term : j.at("terms")) {
            auto parts = term.at("partition").get<std::vector<int>>();
            f.add_term(Partition(std::move(parts)), parse_scalar(term.at("coeff").get<std::string>(), tname));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed symmetric function JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string to_latex(const QTScalar& c, const std::string& tname)
{
    if (c.is_polynomial()) {
        return latex_poly(c.num(), tname);
    }
    return "\\frac{" + latex_poly(c.num(), tname) + "}{" + latex_poly(c.den(), tname) + "}";
}

std::string to_latex(const SymFun& f, const std::string& tname)
{
    if (f.is_zero()) {
        return "0";
    }
    const char* sym = basis_name(f.basis());
    std::string out;
    std::vector<const std::pair<const Partition, QTScalar>*> order;
    for (const auto& kv : f.terms()) {
        order.push_back(&kv);
    }
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
        if (x->first.size() != y->first.size()) {
            return x->first.size() > y->first.size();
        }
        return x->first.parts() > y->first.parts();
    });
    for (const auto* kv : order) {
        const auto& [mu, c] = *kv;
        const std::string symbol = mu.size() == 0 ? "" : std::string(sym) + "_{" + latex_index(mu) + "}";
        std::string coeff = to_latex(c, tname);
        bool neg = false;
        const bool single = c.is_polynomial() && c.num().terms().size() == 1;
        if (single && coeff.front() == '-') {
            neg = true;
            coeff.erase(0, 1);
        }
        std::string piece;
        if (symbol.empty()) {
            piece = single || !c.is_polynomial() ? coeff : "\\left(" + coeff + "\\right)";
        } else if (coeff == "1") {
            piece = symbol;
        } else if (single || !c.is_polynomial()) {
            piece = coeff + "\\," + symbol;
        } else {
            piece = "\\left(" + coeff + "\\right)\\," + symbol;
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += piece;
    }
    return out;
}

} // namespace ehall
