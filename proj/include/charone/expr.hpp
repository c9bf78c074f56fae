#pragma once

// Expression language for the square and its reduction. Literals are simple
// tensors written q^a(x)q^b, combined with + and * (and integer powers), plus
// the functions sigma(a,b), fr(n,m,e), mu(e), gamma(e). Evaluation produces a
// Staircase, a NewtonPolygon (after gamma), or a Z_min element (after mu).

#include "polygon.hpp"
#include "staircase.hpp"
#include "tropical.hpp"

#include <cctype>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

namespace charone {

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(std::size_t off, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct eval_error : std::runtime_error {
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

struct Expr {
    enum class Kind { tensor, add, mul, pow, sigma, fr, mu, gamma };

    Kind kind;
    Int x, y;                  // tensor: exponents; sigma: (a,b); fr: (n,m); pow: x = exponent
    std::unique_ptr<Expr> lhs, rhs;

    static std::unique_ptr<Expr> tensor(Int a, Int b) {
        auto e = std::make_unique<Expr>();
        e->kind = Kind::tensor;
        e->x = std::move(a);
        e->y = std::move(b);
        return e;
    }
    static std::unique_ptr<Expr> binary(Kind k, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
    static std::unique_ptr<Expr> power(std::unique_ptr<Expr> base, Int n) {
        auto e = std::make_unique<Expr>();
        e->kind = Kind::pow;
        e->x = std::move(n);
        e->lhs = std::move(base);
        return e;
    }
    static std::unique_ptr<Expr> sigma_node(Int a, Int b) {
        auto e = std::make_unique<Expr>();
        e->kind = Kind::sigma;
        e->x = std::move(a);
        e->y = std::move(b);
        return e;
    }
    static std::unique_ptr<Expr> fr_node(Int n, Int m, std::unique_ptr<Expr> arg) {
        auto e = std::make_unique<Expr>();
        e->kind = Kind::fr;
        e->x = std::move(n);
        e->y = std::move(m);
        e->lhs = std::move(arg);
        return e;
    }
    static std::unique_ptr<Expr> unary(Kind k, std::unique_ptr<Expr> arg) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->lhs = std::move(arg);
        return e;
    }

    bool equals(const Expr& o) const {
        if (kind != o.kind || x != o.x || y != o.y) return false;
        if ((lhs == nullptr) != (o.lhs == nullptr)) return false;
        if ((rhs == nullptr) != (o.rhs == nullptr)) return false;
        if (lhs && !lhs->equals(*o.lhs)) return false;
        if (rhs && !rhs->equals(*o.rhs)) return false;
        return true;
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<Expr> parse() {
        auto e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) { pos_ += w.size(); return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(pos_, std::string("expected ") + what);
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw parse_error(pos_, "expected an integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::unique_ptr<Expr> parse_sum() {
        auto e = parse_product();
        while (eat('+')) e = Expr::binary(Expr::Kind::add, std::move(e), parse_product());
        return e;
    }

    std::unique_ptr<Expr> parse_product() {
        auto e = parse_power();
        while (eat('*')) e = Expr::binary(Expr::Kind::mul, std::move(e), parse_power());
        return e;
    }

    std::unique_ptr<Expr> parse_power() {
        auto e = parse_atom();
        skip_ws();
        // a caret after a tensor literal belongs to the literal itself
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            Int n = parse_int();
            if (n < 0) throw parse_error(pos_, "negative power");
            return Expr::power(std::move(e), std::move(n));
        }
        return e;
    }

    std::unique_ptr<Expr> parse_atom() {
        skip_ws();
        if (eat('(')) {
            auto e = parse_sum();
            expect(')', "')'");
            return e;
        }
        if (eat_word("sigma")) {
            expect('(', "'(' after sigma");
            Int a = parse_int();
            expect(',', "','");
            Int b = parse_int();
            expect(')', "')'");
            return Expr::sigma_node(std::move(a), std::move(b));
        }
        if (eat_word("fr")) {
            expect('(', "'(' after fr");
            Int n = parse_int();
            expect(',', "','");
            Int m = parse_int();
            expect(',', "','");
            auto arg = parse_sum();
            expect(')', "')'");
            return Expr::fr_node(std::move(n), std::move(m), std::move(arg));
        }
        if (eat_word("mu")) {
            expect('(', "'(' after mu");
            auto arg = parse_sum();
            expect(')', "')'");
            return Expr::unary(Expr::Kind::mu, std::move(arg));
        }
        if (eat_word("gamma")) {
            expect('(', "'(' after gamma");
            auto arg = parse_sum();
            expect(')', "')'");
            return Expr::unary(Expr::Kind::gamma, std::move(arg));
        }
        if (eat_word("q")) {
            expect('^', "'^' after q");
            Int a = parse_int();
            if (!eat_word("(x)")) throw parse_error(pos_, "expected '(x)' in tensor literal");
            if (!eat_word("q")) throw parse_error(pos_, "expected 'q' after '(x)'");
            expect('^', "'^' after q");
            Int b = parse_int();
            return Expr::tensor(std::move(a), std::move(b));
        }
        throw parse_error(pos_, "expected an expression");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<Expr> parse(std::string_view text) { return detail::Parser(text).parse(); }

// Canonical printer; parse(print(e)) reproduces e node for node. Children
// are parenthesized exactly where the grammar would otherwise reassociate.
inline void print_expr(const Expr& e, std::ostream& os) {
    auto parenthesized = [&](const Expr& child, bool needs) {
        if (needs) os << "(";
        print_expr(child, os);
        if (needs) os << ")";
    };
    switch (e.kind) {
        case Expr::Kind::tensor:
            os << "q^" << e.x.str() << "(x)q^" << e.y.str();
            break;
        case Expr::Kind::add:
            print_expr(*e.lhs, os);
            os << " + ";
            parenthesized(*e.rhs, e.rhs->kind == Expr::Kind::add);
            break;
        case Expr::Kind::mul:
            parenthesized(*e.lhs, e.lhs->kind == Expr::Kind::add);
            os << "*";
            parenthesized(*e.rhs, e.rhs->kind == Expr::Kind::add || e.rhs->kind == Expr::Kind::mul);
            break;
        case Expr::Kind::pow:
            parenthesized(*e.lhs, e.lhs->kind == Expr::Kind::add || e.lhs->kind == Expr::Kind::mul ||
                                      e.lhs->kind == Expr::Kind::pow ||
                                      e.lhs->kind == Expr::Kind::tensor);
            os << "^" << e.x.str();
            break;
        case Expr::Kind::sigma:
            os << "sigma(" << e.x.str() << "," << e.y.str() << ")";
            break;
        case Expr::Kind::fr:
            os << "fr(" << e.x.str() << "," << e.y.str() << ",";
            print_expr(*e.lhs, os);
            os << ")";
            break;
        case Expr::Kind::mu:
            os << "mu(";
            print_expr(*e.lhs, os);
            os << ")";
            break;
        case Expr::Kind::gamma:
            os << "gamma(";
            print_expr(*e.lhs, os);
            os << ")";
            break;
    }
}

inline std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_expr(e, os);
    return os.str();
}

using Value = std::variant<Staircase, NewtonPolygon, ZminElem>;

inline const char* value_kind_name(const Value& v) {
    if (std::holds_alternative<Staircase>(v)) return "staircase";
    if (std::holds_alternative<NewtonPolygon>(v)) return "polygon";
    return "zmin";
}

inline Value eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::tensor:
            return Staircase::simple(e.x, e.y);
        case Expr::Kind::sigma:
            return sigma(e.x, e.y);
        case Expr::Kind::add: {
            Value l = eval(*e.lhs), r = eval(*e.rhs);
            if (l.index() != r.index())
                throw eval_error(std::string("cannot add ") + value_kind_name(l) + " and " +
                                 value_kind_name(r));
            if (auto* s = std::get_if<Staircase>(&l)) return sq_add(*s, std::get<Staircase>(r));
            if (auto* p = std::get_if<NewtonPolygon>(&l)) return poly_add(*p, std::get<NewtonPolygon>(r));
            return zmin_add(std::get<ZminElem>(l), std::get<ZminElem>(r));
        }
        case Expr::Kind::mul: {
            Value l = eval(*e.lhs), r = eval(*e.rhs);
            if (l.index() != r.index())
                throw eval_error(std::string("cannot multiply ") + value_kind_name(l) + " and " +
                                 value_kind_name(r));
            if (auto* s = std::get_if<Staircase>(&l)) return sq_mul(*s, std::get<Staircase>(r));
            if (auto* p = std::get_if<NewtonPolygon>(&l)) return poly_mul(*p, std::get<NewtonPolygon>(r));
            return zmin_mul(std::get<ZminElem>(l), std::get<ZminElem>(r));
        }
        case Expr::Kind::pow: {
            Value b = eval(*e.lhs);
            if (e.x < 0 || e.x > 1000000) throw eval_error("power exponent out of range");
            const unsigned n = e.x.convert_to<unsigned>();
            if (auto* s = std::get_if<Staircase>(&b)) return sq_pow(*s, n);
            if (auto* p = std::get_if<NewtonPolygon>(&b)) return poly_pow(*p, n);
            ZminElem acc = ZminElem::one();
            for (unsigned k = 0; k < n; ++k) acc = zmin_mul(acc, std::get<ZminElem>(b));
            return acc;
        }
        case Expr::Kind::fr: {
            Value v = eval(*e.lhs);
            if (auto* s = std::get_if<Staircase>(&v)) return sq_frobenius(*s, e.x, e.y);
            throw eval_error("fr applies to a staircase");
        }
        case Expr::Kind::mu: {
            Value v = eval(*e.lhs);
            if (auto* s = std::get_if<Staircase>(&v)) return sq_mu(*s);
            throw eval_error("mu applies to a staircase");
        }
        case Expr::Kind::gamma: {
            Value v = eval(*e.lhs);
            if (auto* s = std::get_if<Staircase>(&v)) return gamma(*s);
            if (auto* p = std::get_if<NewtonPolygon>(&v)) return *p;
            throw eval_error("gamma applies to a staircase");
        }
    }
    throw eval_error("corrupt expression tree");
}

}  // namespace charone
