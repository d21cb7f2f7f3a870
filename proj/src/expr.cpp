#include "gamma14/expr.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gamma14 {

namespace {
ExprPtr mk(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
}  // namespace

ExprPtr expr_const(const Rat& v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Constant;
    e->value = v;
    return e;
}
ExprPtr expr_var() { return mk(Expr::Kind::Variable); }
ExprPtr expr_add(ExprPtr a, ExprPtr b) { return mk(Expr::Kind::Add, std::move(a), std::move(b)); }
ExprPtr expr_sub(ExprPtr a, ExprPtr b) { return mk(Expr::Kind::Sub, std::move(a), std::move(b)); }
ExprPtr expr_mul(ExprPtr a, ExprPtr b) { return mk(Expr::Kind::Mul, std::move(a), std::move(b)); }
ExprPtr expr_neg(ExprPtr a) { return mk(Expr::Kind::Neg, std::move(a)); }
ExprPtr expr_abs(ExprPtr a) { return mk(Expr::Kind::Abs, std::move(a)); }
ExprPtr expr_min(ExprPtr a, ExprPtr b) { return mk(Expr::Kind::Min, std::move(a), std::move(b)); }
ExprPtr expr_max(ExprPtr a, ExprPtr b) { return mk(Expr::Kind::Max, std::move(a), std::move(b)); }

ExprPtr expr_pow(ExprPtr a, long pnum, long pden) {
    if (pden < 1 || pden > 6) throw std::invalid_argument("expr_pow: exponent denominator must be 1..6");
    if (pnum == 0) return expr_const(Rat(1));
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->a = std::move(a);
    long g = std::gcd(pnum < 0 ? -pnum : pnum, pden);
    e->pnum = pnum / g;
    e->pden = pden / g;
    return e;
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_expr: " + what + " at offset " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ExprPtr expr() {
        auto e = term();
        while (true) {
            if (eat('+'))
                e = expr_add(e, term());
            else if (eat('-'))
                e = expr_sub(e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        auto e = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                e = expr_mul(e, factor());
            } else if (c == '/') {
                // division by a rational constant only
                ++pos_;
                auto d = factor();
                if (d->kind != Expr::Kind::Constant || d->value == 0)
                    fail("division is only supported by a nonzero constant");
                e = expr_mul(e, expr_const(1 / d->value));
            } else {
                return e;
            }
        }
    }

    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    ExprPtr factor() {
        auto e = atom();
        if (peek() == '^') {
            ++pos_;
            long pn, pd = 1;
            if (eat('(')) {
                pn = integer();
                if (eat('/')) pd = integer();
                if (!eat(')')) fail("expected ')'");
            } else {
                pn = integer();
            }
            if (pd <= 0) fail("exponent denominator must be positive");
            e = expr_pow(e, pn, pd);
        }
        return e;
    }

    ExprPtr atom() {
        skip();
        if (eat('-')) return expr_neg(factor());
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos_ < s_.size() && (isdigit(static_cast<unsigned char>(s_[pos_])))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            return expr_const(parse_rat(s_.substr(start, pos_ - start)));
        }
        if (pos_ < s_.size() && isalpha(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "abs" || id == "min" || id == "max") {
                if (!eat('(')) fail("expected '(' after " + id);
                auto a = expr();
                if (id == "abs") {
                    if (!eat(')')) fail("expected ')'");
                    return expr_abs(a);
                }
                if (!eat(',')) fail("expected ','");
                auto b = expr();
                if (!eat(')')) fail("expected ')'");
                return id == "min" ? expr_min(a, b) : expr_max(a, b);
            }
            return expr_var();  // any other identifier is the free variable
        }
        fail("unexpected character");
    }
};

// x^(p/q) over an interval, p/q reduced, q >= 1.
Enclosure pow_interval(const Enclosure& x, long pn, long pd, const Rat& root_width) {
    if (pd == 1) {
        // integer power
        long n = pn < 0 ? -pn : pn;
        Enclosure base = x;
        if (pn < 0) {
            if (x.contains(Rat(0))) throw std::domain_error("enclosure_eval: negative power over interval containing 0");
            base = {1 / x.hi, 1 / x.lo};
        }
        bool even = (n % 2) == 0;
        Rat plo = pow_rat(base.lo, n), phi = pow_rat(base.hi, n);
        if (!even) return {plo, phi};
        if (base.lo >= 0) return {plo, phi};
        if (base.hi <= 0) return {phi, plo};
        return {Rat(0), std::max(plo, phi)};
    }
    // fractional power: domain is x >= 0
    if (x.lo < 0) throw std::domain_error("enclosure_eval: negative radicand under fractional power");
    // monotone increasing for pn > 0, decreasing for pn < 0
    auto root_of = [&](const Rat& v) {
        return root_enclosure(pow_rat(v, pn < 0 ? -pn : pn), static_cast<unsigned>(pd), root_width);
    };
    Enclosure rlo = root_of(x.lo), rhi = root_of(x.hi);
    if (pn > 0) return {rlo.lo, rhi.hi};
    // pn < 0: value = 1 / (x^(|p|/q))
    if (rlo.lo == 0) throw std::domain_error("enclosure_eval: negative fractional power at 0");
    return {1 / rhi.hi, 1 / rlo.lo};
}

}  // namespace

ExprPtr parse_expr(const std::string& s) { return Parser(s).parse(); }

Enclosure enclosure_eval(const ExprPtr& e, const Enclosure& x, const Rat& root_width) {
    switch (e->kind) {
        case Expr::Kind::Constant: return Enclosure(e->value);
        case Expr::Kind::Variable: return x;
        case Expr::Kind::Add: return enclosure_eval(e->a, x, root_width) + enclosure_eval(e->b, x, root_width);
        case Expr::Kind::Sub: return enclosure_eval(e->a, x, root_width) - enclosure_eval(e->b, x, root_width);
        case Expr::Kind::Mul: return enclosure_eval(e->a, x, root_width) * enclosure_eval(e->b, x, root_width);
        case Expr::Kind::Neg: return -enclosure_eval(e->a, x, root_width);
        case Expr::Kind::Abs: return abs_enc(enclosure_eval(e->a, x, root_width));
        case Expr::Kind::Min: return min_enc(enclosure_eval(e->a, x, root_width), enclosure_eval(e->b, x, root_width));
        case Expr::Kind::Max: return max_enc(enclosure_eval(e->a, x, root_width), enclosure_eval(e->b, x, root_width));
        case Expr::Kind::Pow: return pow_interval(enclosure_eval(e->a, x, root_width), e->pnum, e->pden, root_width);
    }
    throw std::logic_error("enclosure_eval: bad kind");
}

Ordering cmp_expr_at(const ExprPtr& e, const Rat& point, const Rat& v) {
    Enclosure x(point);
    Rat w(1, 1 << 10);
    for (int iter = 0; iter < 64; ++iter) {
        Enclosure val = enclosure_eval(e, x, w);
        if (val.hi < v) return Ordering::Less;
        if (val.lo > v) return Ordering::Greater;
        if (val.is_point()) return val.lo == v ? Ordering::Equal
                                               : (val.lo < v ? Ordering::Less : Ordering::Greater);
        w /= 64;
    }
    throw std::runtime_error("cmp_expr_at: failed to separate (value extremely close to bound)");
}

std::string expr_str(const ExprPtr& e) {
    std::ostringstream os;
    switch (e->kind) {
        case Expr::Kind::Constant: os << rat_str(e->value); break;
        case Expr::Kind::Variable: os << "t"; break;
        case Expr::Kind::Add: os << "(" << expr_str(e->a) << " + " << expr_str(e->b) << ")"; break;
        case Expr::Kind::Sub: os << "(" << expr_str(e->a) << " - " << expr_str(e->b) << ")"; break;
        case Expr::Kind::Mul: os << "(" << expr_str(e->a) << " * " << expr_str(e->b) << ")"; break;
        case Expr::Kind::Neg: os << "-" << expr_str(e->a); break;
        case Expr::Kind::Abs: os << "abs(" << expr_str(e->a) << ")"; break;
        case Expr::Kind::Min: os << "min(" << expr_str(e->a) << ", " << expr_str(e->b) << ")"; break;
        case Expr::Kind::Max: os << "max(" << expr_str(e->a) << ", " << expr_str(e->b) << ")"; break;
        case Expr::Kind::Pow:
            os << expr_str(e->a) << "^(" << e->pnum << "/" << e->pden << ")";
            break;
    }
    return os.str();
}

}  // namespace gamma14
