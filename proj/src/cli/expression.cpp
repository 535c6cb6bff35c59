#include "wavewr/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "wavewr/errors.hpp"

namespace wavewr {

struct Expression::Node {
    enum class Op { number, variable, neg, add, sub, mul, div, pow, call };
    Op op = Op::number;
    double value = 0.0;
    std::size_t var = 0;
    double (*fn1)(double) = nullptr;
    double (*fn2)(double, double) = nullptr;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(std::span<const double> v) const {
        switch (op) {
            case Op::number: return value;
            case Op::variable: return v[var];
            case Op::neg: return -args[0]->eval(v);
            case Op::add: return args[0]->eval(v) + args[1]->eval(v);
            case Op::sub: return args[0]->eval(v) - args[1]->eval(v);
            case Op::mul: return args[0]->eval(v) * args[1]->eval(v);
            case Op::div: return args[0]->eval(v) / args[1]->eval(v);
            case Op::pow: return std::pow(args[0]->eval(v), args[1]->eval(v));
            case Op::call:
                return fn1 ? fn1(args[0]->eval(v)) : fn2(args[0]->eval(v), args[1]->eval(v));
        }
        return 0.0;
    }

    bool uses_variables() const {
        if (op == Op::variable) return true;
        for (const auto& a : args) {
            if (a->uses_variables()) return true;
        }
        return false;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

double fn_sin(double x) { return std::sin(x); }
double fn_cos(double x) { return std::cos(x); }
double fn_tan(double x) { return std::tan(x); }
double fn_exp(double x) { return std::exp(x); }
double fn_log(double x) { return std::log(x); }
double fn_sqrt(double x) { return std::sqrt(x); }
double fn_abs(double x) { return std::abs(x); }
double fn_sinh(double x) { return std::sinh(x); }
double fn_cosh(double x) { return std::cosh(x); }
double fn_tanh(double x) { return std::tanh(x); }
double fn_pow(double a, double b) { return std::pow(a, b); }
double fn_min(double a, double b) { return std::fmin(a, b); }
double fn_max(double a, double b) { return std::fmax(a, b); }

struct Unary {
    const char* name;
    double (*fn)(double);
};
struct Binary {
    const char* name;
    double (*fn)(double, double);
};

constexpr Unary unary_fns[] = {{"sin", fn_sin},   {"cos", fn_cos},   {"tan", fn_tan},   {"exp", fn_exp},
                               {"log", fn_log},   {"sqrt", fn_sqrt}, {"abs", fn_abs},   {"sinh", fn_sinh},
                               {"cosh", fn_cosh}, {"tanh", fn_tanh}};
constexpr Binary binary_fns[] = {{"pow", fn_pow}, {"min", fn_min}, {"max", fn_max}};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return n;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

    [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
        std::ostringstream os;
        os << what << " at column " << pos + 1 << " in expression '" << s_ << "'";
        throw ValidationError(os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, std::vector<NodePtr> args) {
        auto n = std::make_shared<Expression::Node>();
        n->op = op;
        n->args = std::move(args);
        return n;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = make(Op::add, {lhs, term()});
            } else if (eat('-')) {
                lhs = make(Op::sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (eat('*')) {
                lhs = make(Op::mul, {lhs, unary()});
            } else if (eat('/')) {
                lhs = make(Op::div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Op::neg, {unary()});
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (eat('^')) return make(Op::pow, {base, unary()});
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            auto n = std::make_shared<Expression::Node>();
            n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = s_.substr(start, pos_ - start);
            if (eat('(')) return call(name, start);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) {
                    auto n = std::make_shared<Expression::Node>();
                    n->op = Op::variable;
                    n->var = i;
                    return n;
                }
            }
            auto n = std::make_shared<Expression::Node>();
            if (name == "pi") {
                n->value = std::numbers::pi;
            } else if (name == "e") {
                n->value = std::numbers::e;
            } else {
                pos_ = start;
                fail("unknown name '" + name + "'");
            }
            return n;
        }
        fail("unexpected character");
    }

    NodePtr call(const std::string& name, std::size_t start) {
        std::vector<NodePtr> args{expr()};
        while (eat(',')) args.push_back(expr());
        if (!eat(')')) fail("expected ')'");
        auto n = std::make_shared<Expression::Node>();
        n->op = Op::call;
        n->args = std::move(args);
        for (const auto& u : unary_fns) {
            if (name == u.name) {
                if (n->args.size() != 1) fail_at(start, name + " takes one argument");
                n->fn1 = u.fn;
                return n;
            }
        }
        for (const auto& b : binary_fns) {
            if (name == b.name) {
                if (n->args.size() != 2) fail_at(start, name + " takes two arguments");
                n->fn2 = b.fn;
                return n;
            }
        }
        fail_at(start, "unknown function '" + name + "'");
    }
};

}  // namespace

Expression Expression::parse(const std::string& text, const std::vector<std::string>& variables) {
    Expression e;
    e.text_ = text;
    e.root_ = Parser(text, variables).parse();
    return e;
}

double Expression::eval(std::span<const double> values) const {
    if (!root_) return 0.0;
    return root_->eval(values);
}

bool Expression::is_constant() const { return !root_ || !root_->uses_variables(); }

double eval_constant(const std::string& text) { return Expression::parse(text, {}).eval({}); }

}  // namespace wavewr
