#pragma once

// Immutable expression trees. Sums and products are flattened and kept in a
// deterministic canonical order; rational constants are folded; everything
// else is left structurally intact (this is not a simplifier).

#include <algorithm>
#include <cassert>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pkx/rational.hpp"

namespace pkx {

enum class Func {
    Exp, Ln,
    Sin, Cos, Tan, Sinh, Cosh, Tanh,
    Arcsin, Arccos, Arctan, Arcsinh, Arccosh, Arctanh,
};

inline const char* func_name(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
        case Func::Tanh: return "tanh";
        case Func::Arcsin: return "arcsin";
        case Func::Arccos: return "arccos";
        case Func::Arctan: return "arctan";
        case Func::Arcsinh: return "arcsinh";
        case Func::Arccosh: return "arccosh";
        case Func::Arctanh: return "arctanh";
    }
    return "?";
}

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { Rational, ImaginaryUnit, Symbol, Sum, Product, Power, Apply };

    Kind kind() const { return kind_; }

    const Rational& rational() const { assert(kind_ == Kind::Rational); return rational_; }
    const std::string& symbol() const { assert(kind_ == Kind::Symbol); return name_; }
    const std::vector<ExprPtr>& operands() const {
        assert(kind_ == Kind::Sum || kind_ == Kind::Product);
        return operands_;
    }
    const ExprPtr& base() const { assert(kind_ == Kind::Power); return operands_[0]; }
    const ExprPtr& exponent() const { assert(kind_ == Kind::Power); return operands_[1]; }
    Func func() const { assert(kind_ == Kind::Apply); return func_; }
    const ExprPtr& argument() const { assert(kind_ == Kind::Apply); return operands_[0]; }

    // Factories below are the only way to build nodes.
    struct Make;

private:
    explicit Expr(Kind k) : kind_(k) {}
    Kind kind_;
    Rational rational_;
    std::string name_;
    std::vector<ExprPtr> operands_;
    Func func_ = Func::Exp;
    friend struct Make;
    friend ExprPtr make_rational(Rational);
    friend ExprPtr make_imaginary_unit();
    friend ExprPtr make_symbol(std::string);
    friend ExprPtr make_sum(std::vector<ExprPtr>);
    friend ExprPtr make_product(std::vector<ExprPtr>);
    friend ExprPtr make_power(ExprPtr, ExprPtr);
    friend ExprPtr make_apply(Func, ExprPtr);
};

// Total structural order; used for canonical operand sorting and for keying
// opaque coefficient atoms.
inline int expr_compare(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return 0;
    auto rank = [](Expr::Kind k) {
        switch (k) {
            case Expr::Kind::Rational: return 0;
            case Expr::Kind::ImaginaryUnit: return 1;
            case Expr::Kind::Symbol: return 2;
            case Expr::Kind::Apply: return 3;
            case Expr::Kind::Power: return 4;
            case Expr::Kind::Product: return 5;
            case Expr::Kind::Sum: return 6;
        }
        return 7;
    };
    int ra = rank(a->kind()), rb = rank(b->kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a->kind()) {
        case Expr::Kind::Rational: {
            if (a->rational() == b->rational()) return 0;
            return a->rational() < b->rational() ? -1 : 1;
        }
        case Expr::Kind::ImaginaryUnit:
            return 0;
        case Expr::Kind::Symbol: {
            int c = a->symbol().compare(b->symbol());
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        case Expr::Kind::Apply: {
            if (a->func() != b->func())
                return static_cast<int>(a->func()) < static_cast<int>(b->func()) ? -1 : 1;
            return expr_compare(a->argument(), b->argument());
        }
        case Expr::Kind::Power: {
            int c = expr_compare(a->base(), b->base());
            if (c != 0) return c;
            return expr_compare(a->exponent(), b->exponent());
        }
        case Expr::Kind::Product:
        case Expr::Kind::Sum: {
            const auto& oa = a->operands();
            const auto& ob = b->operands();
            std::size_t n = std::min(oa.size(), ob.size());
            for (std::size_t i = 0; i < n; ++i) {
                int c = expr_compare(oa[i], ob[i]);
                if (c != 0) return c;
            }
            if (oa.size() != ob.size()) return oa.size() < ob.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_compare(a, b) == 0; }

inline ExprPtr make_rational(Rational r) {
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Rational));
    e->rational_ = std::move(r);
    return e;
}

inline ExprPtr make_imaginary_unit() {
    static const ExprPtr i = std::shared_ptr<Expr>(new Expr(Expr::Kind::ImaginaryUnit));
    return i;
}

inline ExprPtr make_symbol(std::string name) {
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Symbol));
    e->name_ = std::move(name);
    return e;
}

inline bool is_rational_const(const ExprPtr& e) { return e->kind() == Expr::Kind::Rational; }

inline ExprPtr make_sum(std::vector<ExprPtr> ops) {
    std::vector<ExprPtr> flat;
    Rational constant(0);
    for (auto& op : ops) {
        if (op->kind() == Expr::Kind::Sum) {
            for (auto& inner : op->operands()) {
                if (is_rational_const(inner)) constant += inner->rational();
                else flat.push_back(inner);
            }
        } else if (is_rational_const(op)) {
            constant += op->rational();
        } else {
            flat.push_back(std::move(op));
        }
    }
    std::stable_sort(flat.begin(), flat.end(),
                     [](const ExprPtr& x, const ExprPtr& y) { return expr_compare(x, y) < 0; });
    if (!constant.is_zero()) flat.insert(flat.begin(), make_rational(constant));
    if (flat.empty()) return make_rational(Rational(0));
    if (flat.size() == 1) return flat[0];
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Sum));
    e->operands_ = std::move(flat);
    return e;
}

inline ExprPtr make_product(std::vector<ExprPtr> ops) {
    std::vector<ExprPtr> flat;
    Rational constant(1);
    for (auto& op : ops) {
        if (op->kind() == Expr::Kind::Product) {
            for (auto& inner : op->operands()) {
                if (is_rational_const(inner)) constant *= inner->rational();
                else flat.push_back(inner);
            }
        } else if (is_rational_const(op)) {
            constant *= op->rational();
        } else {
            flat.push_back(std::move(op));
        }
    }
    if (constant.is_zero()) return make_rational(Rational(0));
    std::stable_sort(flat.begin(), flat.end(),
                     [](const ExprPtr& x, const ExprPtr& y) { return expr_compare(x, y) < 0; });
    if (constant != Rational(1)) flat.insert(flat.begin(), make_rational(constant));
    if (flat.empty()) return make_rational(Rational(1));
    if (flat.size() == 1) return flat[0];
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Product));
    e->operands_ = std::move(flat);
    return e;
}

inline ExprPtr make_power(ExprPtr base, ExprPtr exponent) {
    if (is_rational_const(exponent)) {
        const Rational& q = exponent->rational();
        if (q == Rational(1)) return base;
        if (q.is_zero()) return make_rational(Rational(1));  // convention x^0 = 1
        if (is_rational_const(base) && q.is_integer() && !base->rational().is_zero()) {
            BigInt n = q.numerator();
            if (n >= -64 && n <= 64)
                return make_rational(base->rational().pow_int(static_cast<long long>(n)));
        }
    }
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Power));
    e->operands_ = {std::move(base), std::move(exponent)};
    return e;
}

inline ExprPtr make_apply(Func f, ExprPtr arg) {
    auto e = std::shared_ptr<Expr>(new Expr(Expr::Kind::Apply));
    e->func_ = f;
    e->operands_ = {std::move(arg)};
    return e;
}

// Convenience builders.
inline ExprPtr make_power(ExprPtr base, Rational q) {
    return make_power(std::move(base), make_rational(std::move(q)));
}
inline ExprPtr expr_neg(ExprPtr e) { return make_product({make_rational(Rational(-1)), std::move(e)}); }
inline ExprPtr expr_sub(ExprPtr a, ExprPtr b) { return make_sum({std::move(a), expr_neg(std::move(b))}); }
inline ExprPtr expr_div(ExprPtr a, ExprPtr b) {
    return make_product({std::move(a), make_power(std::move(b), Rational(-1))});
}

inline std::optional<Rational> power_rational_exponent(const ExprPtr& e) {
    assert(e->kind() == Expr::Kind::Power);
    if (is_rational_const(e->exponent())) return e->exponent()->rational();
    return std::nullopt;
}

inline bool contains_symbol(const ExprPtr& e, const std::string& name) {
    switch (e->kind()) {
        case Expr::Kind::Rational:
        case Expr::Kind::ImaginaryUnit:
            return false;
        case Expr::Kind::Symbol:
            return e->symbol() == name;
        case Expr::Kind::Apply:
            return contains_symbol(e->argument(), name);
        case Expr::Kind::Power:
            return contains_symbol(e->base(), name) || contains_symbol(e->exponent(), name);
        case Expr::Kind::Sum:
        case Expr::Kind::Product:
            for (const auto& op : e->operands())
                if (contains_symbol(op, name)) return true;
            return false;
    }
    return false;
}

// Replaces every occurrence of a symbol, re-canonicalizing on the way up.
inline ExprPtr substitute(const ExprPtr& e, const std::string& name, const ExprPtr& replacement) {
    switch (e->kind()) {
        case Expr::Kind::Rational:
        case Expr::Kind::ImaginaryUnit:
            return e;
        case Expr::Kind::Symbol:
            return e->symbol() == name ? replacement : e;
        case Expr::Kind::Apply:
            return make_apply(e->func(), substitute(e->argument(), name, replacement));
        case Expr::Kind::Power:
            return make_power(substitute(e->base(), name, replacement),
                              substitute(e->exponent(), name, replacement));
        case Expr::Kind::Sum:
        case Expr::Kind::Product: {
            std::vector<ExprPtr> ops;
            ops.reserve(e->operands().size());
            for (const auto& op : e->operands()) ops.push_back(substitute(op, name, replacement));
            return e->kind() == Expr::Kind::Sum ? make_sum(std::move(ops))
                                                : make_product(std::move(ops));
        }
    }
    return e;
}

}  // namespace pkx
