#pragma once

// Expansion frames: where the user wants the series, and the substitutions
// that move every expansion onto the internal variable with expansion point
// z = 0 (finite shift, left approach, directed infinities), plus the
// exponential-collection rewrite that must run before expansion.

#include <string>
#include <utility>
#include <vector>

#include "pkx/coeff.hpp"
#include "pkx/expr.hpp"

namespace pkx {

struct ExpansionFrame {
    enum class PointKind { Finite, FiniteFromLeft, PosInfinity, NegInfinity, DirectedInfinity };

    std::string variable;
    PointKind point_kind = PointKind::Finite;
    ExprPtr point_value;            // finite points
    GaussianRational direction;     // directed infinity (unit modulus, e.g. i)
    ExprPtr back_substitution;      // expression in the user variable replacing internal z
    std::vector<std::string> real_symbols;
    bool internal_real = false;     // internal z known real
    bool internal_positive = false; // internal z known to approach 0 from above

    static ExpansionFrame at_finite(std::string var, ExprPtr value,
                                    std::vector<std::string> real_syms = {}) {
        ExpansionFrame f;
        f.variable = std::move(var);
        f.point_kind = PointKind::Finite;
        f.point_value = std::move(value);
        f.real_symbols = std::move(real_syms);
        // z = w - w0
        f.back_substitution = expr_sub(make_symbol(f.variable), f.point_value);
        f.internal_real = f.is_variable_real() && !contains_symbol(f.point_value, f.variable);
        return f;
    }

    static ExpansionFrame at_finite_from_left(std::string var, ExprPtr value,
                                              std::vector<std::string> real_syms = {}) {
        ExpansionFrame f;
        f.variable = std::move(var);
        f.point_kind = PointKind::FiniteFromLeft;
        f.point_value = std::move(value);
        f.real_symbols = std::move(real_syms);
        // z = w0 - w, with z > 0 implicit
        f.back_substitution = expr_sub(f.point_value, make_symbol(f.variable));
        f.internal_real = true;
        f.internal_positive = true;
        return f;
    }

    static ExpansionFrame at_infinity(std::string var, bool positive,
                                      std::vector<std::string> real_syms = {}) {
        ExpansionFrame f;
        f.variable = std::move(var);
        f.point_kind = positive ? PointKind::PosInfinity : PointKind::NegInfinity;
        f.real_symbols = std::move(real_syms);
        f.direction = GaussianRational(Rational(positive ? 1 : -1));
        // z = d/w; the internal variable runs to 0 along the positive reals.
        f.back_substitution = make_product({direction_expr(f.direction),
                                            make_power(make_symbol(f.variable), Rational(-1))});
        f.internal_real = true;
        f.internal_positive = true;
        return f;
    }

    static ExpansionFrame at_directed_infinity(std::string var, GaussianRational dir,
                                               std::vector<std::string> real_syms = {}) {
        ExpansionFrame f;
        f.variable = std::move(var);
        f.point_kind = PointKind::DirectedInfinity;
        f.direction = std::move(dir);
        f.real_symbols = std::move(real_syms);
        f.back_substitution = make_product({direction_expr(f.direction),
                                            make_power(make_symbol(f.variable), Rational(-1))});
        f.internal_real = true;
        f.internal_positive = true;
        return f;
    }

    bool is_variable_real() const {
        for (const auto& s : real_symbols)
            if (s == variable) return true;
        return false;
    }

    bool symbol_known_real(const std::string& name) const {
        if (name == internal_variable_name()) return internal_real;
        for (const auto& s : real_symbols)
            if (s == name) return true;
        return false;
    }

    static ExprPtr direction_expr(const GaussianRational& d) {
        std::vector<ExprPtr> parts;
        if (!d.re.is_zero()) parts.push_back(make_rational(d.re));
        if (!d.im.is_zero())
            parts.push_back(make_product({make_rational(d.im), make_imaginary_unit()}));
        if (parts.empty()) return make_rational(Rational(0));
        return make_sum(std::move(parts));
    }
};

// Rewrites a user-variable expression onto the internal variable so that the
// expansion point becomes z = 0.
inline ExprPtr to_internal(const ExprPtr& e, const ExpansionFrame& frame) {
    ExprPtr replacement;
    switch (frame.point_kind) {
        case ExpansionFrame::PointKind::Finite:
            // w -> z + w0
            replacement = make_sum({internal_symbol(), frame.point_value});
            break;
        case ExpansionFrame::PointKind::FiniteFromLeft:
            // w -> w0 - z
            replacement = expr_sub(frame.point_value, internal_symbol());
            break;
        default:
            // w -> d/z
            replacement = make_product({ExpansionFrame::direction_expr(frame.direction),
                                        make_power(internal_symbol(), Rational(-1))});
            break;
    }
    return substitute(e, frame.variable, replacement);
}

// Realness needed by the (e^u)^v collection guard: rational constants, flagged
// symbols, sums/products of reals, integer powers, and total real-valued
// functions of real arguments.
inline bool known_real(const ExprPtr& e, const ExpansionFrame& frame) {
    switch (e->kind()) {
        case Expr::Kind::Rational:
            return true;
        case Expr::Kind::ImaginaryUnit:
            return false;
        case Expr::Kind::Symbol:
            return frame.symbol_known_real(e->symbol());
        case Expr::Kind::Sum:
        case Expr::Kind::Product:
            for (const auto& op : e->operands())
                if (!known_real(op, frame)) return false;
            return true;
        case Expr::Kind::Power: {
            auto q = power_rational_exponent(e);
            return q && q->is_integer() && known_real(e->base(), frame);
        }
        case Expr::Kind::Apply:
            switch (e->func()) {
                case Func::Exp: case Func::Sin: case Func::Cos: case Func::Tan:
                case Func::Sinh: case Func::Cosh: case Func::Tanh:
                    return known_real(e->argument(), frame);
                default:
                    return false;
            }
    }
    return false;
}

// e^u * e^v -> e^(u+v) and (e^u)^v -> e^(u*v) when v is known real; applied
// bottom-up, idempotent.
inline ExprPtr collect_exponentials(const ExprPtr& e, const ExpansionFrame& frame) {
    switch (e->kind()) {
        case Expr::Kind::Rational:
        case Expr::Kind::ImaginaryUnit:
        case Expr::Kind::Symbol:
            return e;
        case Expr::Kind::Apply:
            return make_apply(e->func(), collect_exponentials(e->argument(), frame));
        case Expr::Kind::Power: {
            ExprPtr base = collect_exponentials(e->base(), frame);
            ExprPtr expo = collect_exponentials(e->exponent(), frame);
            if (base->kind() == Expr::Kind::Apply && base->func() == Func::Exp &&
                known_real(expo, frame)) {
                return make_apply(Func::Exp, make_product({base->argument(), expo}));
            }
            return make_power(std::move(base), std::move(expo));
        }
        case Expr::Kind::Sum:
        case Expr::Kind::Product: {
            std::vector<ExprPtr> ops;
            ops.reserve(e->operands().size());
            for (const auto& op : e->operands()) ops.push_back(collect_exponentials(op, frame));
            if (e->kind() == Expr::Kind::Sum) return make_sum(std::move(ops));
            std::vector<ExprPtr> exp_args, rest;
            for (auto& op : ops) {
                if (op->kind() == Expr::Kind::Apply && op->func() == Func::Exp)
                    exp_args.push_back(op->argument());
                else
                    rest.push_back(op);
            }
            if (exp_args.size() >= 2) {
                rest.push_back(make_apply(Func::Exp, make_sum(std::move(exp_args))));
                return make_product(std::move(rest));
            }
            return make_product(std::move(ops));
        }
    }
    return e;
}

}  // namespace pkx
