#pragma once

// Structural evaluation of an internal-variable expression at z = 0, with
// exact limits for the atoms: z -> 0, negative powers and ln z -> infinite
// magnitude, and conservative Indeterminate for anything the exact rules do
// not resolve. Also the shared exact-or-opaque constant evaluation used by
// the elementary-function kernels.

#include <optional>
#include <utility>

#include "pkx/coeff.hpp"
#include "pkx/errors.hpp"
#include "pkx/expr.hpp"

namespace pkx {

struct ExtendedValue {
    enum class Kind { Finite, InfiniteMagnitude, Indeterminate };
    Kind kind = Kind::Indeterminate;
    Coefficient value;  // meaningful only when finite

    static ExtendedValue finite(Coefficient c) {
        return {Kind::Finite, std::move(c)};
    }
    static ExtendedValue infinite() { return {Kind::InfiniteMagnitude, {}}; }
    static ExtendedValue indeterminate() { return {Kind::Indeterminate, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::InfiniteMagnitude; }
    bool is_indeterminate() const { return kind == Kind::Indeterminate; }
};

inline Coefficient pi_coefficient() { return Coefficient::from_atom(Atom::named("pi")); }

// ln of a finite nonzero constant. Exact for 1, for E^q, and for the
// principal-branch unit contributions of negative/imaginary rationals (which
// bring in pi); positive rationals and everything else stay opaque. Nested
// logarithms (an L inside the argument) are rejected.
inline Coefficient log_constant(const Coefficient& c) {
    if (c.contains_log())
        throw Error(ErrorKind::Unsupported,
                    "nested logarithm: ln of a coefficient containing ln z");
    if (c.is_one()) return Coefficient::zero();
    if (auto m = c.as_monomial()) {
        Coefficient out = Coefficient::zero();
        // Unit direction of the scalar part.
        GaussianRational g = m->c;
        if (g.is_rational()) {
            if (g.re.is_negative()) {
                out = out + Coefficient::imaginary_unit() * pi_coefficient();
                g.re = -g.re;
            }
        } else if (g.re.is_zero()) {
            Coefficient half_i_pi =
                Coefficient::imaginary_unit() * pi_coefficient() *
                Coefficient::from_rational(Rational(1, 2));
            out = out + (g.im.is_positive() ? half_i_pi : -half_i_pi);
            g = GaussianRational(g.im.abs());
        }
        if (!g.is_rational()) {
            // General complex scalar: keep the whole thing opaque.
            return Coefficient::from_atom(
                Atom::opaque(make_apply(Func::Ln, c.to_expr(internal_symbol()))));
        }
        if (g.re != Rational(1)) {
            out = out + Coefficient::from_atom(Atom::opaque(
                            make_apply(Func::Ln, make_rational(g.re))));
        }
        for (const auto& [atom, e] : m->mono.factors()) {
            switch (atom.kind()) {
                case Atom::Kind::ExpUnit:
                    out = out + Coefficient::from_rational(e);
                    break;
                case Atom::Kind::LogVar:
                    throw Error(ErrorKind::Unsupported, "nested logarithm");
                default:
                    out = out + Coefficient::from_rational(e) *
                                    Coefficient::from_atom(Atom::opaque(make_apply(
                                        Func::Ln, atom.to_expr(internal_symbol()))));
            }
        }
        return out;
    }
    return Coefficient::from_atom(
        Atom::opaque(make_apply(Func::Ln, c.to_expr(internal_symbol()))));
}

// f applied to a finite constant coefficient: exact special values at 0 (and
// exp's E^q canonicalization), opaque atom otherwise.
inline Coefficient apply_function_to_constant(Func f, const Coefficient& c) {
    if (f == Func::Ln) return log_constant(c);
    if (f == Func::Exp) {
        if (c.is_zero()) return Coefficient::one();
        if (auto q = c.as_rational()) return Coefficient::exp_unit(*q);
        return Coefficient::from_atom(
            Atom::opaque(make_apply(Func::Exp, c.to_expr(internal_symbol()))));
    }
    if (c.is_zero()) {
        switch (f) {
            case Func::Sin: case Func::Tan: case Func::Sinh: case Func::Tanh:
            case Func::Arcsin: case Func::Arctan: case Func::Arcsinh: case Func::Arctanh:
                return Coefficient::zero();
            case Func::Cos: case Func::Cosh:
                return Coefficient::one();
            case Func::Arccos:
                return pi_coefficient() * Coefficient::from_rational(Rational(1, 2));
            case Func::Arccosh:
                // principal arccosh(0) = i*pi/2
                return Coefficient::imaginary_unit() * pi_coefficient() *
                       Coefficient::from_rational(Rational(1, 2));
            default:
                break;
        }
    }
    return Coefficient::from_atom(Atom::opaque(make_apply(f, c.to_expr(internal_symbol()))));
}

inline ExtendedValue eval_at_zero(const ExprPtr& u) {
    switch (u->kind()) {
        case Expr::Kind::Rational:
            return ExtendedValue::finite(Coefficient::from_rational(u->rational()));
        case Expr::Kind::ImaginaryUnit:
            return ExtendedValue::finite(Coefficient::imaginary_unit());
        case Expr::Kind::Symbol:
            if (u->symbol() == internal_variable_name())
                return ExtendedValue::finite(Coefficient::zero());
            return ExtendedValue::finite(Coefficient::from_atom(Atom::named(u->symbol())));
        case Expr::Kind::Sum: {
            Coefficient acc = Coefficient::zero();
            int infinite = 0;
            for (const auto& op : u->operands()) {
                ExtendedValue v = eval_at_zero(op);
                if (v.is_indeterminate()) return ExtendedValue::indeterminate();
                if (v.is_infinite()) ++infinite;
                else acc = acc + v.value;
            }
            if (infinite >= 2) return ExtendedValue::indeterminate();  // inf - inf shape
            if (infinite == 1) return ExtendedValue::infinite();
            return ExtendedValue::finite(std::move(acc));
        }
        case Expr::Kind::Product: {
            Coefficient acc = Coefficient::one();
            int infinite = 0;
            bool zero = false;
            for (const auto& op : u->operands()) {
                ExtendedValue v = eval_at_zero(op);
                if (v.is_indeterminate()) return ExtendedValue::indeterminate();
                if (v.is_infinite()) { ++infinite; continue; }
                if (v.value.is_zero()) { zero = true; continue; }
                acc = acc * v.value;
            }
            if (infinite > 0 && zero) return ExtendedValue::indeterminate();  // 0 * inf
            if (infinite > 0) return ExtendedValue::infinite();
            if (zero) return ExtendedValue::finite(Coefficient::zero());
            return ExtendedValue::finite(std::move(acc));
        }
        case Expr::Kind::Power: {
            ExtendedValue b = eval_at_zero(u->base());
            if (b.is_indeterminate()) return ExtendedValue::indeterminate();
            if (auto q = power_rational_exponent(u)) {
                if (b.is_infinite()) {
                    if (q->is_positive()) return ExtendedValue::infinite();
                    if (q->is_negative()) return ExtendedValue::finite(Coefficient::zero());
                    return ExtendedValue::indeterminate();  // inf^0
                }
                if (b.value.is_zero()) {
                    if (q->is_positive()) return ExtendedValue::finite(Coefficient::zero());
                    if (q->is_negative()) return ExtendedValue::infinite();
                    return ExtendedValue::finite(Coefficient::one());
                }
                return ExtendedValue::finite(b.value.pow(*q));
            }
            ExtendedValue e = eval_at_zero(u->exponent());
            if (!b.is_finite() || !e.is_finite() || b.value.is_zero())
                return ExtendedValue::indeterminate();
            if (auto q = e.value.as_rational()) return ExtendedValue::finite(b.value.pow(*q));
            return ExtendedValue::finite(Coefficient::from_atom(Atom::opaque(
                make_power(b.value.to_expr(internal_symbol()),
                           e.value.to_expr(internal_symbol())))));
        }
        case Expr::Kind::Apply: {
            ExtendedValue a = eval_at_zero(u->argument());
            if (a.is_indeterminate()) return ExtendedValue::indeterminate();
            if (a.is_infinite()) {
                // |ln| still grows; every other supported function is either
                // oscillatory or branch-limited there.
                return u->func() == Func::Ln ? ExtendedValue::infinite()
                                             : ExtendedValue::indeterminate();
            }
            if (u->func() == Func::Ln && a.value.is_zero()) return ExtendedValue::infinite();
            try {
                return ExtendedValue::finite(apply_function_to_constant(u->func(), a.value));
            } catch (const Error&) {
                return ExtendedValue::indeterminate();
            }
        }
    }
    return ExtendedValue::indeterminate();
}

}  // namespace pkx
