#pragma once

// Heuristic guesses for the dominant exponent and the increment between the
// first two nonzero exponents of an expression's expansion, each with a
// status describing how much the guess can be trusted. The guesses seed the
// operand-order requests; correctness never depends on them because the
// driver iterates.

#include <optional>
#include <vector>

#include "pkx/eval.hpp"
#include "pkx/expr.hpp"
#include "pkx/rational.hpp"

namespace pkx {

enum class GuessStatus { LowerBound, Exact, UpperBound, Uncertain };

struct GuessReport {
    Rational value;
    GuessStatus status = GuessStatus::Uncertain;
};

inline GuessReport guess_de(const ExprPtr& u);

namespace detail {

inline GuessStatus flip_status(GuessStatus s) {
    switch (s) {
        case GuessStatus::LowerBound: return GuessStatus::UpperBound;
        case GuessStatus::UpperBound: return GuessStatus::LowerBound;
        default: return s;
    }
}

inline GuessStatus combine_product_status(GuessStatus a, GuessStatus b) {
    if (a == GuessStatus::Uncertain || b == GuessStatus::Uncertain)
        return GuessStatus::Uncertain;
    if (a == GuessStatus::Exact) return b;
    if (b == GuessStatus::Exact) return a;
    return a == b ? a : GuessStatus::Uncertain;
}

// Status for rows whose dominant exponent is 0 provided the argument's
// dominant exponent is certainly >= 0 (exp, cos, cosh).
inline GuessStatus nonneg_argument_status(const GuessReport& arg) {
    bool certain_nonneg = !arg.value.is_negative() &&
                          (arg.status == GuessStatus::Exact ||
                           arg.status == GuessStatus::LowerBound);
    return certain_nonneg ? GuessStatus::Exact : GuessStatus::Uncertain;
}

inline GuessReport guess_de_apply(Func f, const ExprPtr& arg) {
    GuessReport g = guess_de(arg);
    auto ev = [&]() { return eval_at_zero(arg); };
    auto sin_like = [&]() -> GuessReport {
        // dominant exponent alpha when alpha >= 0 (sin, tan, sinh, tanh)
        Rational v = rational_max(Rational(0), g.value);
        GuessStatus st = GuessStatus::Uncertain;
        if (!g.value.is_negative() &&
            (g.status == GuessStatus::Exact || g.status == GuessStatus::LowerBound))
            st = g.value.is_positive() ? g.status : GuessStatus::Exact;
        return {v, st};
    };
    switch (f) {
        case Func::Exp:
        case Func::Cos:
        case Func::Cosh:
            return {Rational(0), nonneg_argument_status(g)};
        case Func::Sin:
        case Func::Tan:
        case Func::Sinh:
        case Func::Tanh:
            return sin_like();
        case Func::Ln: {
            ExtendedValue v = ev();
            if (v.is_finite() && v.value.is_one())
                return {guess_de(expr_sub(arg, make_rational(Rational(1)))).value,
                        GuessStatus::Uncertain};
            if (v.is_finite() && !v.value.is_zero()) return {Rational(0), GuessStatus::Exact};
            if (v.is_finite() || v.is_infinite())
                return {Rational(0), GuessStatus::Exact};  // alpha != 0 puts ln z at degree 0
            return {Rational(0), GuessStatus::Uncertain};
        }
        case Func::Arctan: {
            ExtendedValue v = ev();
            if (v.is_finite()) {
                if (v.value == Coefficient::imaginary_unit())
                    return {guess_de(expr_sub(arg, make_imaginary_unit())).value,
                            GuessStatus::Uncertain};
                if (v.value == -Coefficient::imaginary_unit())
                    return {guess_de(make_sum({arg, make_imaginary_unit()})).value,
                            GuessStatus::Uncertain};
            }
            return sin_like();
        }
        case Func::Arctanh: {
            ExtendedValue v = ev();
            if (v.is_finite()) {
                if (v.value.is_one())
                    return {guess_de(expr_sub(arg, make_rational(Rational(1)))).value,
                            GuessStatus::Uncertain};
                if (v.value == -Coefficient::one())
                    return {guess_de(make_sum({arg, make_rational(Rational(1))})).value,
                            GuessStatus::Uncertain};
            }
            return sin_like();
        }
        case Func::Arcsin: {
            ExtendedValue v = ev();
            if (v.is_finite() && (v.value.is_one() || v.value == -Coefficient::one()))
                return {guess_de(expr_sub(arg, v.value.to_expr(internal_symbol()))).value /
                            Rational(2),
                        GuessStatus::Uncertain};
            return sin_like();
        }
        case Func::Arcsinh: {
            ExtendedValue v = ev();
            if (v.is_finite() && (v.value == Coefficient::imaginary_unit() ||
                                  v.value == -Coefficient::imaginary_unit()))
                return {guess_de(expr_sub(arg, v.value.to_expr(internal_symbol()))).value /
                            Rational(2),
                        GuessStatus::Uncertain};
            return sin_like();
        }
        case Func::Arccos:
        case Func::Arccosh: {
            ExtendedValue v = ev();
            if (v.is_finite() && v.value.is_one())
                return {guess_de(expr_sub(arg, make_rational(Rational(1)))).value / Rational(2),
                        GuessStatus::Uncertain};
            if (v.is_finite() && !v.value.is_zero())
                return {Rational(0), GuessStatus::Exact};
            if (v.is_finite()) return {Rational(0), GuessStatus::Exact};  // f(0) != 0
            return {Rational(0), GuessStatus::Uncertain};
        }
    }
    return {Rational(0), GuessStatus::Uncertain};
}

}  // namespace detail

inline GuessReport guess_de(const ExprPtr& u) {
    if (!contains_symbol(u, internal_variable_name()))
        return {Rational(0), GuessStatus::Exact};
    switch (u->kind()) {
        case Expr::Kind::Symbol:
            return {Rational(1), GuessStatus::Exact};  // the variable itself
        case Expr::Kind::Sum: {
            std::optional<Rational> m;
            for (const auto& op : u->operands()) {
                Rational g = guess_de(op).value;
                if (!m || g < *m) m = g;
            }
            return {*m, GuessStatus::LowerBound};
        }
        case Expr::Kind::Product: {
            Rational total(0);
            GuessStatus st = GuessStatus::Exact;
            for (const auto& op : u->operands()) {
                GuessReport g = guess_de(op);
                total += g.value;
                st = detail::combine_product_status(st, g.status);
            }
            return {total, st};
        }
        case Expr::Kind::Power: {
            if (auto q = power_rational_exponent(u)) {
                GuessReport g = guess_de(u->base());
                GuessStatus st = q->is_negative() ? detail::flip_status(g.status) : g.status;
                return {*q * g.value, st};
            }
            return {Rational(0), GuessStatus::Uncertain};  // handled as exp(e ln b)
        }
        case Expr::Kind::Apply:
            return detail::guess_de_apply(u->func(), u->argument());
        default:
            return {Rational(0), GuessStatus::Exact};
    }
}

inline GuessReport guess_inc(const ExprPtr& u);

namespace detail {

inline GuessReport guess_inc_apply(Func f, const ExprPtr& arg) {
    GuessReport inc = guess_inc(arg);
    Rational alpha = guess_de(arg).value;
    auto ev = [&]() { return eval_at_zero(arg); };
    switch (f) {
        case Func::Exp:
            if (alpha.is_zero()) return {inc.value, GuessStatus::Uncertain};
            return {alpha.abs(), GuessStatus::Uncertain};
        case Func::Ln: {
            ExtendedValue v = ev();
            if (v.is_finite() && v.value.is_one())
                return {guess_inc(expr_sub(arg, make_rational(Rational(1)))).value,
                        GuessStatus::Uncertain};
            return {inc.value, GuessStatus::Uncertain};
        }
        case Func::Sin:
        case Func::Sinh:
        case Func::Tan:
        case Func::Tanh:
            if (inc.value.is_zero()) return {Rational(2) * alpha.abs(), GuessStatus::Uncertain};
            return {inc.value, GuessStatus::Uncertain};
        case Func::Cos:
        case Func::Cosh:
            if (alpha.is_zero()) return {inc.value, GuessStatus::Uncertain};
            return {Rational(2) * alpha.abs(), GuessStatus::Uncertain};
        case Func::Arctan:
        case Func::Arctanh: {
            if (alpha.is_negative()) return {-alpha, GuessStatus::Uncertain};
            if (alpha.is_positive() && inc.value.is_zero())
                return {Rational(2) * alpha, GuessStatus::Uncertain};
            ExtendedValue v = ev();
            bool branch = v.is_finite() &&
                          (f == Func::Arctan
                               ? (v.value == Coefficient::imaginary_unit() ||
                                  v.value == -Coefficient::imaginary_unit())
                               : (v.value.is_one() || v.value == -Coefficient::one()));
            if (branch)
                return {guess_inc(expr_sub(arg, v.value.to_expr(internal_symbol()))).value,
                        GuessStatus::Uncertain};
            return {inc.value, GuessStatus::Uncertain};
        }
        case Func::Arcsin:
        case Func::Arcsinh: {
            if (inc.value.is_zero()) return {Rational(2) * alpha.abs(), GuessStatus::Uncertain};
            ExtendedValue v = ev();
            bool branch = v.is_finite() &&
                          (f == Func::Arcsin
                               ? (v.value.is_one() || v.value == -Coefficient::one())
                               : (v.value == Coefficient::imaginary_unit() ||
                                  v.value == -Coefficient::imaginary_unit()));
            if (branch) return {inc.value / Rational(2), GuessStatus::Uncertain};
            return {inc.value, GuessStatus::Uncertain};
        }
        case Func::Arccos:
        case Func::Arccosh: {
            if (alpha.is_positive()) return {alpha, GuessStatus::Uncertain};
            if (alpha.is_negative() && inc.value.is_zero())
                return {Rational(-2) * alpha, GuessStatus::Uncertain};
            ExtendedValue v = ev();
            if (v.is_finite() && (v.value.is_one() || v.value == -Coefficient::one()))
                return {inc.value / Rational(2), GuessStatus::Uncertain};
            return {inc.value, GuessStatus::Uncertain};
        }
    }
    return {Rational(0), GuessStatus::Uncertain};
}

}  // namespace detail

inline GuessReport guess_inc(const ExprPtr& u) {
    if (!contains_symbol(u, internal_variable_name()))
        return {Rational(0), GuessStatus::Exact};
    switch (u->kind()) {
        case Expr::Kind::Symbol:
            return {Rational(0), GuessStatus::Exact};
        case Expr::Kind::Power: {
            if (power_rational_exponent(u)) {
                GuessReport g = guess_inc(u->base());
                return {g.value, g.status};
            }
            return {Rational(0), GuessStatus::Uncertain};
        }
        case Expr::Kind::Product: {
            // Zero-increment factors (monomial-like) are transparent.
            std::vector<GuessReport> incs;
            for (const auto& op : u->operands()) incs.push_back(guess_inc(op));
            std::optional<Rational> min_nonzero;
            bool all_exact_zero = true;
            for (const auto& g : incs) {
                if (!g.value.is_zero()) {
                    all_exact_zero = false;
                    if (!min_nonzero || g.value < *min_nonzero) min_nonzero = g.value;
                } else if (g.status != GuessStatus::Exact) {
                    all_exact_zero = false;
                }
            }
            if (!min_nonzero) {
                return {Rational(0),
                        all_exact_zero ? GuessStatus::Exact : GuessStatus::Uncertain};
            }
            return {*min_nonzero, GuessStatus::Uncertain};
        }
        case Expr::Kind::Sum: {
            // Procedurally: sigma = guessed dominant exponent of the sum;
            // candidates are the smallest nonzero increment among the terms
            // guessed to sit at sigma and the gap up to the next guessed
            // exponent.
            Rational sigma = guess_de(u).value;
            std::optional<Rational> delta, gamma;
            for (const auto& op : u->operands()) {
                Rational g = guess_de(op).value;
                if (g == sigma) {
                    Rational inc = guess_inc(op).value;
                    if (!inc.is_zero() && (!delta || inc < *delta)) delta = inc;
                } else if (!gamma || g < *gamma) {
                    gamma = g;
                }
            }
            std::optional<Rational> best = delta;
            if (gamma) {
                Rational gap = *gamma - sigma;
                if (!best || gap < *best) best = gap;
            }
            return {best ? *best : Rational(0), GuessStatus::Uncertain};
        }
        case Expr::Kind::Apply:
            return detail::guess_inc_apply(u->func(), u->argument());
        default:
            return {Rational(0), GuessStatus::Exact};
    }
}

// Top-level entry: an inner guess of 0 may simply mean the rules could not
// see the increment, so the driver starts from 1 instead.
inline Rational guess_inc_top(const ExprPtr& u) {
    Rational g = guess_inc(u).value;
    return g.is_zero() ? Rational(1) : g;
}

}  // namespace pkx
