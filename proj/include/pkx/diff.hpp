#pragma once

// Exact symbolic differentiation. This exists for the test oracle (iterated
// differentiation plus evaluation at the expansion point); the series engine
// itself never calls it.

#include <string>

#include "pkx/expr.hpp"

namespace pkx {

inline ExprPtr diff(const ExprPtr& e, const std::string& var) {
    switch (e->kind()) {
        case Expr::Kind::Rational:
        case Expr::Kind::ImaginaryUnit:
            return make_rational(Rational(0));
        case Expr::Kind::Symbol:
            return make_rational(Rational(e->symbol() == var ? 1 : 0));
        case Expr::Kind::Sum: {
            std::vector<ExprPtr> parts;
            for (const auto& op : e->operands()) parts.push_back(diff(op, var));
            return make_sum(std::move(parts));
        }
        case Expr::Kind::Product: {
            const auto& ops = e->operands();
            std::vector<ExprPtr> parts;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                std::vector<ExprPtr> factors = ops;
                factors[i] = diff(ops[i], var);
                parts.push_back(make_product(std::move(factors)));
            }
            return make_sum(std::move(parts));
        }
        case Expr::Kind::Power: {
            const ExprPtr& b = e->base();
            if (auto q = power_rational_exponent(e)) {
                // q * b^(q-1) * b'
                return make_product({make_rational(*q), make_power(b, *q - Rational(1)),
                                     diff(b, var)});
            }
            // b^x * (x' ln b + x b'/b)
            const ExprPtr& x = e->exponent();
            ExprPtr term1 = make_product({diff(x, var), make_apply(Func::Ln, b)});
            ExprPtr term2 = make_product({x, expr_div(diff(b, var), b)});
            return make_product({e, make_sum({term1, term2})});
        }
        case Expr::Kind::Apply: {
            const ExprPtr& u = e->argument();
            ExprPtr du = diff(u, var);
            ExprPtr one = make_rational(Rational(1));
            ExprPtr u2 = make_power(u, Rational(2));
            ExprPtr outer;
            switch (e->func()) {
                case Func::Exp: outer = e; break;
                case Func::Ln: outer = make_power(u, Rational(-1)); break;
                case Func::Sin: outer = make_apply(Func::Cos, u); break;
                case Func::Cos: outer = expr_neg(make_apply(Func::Sin, u)); break;
                case Func::Tan:
                    outer = make_sum({one, make_power(make_apply(Func::Tan, u), Rational(2))});
                    break;
                case Func::Sinh: outer = make_apply(Func::Cosh, u); break;
                case Func::Cosh: outer = make_apply(Func::Sinh, u); break;
                case Func::Tanh:
                    outer = expr_sub(one, make_power(make_apply(Func::Tanh, u), Rational(2)));
                    break;
                case Func::Arcsin:
                    outer = make_power(expr_sub(one, u2), Rational(-1, 2));
                    break;
                case Func::Arccos:
                    outer = expr_neg(make_power(expr_sub(one, u2), Rational(-1, 2)));
                    break;
                case Func::Arctan:
                    outer = make_power(make_sum({one, u2}), Rational(-1));
                    break;
                case Func::Arcsinh:
                    outer = make_power(make_sum({one, u2}), Rational(-1, 2));
                    break;
                case Func::Arccosh:
                    outer = make_power(expr_sub(u2, one), Rational(-1, 2));
                    break;
                case Func::Arctanh:
                    outer = make_power(expr_sub(one, u2), Rational(-1));
                    break;
            }
            return make_product({std::move(outer), std::move(du)});
        }
    }
    return make_rational(Rational(0));
}

}  // namespace pkx
