#pragma once

// Expression printing. The text format round-trips through parse(); the JSON
// format is a structural serialization.

#include <string>

#include <json.hpp>

#include "pkx/expr.hpp"

namespace pkx {

enum class PrintFormat { Text, Json };

namespace detail {

// Precedence levels for parenthesization: sum < product < unary < power < atom.
enum Prec { PrecSum = 1, PrecProduct = 2, PrecPower = 3, PrecAtom = 4 };

inline void print_text(const ExprPtr& e, std::string& out, int parent_prec);

inline bool is_negative_leading(const ExprPtr& e) {
    if (is_rational_const(e)) return e->rational().is_negative();
    if (e->kind() == Expr::Kind::Product && is_rational_const(e->operands().front()))
        return e->operands().front()->rational().is_negative();
    return false;
}

// Strips one factor of -1 (or flips a leading negative rational).
inline ExprPtr negate_for_display(const ExprPtr& e) {
    if (is_rational_const(e)) return make_rational(-e->rational());
    if (e->kind() == Expr::Kind::Product && is_rational_const(e->operands().front())) {
        std::vector<ExprPtr> ops = e->operands();
        ops[0] = make_rational(-ops[0]->rational());
        return make_product(std::move(ops));
    }
    return expr_neg(e);
}

inline void print_text(const ExprPtr& e, std::string& out, int parent_prec) {
    auto wrap = [&](int prec, auto&& body) {
        bool need = prec < parent_prec;
        if (need) out += '(';
        body();
        if (need) out += ')';
    };
    switch (e->kind()) {
        case Expr::Kind::Rational: {
            const Rational& r = e->rational();
            bool need = r.is_negative() || !r.is_integer();
            if (need && parent_prec > PrecSum) { out += '('; out += r.to_string(); out += ')'; }
            else out += r.to_string();
            return;
        }
        case Expr::Kind::ImaginaryUnit:
            out += 'I';
            return;
        case Expr::Kind::Symbol:
            out += e->symbol();
            return;
        case Expr::Kind::Apply:
            out += func_name(e->func());
            out += '(';
            print_text(e->argument(), out, 0);
            out += ')';
            return;
        case Expr::Kind::Power:
            wrap(PrecPower, [&] {
                print_text(e->base(), out, PrecPower + 1);  // base never bare-sum/product
                out += '^';
                const ExprPtr& ex = e->exponent();
                bool simple = is_rational_const(ex) && ex->rational().is_integer() &&
                              !ex->rational().is_negative();
                if (simple || ex->kind() == Expr::Kind::Symbol) {
                    print_text(ex, out, PrecAtom);
                } else {
                    out += '(';
                    print_text(ex, out, 0);
                    out += ')';
                }
            });
            return;
        case Expr::Kind::Product:
            wrap(PrecProduct, [&] {
                const auto& ops = e->operands();
                std::size_t start = 0;
                if (is_rational_const(ops[0]) && ops[0]->rational() == Rational(-1) &&
                    ops.size() > 1) {
                    out += '-';
                    start = 1;
                }
                for (std::size_t i = start; i < ops.size(); ++i) {
                    if (i > start) out += '*';
                    print_text(ops[i], out, PrecProduct + 1);
                }
            });
            return;
        case Expr::Kind::Sum:
            wrap(PrecSum, [&] {
                const auto& ops = e->operands();
                for (std::size_t i = 0; i < ops.size(); ++i) {
                    if (i == 0) {
                        print_text(ops[i], out, PrecSum);
                    } else if (is_negative_leading(ops[i])) {
                        out += " - ";
                        print_text(negate_for_display(ops[i]), out, PrecSum + 1);
                    } else {
                        out += " + ";
                        print_text(ops[i], out, PrecSum + 1);
                    }
                }
            });
            return;
    }
}

inline nlohmann::json to_json(const ExprPtr& e) {
    using nlohmann::json;
    switch (e->kind()) {
        case Expr::Kind::Rational:
            return json{{"kind", "rational"}, {"value", e->rational().to_string()}};
        case Expr::Kind::ImaginaryUnit:
            return json{{"kind", "imaginary_unit"}};
        case Expr::Kind::Symbol:
            return json{{"kind", "symbol"}, {"name", e->symbol()}};
        case Expr::Kind::Apply:
            return json{{"kind", "apply"},
                        {"function", func_name(e->func())},
                        {"argument", to_json(e->argument())}};
        case Expr::Kind::Power:
            return json{{"kind", "power"},
                        {"base", to_json(e->base())},
                        {"exponent", to_json(e->exponent())}};
        case Expr::Kind::Sum:
        case Expr::Kind::Product: {
            json ops = json::array();
            for (const auto& op : e->operands()) ops.push_back(to_json(op));
            return json{{"kind", e->kind() == Expr::Kind::Sum ? "sum" : "product"},
                        {"operands", std::move(ops)}};
        }
    }
    return nullptr;
}

}  // namespace detail

inline std::string print(const ExprPtr& e, PrintFormat format = PrintFormat::Text) {
    if (format == PrintFormat::Json) return detail::to_json(e).dump();
    std::string out;
    detail::print_text(e, out, 0);
    return out;
}

}  // namespace pkx
